#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toto/type_system.hpp"

namespace toto {

/// Exact coefficients c_t(n) = [z^n] C_t(z), n = 0..N.
struct CoeffTable {
  std::size_t N = 0;
  std::vector<std::vector<mpz_class>> c;  // [type][n]

  const mpz_class& operator()(TypeId t, std::size_t n) const { return c[t][n]; }
  std::size_t types() const noexcept { return c.size(); }
};

/// Coefficients normalized by the dominant growth: s_t(n) = c_t(n) / 4^n.
/// Extended precision keeps exponentially small bullet coefficients
/// representable up to N in the thousands.
struct ScaledCoeffTable {
  std::size_t N = 0;
  std::vector<std::vector<long double>> s;  // [type][n]

  long double operator()(TypeId t, std::size_t n) const { return s[t][n]; }
  std::size_t types() const noexcept { return s.size(); }
};

/// Grouping of the quadratic system into convolution products.
///
/// Types with identical rows of H are merged into row classes R. For each
/// (R, t) the second factors {b : H(a, b) = t, a in R} are summed first, so
/// C_t = [t = empty] + z * sum over terms (sum_{a in R} C_a)(sum_b C_b).
struct ConvolutionPlan {
  std::vector<std::vector<TypeId>> row_classes;
  struct Term {
    std::size_t row_class;
    TypeId target;
    std::vector<TypeId> second;
  };
  std::vector<Term> terms;
};

ConvolutionPlan make_convolution_plan(const TypeSystem& ts);

/// c_t(0) = [t = empty], c_t(n) = sum_{H(t1,t2)=t} sum_m c_t1(m) c_t2(n-1-m).
/// Arbitrary precision throughout.
CoeffTable compute_coefficients(const TypeSystem& ts, std::size_t N);

/// Same recurrence carried out on s_t(n) in long double. Every term is
/// nonnegative, so relative error stays near n * machine epsilon.
ScaledCoeffTable compute_scaled_coefficients(const TypeSystem& ts, std::size_t N);

ScaledCoeffTable to_scaled(const CoeffTable& table);

/// Cat_n / 4^n in long double.
long double scaled_catalan(std::size_t n);

/// Jacobian of the system at its solution,
/// M_{t,u} = z * (sum_{v : H(u,v) = t} C_v + sum_{v : H(v,u) = t} C_v),
/// stored as the contributing v lists; coefficients are produced on demand.
class JacobianSeries {
 public:
  explicit JacobianSeries(const TypeSystem& ts);

  std::size_t size() const noexcept { return contributors_.size(); }
  const std::vector<TypeId>& contributors(TypeId t, TypeId u) const { return contributors_[t][u]; }

  /// [z^n] M_{t,u}.
  mpz_class coefficient(const CoeffTable& coeffs, TypeId t, TypeId u, std::size_t n) const;

  /// M(z0) given the series values C_v(z0).
  Eigen::MatrixXd evaluate(std::span<const long double> values, double z0) const;

 private:
  std::vector<std::vector<std::vector<TypeId>>> contributors_;
};

struct ColumnSumCheck {
  bool ok = true;
  std::size_t columns = 0;
  std::size_t max_order = 0;
  std::string first_failure;
};

/// Checks every column of M against 2z C(z) coefficient by coefficient,
/// with Cat_n taken from the independent Catalan cache.
ColumnSumCheck check_jacobian_column_sums(const TypeSystem& ts, const CoeffTable& coeffs);

/// Truncated values sum_{n<=N} c_t(n) z0^n, z0 in (0, 1/4].
std::vector<long double> truncated_values_at(const ScaledCoeffTable& table, long double z0);

struct JacobianEvaluation {
  Eigen::MatrixXd M;
  /// Upper bound on how far each column sum sits below its untruncated value.
  double tail_bound = 0;
};

/// M(z0) from truncated series values; truncation only lowers entries.
JacobianEvaluation eval_jacobian_at(const TypeSystem& ts, const ScaledCoeffTable& table, double z0);

/// Rows/columns of M restricted to `types` (in the given order).
Eigen::MatrixXd restrict_matrix(const Eigen::MatrixXd& M, std::span<const TypeId> types);

}  // namespace toto
