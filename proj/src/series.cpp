#include "toto/series.hpp"

#include <cmath>
#include <map>

#include "toto/catalan.hpp"
#include "toto/parallel.hpp"

namespace toto {

ConvolutionPlan make_convolution_plan(const TypeSystem& ts) {
  ConvolutionPlan plan;
  std::map<std::vector<TypeId>, std::size_t> by_row;
  for (TypeId a = 0; a < ts.size(); ++a) {
    auto [it, inserted] = by_row.try_emplace(ts.H[a], plan.row_classes.size());
    if (inserted) plan.row_classes.emplace_back();
    plan.row_classes[it->second].push_back(a);
  }
  for (std::size_t r = 0; r < plan.row_classes.size(); ++r) {
    const auto& row = ts.H[plan.row_classes[r].front()];
    std::map<TypeId, std::vector<TypeId>> by_target;
    for (TypeId b = 0; b < row.size(); ++b) by_target[row[b]].push_back(b);
    for (auto& [t, second] : by_target) plan.terms.push_back({r, t, std::move(second)});
  }
  return plan;
}

namespace {

// Shared driver for the exact and scaled recurrences. `Ops` supplies the
// scalar type, accumulation and the per-step scale factor.
template <class Ops>
std::vector<std::vector<typename Ops::Scalar>> run_recurrence(const TypeSystem& ts, std::size_t N) {
  using Scalar = typename Ops::Scalar;
  const ConvolutionPlan plan = make_convolution_plan(ts);
  const std::size_t T = ts.size();

  // Deduplicate the summed second factors.
  std::map<std::vector<TypeId>, std::size_t> second_index;
  std::vector<std::vector<TypeId>> second_sets;
  std::vector<std::size_t> term_second(plan.terms.size());
  for (std::size_t q = 0; q < plan.terms.size(); ++q) {
    auto [it, inserted] = second_index.try_emplace(plan.terms[q].second, second_sets.size());
    if (inserted) second_sets.push_back(plan.terms[q].second);
    term_second[q] = it->second;
  }
  std::vector<std::vector<std::size_t>> terms_for(T);
  for (std::size_t q = 0; q < plan.terms.size(); ++q) terms_for[plan.terms[q].target].push_back(q);

  std::vector<std::vector<Scalar>> c(T, std::vector<Scalar>(N + 1, Scalar(0)));
  std::vector<std::vector<Scalar>> rows(plan.row_classes.size(), std::vector<Scalar>(N + 1, Scalar(0)));
  std::vector<std::vector<Scalar>> seconds(second_sets.size(), std::vector<Scalar>(N + 1, Scalar(0)));
  c[ts.empty_type][0] = Scalar(1);

  auto refresh_sums = [&](std::size_t n) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Scalar s(0);
      for (TypeId a : plan.row_classes[r]) s += c[a][n];
      rows[r][n] = s;
    }
    for (std::size_t j = 0; j < seconds.size(); ++j) {
      Scalar s(0);
      for (TypeId b : second_sets[j]) s += c[b][n];
      seconds[j][n] = s;
    }
  };
  refresh_sums(0);

  std::vector<Scalar> partial(plan.terms.size());
  for (std::size_t n = 1; n <= N; ++n) {
    parallel_for(
        plan.terms.size(),
        [&](std::size_t q) {
          const auto& row = rows[plan.terms[q].row_class];
          const auto& sec = seconds[term_second[q]];
          Scalar acc(0);
          for (std::size_t m = 0; m < n; ++m) Ops::add_product(acc, row[m], sec[n - 1 - m]);
          partial[q] = std::move(acc);
        },
        n < 64 ? plan.terms.size() : 8);
    for (TypeId t = 0; t < T; ++t) {
      Scalar s(0);
      for (std::size_t q : terms_for[t]) s += partial[q];
      c[t][n] = Ops::finish(std::move(s));
    }
    refresh_sums(n);
  }
  return c;
}

struct ExactOps {
  using Scalar = mpz_class;
  static void add_product(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
    if (sgn(a) == 0 || sgn(b) == 0) return;
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static mpz_class finish(mpz_class s) { return s; }
};

struct ScaledOps {
  using Scalar = long double;
  static void add_product(long double& acc, long double a, long double b) { acc += a * b; }
  static long double finish(long double s) { return s * 0.25L; }
};

}  // namespace

CoeffTable compute_coefficients(const TypeSystem& ts, std::size_t N) {
  return {N, run_recurrence<ExactOps>(ts, N)};
}

ScaledCoeffTable compute_scaled_coefficients(const TypeSystem& ts, std::size_t N) {
  return {N, run_recurrence<ScaledOps>(ts, N)};
}

ScaledCoeffTable to_scaled(const CoeffTable& table) {
  ScaledCoeffTable out{table.N, std::vector<std::vector<long double>>(table.types())};
  for (std::size_t t = 0; t < table.types(); ++t) {
    out.s[t].resize(table.N + 1);
    for (std::size_t n = 0; n <= table.N; ++n) {
      long exponent = 0;
      const double mantissa = mpz_get_d_2exp(&exponent, table.c[t][n].get_mpz_t());
      out.s[t][n] = std::ldexp(static_cast<long double>(mantissa), static_cast<int>(exponent - 2 * static_cast<long>(n)));
    }
  }
  return out;
}

long double scaled_catalan(std::size_t n) {
  return std::exp(log_catalan(n) - static_cast<long double>(n) * std::log(4.0L));
}

JacobianSeries::JacobianSeries(const TypeSystem& ts)
    : contributors_(ts.size(), std::vector<std::vector<TypeId>>(ts.size())) {
  for (TypeId u = 0; u < ts.size(); ++u)
    for (TypeId v = 0; v < ts.size(); ++v) {
      contributors_[ts.H[u][v]][u].push_back(v);  // dF_t/dC_u from C_u C_v
      contributors_[ts.H[v][u]][u].push_back(v);  // and from C_v C_u
    }
}

mpz_class JacobianSeries::coefficient(const CoeffTable& coeffs, TypeId t, TypeId u, std::size_t n) const {
  mpz_class sum = 0;
  if (n == 0) return sum;
  for (TypeId v : contributors_[t][u]) sum += coeffs(v, n - 1);
  return sum;
}

Eigen::MatrixXd JacobianSeries::evaluate(std::span<const long double> values, double z0) const {
  const std::size_t T = size();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(T), static_cast<Eigen::Index>(T));
  for (TypeId t = 0; t < T; ++t)
    for (TypeId u = 0; u < T; ++u) {
      long double s = 0;
      for (TypeId v : contributors_[t][u]) s += values[v];
      M(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(u)) = static_cast<double>(z0 * s);
    }
  return M;
}

ColumnSumCheck check_jacobian_column_sums(const TypeSystem& ts, const CoeffTable& coeffs) {
  JacobianSeries jac(ts);
  ColumnSumCheck out;
  out.columns = ts.size();
  out.max_order = coeffs.N;
  CatalanCache catalan_numbers;
  const auto cat = catalan_numbers.table(coeffs.N);
  for (TypeId u = 0; u < ts.size() && out.ok; ++u)
    for (std::size_t n = 0; n <= coeffs.N; ++n) {
      mpz_class sum = 0;
      if (n > 0)
        for (TypeId t = 0; t < ts.size(); ++t)
          for (TypeId v : jac.contributors(t, u)) sum += coeffs(v, n - 1);
      const mpz_class expected = n == 0 ? mpz_class(0) : mpz_class(2 * cat[n - 1]);
      if (sum != expected) {
        out.ok = false;
        out.first_failure = "column " + std::to_string(u) + ", order " + std::to_string(n);
        break;
      }
    }
  return out;
}

std::vector<long double> truncated_values_at(const ScaledCoeffTable& table, long double z0) {
  const long double ratio = 4 * z0;  // s_t(n) (4 z0)^n = c_t(n) z0^n
  std::vector<long double> out(table.types(), 0);
  for (std::size_t t = 0; t < table.types(); ++t) {
    long double power = 1, sum = 0;
    for (std::size_t n = 0; n <= table.N; ++n) {
      sum += table.s[t][n] * power;
      power *= ratio;
    }
    out[t] = sum;
  }
  return out;
}

JacobianEvaluation eval_jacobian_at(const TypeSystem& ts, const ScaledCoeffTable& table, double z0) {
  const auto values = truncated_values_at(table, z0);
  JacobianEvaluation out{JacobianSeries(ts).evaluate(values, z0), 0};
  // Missing mass of C(z0): Cat_n 4^-n <= n^-3/2 / sqrt(pi) bounds the tail by
  // (2 / sqrt(N)) / sqrt(pi) at z0 = 1/4, geometrically smaller below it.
  const double N = static_cast<double>(table.N);
  const double ratio = 4 * z0;
  const double tail = ratio >= 1 ? 2.0 / std::sqrt(N) / std::sqrt(M_PI)
                                 : std::pow(ratio, N + 1) / (1 - ratio) / std::sqrt(M_PI) * std::pow(N + 1, -1.5);
  out.tail_bound = 2 * z0 * tail;
  return out;
}

Eigen::MatrixXd restrict_matrix(const Eigen::MatrixXd& M, std::span<const TypeId> types) {
  const auto n = static_cast<Eigen::Index>(types.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = M(static_cast<Eigen::Index>(types[i]), static_cast<Eigen::Index>(types[j]));
  return out;
}

}  // namespace toto
