#pragma once

#include <cstddef>
#include <vector>

#include "toto/error.hpp"
#include "toto/series.hpp"
#include "toto/type_system.hpp"

namespace toto {

class InsufficientSupport : public Error {
 public:
  using Error::Error;
};

struct Estimate {
  double value = 0;
  double error = 0;
};

/// Limit of lambda_t(n) = c_t(n) / Cat_n.
///
/// Star types: first-order Richardson in 1/n on n = N and N/2; the error is
/// the gap to the same extrapolant one halving earlier. Bullet types: 0,
/// with lambda_t(N) itself as the error.
Estimate estimate_lambda(const ScaledCoeffTable& coeffs, TypeId t, bool bullet);

/// Growth rate exp(slope) of a least-squares line through log c_t(n) over
/// the top tenth of 0..N (at least 10 indices). Returns 0 when c_t vanishes
/// on the whole window; throws InsufficientSupport when the window holds
/// some but fewer than 10 nonzero coefficients.
double estimate_kappa(const ScaledCoeffTable& coeffs, TypeId t);

/// a_t(n) = c_t(n) n^{3/2} / 4^n.
double normalized_coefficient(const ScaledCoeffTable& coeffs, TypeId t, std::size_t n);

/// A_t from a_t(N) refined by Richardson with a_t(N/2).
double estimate_A(const ScaledCoeffTable& coeffs, TypeId t);

/// |a_t(n) - a_t(n/2)| at n = N, N/2, N/4, ... (largest n first).
std::vector<double> cauchy_differences(const ScaledCoeffTable& coeffs, TypeId t, std::size_t levels = 4);

/// Per-type estimates shared by the sentence-level analysis.
struct TypeEstimates {
  std::vector<Estimate> lambda;
  std::vector<double> kappa;  // bullet types; NaN for star
  std::vector<double> A;      // star types; NaN for bullet
};

TypeEstimates estimate_all(const TypeSystem& ts, const ScaledCoeffTable& coeffs);

/// C_t(1/4) from the truncated sum plus A_t * sum_{n > N} n^{-3/2} for star
/// types (bullet tails are geometrically small and left out).
std::vector<long double> tail_corrected_values_at_quarter(const TypeSystem& ts, const ScaledCoeffTable& coeffs,
                                                          const TypeEstimates& estimates);

/// sum_{n > N} n^{-3/2} by Euler-Maclaurin.
long double tail_three_halves(std::size_t N);

}  // namespace toto
