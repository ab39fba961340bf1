#include "toto/estimators.hpp"

#include <cmath>
#include <limits>

namespace toto {
namespace {

double lambda_at(const ScaledCoeffTable& coeffs, TypeId t, std::size_t n) {
  return static_cast<double>(coeffs(t, n) / scaled_catalan(n));
}

double richardson(double at_n, double at_half) { return 2 * at_n - at_half; }

}  // namespace

Estimate estimate_lambda(const ScaledCoeffTable& coeffs, TypeId t, bool bullet) {
  const std::size_t N = coeffs.N;
  if (bullet) return {0.0, N ? lambda_at(coeffs, t, N) : 1.0};
  if (N < 4) return {lambda_at(coeffs, t, N), 1.0};
  const double current = richardson(lambda_at(coeffs, t, N), lambda_at(coeffs, t, N / 2));
  const double earlier = richardson(lambda_at(coeffs, t, N / 2), lambda_at(coeffs, t, N / 4));
  return {current, std::abs(current - earlier)};
}

double estimate_kappa(const ScaledCoeffTable& coeffs, TypeId t) {
  const std::size_t N = coeffs.N;
  const std::size_t window = std::min(N + 1, std::max<std::size_t>(10, N / 10));
  const std::size_t start = N + 1 - window;
  const long double log4 = std::log(4.0L);
  std::vector<std::pair<long double, long double>> points;
  for (std::size_t n = start; n <= N; ++n) {
    const long double s = coeffs(t, n);
    if (s > 0) points.emplace_back(static_cast<long double>(n), std::log(s) + static_cast<long double>(n) * log4);
  }
  if (points.empty()) return 0.0;
  if (points.size() < 10)
    throw InsufficientSupport("estimate_kappa: type " + std::to_string(t) + " has only " +
                              std::to_string(points.size()) + " nonzero coefficients in the top window");
  long double mx = 0, my = 0;
  for (auto [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= points.size();
  my /= points.size();
  long double sxy = 0, sxx = 0;
  for (auto [x, y] : points) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return static_cast<double>(std::exp(sxy / sxx));
}

double normalized_coefficient(const ScaledCoeffTable& coeffs, TypeId t, std::size_t n) {
  return static_cast<double>(coeffs(t, n) * std::pow(static_cast<long double>(n), 1.5L));
}

double estimate_A(const ScaledCoeffTable& coeffs, TypeId t) {
  const std::size_t N = coeffs.N;
  if (N < 2) return normalized_coefficient(coeffs, t, N);
  return richardson(normalized_coefficient(coeffs, t, N), normalized_coefficient(coeffs, t, N / 2));
}

std::vector<double> cauchy_differences(const ScaledCoeffTable& coeffs, TypeId t, std::size_t levels) {
  std::vector<double> out;
  for (std::size_t n = coeffs.N; out.size() < levels && n >= 2; n /= 2)
    out.push_back(std::abs(normalized_coefficient(coeffs, t, n) - normalized_coefficient(coeffs, t, n / 2)));
  return out;
}

TypeEstimates estimate_all(const TypeSystem& ts, const ScaledCoeffTable& coeffs) {
  TypeEstimates out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (TypeId t = 0; t < ts.size(); ++t) {
    const bool bullet = !ts.star[t];
    out.lambda.push_back(estimate_lambda(coeffs, t, bullet));
    out.kappa.push_back(bullet ? estimate_kappa(coeffs, t) : nan);
    out.A.push_back(bullet ? nan : estimate_A(coeffs, t));
  }
  return out;
}

long double tail_three_halves(std::size_t N) {
  // sum_{n>N} f(n) = int_N^inf f - f(N)/2 - f'(N)/12 + ..., f(x) = x^{-3/2}
  const long double x = static_cast<long double>(N);
  return 2 / std::sqrt(x) - 0.5L * std::pow(x, -1.5L) + (1.5L / 12) * std::pow(x, -2.5L);
}

std::vector<long double> tail_corrected_values_at_quarter(const TypeSystem& ts, const ScaledCoeffTable& coeffs,
                                                          const TypeEstimates& estimates) {
  auto values = truncated_values_at(coeffs, 0.25L);
  const long double tail = tail_three_halves(coeffs.N);
  for (TypeId t = 0; t < ts.size(); ++t)
    if (ts.star[t]) values[t] += static_cast<long double>(estimates.A[t]) * tail;
  return values;
}

}  // namespace toto
