#include "toto/spectral.hpp"

#include <stdexcept>

#include "toto/error.hpp"

namespace toto {

SpectralEstimate spectral_radius(const Eigen::MatrixXd& A, double tolerance, std::size_t max_iterations) {
  if (A.rows() != A.cols()) throw std::invalid_argument("spectral_radius: matrix not square");
  if (A.size() > 0 && A.minCoeff() < 0) throw std::invalid_argument("spectral_radius: negative entry");
  SpectralEstimate out;
  const Eigen::Index n = A.rows();
  if (n == 0) {
    out.converged = true;
    return out;
  }
  out.max_column_sum = A.colwise().sum().maxCoeff();

  // Nilpotency shows up as an exactly vanishing iterate.
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  for (Eigen::Index i = 0; i <= n; ++i) {
    x = A * x;
    if (x.isZero(0)) {
      out.converged = true;
      return out;
    }
    x /= x.maxCoeff();
  }

  x = Eigen::VectorXd::Ones(n) / static_cast<double>(n);
  double previous = -1;
  for (out.iterations = 1; out.iterations <= max_iterations; ++out.iterations) {
    Eigen::VectorXd y = A * x + x;
    const double estimate = y.sum() / x.sum() - 1;  // 1-norm ratio; x stays positive
    out.upper_bound = (y.array() / x.array()).maxCoeff() - 1;
    x = y / y.sum();
    out.radius = estimate;
    if (std::abs(estimate - previous) <= tolerance * std::max(1.0, std::abs(estimate))) {
      out.converged = true;
      break;
    }
    previous = estimate;
  }
  if (out.radius > out.max_column_sum * (1 + 1e-12) + 1e-15)
    throw Error("spectral_radius: estimate exceeds the maximal column sum");
  return out;
}

}  // namespace toto
