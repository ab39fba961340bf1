#include "toto/dlw.hpp"

#include <numeric>
#include <optional>
#include <sstream>

namespace toto {

std::size_t support_period(const std::vector<long double>& series) {
  std::size_t g = 0;
  std::optional<std::size_t> last;
  for (std::size_t n = 0; n < series.size(); ++n) {
    if (series[n] == 0) continue;
    if (last) g = std::gcd(g, n - *last);
    last = n;
  }
  return g;
}

DlwReport check_dlw_conditions(const TypeSystem& ts, const ScaledCoeffTable& coeffs, const DlwOptions& options) {
  DlwReport report;
  const auto star = ts.star_types();
  const auto bullet = ts.bullet_types();
  auto is_star = [&](TypeId t) { return static_cast<bool>(ts.star[t]); };

  {
    std::size_t quadratic = 0;
    for (TypeId a : star)
      for (TypeId b : star)
        if (is_star(ts.H[a][b])) ++quadratic;
    report.checks.push_back({"i", quadratic > 0,
                             std::to_string(quadratic) + " star x star monomials land in star equations", 0});
  }
  {
    const bool pass = !is_star(ts.empty_type);
    report.checks.push_back({"ii", pass, pass ? "empty type is bullet" : "empty type lies in the star component", 0});
  }
  {
    std::size_t constant_terms = 0, with_z = 0;
    for (TypeId t : star) {
      bool any = false, constant = false;
      for (TypeId a = 0; a < ts.size(); ++a)
        for (TypeId b = 0; b < ts.size(); ++b)
          if (ts.H[a][b] == t) {
            any = true;
            if (!is_star(a) && !is_star(b)) constant = true;
          }
      constant_terms += constant;
      with_z += any;  // every monomial carries a factor z
    }
    std::ostringstream d;
    d << constant_terms << " star equations have a bullet-only term; " << with_z << " depend on z";
    report.checks.push_back({"iii", constant_terms > 0 && with_z > 0, d.str(), 0});
  }
  {
    std::vector<std::size_t> local(ts.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < star.size(); ++i) local[star[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> sub;
    for (auto [u, t] : ts.edges)
      if (is_star(u) && is_star(t)) sub.emplace_back(local[u], local[t]);
    const auto scc = strongly_connected_components(star.size(), sub);
    report.checks.push_back({"iv", scc.members.size() == 1,
                             std::to_string(scc.members.size()) + " component(s) on " + std::to_string(star.size()) +
                                 " star types",
                             0});
  }
  {
    const TypeEstimates est = estimate_all(ts, coeffs);
    double worst_kappa = 0;
    for (TypeId t : bullet) worst_kappa = std::max(worst_kappa, est.kappa[t]);
    const auto values = tail_corrected_values_at_quarter(ts, coeffs, est);
    const Eigen::MatrixXd M = JacobianSeries(ts).evaluate(values, 0.25);
    const Eigen::MatrixXd Mstar = restrict_matrix(M, star);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(Mstar.rows(), Mstar.cols());
    const double det = std::abs((I - Mstar).determinant());
    const bool pass = det <= options.det_tolerance && worst_kappa < 4.0;
    std::ostringstream d;
    d << "|det(I - M*(1/4))| = " << det << " (tolerance " << options.det_tolerance
      << "), max bullet growth " << worst_kappa;
    report.checks.push_back({"v", pass, d.str(), det});
  }
  {
    std::size_t periodic = 0;
    for (TypeId t : star)
      if (support_period(coeffs.s[t]) != 1) ++periodic;
    report.checks.push_back({"vi", periodic == 0, std::to_string(periodic) + " periodic star series", 0});
  }
  return report;
}

}  // namespace toto
