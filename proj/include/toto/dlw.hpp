#pragma once

#include <string>
#include <vector>

#include "toto/estimators.hpp"
#include "toto/series.hpp"
#include "toto/type_system.hpp"

namespace toto {

struct DlwCheck {
  std::string condition;  // "i" .. "vi"
  bool pass = false;
  std::string detail;
  double residual = 0;
};

struct DlwReport {
  std::vector<DlwCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct DlwOptions {
  double det_tolerance = 1e-2;
};

/// Checks the hypotheses of the Drmota-Lalley-Woods theorem on the star
/// subsystem, bullet series treated as known parameters:
///   (i)   some equation has a product of two star unknowns;
///   (ii)  no equation has a constant term (empty type is bullet);
///   (iii) some equation is nonzero at zero star unknowns, and z occurs;
///   (iv)  the star dependency graph is strongly connected;
///   (v)   det(I - M*(1/4)) vanishes at the tail-corrected point and every
///         bullet growth rate is below 4;
///   (vi)  every star series is aperiodic (gcd of support gaps is 1).
DlwReport check_dlw_conditions(const TypeSystem& ts, const ScaledCoeffTable& coeffs, const DlwOptions& options = {});

/// gcd of consecutive gaps in {n <= N : c(n) != 0}; 0 for at most one index.
std::size_t support_period(const std::vector<long double>& series);

}  // namespace toto
