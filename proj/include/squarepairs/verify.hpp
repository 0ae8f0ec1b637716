#pragma once

#include "squarepairs/curve.hpp"

#include <string>
#include <vector>

namespace squarepairs {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_pass() const;
};

// Recomputes the published data from scratch against frozen expected values:
// curve and generator membership, quartic coefficients, the birational image
// of the base point, both published pairs with their perimeter and Heron
// product, and the origin of the generation walk. Individual failures are
// reported, never thrown.
VerifyReport run_verification(const CurveConstants& consts = curve_constants());

}  // namespace squarepairs
