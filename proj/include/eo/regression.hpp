#pragma once

#include <string>
#include <vector>

namespace eo {

struct RegressionRow {
  std::string name;
  bool passed = false;
  std::string detail;
  /// matrix, disc, types, witness, vimages, filtration, cyclic, survey or suite.
  std::string group;
};

/// Reference curves and identities with their expected invariants. Values
/// that depend on an unnamed primitive element are tried for every primitive
/// element and the matching choices are reported.
std::vector<RegressionRow> reference_regression();

}  // namespace eo
