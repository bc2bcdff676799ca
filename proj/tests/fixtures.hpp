#pragma once

// Function and interval fixtures shared by the test binaries.

#include <string>
#include <vector>

#include "sconvex/builtins.hpp"
#include "sconvex/core.hpp"

namespace fixtures {

inline const std::vector<std::string>& smooth_selectors() {
  static const std::vector<std::string> s = {"power:q=1", "power:q=2", "power:q=3",
                                             "power:q=0.5", "exp", "xlnx"};
  return s;
}

inline const std::vector<sconvex::Interval>& intervals() {
  static const std::vector<sconvex::Interval> iv = {{1.0, 3.0}, {0.5, 2.0}, {2.0, 5.0}};
  return iv;
}

inline sconvex::FunctionSpec constant(double c) {
  return {[c](double) { return c; }, [](double) { return 0.0; }, 0.0, "const", {}};
}

inline sconvex::FunctionSpec builtin(const std::string& sel) { return sconvex::make_builtin(sel); }

}  // namespace fixtures
