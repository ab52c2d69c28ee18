#pragma once

#include <vector>

#include "algres/ratfunc.hpp"
#include "algres/upoly.hpp"

namespace algres {

struct ParamSolution {
  /// Consistent over Q(t).
  bool feasible = false;
  std::vector<RatFunc> solution;
  /// Distinct real roots of each component's denominator in [0, 1].
  std::vector<int> poles_in_unit_interval;

  bool feasible_on_unit_interval() const;
};

/// Solves A x = b over Q(t) by Gaussian elimination; free variables are 0.
ParamSolution solve_param_linear(const std::vector<std::vector<UPoly>>& a,
                                 const std::vector<UPoly>& b);

/// Same, for a system whose entries are already rational functions.
ParamSolution solve_param_linear(const std::vector<std::vector<RatFunc>>& a,
                                 const std::vector<RatFunc>& b);

}  // namespace algres
