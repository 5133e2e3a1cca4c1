#pragma once

#include <complex>
#include <functional>

#include "udelta/rational.hpp"

namespace udelta {

// A real lift of the argument of some non-vanishing value, anchored at a
// specific point of its path.
struct BranchValue {
  double theta = 0.0;
};

// Path evaluator on [0, 1]. The value must stay away from zero on the whole
// segment; the continuation engine enforces that numerically.
struct PathSegment {
  std::function<std::complex<double>(double)> eval;
};

struct ContinueOptions {
  double eps_zero = 1e-12;   // absolute non-vanishing guard
  double step_arg = 1.413716694;  // 0.9 * pi/2 acceptance threshold
  double dip_factor = 0.25;  // magnitude-dip guard per accepted step
  int max_depth = 60;        // subdivision limit
  double anchor_tol = 1e-6;  // start-consistency tolerance
};

// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

// Continue the argument of seg.eval from t=0 (where it must agree with
// `start` modulo 2*pi) to t=1. Adaptive bisection: a step is accepted only
// when both half-step principal increments stay below the step threshold,
// they are consistent with the full-step increment, and the midpoint
// magnitude does not dip below dip_factor times the endpoint magnitudes.
BranchValue arg_continue(const PathSegment& seg, BranchValue start,
                         const ContinueOptions& opt = {});

// Dense-sampling reference: sum of principal increments over n uniform
// steps. Test oracle, not production path.
double naive_continue(const PathSegment& seg, double theta0, int n);

}  // namespace udelta
