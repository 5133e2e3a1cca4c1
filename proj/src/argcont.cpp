#include "udelta/argcont.hpp"

#include <cmath>

namespace udelta {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::complex<double> probe(const PathSegment& seg, double t, double eps) {
  std::complex<double> v = seg.eval(t);
  if (std::abs(v) < eps)
    throw non_vanishing_error("arg_continue: |value| < eps_zero at t=" +
                              std::to_string(t));
  return v;
}
}  // namespace

double wrap_angle(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  if (a > kPi) a -= 2 * kPi;
  return a;
}

BranchValue arg_continue(const PathSegment& seg, BranchValue start,
                         const ContinueOptions& opt) {
  std::complex<double> v0 = probe(seg, 0.0, opt.eps_zero);
  if (std::abs(wrap_angle(start.theta - std::arg(v0))) > opt.anchor_tol)
    throw error("arg_continue: start branch inconsistent with evaluator");

  double t0 = 0.0;
  double theta = start.theta;
  double step = 1.0;
  while (t0 < 1.0) {
    step = std::min(step, 1.0 - t0);
    int depth = 0;
    for (;;) {
      double t1 = t0 + step;
      std::complex<double> v1 = probe(seg, t1, opt.eps_zero);
      std::complex<double> vm = probe(seg, 0.5 * (t0 + t1), opt.eps_zero);
      double full = std::arg(v1 / v0);
      double d1 = std::arg(vm / v0);
      double d2 = std::arg(v1 / vm);
      bool ok = std::abs(d1) < opt.step_arg && std::abs(d2) < opt.step_arg &&
                std::abs(d1 + d2 - full) < 1e-6 &&
                std::abs(vm) >
                    opt.dip_factor * std::min(std::abs(v0), std::abs(v1));
      if (ok) {
        theta += d1 + d2;
        t0 = t1;
        v0 = v1;
        step = std::min(step * 1.5, 1.0);
        break;
      }
      step *= 0.5;
      if (++depth > opt.max_depth)
        throw precision_error("arg_continue: subdivision limit reached");
    }
  }
  return BranchValue{theta};
}

double naive_continue(const PathSegment& seg, double theta0, int n) {
  double theta = theta0;
  std::complex<double> prev = seg.eval(0.0);
  for (int k = 1; k <= n; ++k) {
    std::complex<double> cur = seg.eval(static_cast<double>(k) / n);
    theta += std::arg(cur / prev);
    prev = cur;
  }
  return theta;
}

}  // namespace udelta
