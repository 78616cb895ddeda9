#include "qconcav/critical.hpp"

#include <cmath>

namespace qconcav {

namespace {

constexpr double kBRight = 1.0 - 1e-8;  // largest admissible b below 1
constexpr double kALeft = 1.0 + 1e-4;   // smallest tested a above 1

const double kBGrid[] = {0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 0.99, 0.999};
const double kAGrid[] = {kALeft, 1.001, 1.01, 1.1, 1.5, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0};

}  // namespace

std::string to_string(CriticalParams::BStatus s) {
  switch (s) {
    case CriticalParams::BStatus::left_endpoint: return "left_endpoint";
    case CriticalParams::BStatus::bracketed: return "bracketed";
    case CriticalParams::BStatus::none_in_range: return "none_in_range";
  }
  return "?";
}

std::string to_string(CriticalParams::AStatus s) {
  switch (s) {
    case CriticalParams::AStatus::holds_for_all_tested: return "holds_for_all_tested";
    case CriticalParams::AStatus::bracketed: return "bracketed";
    case CriticalParams::AStatus::none: return "none";
  }
  return "?";
}

CriticalParams find_critical_params(const MixtureProblem& p, double tolerance) {
  if (trace_distance(p.rho1, p.rho2) < 1e-10)
    throw DegenerateProblem("find_critical_params: states coincide");

  CriticalParams out;
  out.tolerance = tolerance;
  out.a_max = kAGrid[sizeof(kAGrid) / sizeof(kAGrid[0]) - 1];
  out.pinsker_reference = pinsker_lower(p);
  out.audenaert_reference = audenaert_upper(p);

  const auto b_holds = [&](double b) {
    return renyi_lower_mixture(b, p) >= out.pinsker_reference;
  };
  const auto a_holds = [&](double a) {
    return sandwiched_upper_mixture(a, p) <= out.audenaert_reference;
  };

  for (double b : kBGrid) {
    const double v = renyi_lower_mixture(b, p);
    out.grid.push_back(
        CriticalGridPoint{"renyi", b, v, out.pinsker_reference, v >= out.pinsker_reference});
  }
  for (double a : kAGrid) {
    const double v = sandwiched_upper_mixture(a, p);
    out.grid.push_back(CriticalGridPoint{"sandwiched", a, v, out.audenaert_reference,
                                         v <= out.audenaert_reference});
  }

  // b side: the satisfying set is an up-set, so bisection on [1/2, 1).
  if (b_holds(0.5)) {
    out.b_status = CriticalParams::BStatus::left_endpoint;
    out.b_lo = out.b_hi = 0.5;
  } else if (!b_holds(kBRight)) {
    out.b_status = CriticalParams::BStatus::none_in_range;
    out.b_lo = 0.5;
    out.b_hi = kBRight;
  } else {
    double lo = 0.5, hi = kBRight;
    while (hi - lo > tolerance) {
      const double mid = 0.5 * (lo + hi);
      (b_holds(mid) ? hi : lo) = mid;
    }
    out.b_status = CriticalParams::BStatus::bracketed;
    out.b_lo = lo;
    out.b_hi = hi;
  }

  // a side: the satisfying set is a down-set anchored at 1+.
  if (!a_holds(kALeft)) {
    out.a_status = CriticalParams::AStatus::none;
    out.a_lo = out.a_hi = kALeft;
  } else if (a_holds(out.a_max)) {
    out.a_status = CriticalParams::AStatus::holds_for_all_tested;
    out.a_lo = out.a_hi = out.a_max;
  } else {
    double lo = kALeft, hi = out.a_max;
    while (hi - lo > tolerance) {
      const double mid = 0.5 * (lo + hi);
      (a_holds(mid) ? lo : hi) = mid;
    }
    out.a_status = CriticalParams::AStatus::bracketed;
    out.a_lo = lo;
    out.a_hi = hi;
  }

  return out;
}

}  // namespace qconcav
