#pragma once

#include <string>
#include <vector>

#include "qconcav/bounds.hpp"

namespace qconcav {

struct CriticalGridPoint {
  std::string family;  // "renyi" or "sandwiched"
  double param;
  double mixture;    // mixture divergence at this parameter
  double reference;  // bound the mixture is compared against
  bool satisfied;
};

/// Critical Renyi parameters for one mixture problem, located by bisection
/// on the monotone parameter families.
///
/// b side: the infimum b in [1/2, 1) with
///   x H_b(rho1, rho_Av) + (1-x) H_b(rho2, rho_Av) >= pinsker lower bound.
/// a side: the supremum a in (1, a_max] with
///   x Ht_a(rho1, rho_Av) + (1-x) Ht_a(rho2, rho_Av) <= Audenaert upper bound
/// (an interval anchored at a = 1+ since the mixture is nondecreasing in a,
/// so the finder reports the empirical validity interval).
struct CriticalParams {
  enum class BStatus { left_endpoint, bracketed, none_in_range };
  enum class AStatus { holds_for_all_tested, bracketed, none };

  BStatus b_status = BStatus::none_in_range;
  double b_lo = 0.0;  // condition fails here (bracketed case)
  double b_hi = 0.0;  // condition holds here
  double b_c() const { return b_hi; }

  AStatus a_status = AStatus::none;
  double a_lo = 0.0;  // condition holds here (bracketed case)
  double a_hi = 0.0;  // condition fails here
  double a_star() const { return a_lo; }

  double tolerance = 1e-6;
  double a_max = 64.0;
  double pinsker_reference = 0.0;
  double audenaert_reference = 0.0;

  std::vector<CriticalGridPoint> grid;  // pre-scan used for bracketing
};

std::string to_string(CriticalParams::BStatus s);
std::string to_string(CriticalParams::AStatus s);

/// Brackets both critical parameters to width <= tolerance. Throws
/// DegenerateProblem when rho1 and rho2 coincide within trace distance 1e-10.
CriticalParams find_critical_params(const MixtureProblem& p, double tolerance = 1e-6);

}  // namespace qconcav
