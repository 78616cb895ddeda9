#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qconcav/entropies.hpp"
#include "qconcav/states.hpp"

namespace qconcav {

/// The Kim bound prefactor x(1-x)/(1-2x)^2 is a 0/0 form at x = 1/2; the
/// evaluator refuses |1-2x| < 1e-4 rather than extrapolate.
struct IndeterminateAtHalf : std::domain_error {
  using std::domain_error::domain_error;
};

struct DegenerateProblem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// S(x rho1 + (1-x) rho2) - x S(rho1) - (1-x) S(rho2).
double concavity_gap(const MixtureProblem& p);

/// The same gap as the relative-entropy mixture
/// x H(rho1, rho_Av) + (1-x) H(rho2, rho_Av).
double gap_via_relent(const MixtureProblem& p);

/// Lower bound x(1-x)/(1-2x)^2 * min{H(rho_Av, rho_Rev), H(rho_Rev, rho_Av)}.
/// Still dominates pinsker_lower: either direction does, by Pinsker applied
/// to rho_Av - rho_Rev = (2x-1)(rho1 - rho2).
/// Throws IndeterminateAtHalf when |1-2x| < 1e-4.
ExtendedReal kim_lower(const MixtureProblem& p);

/// Lower bound x(1-x)/2 * ||rho1 - rho2||_1^2.
double pinsker_lower(const MixtureProblem& p);

/// Lower bound -2 log Tr[(x sqrt(rho1) + (1-x) sqrt(rho2)) sqrt(rho_Av)].
double carlen_lieb_lower(const MixtureProblem& p);

/// The same bound evaluated as the order-1/2 Renyi divergence of the block
/// pair (P_AB, P_A x P_B); agrees with carlen_lieb_lower to roundoff.
double carlen_lieb_block_route(const MixtureProblem& p);

/// Lower bound 1/2 * ||P_AB - P_A x P_B||_1^2, the block-embedding Pinsker
/// route.
double block_pinsker_lower(const MixtureProblem& p);

/// Closed form of the same quantity: 2 x^2 (1-x)^2 ||rho1 - rho2||_1^2.
double block_pinsker_closed_form(const MixtureProblem& p);

/// Upper bound h(x).
double classic_upper(const MixtureProblem& p);

struct RfzUpper {
  double bures;  // h(x) * D_Bures^2(rho1, rho2)
  double trace;  // h(x) * ||rho1 - rho2||_1
};
RfzUpper rfz_upper(const MixtureProblem& p);

/// Upper bound h(x)/2 * ||rho1 - rho2||_1.
double audenaert_upper(const MixtureProblem& p);

/// x H_b(rho1, rho_Av) + (1-x) H_b(rho2, rho_Av), b in [1/2, 1).
double renyi_lower_mixture(double b, const MixtureProblem& p);

/// x Ht_a(rho1, rho_Av) + (1-x) Ht_a(rho2, rho_Av) with the sandwiched
/// divergence, a > 1.
double sandwiched_upper_mixture(double a, const MixtureProblem& p);

/// The x = 1/2 special case: value = [H_2(rho1, rho_Av) + H_2(rho2, rho_Av)]/2
/// must not exceed log 2, and each trace ratio Tr rho_k^2 rho_Av^{-1} must
/// not exceed 2.
struct H2HalfCheck {
  double value;
  double trace_ratio_1;
  double trace_ratio_2;
  bool ok;
};
H2HalfCheck h2_half_check(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// One verified inequality: slack = (greater side) - (lesser side),
/// ok = slack >= -tolerance.
struct ChainCheck {
  std::string name;
  double slack;
  bool ok;
};

/// One two-route identity: deviation = |route A - route B|,
/// ok = deviation <= tolerance.
struct RouteCheck {
  std::string name;
  double deviation;
  bool ok;
};

struct BoundReport {
  int dim = 0;
  double x = 0.0;
  double tolerance = 1e-9;

  double gap = 0.0;
  double gap_via_relent = 0.0;

  std::optional<double> kim;  // absent when indeterminate at x ~ 1/2
  double pinsker = 0.0;
  double carlen_lieb = 0.0;
  double block_pinsker = 0.0;

  double classic = 0.0;
  double rfz_bures = 0.0;
  double rfz_trace = 0.0;
  double audenaert = 0.0;

  double block_identity = 0.0;       // H(P_AB, P_A x P_B)
  double carlen_lieb_route = 0.0;    // order-1/2 Renyi on the block pair
  double block_pinsker_closed = 0.0;

  std::vector<ChainCheck> chain;
  std::vector<RouteCheck> routes;

  /// Strict winner of the pinsker-vs-carlen_lieb comparison:
  /// "lowbd1", "lowbd2", or "tie" when the margin is within tolerance.
  std::string winner;
  /// Best of the three lower bounds {lowbd0, lowbd1, lowbd2}; "tie" when
  /// the top two are within tolerance of each other. lowbd0 competes only
  /// when evaluated.
  std::string best_lower;

  bool all_ok() const;
  double max_abs_slack() const;
};

/// Every bound, both identity routes, and the full chain verdicts at the
/// given absolute tolerance.
BoundReport full_report(const MixtureProblem& p, double tolerance = 1e-9);

}  // namespace qconcav
