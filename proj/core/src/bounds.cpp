#include "qconcav/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace qconcav {

namespace {

constexpr double kKimWindow = 1e-4;

double sqrt_fn(double u) { return std::sqrt(u); }

}  // namespace

double concavity_gap(const MixtureProblem& p) {
  const DensityMatrix avg = mix(p);
  return von_neumann(avg) - p.x * von_neumann(p.rho1) - (1.0 - p.x) * von_neumann(p.rho2);
}

double gap_via_relent(const MixtureProblem& p) {
  const DensityMatrix avg = mix(p);
  const ExtendedReal h1 = relative_entropy(p.rho1, avg);
  const ExtendedReal h2 = relative_entropy(p.rho2, avg);
  return p.x * h1.value() + (1.0 - p.x) * h2.value();
}

ExtendedReal kim_lower(const MixtureProblem& p) {
  const double one_minus_2x = 1.0 - 2.0 * p.x;
  if (std::abs(one_minus_2x) < kKimWindow)
    throw IndeterminateAtHalf("kim_lower: 0/0 form at x ~ 1/2, bound not evaluated");
  const DensityMatrix avg = mix(p);
  const DensityMatrix rev = reverse_mix(p);
  // The smaller of the two relative-entropy directions; the larger one is
  // not a valid lower bound (it overshoots the gap as x approaches 0 or 1).
  const ExtendedReal fwd = relative_entropy(avg, rev);
  const ExtendedReal bwd = relative_entropy(rev, avg);
  const double prefactor = p.x * (1.0 - p.x) / (one_minus_2x * one_minus_2x);
  if (!fwd.is_finite() || !bwd.is_finite()) return ExtendedReal::infinity();
  return ExtendedReal(prefactor * std::min(fwd.value(), bwd.value()));
}

double pinsker_lower(const MixtureProblem& p) {
  const double t = trace_distance(p.rho1, p.rho2);
  return 0.5 * p.x * (1.0 - p.x) * t * t;
}

double carlen_lieb_lower(const MixtureProblem& p) {
  const HermitianMatrix r1 = matrix_function_psd(p.rho1.hermitian(), sqrt_fn);
  const HermitianMatrix r2 = matrix_function_psd(p.rho2.hermitian(), sqrt_fn);
  const HermitianMatrix rav = matrix_function_psd(mix(p).hermitian(), sqrt_fn);
  const HermitianMatrix blend = p.x * r1 + (1.0 - p.x) * r2;
  const double t = (blend.mat() * rav.mat()).trace().real();
  return -2.0 * std::log(t);
}

double carlen_lieb_block_route(const MixtureProblem& p) {
  const BlockEmbedding be = block_embed(p);
  const DensityMatrix product(block_product(be));
  return renyi(RenyiParam::standard(0.5), be.joint, product).value();
}

double block_pinsker_lower(const MixtureProblem& p) {
  const BlockEmbedding be = block_embed(p);
  const double t = trace_norm(be.joint.hermitian() - HermitianMatrix(block_product(be)));
  return 0.5 * t * t;
}

double block_pinsker_closed_form(const MixtureProblem& p) {
  const double t = trace_distance(p.rho1, p.rho2);
  const double xx = p.x * (1.0 - p.x);
  return 2.0 * xx * xx * t * t;
}

double classic_upper(const MixtureProblem& p) { return binary_entropy(p.x); }

RfzUpper rfz_upper(const MixtureProblem& p) {
  const double h = binary_entropy(p.x);
  return RfzUpper{h * bures_sq(p.rho1, p.rho2), h * trace_distance(p.rho1, p.rho2)};
}

double audenaert_upper(const MixtureProblem& p) {
  return 0.5 * binary_entropy(p.x) * trace_distance(p.rho1, p.rho2);
}

double renyi_lower_mixture(double b, const MixtureProblem& p) {
  if (!(b >= 0.5 && b < 1.0))
    throw DomainError("renyi_lower_mixture: b must lie in [1/2, 1)");
  const DensityMatrix avg = mix(p);
  const RenyiParam param = RenyiParam::standard(b);
  return p.x * renyi(param, p.rho1, avg).value() +
         (1.0 - p.x) * renyi(param, p.rho2, avg).value();
}

double sandwiched_upper_mixture(double a, const MixtureProblem& p) {
  if (!(a > 1.0))
    throw DomainError("sandwiched_upper_mixture: a must exceed 1");
  const DensityMatrix avg = mix(p);
  const RenyiParam param = RenyiParam::sandwiched(a);
  return p.x * sandwiched(param, p.rho1, avg).value() +
         (1.0 - p.x) * sandwiched(param, p.rho2, avg).value();
}

H2HalfCheck h2_half_check(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const MixtureProblem p(0.5, rho1, rho2);
  const DensityMatrix avg = mix(p);
  const RenyiParam two = RenyiParam::standard(2.0);
  const double h1 = renyi(two, rho1, avg).value();
  const double h2 = renyi(two, rho2, avg).value();
  const HermitianMatrix inv =
      matrix_function_psd(avg.hermitian(), [](double u) { return 1.0 / u; });
  const double r1 = (rho1.mat() * rho1.mat() * inv.mat()).trace().real();
  const double r2 = (rho2.mat() * rho2.mat() * inv.mat()).trace().real();

  H2HalfCheck out;
  out.value = 0.5 * (h1 + h2);
  out.trace_ratio_1 = r1;
  out.trace_ratio_2 = r2;
  const double tol = 1e-9;
  out.ok = out.value <= std::log(2.0) + tol && r1 <= 2.0 + tol && r2 <= 2.0 + tol;
  return out;
}

bool BoundReport::all_ok() const {
  for (const ChainCheck& c : chain)
    if (!c.ok) return false;
  for (const RouteCheck& r : routes)
    if (!r.ok) return false;
  return true;
}

double BoundReport::max_abs_slack() const {
  double m = 0.0;
  for (const ChainCheck& c : chain) m = std::max(m, std::abs(c.slack));
  return m;
}

namespace {

void push_chain(BoundReport& r, const std::string& name, double slack, double tol) {
  r.chain.push_back(ChainCheck{name, slack, slack >= -tol});
}

void push_route(BoundReport& r, const std::string& name, double dev, double tol) {
  r.routes.push_back(RouteCheck{name, dev, dev <= tol});
}

std::string compare_with_margin(double lhs, const std::string& lhs_name, double rhs,
                                const std::string& rhs_name, double tol) {
  if (lhs - rhs > tol) return lhs_name;
  if (rhs - lhs > tol) return rhs_name;
  return "tie";
}

}  // namespace

BoundReport full_report(const MixtureProblem& p, double tolerance) {
  BoundReport r;
  r.dim = p.rho1.dim();
  r.x = p.x;
  r.tolerance = tolerance;

  r.gap = concavity_gap(p);
  r.gap_via_relent = gap_via_relent(p);

  if (std::abs(1.0 - 2.0 * p.x) >= kKimWindow) r.kim = kim_lower(p).value();
  r.pinsker = pinsker_lower(p);
  r.carlen_lieb = carlen_lieb_lower(p);
  r.block_pinsker = block_pinsker_lower(p);

  r.classic = classic_upper(p);
  const RfzUpper rfz = rfz_upper(p);
  r.rfz_bures = rfz.bures;
  r.rfz_trace = rfz.trace;
  r.audenaert = audenaert_upper(p);

  const BlockEmbedding be = block_embed(p);
  const DensityMatrix product(block_product(be));
  r.block_identity = relative_entropy(be.joint, product).value();
  r.carlen_lieb_route = carlen_lieb_block_route(p);
  r.block_pinsker_closed = block_pinsker_closed_form(p);

  push_chain(r, "gap>=0", r.gap, 1e-10);
  push_chain(r, "pinsker<=gap", r.gap - r.pinsker, tolerance);
  if (r.kim) {
    push_chain(r, "kim<=gap", r.gap - *r.kim, tolerance);
    push_chain(r, "kim>=pinsker", *r.kim - r.pinsker, tolerance);
  }
  push_chain(r, "carlen_lieb<=gap", r.gap - r.carlen_lieb, tolerance);
  push_chain(r, "carlen_lieb>=0", r.carlen_lieb, 1e-10);
  push_chain(r, "block_pinsker<=pinsker", r.pinsker - r.block_pinsker, tolerance);
  push_chain(r, "gap<=audenaert", r.audenaert - r.gap, tolerance);
  push_chain(r, "audenaert<=classic", r.classic - r.audenaert, tolerance);
  // rfz_bures is reported but "gap <= rfz_bures" is not a verified chain
  // member: random mixed qubit pairs violate it by a wide margin, so only
  // the Fuchs-van-de-Graaf comparison against rfz_trace is asserted.
  push_chain(r, "rfz_bures<=rfz_trace", r.rfz_trace - r.rfz_bures, tolerance);

  push_route(r, "gap_via_relent", std::abs(r.gap - r.gap_via_relent), tolerance);
  push_route(r, "block_identity", std::abs(r.gap - r.block_identity), tolerance);
  push_route(r, "carlen_lieb_route", std::abs(r.carlen_lieb - r.carlen_lieb_route), tolerance);
  push_route(r, "block_pinsker_route", std::abs(r.block_pinsker - r.block_pinsker_closed),
             tolerance);

  r.winner = compare_with_margin(r.pinsker, "lowbd1", r.carlen_lieb, "lowbd2", tolerance);
  if (r.kim) {
    const double top2 = std::max(r.pinsker, r.carlen_lieb);
    if (*r.kim - top2 > tolerance) {
      r.best_lower = "lowbd0";
    } else if (top2 - *r.kim > tolerance) {
      r.best_lower = r.winner == "tie" ? "tie" : r.winner;
    } else {
      r.best_lower = "tie";
    }
  } else {
    r.best_lower = r.winner;
  }
  return r;
}

}  // namespace qconcav
