#include "qconcav/campaign.hpp"

#include <cmath>
#include <cstdio>

#include "qconcav/rng.hpp"

namespace qconcav {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fingerprint(const DensityMatrix& rho) {
  if (rho.dim() == 2) {
    const BlochVector w = to_bloch(rho);
    return "bloch(" + fmt(w.w[0]) + "," + fmt(w.w[1]) + "," + fmt(w.w[2]) + ")";
  }
  std::string s = "matrix[";
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j) {
      const Complex c = rho.mat()(i, j);
      s += fmt(c.real()) + (c.imag() < 0 ? "" : "+") + fmt(c.imag()) + "i;";
    }
  s += "]";
  return s;
}

void record_violations(const BoundReport& report, std::uint64_t index, std::uint64_t seed,
                       const DensityMatrix& rho1, const DensityMatrix& rho2,
                       std::vector<ViolationRecord>& out) {
  const auto add = [&](const std::string& name, double slack) {
    out.push_back(ViolationRecord{name, index, seed, report.dim, report.x,
                                  fingerprint(rho1), fingerprint(rho2), slack});
  };
  for (const ChainCheck& c : report.chain)
    if (!c.ok) add(c.name, c.slack);
  for (const RouteCheck& r : report.routes)
    if (!r.ok) add(r.name, -r.deviation);
}

}  // namespace

int CampaignResult::total_trials() const {
  int n = 0;
  for (const DimTally& t : tallies) n += t.trials;
  return n;
}

CampaignResult run_fuzz(const FuzzConfig& cfg) {
  if (!cfg.ranks.empty() && cfg.ranks.size() != cfg.dims.size())
    throw std::invalid_argument("run_fuzz: ranks must be empty or parallel to dims");
  if (cfg.trials_per_dim < 0)
    throw std::invalid_argument("run_fuzz: negative trial count");

  CampaignResult result;
  result.config = cfg;

  std::uint64_t index = 0;
  for (std::size_t d = 0; d < cfg.dims.size(); ++d) {
    const int dim = cfg.dims[d];
    if (dim < 2) throw std::invalid_argument("run_fuzz: dims must be >= 2");
    const int rank = cfg.ranks.empty() ? dim : std::min(cfg.ranks[d], dim);

    DimTally tally;
    tally.dim = dim;
    tally.rank = rank;
    for (int t = 0; t < cfg.trials_per_dim; ++t, ++index) {
      const std::uint64_t seed = derive_seed(cfg.master_seed, index);
      Rng xrng(derive_seed(seed, 0));
      const double x = xrng.uniform(cfg.x_delta, 1.0 - cfg.x_delta);
      const DensityMatrix rho1 = random_density({dim, rank, derive_seed(seed, 1)});
      const DensityMatrix rho2 = random_density({dim, rank, derive_seed(seed, 2)});
      const MixtureProblem problem(x, rho1, rho2);

      const BoundReport report = full_report(problem, cfg.tolerance);
      ++tally.trials;
      if (report.all_ok()) ++tally.chain_pass;
      if (!report.kim) ++tally.kim_indeterminate;

      if (report.winner == "lowbd1") ++tally.winner_lowbd1;
      else if (report.winner == "lowbd2") ++tally.winner_lowbd2;
      else ++tally.winner_tie;

      if (report.best_lower == "lowbd0") ++tally.best_lowbd0;
      else if (report.best_lower == "lowbd1") ++tally.best_lowbd1;
      else if (report.best_lower == "lowbd2") ++tally.best_lowbd2;
      else ++tally.best_tie;

      record_violations(report, index, seed, rho1, rho2, result.violations);
      if (cfg.keep_rows) result.rows.push_back(TrialRow{index, seed, dim, report});
    }
    result.tallies.push_back(tally);
  }
  return result;
}

const std::array<AppendixExample, 3>& appendix_examples() {
  static const std::array<AppendixExample, 3> examples{{
      {'a', {0.2876, 0.4322, 0.3112}, {-0.1552, -0.0532, -0.0874}, 0.7086},
      {'b', {-0.2136, 0.0702, -0.0944}, {-0.5204, 0.7790, -0.1772}, 0.2197},
      {'c', {-0.1850, 0.7506, -0.6388}, {0.0254, 0.0012, 0.0114}, 0.5218},
  }};
  return examples;
}

namespace {

DensityMatrix bloch_state_clamped(const std::array<double, 3>& w, bool& clamped) {
  BlochVector v{w};
  const double n = v.norm();
  clamped = n > 1.0 + 1e-12;
  if (clamped)
    for (double& c : v.w) c /= n;
  return from_bloch(v);
}

}  // namespace

std::vector<AppendixRow> run_appendix(double tolerance) {
  std::vector<AppendixRow> rows;
  for (const AppendixExample& ex : appendix_examples()) {
    AppendixRow row;
    row.id = ex.id;
    row.x = ex.x;
    row.w1 = ex.w1;
    row.w2 = ex.w2;
    const DensityMatrix rho1 = bloch_state_clamped(ex.w1, row.clamped1);
    const DensityMatrix rho2 = bloch_state_clamped(ex.w2, row.clamped2);
    row.report = full_report(MixtureProblem(ex.x, rho1, rho2), tolerance);

    switch (ex.id) {
      case 'a':
        row.expected = "lowbd1>lowbd2";
        row.margin = row.report.pinsker - row.report.carlen_lieb;
        break;
      case 'b':
        row.expected = "lowbd2>lowbd1";
        row.margin = row.report.carlen_lieb - row.report.pinsker;
        break;
      default:
        row.expected = "lowbd2>lowbd0";
        row.margin = row.report.carlen_lieb - row.report.kim.value();
        break;
    }
    row.outcome_ok = row.margin > tolerance;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qconcav
