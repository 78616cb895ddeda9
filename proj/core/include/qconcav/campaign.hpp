#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qconcav/bounds.hpp"

namespace qconcav {

/// Seeded fuzz campaign over random mixture problems.
///
/// Determinism contract: trial k (counted globally across dims) uses
/// seed = derive_seed(master_seed, k); within a trial, the weight x and the
/// two Ginibre states use derive_seed(trial_seed, 0..2). Identical configs
/// therefore produce identical campaigns on every platform.
struct FuzzConfig {
  std::vector<int> dims{2};
  std::vector<int> ranks;  // empty = full rank; else parallel to dims
  int trials_per_dim = 1000;
  std::uint64_t master_seed = 42;
  double tolerance = 1e-9;
  double x_delta = 1e-3;   // x uniform on (x_delta, 1 - x_delta)
  bool keep_rows = false;  // retain per-trial rows for CSV output
};

/// A recorded inequality failure; these exist only for genuine violations
/// (slack below -tolerance or route deviation above tolerance).
struct ViolationRecord {
  std::string inequality;
  std::uint64_t trial_index;
  std::uint64_t trial_seed;
  int dim;
  double x;
  std::string state1;  // Bloch vector for qubits, serialized matrix otherwise
  std::string state2;
  double slack;
};

struct TrialRow {
  std::uint64_t index;
  std::uint64_t seed;
  int dim;
  BoundReport report;
};

struct DimTally {
  int dim = 0;
  int rank = 0;
  int trials = 0;
  int chain_pass = 0;
  int kim_indeterminate = 0;
  // pinsker-vs-carlen_lieb comparison
  int winner_lowbd1 = 0;
  int winner_lowbd2 = 0;
  int winner_tie = 0;
  // best of the three lower bounds
  int best_lowbd0 = 0;
  int best_lowbd1 = 0;
  int best_lowbd2 = 0;
  int best_tie = 0;
};

struct CampaignResult {
  FuzzConfig config;
  std::vector<DimTally> tallies;
  std::vector<ViolationRecord> violations;
  std::vector<TrialRow> rows;  // populated only with config.keep_rows

  bool ok() const { return violations.empty(); }
  int total_trials() const;
};

CampaignResult run_fuzz(const FuzzConfig& cfg);

// ---------------------------------------------------------------------------
// Published qubit examples

struct AppendixExample {
  char id;
  std::array<double, 3> w1;
  std::array<double, 3> w2;
  double x;
};

/// The three published Bloch-vector examples, exact decimal literals.
const std::array<AppendixExample, 3>& appendix_examples();

struct AppendixRow {
  char id;
  double x;
  std::array<double, 3> w1;  // literals as published
  std::array<double, 3> w2;
  // Example (c) lists a w1 with norm slightly above 1; evaluation projects
  // such vectors onto the unit sphere (the nearest valid state) and flags it.
  bool clamped1 = false;
  bool clamped2 = false;
  BoundReport report;
  std::string expected;  // e.g. "lowbd1>lowbd2"
  double margin;         // signed margin of the expected comparison
  bool outcome_ok;       // margin > tolerance
};

/// Evaluates all bounds on the three published examples and checks the
/// expected winner of each comparison.
std::vector<AppendixRow> run_appendix(double tolerance = 1e-9);

}  // namespace qconcav
