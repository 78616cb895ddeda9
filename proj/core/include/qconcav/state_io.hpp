#pragma once

#include <string>

#include "qconcav/states.hpp"

namespace qconcav {

/// Malformed state file or a matrix violating the density-matrix invariants.
struct StateFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a state document: either {"bloch": [w1, w2, w3]} or
/// {"matrix": {"re": [[...]], "im": [[...]]}}. The matrix form is validated
/// against the density-matrix invariants on load.
DensityMatrix parse_state_json(const std::string& text);

/// parse_state_json over the contents of a file.
DensityMatrix load_state_json(const std::string& path);

/// Parses "w1,w2,w3" into a Bloch vector (validated on use).
BlochVector parse_bloch_triple(const std::string& text);

}  // namespace qconcav
