#pragma once

#include <cstddef>
#include <vector>

#include "otb/arrangement.hpp"
#include "otb/mpoly.hpp"

namespace otb {

/// Minimal dependent set of defining forms with its dependency
/// sum_j coeffs[j] * alpha_{indices[j]} = 0, normalized to a primitive integer
/// vector with positive first entry.
struct Circuit {
  IndexSet indices;
  std::vector<Rational> coeffs;

  bool operator==(const Circuit&) const = default;
};

/// All circuits with at most `max_size` elements, by increasing size and then
/// lexicographically. Supersets of circuits already found are skipped.
std::vector<Circuit> enumerate_circuits(const Arrangement& a, std::size_t max_size);

/// The relation sum_j c_j * prod_{l != j} y_{i_l} in the ring Q[y_1..y_d].
MPoly circuit_relation(const Circuit& c, std::size_t d);

}  // namespace otb
