#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace otb {

using IndexSet = std::vector<std::size_t>;

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k);

/// Position of a sorted k-subset in the lexicographic list of k_subsets(n, k).
std::size_t subset_rank(const IndexSet& s, std::size_t n);

}  // namespace otb
