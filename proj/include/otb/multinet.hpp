#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "otb/arrangement.hpp"

namespace otb {

/// A verified weak (k,m)-multinet: partition, line weights, base locus Z and
/// the point weights n_p.
struct MultinetCertificate {
  std::size_t k = 0;
  long m = 0;
  std::vector<IndexSet> blocks;    // sorted, ordered by least element
  std::vector<long> weights;       // one per line
  std::vector<std::size_t> base_locus;  // indices into compute_flats(a)
  std::vector<long> n;             // n_p, aligned with base_locus
  bool connected = false;          // condition (4): a multinet, not only weak

  /// All weights 1 and every point of Z on exactly one line of each block.
  bool is_net() const;
};

/// Checks the multinet conditions and the numerology identities
/// sum w = k m, sum n_p^2 = m^2 and sum_{p in Z on L} n_p = m for every L.
/// Throws InputError if the blocks are not a partition into >= 3 classes or a
/// weight is not positive; VerificationError naming the failed condition and
/// a witness otherwise. Condition (4) is reported, not enforced.
MultinetCertificate verify_multinet(const Arrangement& a, const std::vector<FlatPoint>& flats,
                                    std::vector<IndexSet> blocks, std::vector<long> weights);

struct MultinetSearchOptions {
  std::size_t k = 3;
  long max_weight = 1;
  bool include_weak = false;
  /// Bound on (number of k-partitions) * max_weight^d.
  double guard = 1e9;
};

/// Every multinet with k classes and weights in 1..max_weight, up to
/// relabeling the classes. Weight vectors are primitive (gcd 1) since scaling
/// a multinet gives another one. Throws InputError when the search space
/// exceeds the guard.
std::vector<MultinetCertificate> search_multinets(const Arrangement& a, const std::vector<FlatPoint>& flats,
                                                  const MultinetSearchOptions& options);

/// mu(Y) <= |Y cap pi| implies Y subset pi, for every flat Y and block pi.
/// Throws InputError if the blocks are not a partition of the lines.
bool is_neighborly(const Arrangement& a, const std::vector<FlatPoint>& flats, const std::vector<IndexSet>& blocks);

enum class CartanType { Finite, Affine, Indefinite };
std::string to_string(CartanType t);

struct CartanBlock {
  IndexSet lines;
  CartanType type = CartanType::Indefinite;
};

struct CartanReport {
  IndexSet lines;  // lines meeting Z
  std::vector<std::vector<long>> q;  // J^t J - E restricted to those lines
  std::vector<CartanBlock> blocks;
  bool criterion = false;  // >= 3 affine blocks and nothing else
  bool neighborly = false;  // the block decomposition, as a partition of the lines meeting Z
};

/// Blocks of Q = J^t J - E (J the |Z| x d incidence matrix, E all ones) on
/// the lines meeting Z, classified as finite (positive definite), affine
/// (positive semidefinite of corank 1 with a positive kernel vector) or
/// indefinite.
CartanReport cartan_test(const Arrangement& a, const std::vector<FlatPoint>& flats,
                         const std::vector<std::size_t>& z);

}  // namespace otb
