#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "otb/arrangement.hpp"
#include "otb/echelon.hpp"
#include "otb/orlik_terao.hpp"
#include "otb/quotient_ring.hpp"
#include "otb/subsets.hpp"

namespace otb {

/// Graded Betti numbers b_{i,j} = dim Tor_i(C, k)_j.
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;  // nonzero entries only

  std::size_t at(int i, int j) const;
  void set(int i, int j, std::size_t v);
  int projective_dimension() const;
  /// Index of the last nonzero row.
  int regularity() const;
  std::vector<std::size_t> totals() const;
  /// Row r as (b_{0,r}, b_{1,1+r}, ...) up to the projective dimension.
  std::vector<std::size_t> row(int r) const;
  /// sum (-1)^i b_{i,j} t^j, lowest degree first.
  std::vector<long long> k_polynomial() const;

  /// Totals header, then rows 0..regularity; "-" marks zeros.
  std::string to_text() const;
  /// {"i,j": b_ij} over the nonzero entries, ordered by (i, j).
  std::string to_json() const;

  bool operator==(const BettiTable&) const = default;
};

/// The strand Lambda^{i+1} V (x) C_{s-1} -> Lambda^i V (x) C_s -> Lambda^{i-1} V (x) C_{s+1}
/// of the Koszul complex on y_1..y_n tensored with a truncated quotient ring.
/// Basis of Lambda^i V (x) C_s: exterior monomial (lex rank) major, standard
/// monomial minor.
template <class Field>
class KoszulStrand {
 public:
  using Row = SparseRow<Field>;

  KoszulStrand(const TruncatedQuotient<Field>& ring, std::size_t i, std::size_t s) : ring_(ring), i_(i), s_(s) {
    if (s + 1 > ring.top_degree()) throw InputError("Koszul strand needs the quotient one degree beyond s");
  }

  std::size_t dim(std::size_t i, std::size_t s) const {
    if (i > ring_.nvars()) return 0;
    return static_cast<std::size_t>(binomial(ring_.nvars(), i)) * ring_.quotient_dim(s);
  }

  /// Images of the basis of Lambda^i (x) C_s under the differential, one row each.
  std::vector<Row> differential(std::size_t i, std::size_t s) const {
    std::vector<Row> rows;
    const std::size_t n = ring_.nvars();
    if (i == 0 || i > n) {
      rows.resize(dim(i, s));
      return rows;
    }
    const std::size_t cs = ring_.quotient_dim(s);
    const std::size_t target = ring_.quotient_dim(s + 1);
    const auto& field = ring_.field();
    for (const auto& S : k_subsets(n, i)) {
      std::vector<std::size_t> face_rank(i);
      for (std::size_t t = 0; t < i; ++t) {
        IndexSet face;
        for (std::size_t u = 0; u < i; ++u)
          if (u != t) face.push_back(S[u]);
        face_rank[t] = subset_rank(face, n);
      }
      for (std::size_t k = 0; k < cs; ++k) {
        Row row;
        for (std::size_t t = 0; t < i; ++t) {
          auto prod = ring_.multiply(S[t], s, k);
          const std::size_t base = face_rank[t] * target;
          for (const auto& [c, v] : prod) row.emplace_back(static_cast<std::uint32_t>(base + c), t % 2 ? field.neg(v) : v);
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
    }
    return rows;
  }

  std::size_t rank_of(std::size_t i, std::size_t s) const {
    if (i == 0 || i > ring_.nvars() || dim(i, s) == 0) return 0;
    return sparse_rank(ring_.field(), dim(i - 1, s + 1), differential(i, s));
  }

  /// dim H = dim(middle) - rank(outgoing) - rank(incoming).
  std::size_t homology() const {
    std::size_t middle = dim(i_, s_);
    if (middle == 0) return 0;
    std::size_t out = rank_of(i_, s_);
    std::size_t in = s_ == 0 ? 0 : rank_of(i_ + 1, s_ - 1);
    return middle - out - in;
  }

  /// Checks that the two differentials of the strand compose to zero.
  bool composes_to_zero() const {
    if (s_ == 0 || i_ == 0) return true;
    auto outer = differential(i_ + 1, s_ - 1);
    auto inner = differential(i_, s_);
    const auto& field = ring_.field();
    std::vector<typename Field::Elem> acc(dim(i_ - 1, s_ + 1), field.zero());
    for (const auto& row : outer) {
      for (const auto& [c, v] : row)
        for (const auto& [c2, v2] : inner[c]) acc[c2] = field.add(acc[c2], field.mul(v, v2));
      for (auto& x : acc) {
        if (!field.is_zero(x)) return false;
      }
    }
    return true;
  }

 private:
  const TruncatedQuotient<Field>& ring_;
  std::size_t i_;
  std::size_t s_;
};

struct TorOptions {
  /// Compute strands j - i > 2 instead of returning 0 by 2-regularity.
  bool verify_regularity = false;
};

/// dim Tor_i(C(A), k)_j from the Koszul complex on all d variables. Exact
/// rational elimination for small strands, agreement of two primes otherwise.
std::size_t tor_dimension(const Arrangement& a, int i, int j, const TorOptions& options = {});

/// Size of the larger matrix of the full strand at (i, s), a proxy for its cost.
std::size_t full_strand_size(const Arrangement& a, int i, int s);

/// Generic linear section used as an independent exact check: three
/// variables are replaced by random integer combinations of the others,
/// giving C' = C / (y_{n+t} - sum r_{t,s} y_s) over n = d - 3 variables. It is
/// accepted only when C'_3 = 0 and dim C' equals the multiplicity of C; then
/// the three forms are a regular sequence and Tor^R(C, k) = Tor^{R'}(C', k)
/// degree by degree.
struct ArtinianReduction {
  std::size_t variables = 0;
  std::vector<std::vector<long>> substitution;  // 3 x (d - 3)
  std::vector<std::size_t> dims;                // dim C'_q, q = 0..3
  long long multiplicity = 0;
  unsigned attempts = 0;
};

/// Throws VerificationError when five draws fail the certificate.
ArtinianReduction artinian_reduction(const Arrangement& a, std::uint64_t seed);
/// Exact Betti table of C' over Q[y_1..y_{d-3}].
BettiTable reduced_betti_table(const Arrangement& a, const ArtinianReduction& reduction);

struct BettiOptions {
  /// Also compute strand j - i = 3 for every i.
  bool verify_regularity = false;
  /// Recompute the table exactly through a certified linear reduction.
  bool reduction_check = true;
  std::uint64_t seed = 20080701;
};

struct BettiComputation {
  BettiTable table;
  ArtinianReduction reduction;
  /// Entries whose strand was too large for rational elimination and was
  /// computed modulo two primes instead.
  std::vector<std::pair<int, int>> dual_prime;
  /// Values of i whose strand 3 was computed directly.
  std::vector<int> strand3_checked;
};

/// Strands 0..2 (0..3 with verify_regularity) for i = 0..d on the full
/// Koszul complex.
BettiComputation compute_betti(const Arrangement& a, const BettiOptions& options = {});
BettiTable betti_table(const Arrangement& a, const BettiOptions& options = {});

struct B23Formula {
  long long value = 0;
  bool hypothesis_holds = false;    // no minimal cubic generators
  std::size_t cubic_generators = 0;  // dim I_3 - dim R_1 I_2
};
/// 2 (C(d,3) - 1) - (d - 3)(sum mu + 1).
B23Formula b23_formula(const Arrangement& a);

}  // namespace otb
