#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "otb/echelon.hpp"
#include "otb/error.hpp"
#include "otb/mpoly.hpp"

namespace otb {

/// Graded pieces 0..top of R/I for R = k[y_1..y_n] and I generated by
/// homogeneous polynomials, computed degree by degree with
/// I_q = R_1 * I_{q-1} + span(generators of degree q).
///
/// Monomials of each degree are ordered largest first (graded lex), so the
/// echelon pivots are leading monomials and the remaining (standard)
/// monomials form a basis of the quotient piece.
template <class Field>
class TruncatedQuotient {
 public:
  using Elem = typename Field::Elem;
  using Row = SparseRow<Field>;

  TruncatedQuotient(Field field, std::size_t nvars, const std::vector<MPoly>& generators, std::size_t top)
      : field_(field), nvars_(nvars), top_(top) {
    for (const auto& g : generators) {
      if (g.nvars() != nvars) throw InputError("generator lives in a different ring");
      if (!g.is_homogeneous()) throw InputError("generators must be homogeneous");
    }
    for (std::size_t q = 0; q <= top; ++q) {
      monomials_.push_back(monomials_of_degree(nvars, q));
      std::map<Exponents, std::uint32_t> index;
      for (std::size_t i = 0; i < monomials_[q].size(); ++i)
        index.emplace(monomials_[q][i], static_cast<std::uint32_t>(i));
      if (q > 0) {
        // times_var_[q-1][i * n + s] = index of y_s * m_i in degree q
        std::vector<std::uint32_t> table(monomials_[q - 1].size() * nvars);
        for (std::size_t i = 0; i < monomials_[q - 1].size(); ++i)
          for (std::size_t s = 0; s < nvars; ++s) {
            Exponents e = monomials_[q - 1][i];
            ++e[s];
            table[i * nvars + s] = index.at(e);
          }
        times_var_.push_back(std::move(table));
      }
      index_.push_back(std::move(index));
    }
    for (std::size_t q = 0; q <= top; ++q) {
      SparseEchelon<Field> ech(field_, monomials_[q].size());
      if (q > 0) {
        const auto& lower = ideal_[q - 1];
        const auto& table = times_var_[q - 1];
        for (const auto& row : lower.rows())
          for (std::size_t s = 0; s < nvars; ++s) {
            Row shifted;
            shifted.reserve(row.size());
            for (const auto& [c, v] : row) shifted.emplace_back(table[c * nvars + s], v);
            std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            ech.insert(shifted);
          }
      }
      from_lower_.push_back(ech.rank());
      for (const auto& g : generators) {
        if (g.degree() != static_cast<long>(q)) continue;
        Row r;
        for (const auto& [e, c] : g.terms()) r.emplace_back(index_[q].at(e), field_.from(c));
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(r);
      }
      ech.reduce_fully();
      std::vector<std::size_t> standard = ech.free_columns();
      std::vector<std::int64_t> position(monomials_[q].size(), -1);
      for (std::size_t k = 0; k < standard.size(); ++k) position[standard[k]] = static_cast<std::int64_t>(k);
      ideal_.push_back(std::move(ech));
      standard_.push_back(std::move(standard));
      position_.push_back(std::move(position));
    }
  }

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t top_degree() const { return top_; }

  const std::vector<Exponents>& monomials(std::size_t q) const { return monomials_.at(q); }
  const SparseEchelon<Field>& ideal(std::size_t q) const { return ideal_.at(q); }
  std::size_t ideal_dim(std::size_t q) const { return ideal_.at(q).rank(); }
  std::size_t quotient_dim(std::size_t q) const { return standard_.at(q).size(); }
  /// Indices (into monomials(q)) of the standard monomials.
  const std::vector<std::size_t>& standard(std::size_t q) const { return standard_.at(q); }
  /// Minimal generators needed in degree q: dim I_q - dim(R_1 I_{q-1}).
  std::size_t new_generators(std::size_t q) const { return ideal_dim(q) - from_lower_.at(q); }
  std::size_t product_dim(std::size_t q) const { return from_lower_.at(q); }

  /// Normal form of a degree-q polynomial in the standard basis of C_q.
  Row normal_form(std::size_t q, const MPoly& p) const {
    Row r;
    for (const auto& [e, c] : p.terms()) r.emplace_back(index_.at(q).at(e), field_.from(c));
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return to_standard(q, ideal_[q].reduce(r));
  }

  /// y_var times the k-th standard monomial of degree q, in the standard basis of degree q+1.
  Row multiply(std::size_t var, std::size_t q, std::size_t k) const {
    if (q + 1 > top_) throw InputError("multiplication leaves the computed range of degrees");
    std::uint32_t c = times_var_[q][standard_[q][k] * nvars_ + var];
    if (position_[q + 1][c] >= 0) return {{static_cast<std::uint32_t>(position_[q + 1][c]), field_.one()}};
    // RREF pivot row: m_c + sum v * m_col in I, so m_c = -sum v * m_col in the quotient
    const Row& pivot = ideal_[q + 1].pivot_row(c);
    Row out;
    for (std::size_t t = 1; t < pivot.size(); ++t)
      out.emplace_back(static_cast<std::uint32_t>(position_[q + 1][pivot[t].first]), field_.neg(pivot[t].second));
    return out;
  }

 private:
  Row to_standard(std::size_t q, const Row& reduced) const {
    Row out;
    for (const auto& [c, v] : reduced) out.emplace_back(static_cast<std::uint32_t>(position_[q][c]), v);
    return out;
  }

  Field field_;
  std::size_t nvars_;
  std::size_t top_;
  std::vector<std::vector<Exponents>> monomials_;
  std::vector<std::map<Exponents, std::uint32_t>> index_;
  std::vector<std::vector<std::uint32_t>> times_var_;
  std::vector<SparseEchelon<Field>> ideal_;
  std::vector<std::size_t> from_lower_;
  std::vector<std::vector<std::size_t>> standard_;
  std::vector<std::vector<std::int64_t>> position_;
};

}  // namespace otb
