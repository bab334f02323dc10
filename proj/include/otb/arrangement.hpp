#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "otb/mpoly.hpp"
#include "otb/rational.hpp"
#include "otb/subsets.hpp"

namespace otb {

/// Coefficients (a, b, c) of a x + b y + c z.
using LinearForm = std::array<Rational, 3>;
/// Projective point stored as a primitive integer vector, first nonzero entry positive.
using ProjectivePoint = std::array<Rational, 3>;

/// A central line arrangement in P^2 with fixed defining forms.
///
/// Forms are normalized on construction to primitive integer vectors with
/// positive first nonzero entry. Construction rejects fewer than three lines,
/// proportional pairs ("duplicate line") and forms that do not span the dual
/// space ("non-essential arrangement").
class Arrangement {
 public:
  Arrangement(std::vector<LinearForm> forms, std::string name = {});

  std::size_t size() const { return forms_.size(); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& form(std::size_t i) const { return forms_.at(i); }
  const std::string& name() const { return name_; }

  /// The form as a polynomial in x, y, z.
  MPoly form_poly(std::size_t i) const;
  /// Product of all defining forms.
  MPoly defining_polynomial() const;

  std::string form_to_string(std::size_t i) const;

 private:
  std::vector<LinearForm> forms_;
  std::string name_;
};

/// A rank-2 flat: an intersection point of at least two lines.
struct FlatPoint {
  ProjectivePoint point;
  IndexSet lines;  // sorted, 0-based
  int mu = 0;      // |lines| - 1

  bool contains(std::size_t line) const;
};

/// Coefficients of P(M, t), lowest degree first (length 4 for plane arrangements).
struct PoincarePoly {
  std::vector<long long> coeffs;

  /// Quotient by (1 + t); throws VerificationError when not divisible.
  std::vector<long long> projective_factor() const;
  std::string to_string() const;
  bool operator==(const PoincarePoly&) const = default;
};

std::vector<std::string> builtin_names();
Arrangement builtin_arrangement(std::string_view name);

/// Accepts a JSON document {"name": ..., "forms": [[q,q,q], ...]} (entries are
/// integers or "p/q" strings) or the name of a builtin arrangement.
Arrangement parse_arrangement(std::string_view source);
Arrangement load_arrangement_file(const std::string& path);
std::string arrangement_to_json(const Arrangement& a);

ProjectivePoint canonical_point(const std::array<Rational, 3>& v);
std::string point_to_string(const ProjectivePoint& p);

/// All intersection points with full incidence sets, sorted by incidence set.
std::vector<FlatPoint> compute_flats(const Arrangement& a);

/// Sum of mu(p) over the rank-2 flats.
long long sum_mu(const std::vector<FlatPoint>& flats);

/// Moebius values of the rank-graded lattice, summed by rank: entry r is the
/// sum of mu(x) over flats of rank r (rank 0..3).
std::vector<long long> moebius_by_rank(const Arrangement& a, const std::vector<FlatPoint>& flats);

PoincarePoly poincare_polynomial(const Arrangement& a, const std::vector<FlatPoint>& flats);
PoincarePoly poincare_polynomial(const Arrangement& a);

}  // namespace otb
