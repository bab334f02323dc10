#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "otb/arrangement.hpp"
#include "otb/circuits.hpp"
#include "otb/field.hpp"
#include "otb/mpoly.hpp"
#include "otb/quotient_ring.hpp"

namespace otb {

/// Generators of the Orlik-Terao ideal (one relation per circuit) together
/// with the forms l_i = alpha / alpha_i that parametrize C(A).
struct OTPresentation {
  std::size_t d = 0;
  std::vector<Circuit> circuits;
  std::vector<MPoly> generators;  // in Q[y_1..y_d]
  std::vector<MPoly> l_forms;     // in Q[x,y,z], degree d-1
};

/// Circuits of a plane arrangement have at most four elements, so the default
/// bound captures every generator.
OTPresentation ot_presentation(const Arrangement& a, std::size_t max_circuit_size = 4);

/// l_i = prod_{j != i} alpha_j.
std::vector<MPoly> l_forms(const Arrangement& a);

template <class Field>
TruncatedQuotient<Field> ot_ring(const OTPresentation& p, std::size_t top, Field field = Field{}) {
  return TruncatedQuotient<Field>(field, p.d, p.generators, top);
}

/// Exact summary of the degree-j slice of I and C(A).
struct GradedPiece {
  std::size_t degree = 0;
  std::size_t ambient_dim = 0;   // C(d-1+j, j)
  std::size_t ideal_dim = 0;
  std::size_t quotient_dim = 0;
  std::vector<Exponents> standard_monomials;
};

GradedPiece ideal_graded_piece(const OTPresentation& p, std::size_t j);

/// dim C(A)_j. Exact while dim R_j stays moderate (every builtin up to j = 5);
/// beyond that computed modulo two independent primes that must agree
/// (VerificationError otherwise).
std::size_t quotient_dimension(const OTPresentation& p, std::size_t j);
/// dim C(A)_j for j = 0..upto, same arithmetic policy as quotient_dimension.
std::vector<std::size_t> quotient_dimensions(const OTPresentation& p, std::size_t upto);

/// Taylor coefficients of P(A, t/(1-t)) and the numerator h(t) of the
/// Hilbert series over (1-t)^3.
struct TeraoSeries {
  std::vector<long long> coefficients;
  std::vector<long long> h_polynomial;
};
TeraoSeries terao_series(const PoincarePoly& poincare, std::size_t upto);

/// True iff g(l_1, ..., l_d) = 0. Throws InputError for non-homogeneous g.
bool membership(const OTPresentation& p, const MPoly& g);

/// d x (d-1) bidiagonal syzygy matrix on (l_1, ..., l_d) with its verified
/// maximal-minor identities minor_i = sign_i * l_i.
struct HilbertBurch {
  std::vector<std::vector<MPoly>> psi;
  std::vector<int> minor_signs;
};
/// Throws VerificationError if a column is not a syzygy or a minor is not +-l_i.
HilbertBurch hilbert_burch_psi(const Arrangement& a);

struct JacobianContainment {
  bool contained = false;
  bool euler_identity = false;
  /// Coefficients of d alpha / d x_v in the basis l_1..l_d (empty if not contained).
  std::array<std::vector<Rational>, 3> coefficients;
};
JacobianContainment jacobian_containment(const Arrangement& a);

/// sum mu(p) - d + 1.
long long gradient_degree(const Arrangement& a, const std::vector<FlatPoint>& flats);

/// orders[p][i] = order of vanishing of l_i at flat p.
std::vector<std::vector<long>> l_vanishing_orders(const Arrangement& a, const std::vector<FlatPoint>& flats);

}  // namespace otb
