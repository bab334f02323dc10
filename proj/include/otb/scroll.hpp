#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "otb/arrangement.hpp"
#include "otb/mpoly.hpp"
#include "otb/multinet.hpp"
#include "otb/orlik_terao.hpp"

namespace otb {

/// 2 x b matrix of linear forms in y_1..y_d: entry (i, j) is the expansion of
/// sigma_i tau_j in the basis l_1..l_d.
struct MultiplicationMatrix {
  std::size_t d = 0;
  std::vector<std::vector<std::vector<Rational>>> entries;  // [2][b][d]
  std::vector<MPoly> sigma;  // basis of H^0(A), degree m
  std::vector<MPoly> tau;    // basis of H^0(B), degree d - 1 - m
  bool sigma_from_blocks = false;

  std::size_t columns() const { return entries.empty() ? 0 : entries[0].size(); }
  MPoly entry(std::size_t i, std::size_t j) const;
  std::string to_string() const;
};

/// Throws InputError "not a pencil" when h^0(A) != 2 and InputError when the
/// certificate is not a net; VerificationError if a product leaves span{l_k}.
MultiplicationMatrix multiplication_matrix(const Arrangement& a, const std::vector<FlatPoint>& flats,
                                           const MultinetCertificate& cert);

/// For every (lambda:mu) the forms lambda g_{0j} + mu g_{1j} are independent:
/// the b x b minors of the pencil, as binary forms, have constant gcd.
bool is_one_generic(const MultiplicationMatrix& g);

struct MinorCheck {
  std::vector<MPoly> minors;
  bool all_members = false;
  /// Dimension of the span of the minors inside I_2.
  std::size_t span_dimension = 0;
  /// dim I_2 for comparison.
  std::size_t ideal_quadrics = 0;
};

MinorCheck check_minors(const OTPresentation& p, const MultiplicationMatrix& g);
bool minors_in_ideal(const Arrangement& a, const MultiplicationMatrix& g);

struct EagonNorthcott {
  long b = 0;
  /// beta_i = (i+1) C(b, i+2), i = 0..b-2: beta_0 quadrics, beta_1 linear syzygies.
  std::vector<long long> betti;
};

/// b = k m - C(m+1, 2). Throws InputError unless cert is a net with k >= m.
EagonNorthcott en_prediction(const MultinetCertificate& cert, std::size_t d);

}  // namespace otb
