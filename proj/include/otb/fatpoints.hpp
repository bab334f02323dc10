#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "otb/arrangement.hpp"
#include "otb/mpoly.hpp"
#include "otb/multinet.hpp"

namespace otb {

/// m E_0 - sum a_p E_p on the blowup of the plane at the flats of an
/// arrangement; mults[p] is a_p for the p-th flat of compute_flats.
struct DivisorClass {
  long m = 0;
  std::vector<long> mults;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator*(long c) const;
  bool operator==(const DivisorClass&) const = default;
  std::string to_string() const;
};

/// m1 m2 - sum a_p b_p (E_0^2 = 1, E_p^2 = -1, distinct classes orthogonal).
long pairing(const DivisorClass& x, const DivisorClass& y);
/// K = -3 E_0 + sum E_p.
DivisorClass canonical_class(std::size_t flats);
DivisorClass exceptional_class(std::size_t flats, std::size_t p);  // E_p
DivisorClass hyperplane_class(std::size_t flats);                  // E_0
/// (D^2 - D.K)/2 + 1.
long riemann_roch_chi(const DivisorClass& d);

/// D_A = (d-1) E_0 - sum mu(p) E_p.
DivisorClass divisor_DA(const Arrangement& a, const std::vector<FlatPoint>& flats);

/// Degree-m forms vanishing to order >= a_p at every flat p.
struct SectionSpace {
  long m = 0;
  std::vector<MPoly> basis;
  std::size_t dimension = 0;
  std::size_t conditions = 0;  // rows of the condition matrix
  std::size_t rank = 0;        // its rank
  long chi = 0;
  long h1() const { return static_cast<long>(dimension) - chi; }
};

/// Imposes, at each flat, the C(a_p+1, 2) partial derivatives of order
/// a_p - 1 (which implies all lower orders by Euler's identity). Throws
/// InputError "not a fat-point divisor" when m or some a_p is negative.
SectionSpace h0_fatpoints(const Arrangement& a, const std::vector<FlatPoint>& flats, const DivisorClass& d);

/// The condition matrix used by h0_fatpoints, one row per condition.
std::vector<std::vector<Rational>> fatpoint_conditions(const std::vector<FlatPoint>& flats, const DivisorClass& d);

struct NetSplit {
  DivisorClass a_div;  // m E_0 - sum_{p in Z} n_p E_p
  DivisorClass b_div;  // D_A - A
  long a_lower_bound = 2;
  /// km - C(m+1, 2) for nets, 0 otherwise.
  long b_lower_bound = 0;
};

NetSplit net_split(const Arrangement& a, const std::vector<FlatPoint>& flats, const MultinetCertificate& cert);

}  // namespace otb
