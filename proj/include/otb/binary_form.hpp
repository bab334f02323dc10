#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "otb/rational.hpp"

namespace otb {

/// Homogeneous polynomial sum_k c_k lambda^(b-k) mu^k of degree b.
class BinaryForm {
 public:
  BinaryForm() : coeffs_{Rational(0)} {}
  explicit BinaryForm(std::vector<Rational> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  /// Largest power of mu dividing the form (form must be nonzero).
  std::size_t mu_valuation() const;

  bool operator==(const BinaryForm&) const = default;
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// gcd of binary forms, monic in lambda after removing the common power of mu.
/// Zero forms are ignored; throws InputError("zero pencil") if all are zero.
BinaryForm binary_gcd(std::span<const BinaryForm> forms);

}  // namespace otb
