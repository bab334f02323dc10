#pragma once

#include <cstdint>

#include "otb/error.hpp"
#include "otb/rational.hpp"

namespace otb {

/// The rationals, for exact elimination.
struct RationalField {
  using Elem = Rational;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static Elem from(const Rational& q) { return q; }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a) { return 1 / a; }
  static Rational lift(const Elem& a) { return a; }
  static constexpr bool exact = true;
};

/// Z/p for a word-sized prime p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint32_t kDefaultPrime = 32003;
  static constexpr std::uint32_t kSecondPrime = 2147483647;  // 2^31 - 1

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {}

  std::uint32_t prime() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_integer(const Integer& z) const {
    return static_cast<Elem>(mpz_fdiv_ui(z.get_mpz_t(), p_));
  }
  /// Throws InputError when p divides the denominator.
  Elem from(const Rational& q) const {
    Elem den = from_integer(q.get_den());
    if (den == 0) throw InputError("prime divides a denominator");
    return mul(from_integer(q.get_num()), inv(den));
  }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    // Fermat; a != 0
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Elem>(result);
  }
  static constexpr bool exact = false;

 private:
  std::uint32_t p_;
};

}  // namespace otb
