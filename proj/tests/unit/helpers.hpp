#pragma once

#include <array>
#include <initializer_list>
#include <vector>

#include "otb/arrangement.hpp"

namespace otb::test {

inline Arrangement make(std::initializer_list<std::array<long, 3>> forms, const char* name = "test") {
  std::vector<LinearForm> v;
  for (const auto& f : forms) v.push_back({Rational(f[0]), Rational(f[1]), Rational(f[2])});
  return Arrangement(v, name);
}

inline std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace otb::test
