#include "otb/circuits.hpp"

#include <algorithm>

#include "otb/error.hpp"
#include "otb/matrix.hpp"

namespace otb {

namespace {

bool contains_subset(const IndexSet& big, const IndexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<Circuit> enumerate_circuits(const Arrangement& a, std::size_t max_size) {
  const std::size_t d = a.size();
  if (max_size > d) throw InputError("circuit size bound exceeds the number of lines");
  std::vector<Circuit> found;
  for (std::size_t k = 2; k <= max_size; ++k) {
    for (const auto& subset : k_subsets(d, k)) {
      bool skip = std::any_of(found.begin(), found.end(),
                              [&](const Circuit& c) { return contains_subset(subset, c.indices); });
      if (skip) continue;
      RatMatrix cols(3, k);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t r = 0; r < 3; ++r) cols(r, j) = a.form(subset[j])[r];
      RatMatrix ker = kernel_basis(cols);
      if (ker.cols() == 0) continue;
      if (ker.cols() != 1) throw VerificationError("dependent set without a smaller circuit has a wide kernel");
      auto v = primitive_normalized(ker.column(0));
      if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; }))
        throw VerificationError("circuit dependency has a zero coefficient");
      found.push_back({subset, std::move(v)});
    }
  }
  return found;
}

MPoly circuit_relation(const Circuit& c, std::size_t d) {
  MPoly f(d);
  for (std::size_t j = 0; j < c.indices.size(); ++j) {
    Exponents e(d, 0);
    for (std::size_t l = 0; l < c.indices.size(); ++l)
      if (l != j) e[c.indices[l]] = 1;
    f.add_term(e, c.coeffs[j]);
  }
  return f;
}

}  // namespace otb
