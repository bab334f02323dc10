#include <cstdlib>
#include <string>
#include <thread>

#include "otb/random.hpp"
#include "otb/rational.hpp"
#include "otb/subsets.hpp"

namespace otb {

unsigned worker_threads() {
  if (const char* env = std::getenv("OTB_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(const IndexSet& s, std::size_t n) {
  std::size_t k = s.size();
  std::size_t r = 0;
  std::size_t next = 0;
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t v = next; v < s[t]; ++v) r += binomial(n - 1 - v, k - 1 - t);
    next = s[t] + 1;
  }
  return r;
}

}  // namespace otb
