#include "otb/multinet.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "otb/error.hpp"
#include "otb/matrix.hpp"

namespace otb {

namespace {

std::string line_name(std::size_t i) { return "line " + std::to_string(i + 1); }

std::string block_name(std::size_t i) { return "block " + std::to_string(i + 1); }

// block index of every line; InputError unless the blocks partition 0..d-1
std::vector<std::size_t> block_of_lines(std::size_t d, const std::vector<IndexSet>& blocks) {
  std::vector<std::size_t> of(d, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("not a partition: " + block_name(b) + " is empty");
    for (auto l : blocks[b]) {
      if (l >= d) throw InputError("not a partition: " + line_name(l) + " does not exist");
      if (of[l] != blocks.size()) throw InputError("not a partition: " + line_name(l) + " appears twice");
      of[l] = b;
    }
  }
  for (std::size_t l = 0; l < d; ++l)
    if (of[l] == blocks.size()) throw InputError("not a partition: " + line_name(l) + " is in no block");
  return of;
}

void canonicalize(std::vector<IndexSet>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

// Point index of the intersection of every pair of lines.
std::vector<std::vector<std::size_t>> meet_table(std::size_t d, const std::vector<FlatPoint>& flats) {
  std::vector<std::vector<std::size_t>> meet(d, std::vector<std::size_t>(d, flats.size()));
  for (std::size_t p = 0; p < flats.size(); ++p)
    for (auto i : flats[p].lines)
      for (auto j : flats[p].lines)
        if (i != j) meet[i][j] = p;
  return meet;
}

// Quick necessary conditions on a weighted partition: (1) and (3).
bool weights_pass(const std::vector<std::size_t>& block_of, std::size_t k, const std::vector<long>& w,
                  const std::vector<FlatPoint>& flats, const std::vector<std::size_t>& z) {
  std::vector<long> sum(k, 0);
  for (std::size_t l = 0; l < w.size(); ++l) sum[block_of[l]] += w[l];
  for (std::size_t b = 1; b < k; ++b)
    if (sum[b] != sum[0]) return false;
  for (auto p : z) {
    std::fill(sum.begin(), sum.end(), 0);
    for (auto l : flats[p].lines) sum[block_of[l]] += w[l];
    for (std::size_t b = 1; b < k; ++b)
      if (sum[b] != sum[0]) return false;
  }
  return true;
}

std::vector<std::size_t> cross_block_points(const std::vector<std::size_t>& block_of,
                                            const std::vector<FlatPoint>& flats) {
  std::vector<std::size_t> z;
  for (std::size_t p = 0; p < flats.size(); ++p) {
    const auto& lines = flats[p].lines;
    bool cross = std::any_of(lines.begin(), lines.end(),
                             [&](std::size_t l) { return block_of[l] != block_of[lines.front()]; });
    if (cross) z.push_back(p);
  }
  return z;
}

}  // namespace

bool MultinetCertificate::is_net() const {
  return std::all_of(weights.begin(), weights.end(), [](long w) { return w == 1; }) &&
         std::all_of(n.begin(), n.end(), [](long v) { return v == 1; });
}

MultinetCertificate verify_multinet(const Arrangement& a, const std::vector<FlatPoint>& flats,
                                    std::vector<IndexSet> blocks, std::vector<long> weights) {
  const std::size_t d = a.size();
  if (blocks.size() < 3) throw InputError("a multinet needs at least 3 classes, got " + std::to_string(blocks.size()));
  if (weights.empty()) weights.assign(d, 1);
  if (weights.size() != d) throw InputError("expected " + std::to_string(d) + " weights");
  for (std::size_t l = 0; l < d; ++l)
    if (weights[l] <= 0) throw InputError("weight of " + line_name(l) + " must be positive");
  canonicalize(blocks);
  auto block_of = block_of_lines(d, blocks);
  const std::size_t k = blocks.size();

  MultinetCertificate c;
  c.k = k;
  c.blocks = blocks;
  c.weights = weights;

  // (1) equal class weights
  std::vector<long> class_weight(k, 0);
  for (std::size_t l = 0; l < d; ++l) class_weight[block_of[l]] += weights[l];
  for (std::size_t b = 1; b < k; ++b)
    if (class_weight[b] != class_weight[0])
      throw VerificationError("condition (1) fails: " + block_name(0) + " has weight " +
                              std::to_string(class_weight[0]) + " but " + block_name(b) + " has weight " +
                              std::to_string(class_weight[b]));
  c.m = class_weight[0];

  // Z is the set of cross-class intersection points, so (2) holds by construction.
  c.base_locus = cross_block_points(block_of, flats);

  // (3) n_p independent of the class
  for (auto p : c.base_locus) {
    std::vector<long> through(k, 0);
    for (auto l : flats[p].lines) through[block_of[l]] += weights[l];
    for (std::size_t b = 1; b < k; ++b)
      if (through[b] != through[0])
        throw VerificationError("condition (3) fails at " + point_to_string(flats[p].point) + ": " +
                                block_name(0) + " contributes " + std::to_string(through[0]) + " but " +
                                block_name(b) + " contributes " + std::to_string(through[b]));
    c.n.push_back(through[0]);
  }

  // (4) each class connected through intersections outside Z
  std::vector<bool> in_z(flats.size(), false);
  for (auto p : c.base_locus) in_z[p] = true;
  auto meet = meet_table(d, flats);
  c.connected = true;
  for (const auto& blk : blocks) {
    std::vector<bool> seen(d, false);
    std::vector<std::size_t> stack{blk.front()};
    seen[blk.front()] = true;
    while (!stack.empty()) {
      auto l = stack.back();
      stack.pop_back();
      for (auto o : blk)
        if (!seen[o] && !in_z[meet[l][o]]) {
          seen[o] = true;
          stack.push_back(o);
        }
    }
    if (!std::all_of(blk.begin(), blk.end(), [&](std::size_t l) { return seen[l]; })) c.connected = false;
  }

  // numerology
  long total = std::accumulate(weights.begin(), weights.end(), 0L);
  if (total != static_cast<long>(k) * c.m)
    throw VerificationError("identity sum w = k m fails: " + std::to_string(total) + " != " +
                            std::to_string(static_cast<long>(k) * c.m));
  long squares = 0;
  for (auto v : c.n) squares += v * v;
  if (squares != c.m * c.m)
    throw VerificationError("identity sum n_p^2 = m^2 fails: " + std::to_string(squares) + " != " +
                            std::to_string(c.m * c.m));
  for (std::size_t l = 0; l < d; ++l) {
    long s = 0;
    for (std::size_t t = 0; t < c.base_locus.size(); ++t)
      if (flats[c.base_locus[t]].contains(l)) s += c.n[t];
    if (s != c.m)
      throw VerificationError("identity sum_{p in Z on L} n_p = m fails at " + line_name(l) + ": " +
                              std::to_string(s) + " != " + std::to_string(c.m));
  }
  return c;
}

std::vector<MultinetCertificate> search_multinets(const Arrangement& a, const std::vector<FlatPoint>& flats,
                                                  const MultinetSearchOptions& options) {
  const std::size_t d = a.size();
  const std::size_t k = options.k;
  if (k < 3) throw InputError("multinets have at least 3 classes");
  if (options.max_weight < 1) throw InputError("max weight must be at least 1");
  // Stirling number S(d, k) of k-partitions
  std::vector<std::vector<double>> stirling(d + 1, std::vector<double>(k + 1, 0.0));
  stirling[0][0] = 1;
  for (std::size_t n = 1; n <= d; ++n)
    for (std::size_t j = 1; j <= k; ++j) stirling[n][j] = j * stirling[n - 1][j] + stirling[n - 1][j - 1];
  double space = stirling[d][k];
  for (std::size_t l = 0; l < d; ++l) space *= static_cast<double>(options.max_weight);
  if (space > options.guard)
    throw InputError("multinet search space (" + std::to_string(static_cast<long long>(space)) +
                     " candidates) exceeds the guard; lower --max-weight or --k");

  std::vector<MultinetCertificate> found;
  std::vector<std::size_t> color(d, 0);
  std::vector<long> w(d, 1);

  auto try_weights = [&](const std::vector<std::size_t>& block_of) {
    auto z = cross_block_points(block_of, flats);
    // every point of Z needs a line from every class
    for (auto p : z) {
      std::vector<bool> hit(k, false);
      for (auto l : flats[p].lines) hit[block_of[l]] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return;
    }
    std::vector<IndexSet> blocks(k);
    for (std::size_t l = 0; l < d; ++l) blocks[block_of[l]].push_back(l);
    std::fill(w.begin(), w.end(), 1);
    while (true) {
      long g = 0;
      for (auto v : w) g = std::gcd(g, v);
      if (g == 1 && weights_pass(block_of, k, w, flats, z)) {
        auto cert = verify_multinet(a, flats, blocks, w);
        if (cert.connected || options.include_weak) found.push_back(std::move(cert));
      }
      std::size_t pos = 0;
      while (pos < d && w[pos] == options.max_weight) w[pos++] = 1;
      if (pos == d) break;
      ++w[pos];
    }
  };

  // restricted growth strings with exactly k values
  auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (d - pos < k - used) return;
    if (pos == d) {
      try_weights(color);
      return;
    }
    for (std::size_t c = 0; c <= used && c < k; ++c) {
      color[pos] = c;
      self(self, pos + 1, c == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
  std::sort(found.begin(), found.end(), [](const MultinetCertificate& x, const MultinetCertificate& y) {
    return std::tie(x.blocks, x.weights) < std::tie(y.blocks, y.weights);
  });
  return found;
}

bool is_neighborly(const Arrangement& a, const std::vector<FlatPoint>& flats, const std::vector<IndexSet>& blocks) {
  block_of_lines(a.size(), blocks);
  for (const auto& y : flats)
    for (const auto& pi : blocks) {
      std::size_t common = 0;
      for (auto l : y.lines)
        if (std::find(pi.begin(), pi.end(), l) != pi.end()) ++common;
      if (static_cast<std::size_t>(y.mu) <= common && common < y.lines.size()) return false;
    }
  return true;
}

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::Finite:
      return "finite";
    case CartanType::Affine:
      return "affine";
    default:
      return "indefinite";
  }
}

namespace {

CartanType classify_block(const std::vector<std::vector<long>>& q) {
  const std::size_t n = q.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = q[i][j];
  // symmetric elimination: a PSD matrix has no negative pivot, and a zero
  // pivot forces a zero row
  RatMatrix s = m;
  bool psd = true;
  std::size_t positive = 0;
  for (std::size_t c = 0; c < n && psd; ++c) {
    if (sgn(s(c, c)) < 0) {
      psd = false;
      break;
    }
    if (sgn(s(c, c)) == 0) {
      for (std::size_t j = c + 1; j < n; ++j)
        if (sgn(s(c, j)) != 0) psd = false;
      continue;
    }
    ++positive;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(s(r, c)) == 0) continue;
      Rational f = s(r, c) / s(c, c);
      for (std::size_t j = c; j < n; ++j) s(r, j) -= f * s(c, j);
    }
  }
  if (!psd) return CartanType::Indefinite;
  if (positive == n) return CartanType::Finite;
  if (positive + 1 == n) {
    RatMatrix ker = kernel_basis(m);
    auto v = ker.column(0);
    bool all_pos = std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) > 0; });
    bool all_neg = std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) < 0; });
    if (all_pos || all_neg) return CartanType::Affine;
  }
  return CartanType::Indefinite;
}

}  // namespace

CartanReport cartan_test(const Arrangement& a, const std::vector<FlatPoint>& flats,
                         const std::vector<std::size_t>& z) {
  if (z.empty()) throw InputError("Z must contain at least one point");
  const std::size_t d = a.size();
  CartanReport r;
  std::vector<std::vector<long>> jtj(d, std::vector<long>(d, 0));
  for (auto p : z) {
    if (p >= flats.size()) throw InputError("point index out of range");
    for (auto i : flats[p].lines)
      for (auto j : flats[p].lines) ++jtj[i][j];
  }
  for (std::size_t l = 0; l < d; ++l)
    if (jtj[l][l] > 0) r.lines.push_back(l);
  const std::size_t n = r.lines.size();
  r.q.assign(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.q[i][j] = jtj[r.lines[i]][r.lines[j]] - 1;
  // connected components of the support graph
  std::vector<std::size_t> comp(n, n);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] == n && r.q[u][v] != 0) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  std::size_t affine = 0, other = 0;
  std::vector<IndexSet> partition;
  for (std::size_t c = 0; c < count; ++c) {
    IndexSet idx;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) idx.push_back(i);
    std::vector<std::vector<long>> sub(idx.size(), std::vector<long>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = r.q[idx[i]][idx[j]];
    CartanBlock b;
    for (auto i : idx) b.lines.push_back(r.lines[i]);
    b.type = classify_block(sub);
    (b.type == CartanType::Affine ? affine : other)++;
    partition.push_back(b.lines);
    r.blocks.push_back(std::move(b));
  }
  r.criterion = affine >= 3 && other == 0;
  r.neighborly = n == d && is_neighborly(a, flats, partition);
  return r;
}

}  // namespace otb
