#include "otb/koszul_betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "otb/error.hpp"
#include "otb/parallel.hpp"
#include "otb/random.hpp"

namespace otb {

namespace {

constexpr std::size_t kExactStrandLimit = 1500;
constexpr unsigned kMaxDraws = 5;

std::size_t strand_size(std::size_t d, const std::vector<std::size_t>& dims, int i, int s) {
  auto lam = [&](int k) -> std::size_t {
    return k < 0 || static_cast<std::size_t>(k) > d ? 0 : static_cast<std::size_t>(binomial(d, static_cast<std::size_t>(k)));
  };
  auto us = static_cast<std::size_t>(s);
  return std::max({lam(i) * dims[us], s > 0 ? lam(i + 1) * dims[us - 1] : 0, lam(i - 1) * dims[us + 1]});
}

// Quotient rings of C(A) shared by the strands of the full Koszul complex:
// one exact, and one per prime for strands too large for rational elimination.
class FullKoszul {
 public:
  FullKoszul(const OTPresentation& p, std::size_t top, bool modular)
      : d_(p.d), exact_(ot_ring<RationalField>(p, top)) {
    if (modular) {
      mod_.emplace_back(ot_ring(p, top, PrimeField(PrimeField::kDefaultPrime)));
      mod_.emplace_back(ot_ring(p, top, PrimeField(PrimeField::kSecondPrime)));
    }
    for (std::size_t q = 0; q <= top; ++q) dims_.push_back(exact_.quotient_dim(q));
  }

  bool needs_primes(std::size_t i, std::size_t s) const {
    return strand_size(d_, dims_, static_cast<int>(i), static_cast<int>(s)) > kExactStrandLimit;
  }

  std::size_t homology(std::size_t i, std::size_t s) const {
    if (!needs_primes(i, s)) return KoszulStrand<RationalField>(exact_, i, s).homology();
    if (mod_.size() != 2) throw InputError("modular rings were not prepared");
    std::size_t r0 = KoszulStrand<PrimeField>(mod_[0], i, s).homology();
    std::size_t r1 = KoszulStrand<PrimeField>(mod_[1], i, s).homology();
    if (r0 != r1)
      throw VerificationError("Koszul homology at (" + std::to_string(i) + ", " + std::to_string(i + s) +
                              ") differs between the two primes");
    return r0;
  }

 private:
  std::size_t d_;
  TruncatedQuotient<RationalField> exact_;
  std::vector<TruncatedQuotient<PrimeField>> mod_;
  std::vector<std::size_t> dims_;
};

MPoly substitute_reduction(const MPoly& f, std::size_t n, const std::vector<std::vector<long>>& r) {
  std::vector<MPoly> images;
  for (std::size_t s = 0; s < n; ++s) images.push_back(MPoly::variable(n, s));
  for (const auto& row : r) {
    MPoly img(n);
    for (std::size_t s = 0; s < n; ++s) img += MPoly::variable(n, s) * Rational(row[s]);
    images.push_back(std::move(img));
  }
  return f.substitute(images);
}

}  // namespace

std::size_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::size_t v) {
  if (v == 0)
    entries.erase({i, j});
  else
    entries[{i, j}] = v;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [k, v] : entries) pd = std::max(pd, k.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [k, v] : entries) reg = std::max(reg, k.second - k.first);
  return reg;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> t(static_cast<std::size_t>(projective_dimension()) + 1, 0);
  for (const auto& [k, v] : entries) t[static_cast<std::size_t>(k.first)] += v;
  return t;
}

std::vector<std::size_t> BettiTable::row(int r) const {
  std::vector<std::size_t> out;
  for (int i = 0; i <= projective_dimension(); ++i) out.push_back(at(i, i + r));
  return out;
}

std::vector<long long> BettiTable::k_polynomial() const {
  std::vector<long long> k;
  for (const auto& [key, v] : entries) {
    auto j = static_cast<std::size_t>(key.second);
    if (k.size() <= j) k.resize(j + 1, 0);
    k[j] += (key.first % 2 ? -1 : 1) * static_cast<long long>(v);
  }
  return k;
}

std::string BettiTable::to_text() const {
  const int pd = projective_dimension(), reg = regularity();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  std::vector<std::string> header;
  for (int i = 0; i <= pd; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  labels.push_back("");
  std::vector<std::string> tot;
  for (auto t : totals()) tot.push_back(std::to_string(t));
  cells.push_back(tot);
  labels.push_back("total:");
  for (int r = 0; r <= reg; ++r) {
    std::vector<std::string> line;
    for (auto v : row(r)) line.push_back(v ? std::to_string(v) : "-");
    cells.push_back(line);
    labels.push_back(std::to_string(r) + ":");
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 1, 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << std::setw(static_cast<int>(label_width)) << labels[r];
    for (std::size_t c = 0; c < cells[r].size(); ++c) os << ' ' << std::setw(static_cast<int>(width[c])) << cells[r][c];
    os << '\n';
  }
  return os.str();
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [k, v] : entries) doc[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
  return doc.dump();
}

std::size_t full_strand_size(const Arrangement& a, int i, int s) {
  if (i < 0 || s < 0) return 0;
  auto dims = quotient_dimensions(ot_presentation(a), static_cast<std::size_t>(s) + 1);
  return strand_size(a.size(), dims, i, s);
}

std::size_t tor_dimension(const Arrangement& a, int i, int j, const TorOptions& options) {
  const int d = static_cast<int>(a.size());
  if (i < 0 || i > d || j < i) return 0;
  const int s = j - i;
  if (s > 2 && !options.verify_regularity) return 0;
  auto p = ot_presentation(a);
  auto us = static_cast<std::size_t>(s);
  bool modular = full_strand_size(a, i, s) > kExactStrandLimit;
  FullKoszul k(p, us + 1, modular);
  return k.homology(static_cast<std::size_t>(i), us);
}

ArtinianReduction artinian_reduction(const Arrangement& a, std::uint64_t seed) {
  const std::size_t d = a.size();
  const std::size_t n = d - 3;
  auto p = ot_presentation(a);
  auto poincare = poincare_polynomial(a);
  const long long e = poincare.coeffs.back();
  DeterministicRng rng(seed);
  for (unsigned attempt = 1; attempt <= kMaxDraws; ++attempt) {
    ArtinianReduction red;
    red.variables = n;
    red.multiplicity = e;
    red.attempts = attempt;
    red.substitution.assign(3, std::vector<long>(n));
    for (auto& row : red.substitution)
      for (auto& v : row) v = static_cast<long>(rng.integer(-30, 30));
    std::vector<MPoly> gens;
    for (const auto& f : p.generators) {
      MPoly g = substitute_reduction(f, n, red.substitution);
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    TruncatedQuotient<RationalField> ring(RationalField{}, n, gens, 3);
    long long total = 0;
    for (std::size_t q = 0; q <= 3; ++q) {
      red.dims.push_back(ring.quotient_dim(q));
      total += static_cast<long long>(ring.quotient_dim(q));
    }
    if (red.dims[3] == 0 && total == e) return red;
  }
  throw VerificationError("no generic linear reduction found after " + std::to_string(kMaxDraws) +
                          " draws; the quotient may not be Cohen-Macaulay");
}

BettiTable reduced_betti_table(const Arrangement& a, const ArtinianReduction& red) {
  const std::size_t n = red.variables;
  std::vector<MPoly> gens;
  for (const auto& f : ot_presentation(a).generators) {
    MPoly g = substitute_reduction(f, n, red.substitution);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  // C'_3 = 0, so strands s = 0, 1, 2 see everything
  TruncatedQuotient<RationalField> ring(RationalField{}, n, gens, 3);
  BettiTable t;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t s = 0; s <= 2; ++s)
      t.set(static_cast<int>(i), static_cast<int>(i + s), KoszulStrand<RationalField>(ring, i, s).homology());
  return t;
}

BettiComputation compute_betti(const Arrangement& a, const BettiOptions& options) {
  BettiComputation out;
  const std::size_t d = a.size();
  const std::size_t top_s = options.verify_regularity ? 3 : 2;
  auto p = ot_presentation(a);
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t s = 0; s <= top_s; ++s) jobs.emplace_back(i, s);
  bool modular = false;
  {
    auto dims = quotient_dimensions(p, top_s + 1);
    for (const auto& [i, s] : jobs)
      modular = modular || strand_size(d, dims, static_cast<int>(i), static_cast<int>(s)) > kExactStrandLimit;
  }
  FullKoszul full(p, top_s + 1, modular);
  std::vector<std::size_t> values(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) { values[k] = full.homology(jobs[k].first, jobs[k].second); });
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto [i, s] = jobs[k];
    out.table.set(static_cast<int>(i), static_cast<int>(i + s), values[k]);
    if (full.needs_primes(i, s)) out.dual_prime.emplace_back(static_cast<int>(i), static_cast<int>(i + s));
    if (s == 3) out.strand3_checked.push_back(static_cast<int>(i));
  }
  if (options.reduction_check) {
    out.reduction = artinian_reduction(a, options.seed);
    BettiTable reduced = reduced_betti_table(a, out.reduction);
    if (!(reduced == out.table)) {
      for (const auto& [k, v] : out.table.entries)
        if (reduced.at(k.first, k.second) != v)
          throw VerificationError("b_{" + std::to_string(k.first) + "," + std::to_string(k.second) + "} = " +
                                  std::to_string(v) + " on the full complex but " +
                                  std::to_string(reduced.at(k.first, k.second)) + " after linear reduction");
      throw VerificationError("linear reduction produces Betti numbers absent from the full complex");
    }
  }
  return out;
}

BettiTable betti_table(const Arrangement& a, const BettiOptions& options) { return compute_betti(a, options).table; }

B23Formula b23_formula(const Arrangement& a) {
  const long long d = static_cast<long long>(a.size());
  const long long smu = sum_mu(compute_flats(a));
  B23Formula f;
  f.value = 2 * (static_cast<long long>(binomial(a.size(), 3)) - 1) - (d - 3) * (smu + 1);
  auto ring = ot_ring<RationalField>(ot_presentation(a), 3);
  f.cubic_generators = ring.new_generators(3);
  f.hypothesis_holds = f.cubic_generators == 0;
  return f;
}

}  // namespace otb
