#include "otb/resonance.hpp"

#include <algorithm>

#include "otb/error.hpp"
#include "otb/random.hpp"

namespace otb {

namespace {

using QRow = SparseRow<RationalField>;

QRow to_row(const std::vector<Rational>& v) {
  QRow r;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (sgn(v[c]) != 0) r.emplace_back(static_cast<std::uint32_t>(c), v[c]);
  return r;
}

}  // namespace

OS2::OS2(const Arrangement& a, const std::vector<FlatPoint>& flats)
    : d_(a.size()), relations_(RationalField{}, a.size() * (a.size() - 1) / 2) {
  for (const auto& p : flats) {
    if (p.lines.size() < 3) continue;
    for (const auto& t : k_subsets(p.lines.size(), 3)) {
      std::size_t i = p.lines[t[0]], j = p.lines[t[1]], k = p.lines[t[2]];
      // d(e_i e_j e_k) = e_j e_k - e_i e_k + e_i e_j
      std::vector<Rational> v(exterior_dim());
      v[pair_index(j, k)] += 1;
      v[pair_index(i, k)] -= 1;
      v[pair_index(i, j)] += 1;
      relations_.insert(to_row(v));
      ++relation_count_;
    }
  }
}

std::size_t OS2::pair_index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= d_) throw InputError("exterior index needs i < j < d");
  // pairs (0,1), (0,2), ..., (0,d-1), (1,2), ...
  return i * d_ - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<Rational> OS2::wedge(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != d_ || v.size() != d_) throw InputError("vectors must have length d");
  std::vector<Rational> w(exterior_dim());
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = i + 1; j < d_; ++j) w[pair_index(i, j)] = u[i] * v[j] - u[j] * v[i];
  return w;
}

bool OS2::is_zero(const std::vector<Rational>& w) const { return relations_.reduce(to_row(w)).empty(); }

std::size_t OS2::multiplication_rank(std::span<const Rational> a) const {
  SparseEchelon<RationalField> ech = relations_;
  std::size_t before = ech.rank();
  std::vector<Rational> e(d_);
  for (std::size_t l = 0; l < d_; ++l) {
    std::fill(e.begin(), e.end(), Rational(0));
    e[l] = 1;
    ech.insert(to_row(wedge(a, e)));
  }
  return ech.rank() - before;
}

H1Result h1_dimension(const OS2& os, std::span<const Rational> a) {
  if (a.size() != os.d()) throw InputError("vector must have length d = " + std::to_string(os.d()));
  if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; }))
    throw InputError("H^1(A, a) needs a nonzero vector a");
  Rational sum = 0;
  for (const auto& x : a) sum += x;
  H1Result r;
  if (sgn(sum) != 0) {
    r.off_hyperplane = true;
    return r;
  }
  // kernel of a ^ - on A^1, modulo the line spanned by a
  r.dimension = os.d() - os.multiplication_rank(a) - 1;
  return r;
}

H1Result h1_dimension(const Arrangement& a, std::span<const Rational> v) {
  OS2 os(a, compute_flats(a));
  return h1_dimension(os, v);
}

std::vector<ResonanceComponent> local_components(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  std::vector<ResonanceComponent> out;
  const std::size_t d = a.size();
  for (std::size_t p = 0; p < flats.size(); ++p) {
    const auto& lines = flats[p].lines;
    if (flats[p].mu < 2) continue;
    ResonanceComponent c;
    c.kind = ResonanceComponent::Kind::Local;
    c.span = RatMatrix(lines.size() - 1, d);
    for (std::size_t t = 1; t < lines.size(); ++t) {
      c.span(t - 1, lines[0]) = 1;
      c.span(t - 1, lines[t]) = -1;
    }
    c.projective_dimension = static_cast<std::size_t>(flats[p].mu) - 1;
    c.flat = p;
    out.push_back(std::move(c));
  }
  return out;
}

ResonanceComponent essential_component(const Arrangement& a, const MultinetCertificate& cert) {
  const std::size_t d = a.size();
  std::vector<std::vector<Rational>> u(cert.k, std::vector<Rational>(d));
  for (std::size_t b = 0; b < cert.k; ++b)
    for (auto l : cert.blocks[b]) u[b][l] = cert.weights[l];
  ResonanceComponent c;
  c.kind = ResonanceComponent::Kind::Essential;
  c.span = RatMatrix(cert.k - 1, d);
  for (std::size_t b = 1; b < cert.k; ++b)
    for (std::size_t l = 0; l < d; ++l) c.span(b - 1, l) = u[b][l] - u[0][l];
  c.projective_dimension = cert.k - 2;
  c.certificate = cert;
  return c;
}

bool same_subspace(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols() != y.cols()) return false;
  RatMatrix both(x.rows() + y.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) both(r, c) = x(r, c);
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c) both(x.rows() + r, c) = y(r, c);
  std::size_t rx = rank(x), ry = rank(y), rb = rank(both);
  return rx == ry && ry == rb;
}

std::vector<ResonanceComponent> resonance_components(const Arrangement& a, const std::vector<FlatPoint>& flats,
                                                     const ResonanceOptions& options) {
  auto comps = local_components(a, flats);
  for (auto k : options.ks) {
    if (k > a.size()) continue;
    MultinetSearchOptions search;
    search.k = k;
    search.max_weight = options.max_weight;
    for (const auto& cert : search_multinets(a, flats, search)) {
      auto c = essential_component(a, cert);
      bool duplicate = std::any_of(comps.begin(), comps.end(),
                                   [&](const ResonanceComponent& o) { return same_subspace(o.span, c.span); });
      if (!duplicate) comps.push_back(std::move(c));
    }
  }

  OS2 os(a, flats);
  DeterministicRng rng(options.seed);
  for (auto& c : comps) {
    const std::size_t need = c.kind == ResonanceComponent::Kind::Essential ? c.projective_dimension : 1;
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::vector<Rational> v(a.size());
      bool zero = true;
      while (zero) {
        std::fill(v.begin(), v.end(), Rational(0));
        for (std::size_t r = 0; r < c.span.rows(); ++r) {
          Rational coeff = rng.small_rational(9);
          for (std::size_t l = 0; l < a.size(); ++l) v[l] += coeff * c.span(r, l);
        }
        zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
      }
      auto h = h1_dimension(os, v);
      if (h.off_hyperplane || h.dimension < std::max<std::size_t>(need, 1))
        throw VerificationError("component rejected by H1 oracle: H^1 has dimension " +
                                std::to_string(h.dimension) + " at a sample point");
      c.oracle_h1.push_back(h.dimension);
    }
  }
  return comps;
}

}  // namespace otb
