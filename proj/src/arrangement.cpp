#include "otb/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include "json.hpp"
#include <sstream>

#include "otb/error.hpp"
#include "otb/matrix.hpp"

namespace otb {

using nlohmann::json;

namespace {

LinearForm normalize_form(const LinearForm& f) {
  if (std::all_of(f.begin(), f.end(), [](const Rational& q) { return sgn(q) == 0; }))
    throw InputError("zero linear form");
  auto v = primitive_normalized(std::span<const Rational>(f.data(), 3));
  return {v[0], v[1], v[2]};
}

LinearForm form_from_ints(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

struct Builtin {
  const char* name;
  std::vector<std::array<long, 3>> forms;
};

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> table = {
      {"braid-a3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}},
      {"9_3_1",
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {1, -1, -1}, {2, 1, 1}, {2, 1, -1}, {2, -5, 1}}},
      {"9_3_2",
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 3}, {1, 2, 1}, {1, 2, 3}, {2, 3, 3}}},
      {"b3",
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}, {0, 1, -1}, {0, 1, 1}}},
      {"ex-2-4", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}},
  };
  return table;
}

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("form coefficients must be integers or \"p/q\" strings");
}

std::array<Rational, 3> cross(const LinearForm& a, const LinearForm& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const LinearForm& f, const ProjectivePoint& p) { return f[0] * p[0] + f[1] * p[1] + f[2] * p[2]; }

}  // namespace

Arrangement::Arrangement(std::vector<LinearForm> forms, std::string name) : name_(std::move(name)) {
  if (forms.size() < 3) throw InputError("an arrangement needs at least three lines");
  forms_.reserve(forms.size());
  for (const auto& f : forms) forms_.push_back(normalize_form(f));
  for (std::size_t i = 0; i < forms_.size(); ++i)
    for (std::size_t j = i + 1; j < forms_.size(); ++j)
      if (forms_[i] == forms_[j])
        throw InputError("duplicate line: forms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " are proportional");
  RatMatrix m(forms_.size(), 3);
  for (std::size_t i = 0; i < forms_.size(); ++i)
    for (std::size_t c = 0; c < 3; ++c) m(i, c) = forms_[i][c];
  if (rank(m) < 3) throw InputError("non-essential arrangement: the forms do not span a 3-dimensional space");
}

MPoly Arrangement::form_poly(std::size_t i) const {
  return MPoly::linear(std::span<const Rational>(forms_.at(i).data(), 3));
}

MPoly Arrangement::defining_polynomial() const {
  MPoly p = MPoly::constant(3, 1);
  for (std::size_t i = 0; i < size(); ++i) p = p * form_poly(i);
  return p;
}

std::string Arrangement::form_to_string(std::size_t i) const { return form_poly(i).to_string(); }

bool FlatPoint::contains(std::size_t line) const { return std::binary_search(lines.begin(), lines.end(), line); }

std::vector<long long> PoincarePoly::projective_factor() const {
  // synthetic division by (1 + t), highest degree first
  std::vector<long long> q(coeffs.size() - 1);
  long long carry = 0;
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    carry = coeffs[k] - (k + 1 < coeffs.size() ? carry : 0);
    q[k - 1] = carry;
  }
  if (coeffs[0] != q[0]) throw VerificationError("Poincare polynomial is not divisible by (1+t)");
  return q;
}

std::string PoincarePoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    long long c = coeffs[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    first = false;
    long long mag = c < 0 ? -c : c;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return first ? "0" : os.str();
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& b : builtins()) out.emplace_back(b.name);
  return out;
}

Arrangement builtin_arrangement(std::string_view name) {
  for (const auto& b : builtins()) {
    if (name != b.name) continue;
    std::vector<LinearForm> forms;
    for (const auto& f : b.forms) forms.push_back(form_from_ints(f[0], f[1], f[2]));
    return Arrangement(std::move(forms), b.name);
  }
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw InputError("unknown builtin '" + std::string(name) + "' (available: " + known + ")");
}

Arrangement parse_arrangement(std::string_view source) {
  std::string_view trimmed = source;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed.front() != '{') return builtin_arrangement(trimmed);
  json doc;
  try {
    doc = json::parse(trimmed);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed arrangement JSON: ") + e.what());
  }
  if (!doc.contains("forms") || !doc["forms"].is_array())
    throw InputError("arrangement JSON needs a \"forms\" array");
  std::vector<LinearForm> forms;
  for (const auto& f : doc["forms"]) {
    if (!f.is_array() || f.size() != 3) throw InputError("each form must be an array of three coefficients");
    forms.push_back({json_rational(f[0]), json_rational(f[1]), json_rational(f[2])});
  }
  std::string name = doc.value("name", std::string{});
  return Arrangement(std::move(forms), std::move(name));
}

Arrangement load_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open arrangement file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str());
}

std::string arrangement_to_json(const Arrangement& a) {
  json doc;
  doc["name"] = a.name();
  json forms = json::array();
  for (const auto& f : a.forms()) {
    json row = json::array();
    for (const auto& q : f) row.push_back(to_string(q));
    forms.push_back(row);
  }
  doc["forms"] = forms;
  return doc.dump();
}

ProjectivePoint canonical_point(const std::array<Rational, 3>& v) {
  auto n = primitive_normalized(std::span<const Rational>(v.data(), 3));
  return {n[0], n[1], n[2]};
}

std::string point_to_string(const ProjectivePoint& p) {
  return "(" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + ")";
}

std::vector<FlatPoint> compute_flats(const Arrangement& a) {
  std::map<ProjectivePoint, IndexSet> incidence;
  const std::size_t d = a.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      ProjectivePoint p = canonical_point(cross(a.form(i), a.form(j)));
      auto& lines = incidence[p];
      if (lines.empty())
        for (std::size_t k = 0; k < d; ++k)
          if (sgn(dot(a.form(k), p)) == 0) lines.push_back(k);
    }
  std::vector<FlatPoint> flats;
  for (auto& [p, lines] : incidence) flats.push_back({p, lines, static_cast<int>(lines.size()) - 1});
  std::sort(flats.begin(), flats.end(), [](const FlatPoint& x, const FlatPoint& y) { return x.lines < y.lines; });
  return flats;
}

long long sum_mu(const std::vector<FlatPoint>& flats) {
  long long s = 0;
  for (const auto& f : flats) s += f.mu;
  return s;
}

std::vector<long long> moebius_by_rank(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  // mu(0) = 1; mu(t) = -sum_{s < t} mu(s)
  const long long bottom = 1;
  const long long line_mu = -bottom;
  long long points_total = 0;
  for (const auto& p : flats) {
    long long mu_p = -(bottom + static_cast<long long>(p.lines.size()) * line_mu);
    points_total += mu_p;
  }
  long long lines_total = static_cast<long long>(a.size()) * line_mu;
  long long top = -(bottom + lines_total + points_total);
  return {bottom, lines_total, points_total, top};
}

PoincarePoly poincare_polynomial(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  auto by_rank = moebius_by_rank(a, flats);
  PoincarePoly p;
  for (std::size_t r = 0; r < by_rank.size(); ++r) p.coeffs.push_back((r % 2 ? -1 : 1) * by_rank[r]);
  return p;
}

PoincarePoly poincare_polynomial(const Arrangement& a) { return poincare_polynomial(a, compute_flats(a)); }

}  // namespace otb
