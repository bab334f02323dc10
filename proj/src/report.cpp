#include "otb/report.hpp"

#include <sstream>

#include "otb/circuits.hpp"
#include "otb/error.hpp"
#include "otb/fatpoints.hpp"
#include "otb/koszul_betti.hpp"
#include "otb/multinet.hpp"
#include "otb/orlik_terao.hpp"
#include "otb/random.hpp"
#include "otb/resonance.hpp"
#include "otb/scroll.hpp"

namespace otb {

namespace {

const char* const kCommands[] = {"info",           "flats",         "poincare",       "circuits",
                                 "ot-hilbert",     "betti",         "divisor-da",     "h0",
                                 "net-search",     "resonance",     "scroll-check",   "jacobian-check",
                                 "gradient-degree", "report"};

Json lines_json(const IndexSet& s) {
  Json j = Json::array();
  for (auto l : s) j.push_back(l + 1);
  return j;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

std::vector<std::string> y_names(std::size_t d) {
  std::vector<std::string> n;
  for (std::size_t k = 0; k < d; ++k) n.push_back("y" + std::to_string(k + 1));
  return n;
}

Json divisor_json(const DivisorClass& d) {
  return Json{{"m", d.m}, {"mults", d.mults}};
}

Json certificate_json(const Arrangement& a, const std::vector<FlatPoint>& flats, const MultinetCertificate& c) {
  Json blocks = Json::array();
  for (const auto& b : c.blocks) blocks.push_back(lines_json(b));
  Json z = Json::array();
  for (std::size_t t = 0; t < c.base_locus.size(); ++t)
    z.push_back(Json{{"point", point_to_string(flats[c.base_locus[t]].point)}, {"n", c.n[t]}});
  long long sum_n2 = 0;
  for (auto n : c.n) sum_n2 += static_cast<long long>(n) * n;
  return Json{{"k", c.k},
              {"m", c.m},
              {"blocks", blocks},
              {"weights", c.weights},
              {"base_locus", z},
              {"sum_n_squared", sum_n2},
              {"net", c.is_net()},
              {"connected", c.connected},
              {"neighborly", is_neighborly(a, flats, c.blocks)}};
}

std::vector<MultinetCertificate> nets_for_scroll(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  std::vector<MultinetCertificate> out;
  for (std::size_t k : {3, 4}) {
    if (k > a.size()) continue;
    MultinetSearchOptions o;
    o.k = k;
    for (auto& c : search_multinets(a, flats, o))
      if (c.is_net()) out.push_back(std::move(c));
  }
  return out;
}

Json cmd_info(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  Json forms = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) forms.push_back(a.form_to_string(i));
  std::map<int, std::size_t> by_mu;
  for (const auto& p : flats) ++by_mu[p.mu + 1];
  Json mult = Json::object();
  for (const auto& [m, n] : by_mu) mult[std::to_string(m)] = n;
  long long rhs = 0;
  for (const auto& p : flats) rhs += static_cast<long long>(binomial(static_cast<std::size_t>(p.mu) + 1, 2));
  const auto lhs = static_cast<long long>(binomial(a.size(), 2));
  return Json{{"d", a.size()},
              {"forms", forms},
              {"flats", flats.size()},
              {"points_by_multiplicity", mult},
              {"sum_mu", sum_mu(flats)},
              {"double_count", Json{{"pairs", lhs}, {"sum_binomial", rhs}, {"holds", lhs == rhs}}},
              {"poincare", poincare_polynomial(a, flats).to_string()}};
}

Json cmd_flats(const std::vector<FlatPoint>& flats) {
  Json list = Json::array();
  for (std::size_t p = 0; p < flats.size(); ++p)
    list.push_back(Json{{"index", p + 1}, {"point", point_to_string(flats[p].point)}, {"lines", lines_json(flats[p].lines)},
                        {"mu", flats[p].mu}});
  return Json{{"flats", list}};
}

Json cmd_poincare(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  auto p = poincare_polynomial(a, flats);
  return Json{{"coefficients", p.coeffs},
              {"polynomial", p.to_string()},
              {"projective_factor", p.projective_factor()},
              {"moebius_by_rank", moebius_by_rank(a, flats)}};
}

Json cmd_circuits(const Arrangement& a, std::size_t max_size) {
  auto cs = enumerate_circuits(a, max_size);
  Json list = Json::array();
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& c : cs) {
    ++by_size[c.indices.size()];
    list.push_back(Json{{"lines", lines_json(c.indices)}, {"coefficients", rationals_json(c.coeffs)},
                        {"relation", circuit_relation(c, a.size()).to_string(y_names(a.size()))}});
  }
  Json sizes = Json::object();
  for (const auto& [s, n] : by_size) sizes[std::to_string(s)] = n;
  return Json{{"max_size", max_size}, {"count", cs.size()}, {"by_size", sizes}, {"circuits", list}};
}

Json cmd_ot_hilbert(const Arrangement& a, const std::vector<FlatPoint>& flats, std::size_t upto) {
  auto p = ot_presentation(a);
  auto dims = quotient_dimensions(p, upto);
  auto series = terao_series(poincare_polynomial(a, flats), upto);
  bool agree = true;
  for (std::size_t j = 0; j <= upto; ++j) agree = agree && static_cast<long long>(dims[j]) == series.coefficients[j];
  if (!agree) throw VerificationError("Hilbert function differs from the series of the Poincare polynomial");
  return Json{{"upto", upto}, {"dimensions", dims}, {"series", series.coefficients},
              {"h_polynomial", series.h_polynomial}, {"agree", agree}};
}

Json cmd_betti(const Arrangement& a, bool verify_regularity) {
  BettiOptions o;
  o.verify_regularity = verify_regularity;
  auto bc = compute_betti(a, o);
  const auto& t = bc.table;
  Json entries = Json::parse(t.to_json());
  Json rows = Json::array();
  for (int r = 0; r <= t.regularity(); ++r) rows.push_back(t.row(r));
  Json dual = Json::array();
  for (const auto& [i, j] : bc.dual_prime) dual.push_back(Json::array({i, j}));
  auto b23 = b23_formula(a);
  return Json{{"entries", entries},
              {"totals", t.totals()},
              {"rows", rows},
              {"projective_dimension", t.projective_dimension()},
              {"regularity", t.regularity()},
              {"k_polynomial", t.k_polynomial()},
              {"dual_prime", dual},
              {"strand3_checked", bc.strand3_checked},
              {"reduction", Json{{"variables", bc.reduction.variables},
                                 {"substitution", bc.reduction.substitution},
                                 {"dims", bc.reduction.dims},
                                 {"multiplicity", bc.reduction.multiplicity},
                                 {"attempts", bc.reduction.attempts},
                                 {"agrees", true}}},
              {"b23_formula", Json{{"value", b23.value}, {"cubic_generators", b23.cubic_generators},
                                   {"hypothesis_holds", b23.hypothesis_holds}}},
              {"text", t.to_text()}};
}

Json section_json(const Arrangement& a, const std::vector<FlatPoint>& flats, const DivisorClass& d, bool basis) {
  auto s = h0_fatpoints(a, flats, d);
  Json j{{"divisor", divisor_json(d)},
         {"h0", s.dimension},
         {"chi", s.chi},
         {"h1", s.h1()},
         {"conditions", s.conditions},
         {"rank", s.rank}};
  if (basis) {
    Json b = Json::array();
    for (const auto& f : s.basis) b.push_back(f.to_string());
    j["basis"] = b;
  }
  return j;
}

Json cmd_divisor_da(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  auto d = divisor_DA(a, flats);
  Json j = section_json(a, flats, d, false);
  j["self_intersection"] = pairing(d, d);
  j["equals_d"] = j["h0"].get<std::size_t>() == a.size();
  return j;
}

Json cmd_h0(const Arrangement& a, const std::vector<FlatPoint>& flats, const CommandOptions& o) {
  DivisorClass d{o.m, parse_mults(o.mults, flats.size())};
  return section_json(a, flats, d, true);
}

Json cmd_net_search(const Arrangement& a, const std::vector<FlatPoint>& flats, std::size_t k, long w) {
  MultinetSearchOptions o;
  o.k = k;
  o.max_weight = w;
  Json list = Json::array();
  for (const auto& c : search_multinets(a, flats, o)) list.push_back(certificate_json(a, flats, c));
  return Json{{"k", k}, {"max_weight", w}, {"count", list.size()}, {"certificates", list}};
}

Json cmd_resonance(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  ResonanceOptions o;
  auto comps = resonance_components(a, flats, o);
  OS2 os(a, flats);
  Json list = Json::array();
  std::size_t local = 0, essential = 0;
  for (const auto& c : comps) {
    const bool is_local = c.kind == ResonanceComponent::Kind::Local;
    (is_local ? local : essential)++;
    Json span = Json::array();
    for (std::size_t r = 0; r < c.span.rows(); ++r) {
      std::vector<Rational> row;
      for (std::size_t l = 0; l < c.span.cols(); ++l) row.push_back(c.span(r, l));
      span.push_back(rationals_json(row));
    }
    Json j{{"kind", is_local ? "local" : "essential"}, {"projective_dimension", c.projective_dimension}, {"span", span}};
    if (c.flat) j["point"] = point_to_string(flats[*c.flat].point);
    if (c.certificate) j["certificate"] = certificate_json(a, flats, *c.certificate);
    j["oracle_h1"] = c.oracle_h1;
    list.push_back(std::move(j));
  }
  return Json{{"os2_dimension", os.dimension()},
              {"sum_mu", sum_mu(flats)},
              {"local", local},
              {"essential", essential},
              {"max_weight", o.max_weight},
              {"samples", o.samples},
              {"components", list}};
}

Json cmd_scroll(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  auto p = ot_presentation(a);
  Json list = Json::array();
  for (const auto& c : nets_for_scroll(a, flats)) {
    auto g = multiplication_matrix(a, flats, c);
    auto mc = check_minors(p, g);
    Json gamma = Json::array();
    for (std::size_t i = 0; i < 2; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < g.columns(); ++j) row.push_back(g.entry(i, j).to_string(y_names(a.size())));
      gamma.push_back(row);
    }
    Json blocks = Json::array();
    for (const auto& b : c.blocks) blocks.push_back(lines_json(b));
    Json j{{"k", c.k}, {"m", c.m}, {"blocks", blocks}, {"gamma", gamma}, {"columns", g.columns()},
           {"one_generic", is_one_generic(g)}, {"minors_in_ideal", mc.all_members},
           {"minor_span", mc.span_dimension}, {"ideal_quadrics", mc.ideal_quadrics}};
    if (static_cast<long>(c.k) >= c.m) {
      auto en = en_prediction(c, a.size());
      const auto b23 = tor_dimension(a, 2, 3);
      j["eagon_northcott"] = Json{{"b", en.b}, {"betti", en.betti}};
      j["b23"] = b23;
      j["linear_syzygies_match"] = en.betti.size() > 1 && static_cast<long long>(b23) == en.betti[1];
    }
    list.push_back(std::move(j));
  }
  return Json{{"nets", list}};
}

Json cmd_jacobian(const Arrangement& a) {
  auto jc = jacobian_containment(a);
  auto hb = hilbert_burch_psi(a);
  Json coeffs = Json::array();
  for (const auto& v : jc.coefficients) coeffs.push_back(rationals_json(v));
  return Json{{"contained", jc.contained}, {"euler_identity", jc.euler_identity}, {"coefficients", coeffs},
              {"hilbert_burch_signs", hb.minor_signs}};
}

Json cmd_gradient(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  auto p = poincare_polynomial(a, flats);
  const long long g = gradient_degree(a, flats);
  const long long betti = p.coeffs.at(2) - p.coeffs.at(1) + 1;
  if (g != betti) throw VerificationError("gradient degree differs from b2 - b1 + 1");
  return Json{{"degree", g}, {"b1", p.coeffs[1]}, {"b2", p.coeffs[2]}, {"b2_minus_b1_plus_1", betti}};
}

Json dispatch(const std::string& command, const Arrangement& a, const std::vector<FlatPoint>& flats,
              const CommandOptions& o) {
  if (command == "info") return cmd_info(a, flats);
  if (command == "flats") return cmd_flats(flats);
  if (command == "poincare") return cmd_poincare(a, flats);
  if (command == "circuits") return cmd_circuits(a, o.max_circuit_size);
  if (command == "ot-hilbert") return cmd_ot_hilbert(a, flats, o.upto);
  if (command == "betti") return cmd_betti(a, o.verify_regularity);
  if (command == "divisor-da") return cmd_divisor_da(a, flats);
  if (command == "h0") return cmd_h0(a, flats, o);
  if (command == "net-search") return cmd_net_search(a, flats, o.k, o.max_weight);
  if (command == "resonance") return cmd_resonance(a, flats);
  if (command == "scroll-check") return cmd_scroll(a, flats);
  if (command == "jacobian-check") return cmd_jacobian(a);
  if (command == "gradient-degree") return cmd_gradient(a, flats);
  if (command == "report") {
    Json s = Json::object();
    s["info"] = cmd_info(a, flats);
    s["flats"] = cmd_flats(flats);
    s["poincare"] = cmd_poincare(a, flats);
    s["circuits"] = cmd_circuits(a, o.max_circuit_size);
    s["ot-hilbert"] = cmd_ot_hilbert(a, flats, o.upto);
    if (o.all) s["betti"] = cmd_betti(a, o.verify_regularity);
    s["divisor-da"] = cmd_divisor_da(a, flats);
    if (o.all) {
      Json nets = Json::array();
      for (std::size_t k : {3, 4})
        if (k <= a.size()) nets.push_back(cmd_net_search(a, flats, k, 2));
      s["net-search"] = nets;
      s["resonance"] = cmd_resonance(a, flats);
      s["scroll-check"] = cmd_scroll(a, flats);
    }
    s["jacobian-check"] = cmd_jacobian(a);
    s["gradient-degree"] = cmd_gradient(a, flats);
    return Json{{"all", o.all}, {"sections", s}};
  }
  throw InputError("unknown command '" + command + "'");
}

// text rendering

void render_section(std::ostream& os, const std::string& cmd, const Json& r);

std::string join(const Json& arr, const char* sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : arr) {
    os << (first ? "" : sep) << (v.is_string() ? v.get<std::string>() : v.dump());
    first = false;
  }
  return os.str();
}

std::string blocks_text(const Json& blocks) {
  std::ostringstream os;
  for (const auto& b : blocks) os << "|" << join(b, ",");
  os << "|";
  return os.str();
}

void render_certificate(std::ostream& os, const Json& c) {
  os << "(" << c["k"].dump() << "," << c["m"].dump() << ")-" << (c["net"].get<bool>() ? "net" : "multinet") << " "
     << blocks_text(c["blocks"]) << "\n";
  os << "  weights: " << join(c["weights"]) << "\n";
  os << "  base locus:";
  for (const auto& z : c["base_locus"]) os << " " << z["point"].get<std::string>() << "^" << z["n"].dump();
  os << "\n  sum n_p^2 = " << c["sum_n_squared"].dump() << ", connected: " << c["connected"].dump()
     << ", neighborly: " << c["neighborly"].dump() << "\n";
}

void render_section(std::ostream& os, const std::string& cmd, const Json& r) {
  if (cmd == "info") {
    os << "lines: " << r["d"].dump() << "\n";
    std::size_t i = 1;
    for (const auto& f : r["forms"]) os << "  " << i++ << ": " << f.get<std::string>() << "\n";
    os << "flats: " << r["flats"].dump() << " (";
    bool first = true;
    for (const auto& [m, n] : r["points_by_multiplicity"].items()) {
      os << (first ? "" : ", ") << n.dump() << " of multiplicity " << m;
      first = false;
    }
    os << ")\nsum mu: " << r["sum_mu"].dump() << "\n";
    const auto& dc = r["double_count"];
    os << "double count: C(d,2) = " << dc["pairs"].dump() << ", sum C(mu+1,2) = " << dc["sum_binomial"].dump() << "\n";
    os << "P(M,t) = " << r["poincare"].get<std::string>() << "\n";
  } else if (cmd == "flats") {
    for (const auto& f : r["flats"])
      os << f["index"].dump() << ": " << f["point"].get<std::string>() << " lines " << join(f["lines"], ",") << " mu "
         << f["mu"].dump() << "\n";
  } else if (cmd == "poincare") {
    os << r["polynomial"].get<std::string>() << "\n";
    os << "projective factor: " << join(r["projective_factor"]) << "\n";
  } else if (cmd == "circuits") {
    os << r["count"].dump() << " circuits of size <= " << r["max_size"].dump() << "\n";
    for (const auto& c : r["circuits"])
      os << "  {" << join(c["lines"], ",") << "} " << c["relation"].get<std::string>() << "\n";
  } else if (cmd == "ot-hilbert") {
    os << "dim C(A)_j: " << join(r["dimensions"]) << "\n";
    os << "series:    " << join(r["series"]) << "\n";
    os << "h-polynomial: " << join(r["h_polynomial"]) << "\n";
    os << "agree: " << r["agree"].dump() << "\n";
  } else if (cmd == "betti") {
    os << r["text"].get<std::string>();
    os << "regularity: " << r["regularity"].dump() << ", projective dimension: " << r["projective_dimension"].dump()
       << "\n";
    os << "linear reduction: " << r["reduction"]["variables"].dump() << " variables, dims "
       << join(r["reduction"]["dims"]) << ", attempts " << r["reduction"]["attempts"].dump() << ", agrees\n";
    const auto& f = r["b23_formula"];
    os << "b23 formula: " << f["value"].dump() << " (cubic generators " << f["cubic_generators"].dump() << ")\n";
  } else if (cmd == "divisor-da" || cmd == "h0") {
    const auto& d = r["divisor"];
    os << "D = " << d["m"].dump() << "E0 - sum a_p E_p, a = " << join(d["mults"], ",") << "\n";
    os << "h0 = " << r["h0"].dump() << ", chi = " << r["chi"].dump() << ", h1 = " << r["h1"].dump() << "\n";
    if (r.contains("self_intersection")) os << "D^2 = " << r["self_intersection"].dump() << "\n";
    if (r.contains("basis"))
      for (const auto& b : r["basis"]) os << "  " << b.get<std::string>() << "\n";
  } else if (cmd == "net-search") {
    os << r["count"].dump() << " multinets with k = " << r["k"].dump() << ", weights <= " << r["max_weight"].dump()
       << "\n";
    for (const auto& c : r["certificates"]) render_certificate(os, c);
  } else if (cmd == "resonance") {
    os << "dim A^2 = " << r["os2_dimension"].dump() << "\n";
    os << r["local"].dump() << " local, " << r["essential"].dump() << " essential\n";
    for (const auto& c : r["components"]) {
      os << "  " << c["kind"].get<std::string>() << " P^" << c["projective_dimension"].dump();
      if (c.contains("point")) os << " at " << c["point"].get<std::string>();
      if (c.contains("certificate")) os << " from " << blocks_text(c["certificate"]["blocks"]);
      os << ", H1 at samples: " << join(c["oracle_h1"]) << "\n";
    }
  } else if (cmd == "scroll-check") {
    if (r["nets"].empty()) os << "no nets\n";
    for (const auto& n : r["nets"]) {
      os << "(" << n["k"].dump() << "," << n["m"].dump() << ")-net " << blocks_text(n["blocks"]) << "\n";
      for (const auto& row : n["gamma"]) os << "  [" << join(row, ", ") << "]\n";
      os << "  1-generic: " << n["one_generic"].dump() << ", minors in ideal: " << n["minors_in_ideal"].dump()
         << " (span " << n["minor_span"].dump() << " of " << n["ideal_quadrics"].dump() << ")\n";
      if (n.contains("eagon_northcott"))
        os << "  Eagon-Northcott: b = " << n["eagon_northcott"]["b"].dump() << ", betti "
           << join(n["eagon_northcott"]["betti"]) << "; b23 = " << n["b23"].dump() << "\n";
    }
  } else if (cmd == "jacobian-check") {
    os << "Jacobian ideal in L: " << r["contained"].dump() << ", Euler identity: " << r["euler_identity"].dump() << "\n";
    os << "Hilbert-Burch minor signs: " << join(r["hilbert_burch_signs"]) << "\n";
  } else if (cmd == "gradient-degree") {
    os << "degree: " << r["degree"].dump() << " (b2 - b1 + 1 = " << r["b2_minus_b1_plus_1"].dump() << ")\n";
  } else if (cmd == "report") {
    bool first = true;
    for (const auto& [name, sec] : r["sections"].items()) {
      os << (first ? "" : "\n") << "== " << name << " ==\n";
      first = false;
      if (name == "net-search")
        for (const auto& s : sec) render_section(os, name, s);
      else
        render_section(os, name, sec);
    }
  }
}

}  // namespace

std::vector<std::string> command_names() { return {std::begin(kCommands), std::end(kCommands)}; }

std::vector<long> parse_mults(const std::string& spec, std::size_t flats) {
  std::vector<long> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad multiplicity '" + item + "' in --mults");
    }
  }
  if (out.size() == 1 && flats != 1) out.assign(flats, out[0]);
  if (out.size() != flats)
    throw InputError("--mults needs one value or " + std::to_string(flats) + " comma-separated values (one per flat)");
  return out;
}

Json run_command(const std::string& command, const Arrangement& a, const CommandOptions& options) {
  auto flats = compute_flats(a);
  Json forms = Json::array();
  for (const auto& f : a.forms()) forms.push_back(rationals_json({f[0], f[1], f[2]}));
  Json report{{"tool", "otb"},
              {"version", kToolVersion},
              {"seed", kDefaultSeed},
              {"arrangement", Json{{"name", a.name()}, {"d", a.size()}, {"forms", forms}}},
              {"command", command}};
  report["result"] = dispatch(command, a, flats, options);
  return report;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "# " << report["arrangement"]["name"].get<std::string>() << " (d = " << report["arrangement"]["d"].dump()
     << "): " << report["command"].get<std::string>() << "\n";
  render_section(os, report["command"].get<std::string>(), report["result"]);
  return os.str();
}

}  // namespace otb
