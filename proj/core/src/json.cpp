#include "fk/json.hpp"

namespace fk {

namespace {

BigInt big(const json& j) {
  BigInt v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0)
    throw Error(ErrorKind::BadParameter, "expected an integer string, got " + j.dump());
  return v;
}

}  // namespace

json to_json(const LPoly& p) {
  json terms = json::array();
  p.for_each([&](long e, const BigInt& c) { terms.push_back(json::array({e, c.get_str()})); });
  return json{{"grid_denominator", p.grid()}, {"terms", terms}};
}

LPoly lpoly_from_json(const json& j) {
  int g = j.at("grid_denominator").get<int>();
  std::map<long, BigInt> m;
  for (const auto& t : j.at("terms")) m[t.at(0).get<long>()] += big(t.at(1));
  return LPoly::from_terms(g, m);
}

json to_json(const NPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_string(c));
  return a;
}

NPoly npoly_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_string(x.get<std::string>()));
  return NPoly(std::move(c));
}

json to_json(const HbarSeries& h) {
  json cs = json::array();
  for (const auto& c : h.coeffs()) cs.push_back(to_json(c));
  return json{{"order", h.order()}, {"variable", "n"}, {"coeffs", cs}};
}

HbarSeries hbar_from_json(const json& j) {
  std::vector<NPoly> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(npoly_from_json(c));
  return HbarSeries(j.at("order").get<int>(), std::move(cs));
}

json to_json(const KnotDescriptor& k) {
  json j;
  j["type"] = k.kind == KnotDescriptor::Kind::figure_eight ? "figure_eight" : "cable";
  if (k.kind == KnotDescriptor::Kind::cable) {
    j["p"] = k.p;
    j["r"] = k.r;
  }
  j["mirror"] = k.mirrored;
  return j;
}

KnotDescriptor knot_from_json(const json& j) {
  KnotDescriptor k;
  std::string type = j.at("type").get<std::string>();
  if (type == "cable") {
    k.kind = KnotDescriptor::Kind::cable;
    k.p = j.at("p").get<int>();
    k.r = j.at("r").get<long>();
  } else if (type != "figure_eight") {
    throw Error(ErrorKind::BadParameter, "unknown knot type " + type);
  }
  k.mirrored = j.value("mirror", false);
  return k;
}

json to_json(const FkSeries& f) {
  json fm = json::array();
  for (const auto& [m, p] : f.fm) fm.push_back(json{{"m", m}, {"poly", to_json(p)}});
  return json{{"knot", to_json(f.knot)}, {"m_max", f.m_max}, {"fm", fm}};
}

FkSeries fk_series_from_json(const json& j) {
  FkSeries f;
  f.knot = knot_from_json(j.at("knot"));
  f.m_max = j.at("m_max").get<long>();
  for (const auto& e : j.at("fm")) f.set(e.at("m").get<long>(), lpoly_from_json(e.at("poly")));
  return f;
}

json to_json(const MRecursion& rec) {
  json terms = json::array();
  for (const auto& t : rec.terms) {
    json ks = json::array();
    for (const auto& [k, p] : t.by_k) ks.push_back(json{{"k", k}, {"poly", to_json(p)}});
    terms.push_back(json{{"offset", t.offset}, {"by_k", ks}});
  }
  LeadingForm lf = rec.leading_form();
  json lead{{"binomial", lf.binomial}};
  if (lf.binomial) {
    lead["coeff"] = lf.coeff.get_str();
    lead["alpha"] = rational_to_string(lf.alpha);
    lead["k"] = lf.k;
    lead["beta"] = rational_to_string(lf.beta);
    lead["text"] = lf.to_string();
  }
  return json{{"r", rec.r},
              {"span", rec.span},
              {"window", rec.window},
              {"removed_m_degree", rec.removed_m_degree},
              {"variable", "T_s(v) = sum_k by_k[k](q) q^(k v/2); relation sum_s T_s(v) f_(v+s) = 0"},
              {"leading", lead},
              {"terms", terms}};
}

MRecursion m_recursion_from_json(const json& j) {
  MRecursion rec;
  rec.r = j.at("r").get<long>();
  rec.span = j.at("span").get<long>();
  rec.window = j.at("window").get<long>();
  rec.removed_m_degree = j.value("removed_m_degree", 0L);
  for (const auto& t : j.at("terms")) {
    RecursionTerm term;
    term.offset = t.at("offset").get<long>();
    for (const auto& k : t.at("by_k")) term.by_k.emplace(k.at("k").get<long>(), lpoly_from_json(k.at("poly")));
    rec.terms.push_back(std::move(term));
  }
  return rec;
}

json to_json(const QSeries& s) {
  json cs = json::array();
  for (const auto& [k, v] : s.coeffs) cs.push_back(json::array({k, v.get_str()}));
  return json{{"delta_b", rational_to_string(s.delta_b)},
              {"raw_min_exponent", rational_to_string(s.raw_min)},
              {"dyadic_c", s.c},
              {"sign", s.sign},
              {"content", s.content.get_str()},
              {"order", s.order},
              {"m_max_used", s.m_max_used},
              {"coeffs", cs}};
}

json to_json(const XSeries& s) {
  json cs = json::array();
  for (const auto& [m, v] : s.coeffs) cs.push_back(json::array({m, v.get_str()}));
  return json{{"m_max", s.m_max}, {"coeffs", cs}};
}

json to_json(const HTable& h) {
  json es = json::array();
  auto entries = h.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) es.push_back(json{{"k", 2 * i + 1}, {"poly", to_json(entries[i])}});
  return json{{"kmax", 2 * long(entries.size()) - 1}, {"h", es}};
}

HTable htable_from_json(const json& j) {
  std::vector<LPoly> es;
  for (const auto& e : j.at("h")) {
    if (e.at("k").get<long>() != 2 * long(es.size()) + 1) throw Error(ErrorKind::BadParameter, "h-table cache is not contiguous");
    es.push_back(lpoly_from_json(e.at("poly")));
  }
  return HTable(std::move(es));
}

}  // namespace fk
