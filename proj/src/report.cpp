#include "linearr/report.hpp"

namespace linearr {

std::string main_class_name(const LatinSquare& s) {
  const MainClassCode code = main_class_code(s);
  if (s.order() <= 3 && code == main_class_code(cyclic_square(s.order()))) return "cyclic";
  if (s.order() == 4) {
    if (code == main_class_code(cyclic_square(4))) return "cyclic";
    if (code == main_class_code(klein_square())) return "klein";
  }
  return "";
}

Json arrangement_json(const Arrangement& a) {
  Json lines = Json::array();
  for (const Line& l : a.lines()) {
    Json row = Json::array();
    for (const Scalar& s : l.coeffs()) row.push_back(s.to_string());
    lines.push_back(std::move(row));
  }
  return Json{{"name", a.name()}, {"field", std::string(field_name(a.field()))}, {"d", a.size()}, {"lines", lines}};
}

Json census_json(const Census& c) {
  Json out = Json::object();
  for (auto it = c.counts.rbegin(); it != c.counts.rend(); ++it) out["t" + std::to_string(it->first)] = it->second;
  return out;
}

Json betti_json(const BettiResult& r) {
  Json basis = Json::array();
  for (const auto& v : r.basis()) basis.push_back(v);
  Json out{{"p", r.p}, {"beta", r.beta}, {"basis", basis}};
  if (auto v = nonconstant_solution(r)) out["nonconstant"] = *v;
  else out["nonconstant"] = nullptr;
  return out;
}

Json net_json(const Lattice& lat, const NetStructure& n) {
  Json classes = Json::array();
  for (const auto& cls : n.classes) {
    Json c = Json::array();
    for (int l : cls) c.push_back(l + 1);
    classes.push_back(std::move(c));
  }
  Json out{{"k", n.k}, {"q", n.q}, {"classes", classes}, {"mixed_points", n.mixed_points.size()}};
  if (n.square) {
    out["latin_square"] = n.square->rows();
    out["main_class_code"] = main_class_code(*n.square).representative.rows();
    const std::string name = main_class_name(*n.square);
    out["main_class"] = name.empty() ? Json(nullptr) : Json(name);
  }
  Json per_class = Json::array();
  for (const ClassCensus& cc : mixed_census(lat, n)) {
    Json entry{{"census", census_json(cc.census)}};
    if (cc.type) entry["type"] = *cc.type == ClassType::WithTriplePoint ? "i" : "ii";
    per_class.push_back(std::move(entry));
  }
  out["class_census"] = per_class;
  return out;
}

Json pencil_json(const std::optional<PencilRelation>& r) {
  if (!r) return Json{{"relation", nullptr}};
  Json lambda = Json::array();
  for (const Scalar& s : r->lambda) lambda.push_back(s.to_string());
  Json products = Json::array();
  for (const MultiPoly& q : r->products) products.push_back(q.to_string());
  return Json{{"relation", lambda}, {"products", products}};
}

Json monodromy_json(const MonodromyReport& r) {
  Json bounds = Json::array();
  for (const OrderBound& b : r.bounds) {
    Json e{{"m", b.m}, {"phi", b.totient}, {"lower", b.lower}};
    e["upper"] = b.upper ? Json(*b.upper) : Json(nullptr);
    if (b.prime) e["bounded_by"] = "beta_1" + std::to_string(b.prime);
    bounds.push_back(std::move(e));
  }
  Json betti = Json::object();
  for (auto [p, beta] : r.betti) betti[std::to_string(p)] = beta;
  Json nets = Json::array();
  for (const NetStructure& n : r.nets) {
    Json classes = Json::array();
    for (const auto& cls : n.classes) {
      Json c = Json::array();
      for (int l : cls) c.push_back(l + 1);
      classes.push_back(std::move(c));
    }
    nets.push_back(Json{{"k", n.k}, {"q", n.q}, {"classes", classes}});
  }
  Json h1{{"lower", r.h1_lower}, {"upper", r.h1_upper ? Json(*r.h1_upper) : Json(nullptr)},
          {"convention", "includes the eigenvalue-1 part d - 1"}};
  return Json{{"d", r.d},
              {"max_mult", r.max_mult},
              {"admissible", r.admissible},
              {"betti", betti},
              {"bounds", bounds},
              {"nets", nets},
              {"verdict", std::string(verdict_name(r.verdict))},
              {"reason", r.reason},
              {"h1", h1}};
}

std::vector<NetStructure> report_nets(const Lattice& lat) {
  std::vector<NetStructure> out;
  const int d = lat.line_count();
  for (int k : {3, 4}) {
    if (d % k != 0 || d / k < 2) continue;
    auto found = find_nets(lat, k);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

Json analysis_report(const Arrangement& a) {
  const Lattice lat(a);
  Json report;
  report["arrangement"] = arrangement_json(a);
  report["census"] = census_json(lat.census());
  Json betti = Json::object();
  for (int p : {2, 3, 5}) betti[std::to_string(p)] = betti_json(beta_1p(lat, p));
  report["betti"] = betti;
  const auto nets = report_nets(lat);
  Json nets_json = Json::array();
  Json pencils = Json::array();
  for (const NetStructure& n : nets) {
    nets_json.push_back(net_json(lat, n));
    if (n.k == 3) pencils.push_back(pencil_json(pencil_check(a, n)));
  }
  report["nets"] = nets_json;
  report["pencil"] = pencils;
  if (is_essential(a)) report["monodromy"] = monodromy_json(monodromy_verdict(a));
  else report["monodromy"] = Json{{"verdict", nullptr}, {"reason", "not essential"}};
  return report;
}

}  // namespace linearr
