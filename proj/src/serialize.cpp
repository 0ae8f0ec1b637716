#include "squarepairs/serialize.hpp"

#include <sstream>

namespace squarepairs {

namespace {

Json int_str(const Integer& n) { return n.get_str(); }

Json roots_array(const std::array<Integer, 3>& roots) {
  Json a = Json::array();
  for (const Integer& r : roots) a.push_back(int_str(r));
  return a;
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const TrianglePair& pair) {
  Json j;
  j["roots1"] = roots_array(pair.roots1);
  j["roots2"] = roots_array(pair.roots2);
  j["squared1"] = roots_array(pair.squared1());
  j["squared2"] = roots_array(pair.squared2());
  j["perimeter"] = int_str(pair.perimeter);
  j["sixteen_area_sq"] = int_str(pair.sixteen_area_sq);
  j["area_is_integer"] = pair.area_is_integer;
  return j;
}

Json to_json(const ParamTriple& triple) {
  Json j;
  j["p"] = to_json(triple.p);
  j["q"] = to_json(triple.q);
  j["r"] = to_json(triple.r);
  return j;
}

Json to_json(const ParamSolution& sol) {
  Json j = to_json(sol.triple);
  j["t"] = to_json(sol.t);
  j["u"] = to_json(sol.u);
  const Sextuple sides = substitute(sol.triple.p, sol.triple.q, sol.triple.r, sol.u);
  Json sx = Json::array();
  for (const Rational& s : sides.to_array()) sx.push_back(to_json(s));
  j["root_sides"] = sx;
  j["pair"] = to_json(sol.pair);
  return j;
}

Json to_json(const Rejection& rej) {
  Json j;
  j["reason"] = to_string(rej.reason);
  j["residual_vanishes_identically"] = rej.residual_vanishes_identically;
  return j;
}

Json to_json(const SearchReport& rep) {
  Json j;
  j["bound"] = rep.bound;
  j["triples_scanned"] = rep.triples_scanned;
  Json sols = Json::array();
  for (const ParamSolution& s : rep.solutions) sols.push_back(to_json(s));
  j["solutions"] = sols;
  Json flags = Json::array();
  for (const ParamTriple& t : rep.special_flags) flags.push_back(to_json(t));
  j["special_flags"] = flags;
  return j;
}

Json to_json(const GenerationReport& rep) {
  Json j;
  j["k_bound"] = rep.k_bound;
  j["j_bound"] = rep.j_bound;
  Json pairs = Json::array();
  for (const GeneratedPair& g : rep.pairs) {
    Json e;
    e["k"] = g.k;
    e["j"] = g.j;
    e["X"] = to_json(g.point.X);
    e["Y"] = to_json(g.point.Y);
    e["x"] = to_json(g.quartic.x);
    e["y"] = to_json(g.quartic.y);
    Json sol = to_json(g.solution);
    for (auto& [key, value] : sol.items()) e[key] = value;
    pairs.push_back(std::move(e));
  }
  j["pairs"] = pairs;
  Json lattice = Json::array();
  for (const LatticeOutcome& o : rep.outcomes) {
    Json e;
    e["k"] = o.k;
    e["j"] = o.j;
    e["outcome"] = to_string(o.kind);
    if (o.rejection) e["reason"] = to_string(*o.rejection);
    lattice.push_back(std::move(e));
  }
  j["lattice"] = lattice;
  return j;
}

Json to_json(const VerifyReport& rep) {
  Json j;
  Json checks = Json::array();
  for (const VerifyCheck& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = checks;
  j["all_pass"] = rep.all_pass();
  return j;
}

Json wrap(const char* kind, Json body) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  for (auto& [key, value] : body.items()) j[key] = value;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string pair_text(const TrianglePair& pair) {
  std::ostringstream os;
  os << "  roots:      " << pair << "\n";
  const std::array<Integer, 3> s1 = pair.squared1();
  const std::array<Integer, 3> s2 = pair.squared2();
  os << "  sides:      (" << s1[0] << ", " << s1[1] << ", " << s1[2] << ") and ("
     << s2[0] << ", " << s2[1] << ", " << s2[2] << ")\n";
  os << "  perimeter:  " << pair.perimeter << "\n";
  os << "  16*Area^2:  " << pair.sixteen_area_sq << "\n";
  os << "  area integer: " << (pair.area_is_integer ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace

std::string to_text(const ParamSolution& sol) {
  std::ostringstream os;
  os << "solution for (p, q, r) = " << sol.triple << "\n";
  os << "  t = " << sol.t << ", u = " << sol.u << "\n";
  os << pair_text(sol.pair);
  return os.str();
}

std::string to_text(const Rejection& rej) {
  std::ostringstream os;
  os << "rejected: " << to_string(rej.reason);
  if (rej.residual_vanishes_identically) os << " (residual vanishes identically)";
  os << "\n";
  return os.str();
}

std::string to_text(const SearchReport& rep) {
  std::ostringstream os;
  os << "search bound " << rep.bound << ": scanned " << rep.triples_scanned
     << " canonical triples, found " << rep.solutions.size() << " pair"
     << (rep.solutions.size() == 1 ? "" : "s") << "\n";
  for (const ParamSolution& s : rep.solutions) os << to_text(s);
  if (!rep.special_flags.empty()) {
    os << "flagged (residual vanishes identically):";
    for (const ParamTriple& t : rep.special_flags) os << " " << t;
    os << "\n";
  }
  return os.str();
}

std::string to_text(const GenerationReport& rep) {
  std::ostringstream os;
  os << "lattice walk |k| <= " << rep.k_bound << ", |j| <= " << rep.j_bound
     << ": " << rep.outcomes.size() << " points, " << rep.pairs.size()
     << " distinct pair" << (rep.pairs.size() == 1 ? "" : "s") << "\n";
  for (const GeneratedPair& g : rep.pairs) {
    os << "pair at (k, j) = (" << g.k << ", " << g.j << ")\n";
    os << "  quartic (x, y) = " << g.quartic << "\n";
    os << to_text(g.solution);
  }
  return os.str();
}

std::string to_text(const VerifyReport& rep) {
  std::ostringstream os;
  for (const VerifyCheck& c : rep.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace squarepairs
