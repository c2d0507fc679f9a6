#include "mukai/serialize.hpp"

#include "mukai/error.hpp"

namespace mukai {
namespace {

const Int kMaxExact = (Int(1) << 53) - 1;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array");
  return j;
}

std::string string_from_json(const Json& j, const char* what) {
  if (!j.is_string()) throw Error(ErrorKind::Parse, std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json params_json(const ParamMap& params) {
  Json out = Json::object();
  for (const auto& [key, value] : params) out[key] = to_json(value);
  return out;
}

Json rationals_json(const std::map<std::string, Rational>& values) {
  Json out = Json::object();
  for (const auto& [key, value] : values) out[key] = to_json(value);
  return out;
}

Json strings_json(const std::vector<std::string>& values) { return Json(values); }

}  // namespace

Json to_json(const Int& value) {
  if (abs(value) <= kMaxExact) return Json(value.get_si());
  return Json(value.get_str());
}

Json to_json(const Rational& value) { return Json(to_string(value)); }

Json to_json(const NSClass& value) {
  Json out = Json::array();
  for (const auto& c : value) out.push_back(to_json(c));
  return out;
}

Json to_json(const RationalClass& value) {
  Json out = Json::array();
  for (const auto& c : value) out.push_back(to_json(c));
  return out;
}

Json to_json(const IntMatrix& value) {
  Json out = Json::array();
  for (const auto& row : value) out.push_back(to_json(row));
  return out;
}

Json to_json(const NSLattice& lattice) {
  return {{"gram", to_json(lattice.gram())}, {"basis", lattice.basis_names()}};
}

Json to_json(const MukaiVector& v) {
  return {{"r", to_json(v.r)}, {"xi", to_json(v.xi)}, {"a", to_json(v.a)}};
}

Json to_json(const Classification& c) {
  return {{"primitive", c.primitive},
          {"spherical", c.spherical},
          {"isotropic", c.isotropic},
          {"square", to_json(c.square)}};
}

Json to_json(const OrthBasis& basis) {
  Json vectors = Json::array();
  for (const auto& b : basis.basis) vectors.push_back(to_json(b));
  return {{"vector", to_json(basis.vector)}, {"basis", vectors}, {"gram", to_json(basis.gram)}};
}

Json to_json(const FamilyParams& params) {
  if (const auto* c = std::get_if<CoprimeParams>(&params)) {
    return {{"type", "coprime"}, {"r", to_json(c->r)}, {"d", to_json(c->d)}, {"s", to_json(c->s)}};
  }
  const auto& g = std::get<GeneralParams>(params);
  return {{"type", "general"}, {"l", to_json(g.l)},   {"r", to_json(g.r)},
          {"d", to_json(g.d)}, {"r1", to_json(g.r1)}, {"s", to_json(g.s)}};
}

Json to_json(const FamilyInstance& fam) {
  return {{"params", to_json(fam.params)},
          {"l", to_json(fam.l)},
          {"r1", to_json(fam.r1)},
          {"d1", to_json(fam.d1)},
          {"p", to_json(fam.p)},
          {"q", to_json(fam.q)},
          {"k", to_json(fam.k)},
          {"lattice", to_json(fam.lattice)},
          {"v", to_json(fam.v)},
          {"v1", to_json(fam.v1)},
          {"w", to_json(fam.w())},
          {"identities",
           {{"v1_square", to_json(fam.identities.v1_square)},
            {"v_square", to_json(fam.identities.v_square)},
            {"v_dot_v1", to_json(fam.identities.v_dot_v1)}}}};
}

Json to_json(const HypothesisReport& report) {
  return {{"kind", std::string(to_string(report.kind))},
          {"inputs", params_json(report.inputs)},
          {"passed", report.passed},
          {"margin", to_json(report.margin)},
          {"strict", report.strict},
          {"citation", report.citation},
          {"derived", rationals_json(report.derived)},
          {"notes", strings_json(report.notes)}};
}

Json to_json(const ModuliDimension& dim) {
  return {{"dim", to_json(dim.dim)}, {"kind", std::string(to_string(dim.kind))}};
}

Json to_json(const StratumReport& rep) {
  Json out = {{"i", to_json(rep.i)},
              {"v_dot_v1", to_json(rep.v_dot_v1)},
              {"hom_dim", to_json(rep.hom_dim)},
              {"ext1_dim", to_json(rep.ext1_dim)},
              {"k", to_json(rep.k)},
              {"vG", to_json(rep.vG)},
              {"vG_square", to_json(rep.vG_square)},
              {"extension_fiber",
               {{"n", to_json(rep.extension_fiber.n)},
                {"m", to_json(rep.extension_fiber.m)},
                {"dim", to_json(rep.extension_fiber.dim())}}},
              {"codim", to_json(rep.codim)},
              {"dim_stratum", to_json(rep.dim_stratum)},
              {"in_stated_range", rep.in_stated_range},
              {"flags", strings_json(rep.flags)}};
  if (rep.fibers) {
    const auto& f = *rep.fibers;
    auto gr = [](const Grassmannian& g) {
      return Json{{"n", to_json(g.n)}, {"m", to_json(g.m)}, {"dim", to_json(g.dim())}};
    };
    out["fibers"] = {{"m", to_json(f.m)},
                     {"w", to_json(f.w)},
                     {"w_index", to_json(f.w_index)},
                     {"w_codim", to_json(f.w_codim)},
                     {"over_v", gr(f.over_v)},
                     {"over_w", gr(f.over_w)},
                     {"incidence_dim", to_json(f.incidence_dim)}};
  }
  return out;
}

Json to_json(const MuCodimBound& bound) {
  return {{"square", to_json(bound.square)},
          {"l", to_json(bound.l)},
          {"bound", to_json(bound.bound)},
          {"hypothesis_holds", bound.hypothesis_holds},
          {"codim_at_least_two", bound.codim_at_least_two},
          {"flags", strings_json(bound.flags)}};
}

Json to_json(const FiltrationShape& shape) {
  Json parts = Json::array();
  for (const auto& p : shape.parts) parts.push_back({{"l", to_json(p.l)}, {"a", to_json(p.a)}});
  return {{"parts", parts},
          {"squares", to_json(shape.squares)},
          {"chi", to_json(shape.chi)},
          {"chi_sum", to_json(shape.chi_sum)},
          {"chi_sum_closed", to_json(shape.chi_sum_closed)},
          {"k", to_json(shape.k)},
          {"implied_codim", to_json(shape.implied_codim)}};
}

Json to_json(const FiltrationOracleReport& rep) {
  Json out = {{"l", to_json(rep.l)},
              {"r", to_json(rep.r)},
              {"d", to_json(rep.d)},
              {"a", to_json(rep.a)},
              {"square", to_json(rep.square)},
              {"shapes_enumerated", rep.shapes_enumerated},
              {"identity_verified", rep.identity_verified},
              {"chain_inequality_verified", rep.chain_inequality_verified},
              {"min_codim_bound", nullptr},
              {"minimizing_shape", nullptr},
              {"mu_bound", to_json(rep.mu_bound)},
              {"dominates", rep.dominates},
              {"assumptions", strings_json(rep.assumptions)}};
  if (rep.min_codim_bound) out["min_codim_bound"] = to_json(*rep.min_codim_bound);
  if (rep.minimizing_shape) out["minimizing_shape"] = to_json(*rep.minimizing_shape);
  return out;
}

Json to_json(const AmpleConeSpec& cone) {
  Json gens = Json::array();
  for (const auto& g : cone.generators) gens.push_back(to_json(g));
  return {{"generators", gens}, {"reference", to_json(cone.reference)}};
}

Json to_json(const Wall& wall) {
  Json witnesses = Json::array();
  for (const auto& w : wall.witnesses) {
    witnesses.push_back({{"xi_F", to_json(w.xi_F)}, {"chi_F", to_json(w.chi_F)}});
  }
  return {{"D", to_json(wall.D)}, {"D_square", to_json(wall.D_square)}, {"witnesses", witnesses}};
}

Json to_json(const std::vector<Wall>& walls) {
  Json out = Json::array();
  for (const auto& w : walls) out.push_back(to_json(w));
  return out;
}

Json to_json(const ChamberDecomposition& chambers) {
  Json list = Json::array();
  for (const auto& c : chambers.chambers) {
    list.push_back({{"lower", to_json(c.lower)},
                    {"upper", to_json(c.upper)},
                    {"interior_point", to_json(c.interior_point)}});
  }
  return {{"crossings", to_json(chambers.crossings)}, {"chambers", list}};
}

Json to_json(const PrimitivizingTwist& t) {
  return {{"N", to_json(t.N)},
          {"n", to_json(t.n)},
          {"generator", t.generator},
          {"xi_prime", to_json(t.xi_prime)},
          {"xi_prime_square", to_json(t.xi_prime_square)},
          {"primitive", t.primitive},
          {"in_cone", t.in_cone}};
}

Json to_json(const LatticeState& state) {
  return {{"lattice", to_json(state.lattice)}, {"vector", to_json(state.vector)}};
}

Json to_json(const Move& move) {
  Json out;
  if (const auto* t = std::get_if<TwistMove>(&move.kind)) {
    out = {{"kind", "twist"}, {"N", to_json(t->N)}};
  } else if (const auto* r = std::get_if<ReflectMove>(&move.kind)) {
    out = {{"kind", "reflect"},
           {"direction", std::string(to_string(r->direction))},
           {"v1", to_json(r->v1)},
           {"family", to_json(r->family)}};
  } else {
    out = {{"kind", "deform"}};
  }
  Json checks = Json::array();
  for (const auto& c : move.checks) checks.push_back(to_json(c));
  out["justification"] = move.justification;
  out["checks"] = checks;
  out["state"] = to_json(move.state);
  return out;
}

Json to_json(const Certificate& cert) {
  Json moves = Json::array();
  for (const auto& m : cert.moves) moves.push_back(to_json(m));
  return {{"initial", to_json(cert.initial)},
          {"moves", moves},
          {"final", to_json(cert.final)},
          {"target_n", to_json(cert.target_n)}};
}

Json to_json(const VerificationResult& result) {
  Json failures = Json::array();
  for (const auto& f : result.failures) {
    failures.push_back({{"move_index", f.move_index}, {"reason", f.reason}});
  }
  return {{"accepted", result.accepted}, {"failures", failures}};
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return make_rational(int_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected an integer or \"p/q\" string, got " + j.dump());
}

NSClass class_from_json(const Json& j) {
  NSClass out;
  for (const auto& c : array(j, "class")) out.push_back(int_from_json(c));
  return out;
}

RationalClass rational_class_from_json(const Json& j) {
  RationalClass out;
  for (const auto& c : array(j, "class")) out.push_back(rational_from_json(c));
  return out;
}

NSLattice lattice_from_json(const Json& j) {
  IntMatrix gram;
  for (const auto& row : array(field(j, "gram"), "gram")) gram.push_back(class_from_json(row));
  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& n : array(j["basis"], "basis")) names.push_back(string_from_json(n, "basis name"));
  } else if (gram.size() == 1) {
    names = {"H"};
  } else {
    for (std::size_t i = 0; i < gram.size(); ++i) names.push_back("e" + std::to_string(i + 1));
  }
  try {
    return NSLattice(std::move(gram), std::move(names));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

MukaiVector vector_from_json(const Json& j) {
  return {int_from_json(field(j, "r")), class_from_json(field(j, "xi")), int_from_json(field(j, "a"))};
}

FamilyParams family_params_from_json(const Json& j) {
  const std::string type = string_from_json(field(j, "type"), "family type");
  if (type == "coprime") {
    return CoprimeParams{int_from_json(field(j, "r")), int_from_json(field(j, "d")),
                         int_from_json(field(j, "s"))};
  }
  if (type == "general") {
    return GeneralParams{int_from_json(field(j, "l")), int_from_json(field(j, "r")),
                         int_from_json(field(j, "d")), int_from_json(field(j, "r1")),
                         int_from_json(field(j, "s"))};
  }
  throw Error(ErrorKind::Parse, "unknown family type '" + type + "'");
}

HypothesisReport report_from_json(const Json& j) {
  HypothesisReport out;
  try {
    out.kind = parse_hypothesis_kind(string_from_json(field(j, "kind"), "kind"));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  const Json& inputs = field(j, "inputs");
  if (!inputs.is_object()) throw Error(ErrorKind::Parse, "inputs must be an object");
  for (const auto& [key, value] : inputs.items()) out.inputs[key] = int_from_json(value);
  const Json& passed = field(j, "passed");
  const Json& strict = field(j, "strict");
  if (!passed.is_boolean() || !strict.is_boolean()) {
    throw Error(ErrorKind::Parse, "passed and strict must be booleans");
  }
  out.passed = passed.get<bool>();
  out.strict = strict.get<bool>();
  out.margin = rational_from_json(field(j, "margin"));
  out.citation = string_from_json(field(j, "citation"), "citation");
  const Json& derived = field(j, "derived");
  if (!derived.is_object()) throw Error(ErrorKind::Parse, "derived must be an object");
  for (const auto& [key, value] : derived.items()) out.derived[key] = rational_from_json(value);
  for (const auto& n : array(field(j, "notes"), "notes")) out.notes.push_back(string_from_json(n, "note"));
  return out;
}

AmpleConeSpec cone_from_json(const Json& j) {
  AmpleConeSpec out;
  for (const auto& g : array(field(j, "generators"), "generators")) {
    out.generators.push_back(rational_class_from_json(g));
  }
  out.reference = rational_class_from_json(field(j, "reference"));
  return out;
}

Wall wall_from_json(const Json& j) {
  Wall out;
  out.D = class_from_json(field(j, "D"));
  out.D_square = int_from_json(field(j, "D_square"));
  for (const auto& w : array(field(j, "witnesses"), "witnesses")) {
    out.witnesses.push_back({class_from_json(field(w, "xi_F")), int_from_json(field(w, "chi_F"))});
  }
  return out;
}

LatticeState state_from_json(const Json& j) {
  return {lattice_from_json(field(j, "lattice")), vector_from_json(field(j, "vector"))};
}

Move move_from_json(const Json& j) {
  const std::string kind = string_from_json(field(j, "kind"), "move kind");
  MoveKind parsed;
  if (kind == "twist") {
    parsed = TwistMove{class_from_json(field(j, "N"))};
  } else if (kind == "reflect") {
    ReflectDirection direction;
    try {
      direction = parse_reflect_direction(string_from_json(field(j, "direction"), "direction"));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    parsed = ReflectMove{direction, vector_from_json(field(j, "v1")),
                         family_params_from_json(field(j, "family"))};
  } else if (kind == "deform") {
    parsed = DeformMove{};
  } else {
    throw Error(ErrorKind::Parse, "unknown move kind '" + kind + "'");
  }
  std::vector<HypothesisReport> checks;
  for (const auto& c : array(field(j, "checks"), "checks")) checks.push_back(report_from_json(c));
  return {std::move(parsed), string_from_json(field(j, "justification"), "justification"),
          std::move(checks), state_from_json(field(j, "state"))};
}

Certificate certificate_from_json(const Json& j) {
  Certificate out{state_from_json(field(j, "initial")), {}, vector_from_json(field(j, "final")),
                  int_from_json(field(j, "target_n"))};
  for (const auto& m : array(field(j, "moves"), "moves")) out.moves.push_back(move_from_json(m));
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace mukai
