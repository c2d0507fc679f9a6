#include "mukai/families.hpp"

#include "mukai/error.hpp"

#include <algorithm>

namespace mukai {
namespace {

void require_coprime(const Int& a, const Int& b, const char* what) {
  Int g = gcd(a, b);
  if (g != 1) {
    throw Error(ErrorKind::NotCoprime, std::string(what) + ": gcd(" + to_string(a) + ", " +
                                           to_string(b) + ") = " + to_string(g));
  }
}

void require_positive(const Int& x, const char* name) {
  if (x <= 0) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(name) + " must be positive, got " + to_string(x));
  }
}

void verify_identities(const FamilyInstance& fam) {
  const auto& id = fam.identities;
  if (id.v1_square != -2 || id.v_square != fam.expected_v_square() || id.v_dot_v1 != -1) {
    throw Error(ErrorKind::IdentityViolation,
                "family identities failed: <v1^2>=" + to_string(id.v1_square) +
                    " <v^2>=" + to_string(id.v_square) + " <v,v1>=" + to_string(id.v_dot_v1));
  }
}

FamilyIdentities compute_identities(const MukaiVector& v, const MukaiVector& v1,
                                    const NSLattice& lattice) {
  return {square(v1, lattice), square(v, lattice), pair(v, v1, lattice)};
}

const Int& get(const ParamMap& params, const std::string& key, HypothesisKind kind) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorKind::MissingParam,
                std::string(to_string(kind)) + " needs parameter '" + key + "'");
  }
  return it->second;
}

HypothesisReport finish(HypothesisReport report) {
  report.passed = report.strict ? report.margin > 0 : report.margin >= 0;
  return report;
}

}  // namespace

BezoutPair solve_bezout(const Int& r, const Int& d) {
  require_positive(r, "r");
  require_positive(d, "d");
  require_coprime(r, d, "solve_bezout");
  // r1 = d^{-1} mod r, lifted into (0, r].
  Int r1 = mod_inverse(d, r);
  if (r1 == 0) r1 = r;
  return {r1, (r1 * d - 1) / r};
}

PQPair solve_pq(const Int& l, const Int& r1) {
  require_positive(l, "l");
  require_positive(r1, "r1");
  require_coprime(l, r1, "solve_pq");
  Int p = mod_floor(-mod_inverse(r1, l), l);
  return {p, (p * r1 + 1) / l};
}

Int k_coprime(const Int& r, const Int& r1, const Int& s) { return s * r1 * r1 + r * r1 - r * r; }

Int k_general(const Int& r, const Int& r1, const Int& q, const Int& s) {
  return r1 * (q * r + r1 * s) - r * r;
}

Int FamilyInstance::expected_v_square() const {
  if (const auto* g = std::get_if<GeneralParams>(&params)) {
    return 2 * g->l * (g->l * g->s + g->r * p);
  }
  return 2 * std::get<CoprimeParams>(params).s;
}

FamilyInstance family_coprime(const Int& r, const Int& d, const Int& s) {
  auto [r1, d1] = solve_bezout(r, d);
  const Int k = k_coprime(r, r1, s);
  if (k < 1) {
    throw Error(ErrorKind::NonPositiveK,
                "k(s) = " + to_string(k) + " for (r, d, s) = (" + to_string(r) + ", " +
                    to_string(d) + ", " + to_string(s) + ")");
  }
  NSLattice lattice = NSLattice::rank_one(2 * k);
  MukaiVector v1{r1, {d1}, d1 * d1 * r + d1 * d1 * s * r1 - r1 * d * d + 2 * d};
  MukaiVector v{r, {d}, (2 * d * d1 * r1 - r * d1 * d1) * s + d * d * (r1 - r)};
  FamilyInstance fam{
      .params = CoprimeParams{r, d, s},
      .l = 1,
      .r1 = r1,
      .d1 = d1,
      .p = 0,
      .q = 0,
      .k = k,
      .lattice = lattice,
      .v = v,
      .v1 = v1,
      .identities = compute_identities(v, v1, lattice),
  };
  verify_identities(fam);
  return fam;
}

FamilyInstance family_general(const Int& l, const Int& r, const Int& d, const Int& r1,
                              const Int& s) {
  require_positive(l, "l");
  require_positive(r1, "r1");
  if (r == 0) {
    throw Error(ErrorKind::RangeError, "r = 0 leaves d1 undetermined; only r >= 1 is supported");
  }
  if (r < 0 || d < 0) throw Error(ErrorKind::InvalidArgument, "r and d must be non-negative");
  require_coprime(r, d, "family_general (r, d)");
  require_coprime(l, r1, "family_general (l, r1)");
  if (r1 >= l * r) {
    throw Error(ErrorKind::RangeError,
                "r1 = " + to_string(r1) + " must satisfy 0 < r1 < l*r = " + to_string(Int(l * r)));
  }
  if ((d * r1 - 1) % r != 0) {
    throw Error(ErrorKind::NoBezoutSolution,
                "d*r1 - d1*r = 1 has no integer d1 for (r, d, r1) = (" + to_string(r) + ", " +
                    to_string(d) + ", " + to_string(r1) + ")");
  }
  const Int d1 = (d * r1 - 1) / r;
  auto [p, q] = solve_pq(l, r1);
  const Int k = k_general(r, r1, q, s);
  if (k < 1) throw Error(ErrorKind::NonPositiveK, "k(s) = " + to_string(k));
  NSLattice lattice = NSLattice::rank_one(2 * k);
  MukaiVector v{l * r, {l * d}, l * ((1 + d * r1) * d1 * s + d * d * q * r1 - r * d * d) - p};
  MukaiVector v1{r1, {d1}, r1 * (-d * d + d1 * d1 * s) + d1 * d1 * r * q + 2 * d};
  FamilyInstance fam{
      .params = GeneralParams{l, r, d, r1, s},
      .l = l,
      .r1 = r1,
      .d1 = d1,
      .p = p,
      .q = q,
      .k = k,
      .lattice = lattice,
      .v = v,
      .v1 = v1,
      .identities = compute_identities(v, v1, lattice),
  };
  verify_identities(fam);
  return fam;
}

FamilyInstance build_family(const FamilyParams& params) {
  if (const auto* c = std::get_if<CoprimeParams>(&params)) return family_coprime(c->r, c->d, c->s);
  const auto& g = std::get<GeneralParams>(params);
  return family_general(g.l, g.r, g.d, g.r1, g.s);
}

std::string_view to_string(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::KCriterion: return "k_criterion";
    case HypothesisKind::DeformationBound: return "deformation_bound";
    case HypothesisKind::MuBound: return "mu_bound";
    case HypothesisKind::MuNonEmpty: return "mu_nonempty";
    case HypothesisKind::KPositive: return "k_positive";
  }
  return "unknown";
}

HypothesisKind parse_hypothesis_kind(std::string_view name) {
  for (auto kind : {HypothesisKind::KCriterion, HypothesisKind::DeformationBound,
                    HypothesisKind::MuBound, HypothesisKind::MuNonEmpty,
                    HypothesisKind::KPositive}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown hypothesis kind '" + std::string(name) + "'");
}

HypothesisReport check_hypotheses(HypothesisKind kind, const ParamMap& params) {
  HypothesisReport report;
  report.kind = kind;
  switch (kind) {
    case HypothesisKind::KCriterion: {
      const Int& r = get(params, "r", kind);
      const Int& r1 = get(params, "r1", kind);
      const Int& s = get(params, "s", kind);
      report.inputs = {{"r", r}, {"r1", r1}, {"s", s}};
      report.strict = false;
      report.citation = "k(s) > 0 when r1 >= r/2 and either (r = 2, s >= 3) or (r1 >= 2r/3, s >= 1)";
      // The blanket assumption r1 >= r/2 gates both cases.
      Rational blanket = make_rational(r1) - make_rational(r, 2);
      Rational rank_two = r == 2 ? make_rational(s - 3) : make_rational(-abs(r - 2));
      Rational two_thirds = std::min<Rational>(make_rational(r1) - make_rational(2 * r, 3),
                                     make_rational(s - 1));
      report.margin = std::min(blanket, std::max(rank_two, two_thirds));
      report = finish(std::move(report));
      const Int k = k_coprime(r, r1, s);
      report.derived["k"] = make_rational(k);
      if (blanket < 0) report.notes.push_back("r1 < r/2: criterion does not apply");
      if (rank_two >= 0) report.notes.push_back("case r = 2, s >= 3");
      if (two_thirds >= 0) report.notes.push_back("case r1 >= 2r/3, s >= 1");
      if (report.passed && k <= 0) report.notes.push_back("inconsistent: k(s) <= 0");
      break;
    }
    case HypothesisKind::DeformationBound: {
      const Int& l = get(params, "l", kind);
      const Int& r = get(params, "r", kind);
      const Int& sq = get(params, "square", kind);
      report.inputs = {{"l", l}, {"r", r}, {"square", sq}};
      report.strict = true;
      report.citation = "<v^2>/2 > max{rl(rl-1), l^2}";
      Int threshold = std::max(Int(r * l * (r * l - 1)), Int(l * l));
      report.margin = make_rational(sq, 2) - make_rational(threshold);
      report.derived["threshold"] = make_rational(threshold);
      report = finish(std::move(report));
      break;
    }
    case HypothesisKind::MuBound:
    case HypothesisKind::MuNonEmpty: {
      const Int& l = get(params, "l", kind);
      const Int& sq = get(params, "square", kind);
      if (l <= 0) throw Error(ErrorKind::InvalidArgument, "l must be positive");
      report.inputs = {{"l", l}, {"square", sq}};
      const Rational ratio = make_rational(sq, 2 * l);
      report.margin = ratio - make_rational(l);
      if (kind == HypothesisKind::MuBound) {
        report.strict = true;
        report.citation = "<v^2>/2l > l: codim of the mu-unstable locus >= <v^2>/2l - l + 1 >= 2";
        report.derived["codim_bound"] = ratio - make_rational(l) + 1;
        if (l == 1) report.notes.push_back("l = 1: bound reduces to <v^2>/2");
      } else {
        report.strict = false;
        report.citation = "mu-stable locus nonempty iff <v^2>/2l >= l";
        if (report.margin == 0) {
          report.notes.push_back("boundary <v^2>/2l = l is not attained by primitive v");
        }
      }
      report = finish(std::move(report));
      break;
    }
    case HypothesisKind::KPositive: {
      const Int& r = get(params, "r", kind);
      const Int& r1 = get(params, "r1", kind);
      const Int& s = get(params, "s", kind);
      report.strict = true;
      Int k;
      if (auto it = params.find("q"); it != params.end()) {
        report.inputs = {{"r", r}, {"r1", r1}, {"q", it->second}, {"s", s}};
        report.citation = "k(s) = r1(qr + r1 s) - r^2 is a valid polarization degree";
        k = k_general(r, r1, it->second, s);
      } else {
        report.inputs = {{"r", r}, {"r1", r1}, {"s", s}};
        report.citation = "k(s) = s r1^2 + r r1 - r^2 is a valid polarization degree";
        k = k_coprime(r, r1, s);
      }
      report.margin = make_rational(k);
      report.derived["k"] = make_rational(k);
      report = finish(std::move(report));
      break;
    }
  }
  return report;
}

std::vector<HypothesisReport> family_reports(const FamilyInstance& fam) {
  std::vector<HypothesisReport> out;
  const Int sq = fam.identities.v_square;
  if (const auto* c = std::get_if<CoprimeParams>(&fam.params)) {
    out.push_back(check_hypotheses(HypothesisKind::KCriterion,
                                   {{"r", c->r}, {"r1", fam.r1}, {"s", c->s}}));
    out.push_back(check_hypotheses(HypothesisKind::DeformationBound,
                                   {{"l", 1}, {"r", c->r}, {"square", sq}}));
    out.push_back(check_hypotheses(HypothesisKind::MuBound, {{"l", 1}, {"square", sq}}));
    out.push_back(check_hypotheses(HypothesisKind::MuNonEmpty, {{"l", 1}, {"square", sq}}));
    out.push_back(check_hypotheses(HypothesisKind::KPositive,
                                   {{"r", c->r}, {"r1", fam.r1}, {"s", c->s}}));
    return out;
  }
  const auto& g = std::get<GeneralParams>(fam.params);
  out.push_back(check_hypotheses(HypothesisKind::DeformationBound,
                                 {{"l", g.l}, {"r", g.r}, {"square", sq}}));
  out.push_back(check_hypotheses(HypothesisKind::MuBound, {{"l", g.l}, {"square", sq}}));
  out.push_back(check_hypotheses(HypothesisKind::MuNonEmpty, {{"l", g.l}, {"square", sq}}));
  out.push_back(check_hypotheses(HypothesisKind::KPositive,
                                 {{"r", g.r}, {"r1", g.r1}, {"q", fam.q}, {"s", g.s}}));
  return out;
}

}  // namespace mukai
