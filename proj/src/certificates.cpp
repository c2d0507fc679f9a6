#include "mukai/certificates.hpp"

#include "mukai/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace mukai {
namespace {

constexpr const char* kTwistJustification =
    "tensoring by a line bundle identifies M(v) with M(v e^N)";
constexpr const char* kReflectDownJustification =
    "rigid bundle E1 with <v,v1> = -1: M(v) is deformation equivalent to M(v - v1)";
constexpr const char* kReflectUpJustification =
    "rigid bundle E1 with <w,v1> = 1: M(w) is deformation equivalent to M(w + v1)";
constexpr const char* kDeformJustification =
    "deformation of the polarized surface preserving l, rank, <v^2> and a mod l";

NSClass primitive_direction(const RationalClass& g) {
  Int den = 1;
  for (const auto& c : g) den = lcm(den, Int(c.get_den()));
  NSClass out;
  out.reserve(g.size());
  for (const auto& c : g) out.push_back(Int(c.get_num() * (den / c.get_den())));
  Int content = gcd_all(out);
  if (content == 0) throw Error(ErrorKind::InvalidCone, "zero cone generator");
  for (auto& c : out) c /= content;
  return out;
}

Int residue(const Int& a, const Int& l) { return mod_floor(a, l); }

// An edge of the l = 1 rank graph: the reflection that moves between ranks.
struct RankEdge {
  ReflectDirection direction;
  Int family_rank;
  Int d;
  Int target;
};

std::vector<RankEdge> rank_edges(const Int& rank, const Int& s, const Int& cap,
                                 std::uint64_t& work, std::uint64_t budget) {
  std::vector<RankEdge> out;
  auto spend = [&] {
    if (++work > budget) {
      throw Error(ErrorKind::NoCertificateFound,
                  "search budget of " + std::to_string(budget) + " edge evaluations exhausted");
    }
  };
  for (Int d = 1; d < rank; ++d) {
    spend();
    if (gcd(d, rank) != 1) continue;
    const Int r1 = mod_inverse(d, rank);
    if (k_coprime(rank, r1, s) >= 1) out.push_back({ReflectDirection::Down, rank, d, rank - r1});
  }
  for (Int big = rank + 1; big <= cap; ++big) {
    for (Int d = 1; d < big; ++d) {
      spend();
      if (gcd(d, big) != 1) continue;
      const Int r1 = mod_inverse(d, big);
      if (big - r1 == rank && k_coprime(big, r1, s) >= 1) {
        out.push_back({ReflectDirection::Up, big, d, big});
      }
    }
  }
  return out;
}

// Shortest route from `start` to rank 1; neighbours are visited in the order
// rank_edges produces them, which fixes the result.
std::vector<RankEdge> search_ranks(const Int& start, const Int& s, const Int& cap,
                                   std::uint64_t budget) {
  if (start == 1) return {};
  std::map<Int, std::optional<RankEdge>> parent;
  std::map<Int, Int> previous;
  std::deque<Int> frontier{start};
  parent[start] = std::nullopt;
  std::uint64_t work = 0;
  while (!frontier.empty()) {
    Int rank = frontier.front();
    frontier.pop_front();
    for (const auto& edge : rank_edges(rank, s, cap, work, budget)) {
      if (parent.count(edge.target)) continue;
      parent[edge.target] = edge;
      previous[edge.target] = rank;
      if (edge.target == 1) {
        std::vector<RankEdge> path;
        for (Int at = 1; at != start; at = previous[at]) path.push_back(*parent[at]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      frontier.push_back(edge.target);
    }
  }
  throw Error(ErrorKind::NoCertificateFound,
              "no chain of reflections reaches rank 1 from rank " + to_string(start) +
                  " with ranks <= " + to_string(cap));
}

void append(Certificate& cert, MoveKind kind, std::string justification,
            std::vector<HypothesisReport> checks, LatticeState state) {
  cert.moves.push_back({std::move(kind), std::move(justification), std::move(checks),
                        std::move(state)});
}

const LatticeState& current(const Certificate& cert) {
  return cert.moves.empty() ? cert.initial : cert.moves.back().state;
}

void deform_to(Certificate& cert, LatticeState target) {
  if (current(cert) == target) return;
  append(cert, DeformMove{}, kDeformJustification, {}, std::move(target));
}

void reflect_with(Certificate& cert, const FamilyInstance& fam, ReflectDirection direction) {
  const bool down = direction == ReflectDirection::Down;
  deform_to(cert, {fam.lattice, down ? fam.v : fam.w()});
  append(cert, ReflectMove{direction, fam.v1, fam.params},
         down ? kReflectDownJustification : kReflectUpJustification, reflect_checks(fam),
         {fam.lattice, down ? fam.w() : fam.v});
}

// Model instance of the non-primitive family matching (r, l, square, a mod l),
// smallest admissible r1 first.
FamilyInstance general_model(const Int& r, const Int& l, const Int& square, const Int& a0) {
  const Int r1_mod_l = mod_inverse(a0, l);
  const Int half = square / (2 * l);
  for (Int r1 = r1_mod_l == 0 ? l : r1_mod_l; r1 < l * r; r1 += l) {
    if (gcd(r1, r) != 1) continue;
    const Int d = r == 1 ? Int(1) : mod_inverse(r1, r);
    auto [p, q] = solve_pq(l, r1);
    if ((half - r * p) % l != 0) continue;
    const Int s = (half - r * p) / l;
    if (k_general(r, r1, q, s) < 1) continue;
    return family_general(l, r, d, r1, s);
  }
  throw Error(ErrorKind::NoCertificateFound,
              "no model family with l = " + to_string(l) + ", r = " + to_string(r) +
                  ", <v^2> = " + to_string(square));
}

}  // namespace

MukaiVector hilbert_vector(const Int& n, std::size_t ns_rank) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "hilbert_vector needs n >= 1");
  return {1, zero_class(ns_rank), 1 - n};
}

Int multiplicity(const MukaiVector& v) {
  std::vector<Int> parts{v.r};
  parts.insert(parts.end(), v.xi.begin(), v.xi.end());
  return gcd_all(parts);
}

PrimitivizingTwist find_primitivizing_twist(const MukaiVector& v, const NSLattice& lattice,
                                            const AmpleConeSpec& cone, const Int& max_n) {
  require_vector(v, lattice);
  if (lattice.rank() < 2) {
    throw Error(ErrorKind::RankTooSmall, "a primitivizing twist needs Picard rank >= 2");
  }
  cone.validate(lattice);
  const Int l = multiplicity(v);
  if (l == 0) throw Error(ErrorKind::ZeroVector, "v has no rank or degree-two part");
  const Int r = v.r / l;
  NSClass xi;
  for (const auto& c : v.xi) xi.push_back(c / l);
  std::vector<NSClass> directions;
  for (const auto& g : cone.generators) directions.push_back(primitive_direction(g));

  for (Int step = 1; step <= max_n; ++step) {
    for (const Int& n : {Int(step), Int(-step)}) {
      if (gcd(n, r) != 1) continue;
      for (std::size_t gi = 0; gi < directions.size(); ++gi) {
        PrimitivizingTwist out;
        out.N = n * directions[gi];
        out.n = n;
        out.generator = gi;
        out.xi_prime = xi + r * out.N;
        out.xi_prime_square = lattice.square(out.xi_prime);
        out.primitive = gcd_all(out.xi_prime) == 1;
        out.in_cone = in_open_cone(to_rational(out.xi_prime), cone);
        if (out.primitive && out.in_cone && out.xi_prime_square >= 4) return out;
      }
    }
  }
  throw Error(ErrorKind::SearchExhausted,
              "no primitivizing twist with |n| <= " + to_string(max_n));
}

std::string_view to_string(ReflectDirection direction) {
  return direction == ReflectDirection::Down ? "down" : "up";
}

ReflectDirection parse_reflect_direction(std::string_view name) {
  if (name == "down") return ReflectDirection::Down;
  if (name == "up") return ReflectDirection::Up;
  throw Error(ErrorKind::Parse, "reflect direction must be 'down' or 'up'");
}

std::vector<HypothesisReport> reflect_checks(const FamilyInstance& fam) {
  const Int sq = fam.identities.v_square;
  if (const auto* c = std::get_if<CoprimeParams>(&fam.params)) {
    return {check_hypotheses(HypothesisKind::KPositive, {{"r", c->r}, {"r1", fam.r1}, {"s", c->s}})};
  }
  const auto& g = std::get<GeneralParams>(fam.params);
  return {
      check_hypotheses(HypothesisKind::DeformationBound, {{"l", g.l}, {"r", g.r}, {"square", sq}}),
      check_hypotheses(HypothesisKind::MuBound, {{"l", g.l}, {"square", sq}}),
      check_hypotheses(HypothesisKind::KPositive,
                       {{"r", g.r}, {"r1", g.r1}, {"q", fam.q}, {"s", g.s}}),
  };
}

LatticeState canonical_initial(const Int& r, const Int& l, const Int& square, const Int& a_mod_l) {
  if (r < 1 || l < 1) throw Error(ErrorKind::InvalidArgument, "r and l must be positive");
  if (square % (2 * l) != 0) {
    throw Error(ErrorKind::HypothesisFailed,
                "<v^2> = " + to_string(square) + " is not divisible by 2l = " + to_string(Int(2 * l)));
  }
  const Int a0 = residue(a_mod_l, l);
  if (gcd(a0, l) != 1) {
    throw Error(ErrorKind::HypothesisFailed, "gcd(a, l) != 1: the vector would not be primitive");
  }
  // <v^2> = l^2 (xi^2) - 2 l r a forces <v^2>/2l + r a = 0 mod l.
  const Int numerator = square / (2 * l) + r * a0;
  if (numerator % l != 0) {
    throw Error(ErrorKind::HypothesisFailed,
                "no vector with l = " + to_string(l) + ", r = " + to_string(r) + ", <v^2> = " +
                    to_string(square) + " has a = " + to_string(a0) + " mod l");
  }
  const Int y = 1 + numerator / l;
  return {NSLattice::elliptic(), MukaiVector{l * r, {l, l * y}, a0}};
}

Certificate plan_certificate(const PlanRequest& req) {
  if (req.r < 1 || req.l < 1) throw Error(ErrorKind::InvalidArgument, "r and l must be positive");
  if (req.square < 2 || req.square % 2 != 0) {
    throw Error(ErrorKind::HypothesisFailed,
                "<v^2> = " + to_string(req.square) + ": need a positive even square");
  }
  if (req.l > 1) {
    auto bound = check_hypotheses(HypothesisKind::DeformationBound,
                                  {{"l", req.l}, {"r", req.r}, {"square", req.square}});
    if (!bound.passed) {
      throw Error(ErrorKind::HypothesisFailed,
                  "<v^2>/2 > max{rl(rl-1), l^2} fails (margin " + to_string(bound.margin) + ")");
    }
  }
  auto initial = [&]() -> LatticeState {
    if (!req.initial) return canonical_initial(req.r, req.l, req.square, req.a_mod_l);
    const auto& init = *req.initial;
    require_vector(init.vector, init.lattice);
    if (multiplicity(init.vector) != req.l || init.vector.r != req.l * req.r ||
        square(init.vector, init.lattice) != req.square ||
        residue(init.vector.a, req.l) != residue(req.a_mod_l, req.l)) {
      throw Error(ErrorKind::InvalidArgument, "initial state does not match the requested invariants");
    }
    return init;
  };
  Certificate cert{initial(), {}, {}, 0};

  if (req.l > 1) {
    const FamilyInstance fam =
        general_model(req.r, req.l, req.square, residue(cert.initial.vector.a, req.l));
    reflect_with(cert, fam, ReflectDirection::Down);
  }

  const Int s = req.square / 2;
  const Int start = current(cert).vector.r;
  const Int cap = req.rank_cap > 0 ? req.rank_cap : Int(4 * req.l * req.r + 8);
  for (const auto& edge : search_ranks(start, s, cap, req.budget)) {
    reflect_with(cert, family_coprime(edge.family_rank, edge.d, s), edge.direction);
  }

  const LatticeState& last = current(cert);
  const NSClass N = -last.vector.xi;
  LatticeState landed{last.lattice, twist(last.vector, N, last.lattice)};
  cert.target_n = s + 1;
  if (landed.vector != hilbert_vector(cert.target_n, last.lattice.rank())) {
    throw Error(ErrorKind::IdentityViolation, "normalizing twist missed the Hilbert vector");
  }
  append(cert, TwistMove{N}, kTwistJustification, {}, landed);
  cert.final = landed.vector;

  auto verdict = verify_certificate(cert);
  if (!verdict.accepted) {
    throw Error(ErrorKind::IdentityViolation,
                "planned certificate failed verification: " + verdict.failures.front().reason);
  }
  return cert;
}

namespace {

class Verifier {
 public:
  explicit Verifier(const Certificate& cert) : cert_(cert) {}

  VerificationResult run() {
    const LatticeState* prev = &cert_.initial;
    if (!valid_state(*prev, 0)) return finish();
    const Int initial_square = square(prev->vector, prev->lattice);
    for (std::size_t i = 0; i < cert_.moves.size(); ++i) {
      const Move& move = cert_.moves[i];
      if (!valid_state(move.state, i)) return finish();
      if (const auto* t = std::get_if<TwistMove>(&move.kind)) {
        check_twist(i, *t, *prev, move);
      } else if (const auto* r = std::get_if<ReflectMove>(&move.kind)) {
        check_reflect(i, *r, *prev, move);
      } else {
        check_deform(i, *prev, move);
      }
      if (square(move.state.vector, move.state.lattice) != initial_square) {
        fail(i, "square changed along the chain");
      }
      prev = &move.state;
    }
    const std::size_t end = cert_.moves.size();
    if (cert_.final != prev->vector) fail(end, "final vector mismatch");
    if (initial_square < 0 || cert_.target_n != initial_square / 2 + 1) {
      fail(end, "target_n does not equal <v^2>/2 + 1");
    }
    if (cert_.target_n < 1 || cert_.final != hilbert_vector(cert_.target_n, prev->lattice.rank())) {
      fail(end, "final vector mismatch");
    }
    return finish();
  }

 private:
  bool valid_state(const LatticeState& state, std::size_t index) {
    try {
      require_vector(state.vector, state.lattice);
      return true;
    } catch (const Error& e) {
      fail(index, std::string("malformed state: ") + e.what());
      return false;
    }
  }

  void check_twist(std::size_t i, const TwistMove& t, const LatticeState& prev, const Move& move) {
    if (move.state.lattice != prev.lattice) fail(i, "twist must not change the lattice");
    if (t.N.size() != prev.lattice.rank()) {
      fail(i, "twist class has the wrong dimension");
      return;
    }
    if (move.state.vector != twist(prev.vector, t.N, prev.lattice)) {
      fail(i, "state is not the twist of the previous vector");
    }
    if (!move.checks.empty()) fail(i, "twist carries no hypothesis checks");
  }

  void check_reflect(std::size_t i, const ReflectMove& r, const LatticeState& prev,
                     const Move& move) {
    std::optional<FamilyInstance> fam;
    try {
      fam = build_family(r.family);
    } catch (const Error& e) {
      fail(i, std::string("family parameters invalid: ") + e.what());
      return;
    }
    if (fam->lattice != prev.lattice) fail(i, "lattice does not match the family");
    if (fam->v1 != r.v1) fail(i, "v1 does not match the family");
    if (move.state.lattice != prev.lattice) fail(i, "reflection must not change the lattice");
    if (r.v1.xi.size() != prev.lattice.rank()) {
      fail(i, "v1 has the wrong dimension");
      return;
    }
    if (square(r.v1, prev.lattice) != -2) fail(i, "v1 is not spherical");
    const Int p = pair(prev.vector, r.v1, prev.lattice);
    if (r.direction == ReflectDirection::Down) {
      if (p != -1) fail(i, "pairing with spherical class must be -1");
      if (prev.vector != fam->v) fail(i, "vector does not match the family's v");
      if (move.state.vector.r <= 0 || move.state.vector.r != prev.vector.r - fam->r1) {
        fail(i, "rank must drop by r1 and stay positive");
      }
    } else {
      if (p != 1) fail(i, "pairing with spherical class must be +1");
      if (prev.vector != fam->w()) fail(i, "vector does not match the family's w");
    }
    if (square(r.v1, prev.lattice) == -2 && move.state.vector != reflect(prev.vector, r.v1, prev.lattice)) {
      fail(i, "state is not the reflection of the previous vector");
    }
    auto expected = reflect_checks(*fam);
    if (move.checks != expected) fail(i, "recorded checks differ from recomputed ones");
    for (const auto& report : expected) {
      if (!report.passed) fail(i, "hypothesis " + std::string(to_string(report.kind)) + " fails");
    }
  }

  void check_deform(std::size_t i, const LatticeState& prev, const Move& move) {
    const MukaiVector& a = prev.vector;
    const MukaiVector& b = move.state.vector;
    const Int la = multiplicity(a);
    const Int lb = multiplicity(b);
    if (la != lb) fail(i, "deformation changes l");
    if (a.r != b.r) fail(i, "deformation changes the rank");
    if (a.r <= 0) fail(i, "deformation needs positive rank");
    if (square(a, prev.lattice) != square(b, move.state.lattice)) {
      fail(i, "deformation changes <v^2>");
    }
    if (la > 0 && lb > 0 && residue(a.a, la) != residue(b.a, la)) {
      fail(i, "deformation changes a mod l");
    }
    if (!move.checks.empty()) fail(i, "deformation carries no hypothesis checks");
  }

  void fail(std::size_t index, std::string reason) {
    failures_.push_back({index, std::move(reason)});
  }

  VerificationResult finish() { return {failures_.empty(), std::move(failures_)}; }

  const Certificate& cert_;
  std::vector<VerificationFailure> failures_;
};

}  // namespace

VerificationResult verify_certificate(const Certificate& cert) { return Verifier(cert).run(); }

}  // namespace mukai
