#include "mukai/moduli.hpp"

#include "mukai/error.hpp"
#include "mukai/parallel.hpp"

#include <algorithm>

namespace mukai {

std::string_view to_string(ModuliKind kind) {
  switch (kind) {
    case ModuliKind::Point: return "point";
    case ModuliKind::K3: return "k3";
    case ModuliKind::Positive: return "positive";
  }
  return "unknown";
}

ModuliDimension moduli_dim_from_square(const Int& square) {
  if (square < -2) {
    throw Error(ErrorKind::BelowSpherical, "<v^2> = " + to_string(square) + " < -2");
  }
  ModuliDimension out{square + 2, ModuliKind::Positive};
  if (out.dim == 0) out.kind = ModuliKind::Point;
  if (out.dim == 2) out.kind = ModuliKind::K3;
  return out;
}

ModuliDimension moduli_dim(const MukaiVector& v, const NSLattice& lattice) {
  return moduli_dim_from_square(square(v, lattice));
}

Int stratum_codim(const Int& v_dot_v1, const Int& i) { return (i - 1) * (i - 1 - v_dot_v1); }

StratumReport stratum_report(const MukaiVector& v, const MukaiVector& v1, const Int& i,
                             const Int& m, const NSLattice& lattice) {
  if (square(v1, lattice) != -2) throw Error(ErrorKind::NotSpherical, "v1 must have <v1^2> = -2");
  if (i < 1) throw Error(ErrorKind::IndexOutOfRange, "stratum index must be >= 1");
  StratumReport rep;
  rep.i = i;
  rep.v_dot_v1 = pair(v, v1, lattice);
  const Int& p = rep.v_dot_v1;
  rep.hom_dim = -p - 1 + i;
  rep.ext1_dim = i - 1;
  rep.k = 2 * i - 2 - p;
  rep.vG = v + Int(i - 1) * v1;
  rep.vG_square = square(rep.vG, lattice);
  rep.extension_fiber = {rep.k, i - 1};
  rep.codim = stratum_codim(p, i);
  const Int v_square = square(v, lattice);
  rep.dim_stratum = v_square + 2 - rep.codim;
  rep.in_stated_range = i >= 1 + p;

  if (!rep.in_stated_range) {
    rep.flags.push_back("formula outside stated range: i < 1 + <v,v1>");
    return rep;
  }
  // dim M(v)_i = dim M(v(G)) + dim Gr(k, i-1).
  if (rep.dim_stratum != rep.vG_square + 2 + rep.extension_fiber.dim()) {
    throw Error(ErrorKind::IdentityViolation, "stratum dimension bookkeeping failed");
  }
  if (m < 0 || m > rep.hom_dim) {
    throw Error(ErrorKind::IndexOutOfRange,
                "m = " + to_string(m) + " must lie in [0, " + to_string(rep.hom_dim) + "]");
  }
  StratumFibers fib;
  fib.m = m;
  fib.w = v - m * v1;
  fib.w_index = i + m;
  fib.w_codim = stratum_codim(pair(fib.w, v1, lattice), fib.w_index);
  fib.over_v = {rep.hom_dim, m};
  fib.over_w = {i - 1 + m, m};
  fib.incidence_dim = rep.dim_stratum + fib.over_v.dim();
  const Int via_w = square(fib.w, lattice) + 2 - fib.w_codim + fib.over_w.dim();
  if (via_w != fib.incidence_dim) {
    throw Error(ErrorKind::IdentityViolation, "incidence dimensions disagree over v and w");
  }
  rep.fibers = fib;
  return rep;
}

MuCodimBound mu_codim_bound(const Int& square, const Int& l) {
  if (l <= 0) throw Error(ErrorKind::InvalidArgument, "l must be positive");
  if (square % 2 != 0) throw Error(ErrorKind::InvalidArgument, "<v^2> must be even");
  MuCodimBound out;
  out.square = square;
  out.l = l;
  const Rational ratio = make_rational(square, 2 * l);
  out.bound = ratio - make_rational(l) + 1;
  out.hypothesis_holds = ratio >= l;
  out.codim_at_least_two = ratio > l;
  if (!out.hypothesis_holds) out.flags.push_back("hypothesis failed: <v^2>/2l < l");
  if (l == 1) out.flags.push_back("l = 1: degenerate case, bound is <v^2>/2");
  return out;
}

namespace {

struct OracleInput {
  Int l, r, d, a, h_square, square;
};

OracleInput decompose(const MukaiVector& v, const Int& l, const NSLattice& lattice) {
  if (lattice.rank() != 1) {
    throw Error(ErrorKind::NotRankOneLattice, "filtration oracle needs a rank-one lattice");
  }
  require_vector(v, lattice);
  if (l <= 0) throw Error(ErrorKind::InvalidArgument, "l must be positive");
  if (v.r % l != 0 || v.xi[0] % l != 0) {
    throw Error(ErrorKind::InvalidArgument, "v is not of the form (lr, ldH, a)");
  }
  OracleInput in{l, v.r / l, v.xi[0] / l, v.a, lattice.gram(0, 0), square(v, lattice)};
  if (in.r < 1) throw Error(ErrorKind::InvalidArgument, "filtration oracle needs r >= 1");
  return in;
}

// Largest a_i with <v(E_i)^2> = l_i^2 d^2 H^2 - 2 l_i r a_i >= -2.
Int part_upper_bound(const OracleInput& in, const Int& li) {
  return floor_div(li * li * in.d * in.d * in.h_square + 2, 2 * li * in.r);
}

void compositions(const Int& remaining, std::vector<Int>& current,
                  std::vector<std::vector<Int>>& out) {
  if (remaining == 0) {
    if (current.size() >= 2) out.push_back(current);
    return;
  }
  for (Int part = 1; part <= remaining; ++part) {
    current.push_back(part);
    compositions(remaining - part, current, out);
    current.pop_back();
  }
}

void distribute(const OracleInput& in, const std::vector<Int>& ls, const std::vector<Int>& upper,
                const std::vector<Int>& upper_suffix, std::size_t pos, const Int& rest,
                std::vector<Int>& current, std::vector<std::vector<FiltrationPart>>& out,
                std::uint64_t budget) {
  if (pos + 1 == ls.size()) {
    if (rest > upper[pos]) return;
    if (out.size() >= budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "more than " + std::to_string(budget) + " filtration shapes");
    }
    std::vector<FiltrationPart> parts;
    for (std::size_t i = 0; i < pos; ++i) parts.push_back({ls[i], current[i]});
    parts.push_back({ls[pos], rest});
    out.push_back(std::move(parts));
    return;
  }
  // Later parts can absorb at most upper_suffix[pos + 1].
  for (Int ai = rest - upper_suffix[pos + 1]; ai <= upper[pos]; ++ai) {
    current.push_back(ai);
    distribute(in, ls, upper, upper_suffix, pos + 1, rest - ai, current, out, budget);
    current.pop_back();
  }
}

FiltrationShape evaluate(const OracleInput& in, std::vector<FiltrationPart> parts,
                         const NSLattice& lattice) {
  FiltrationShape shape;
  shape.parts = std::move(parts);
  const std::size_t t = shape.parts.size();
  std::vector<MukaiVector> vs;
  Int max_l = 0;
  bool all_ones = true;
  for (const auto& part : shape.parts) {
    vs.push_back({part.l * in.r, {Int(part.l * in.d)}, part.a});
    max_l = std::max(max_l, part.l);
    if (part.l != 1) all_ones = false;
  }
  shape.chi.assign(t, IntRow(t, 0));
  for (std::size_t i = 0; i < t; ++i) {
    shape.squares.push_back(square(vs[i], lattice));
    for (std::size_t j = 0; j < t; ++j) shape.chi[j][i] = -pair(vs[j], vs[i], lattice);
  }
  shape.chi_sum = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < i; ++j) shape.chi_sum += shape.chi[j][i];
  }
  shape.chi_sum_closed = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const auto& li = shape.parts[i].l;
    shape.chi_sum_closed -= make_rational((in.l - li) * shape.squares[i], 2 * li);
  }
  shape.k = in.l - max_l;

  const Int& k = shape.k;
  const Int ext2 = k * (k + 1) / 2 - ((in.r == 1 && all_ones) ? 0 : 1);
  const Int moduli_number = in.square + shape.chi_sum + ext2 + Int(t) + 1;
  shape.implied_codim = make_rational(in.square + 2 - moduli_number);
  if (in.r == 1 && in.l == 2) {
    // E^vv = O(dH)^2; the sheaves themselves move in a family of dimension 3c2 - 3.
    const MukaiVector whole{in.l * in.r, {Int(in.l * in.d)}, in.a};
    const MukaiVector normalized = twist(whole, NSClass{Int(-in.d)}, lattice);
    const Int c2 = second_chern_class(normalized, lattice);
    shape.implied_codim = make_rational(in.square + 2 - (3 * c2 - 3));
  }
  return shape;
}

}  // namespace

std::vector<FiltrationShape> enumerate_filtration_shapes(const MukaiVector& v, const Int& l,
                                                         const NSLattice& lattice,
                                                         std::uint64_t budget) {
  const OracleInput in = decompose(v, l, lattice);
  if (budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be positive");
  std::vector<std::vector<Int>> comps;
  std::vector<Int> scratch;
  compositions(l, scratch, comps);

  std::vector<std::vector<FiltrationPart>> raw;
  for (const auto& ls : comps) {
    std::vector<Int> upper;
    for (const auto& li : ls) upper.push_back(part_upper_bound(in, li));
    std::vector<Int> suffix(ls.size() + 1, 0);
    for (std::size_t i = ls.size(); i-- > 0;) suffix[i] = suffix[i + 1] + upper[i];
    std::vector<Int> current;
    distribute(in, ls, upper, suffix, 0, in.a, current, raw, budget);
  }

  std::vector<std::optional<FiltrationShape>> slots(raw.size());
  parallel_for(raw.size(), [&](std::size_t idx) { slots[idx] = evaluate(in, raw[idx], lattice); });
  std::vector<FiltrationShape> shapes;
  shapes.reserve(slots.size());
  for (auto& s : slots) shapes.push_back(std::move(*s));
  return shapes;
}

FiltrationOracleReport filtration_oracle(const MukaiVector& v, const Int& l,
                                         const NSLattice& lattice, std::uint64_t budget) {
  const OracleInput in = decompose(v, l, lattice);
  FiltrationOracleReport rep;
  rep.l = in.l;
  rep.r = in.r;
  rep.d = in.d;
  rep.a = in.a;
  rep.square = in.square;
  rep.mu_bound = make_rational(in.square, 2 * in.l) - make_rational(in.l) + 1;
  rep.assumptions = {
      "each Jordan-Holder factor has <v(E_i)^2> >= -2",
      "sum of dim Ext^2(E_j, E_i) over i < j is at most k(k+1)/2 - 1 for a general filtration, "
      "k(k+1)/2 when r = 1 and every l_i = 1",
  };
  if (in.r == 1 && in.l == 2) {
    rep.assumptions.push_back(
        "r = 1, l = 2: codimension from the 3c2 - 3 dimensional family with E^vv = O(dH)^2");
  }

  auto shapes = enumerate_filtration_shapes(v, l, lattice, budget);
  rep.shapes_enumerated = shapes.size();
  const Rational ratio = make_rational(in.square, 2 * in.l);
  for (auto& shape : shapes) {
    if (make_rational(shape.chi_sum) != shape.chi_sum_closed) rep.identity_verified = false;
    // sum_{i>j} <v_j, v_i> >= k <v^2>/2l - (l-1-k)k
    const Rational chain = shape.k * ratio - make_rational((in.l - 1 - shape.k) * shape.k);
    if (make_rational(-shape.chi_sum) < chain) rep.chain_inequality_verified = false;
    if (!rep.min_codim_bound || shape.implied_codim < *rep.min_codim_bound) {
      rep.min_codim_bound = shape.implied_codim;
      rep.minimizing_shape = shape;
    }
  }
  if (ratio > in.l && rep.min_codim_bound) rep.dominates = *rep.min_codim_bound >= rep.mu_bound;
  return rep;
}

}  // namespace mukai
