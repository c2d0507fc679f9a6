#include "mukai/walls.hpp"

#include "mukai/error.hpp"
#include "mukai/parallel.hpp"

#include <algorithm>
#include <map>

namespace mukai {
namespace {

void require_dim(const RationalClass& x, const NSLattice& lattice, const char* what) {
  if (x.size() != lattice.rank()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has " + std::to_string(x.size()) +
                    " coordinates, lattice rank is " + std::to_string(lattice.rank()));
  }
}

// Rank of a rational matrix by Gaussian elimination.
std::size_t matrix_rank(std::vector<RationalClass> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool proportional(const RationalClass& x, const RationalClass& y) {
  return matrix_rank({x, y}) < 2;
}

// Solves sum_i lambda_i g_i = x for a basis g_1..g_n (exact).
std::vector<Rational> cone_coordinates(const RationalClass& x,
                                       const std::vector<RationalClass>& gens) {
  const std::size_t n = gens.size();
  // Augmented system: columns are generators.
  std::vector<RationalClass> m(n, RationalClass(n + 1));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) m[row][col] = gens[col][row];
    m[row][n] = x[row];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::InvalidCone, "cone generators are linearly dependent");
    std::swap(m[c], m[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
  return out;
}

struct RawWall {
  NSClass D;
  WallWitness witness;
};

std::vector<RawWall> walls_for_subclass(const NSClass& xi_E, const Int& chi_E,
                                        const NSClass& xi_F, const NSLattice& lattice,
                                        const AmpleConeSpec& cone) {
  // (D^2) = A t^2 - 2 B t + C with t = chi_F.
  const Int A = lattice.square(xi_E);
  const Int B = chi_E * lattice.dot(xi_E, xi_F);
  const Int C = chi_E * chi_E * lattice.square(xi_F);
  const Int disc = B * B - A * C;
  std::vector<RawWall> out;
  if (disc < 0) return out;
  // Roots (B +- sqrt(disc)) / A; widen by one around isqrt and filter exactly.
  const Int root = isqrt(disc);
  const Int lo = floor_div(B - root - 1, A);
  const Int hi = ceil_div(B + root + 1, A);
  for (Int t = lo; t <= hi; ++t) {
    if (A * t * t - 2 * B * t + C > 0) continue;
    NSClass D = t * xi_E - chi_E * xi_F;
    if (is_zero(D)) continue;
    if (!meets_open_cone(D, cone, lattice)) continue;
    out.push_back({normalize_wall_class(D), {xi_F, t}});
  }
  return out;
}

}  // namespace

RationalClass to_rational(const NSClass& x) {
  RationalClass out;
  out.reserve(x.size());
  for (const auto& c : x) out.push_back(make_rational(c));
  return out;
}

Rational dot(const NSLattice& lattice, const RationalClass& x, const NSClass& y) {
  Rational sum = 0;
  NSClass gy = lattice.apply(y);
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * gy[i];
  return sum;
}

Rational dot(const NSLattice& lattice, const RationalClass& x, const RationalClass& y) {
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) sum += x[i] * lattice.gram(i, j) * y[j];
  }
  return sum;
}

void AmpleConeSpec::validate(const NSLattice& lattice) const {
  if (generators.empty()) throw Error(ErrorKind::InvalidCone, "cone has no generators");
  require_dim(reference, lattice, "cone reference");
  for (const auto& g : generators) require_dim(g, lattice, "cone generator");
  if (dot(lattice, reference, reference) <= 0) {
    throw Error(ErrorKind::InvalidCone, "reference class must have positive square");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (dot(lattice, reference, generators[i]) <= 0) {
      throw Error(ErrorKind::InvalidCone,
                  "reference must pair positively with generator " + std::to_string(i));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(generators[i], generators[j])) {
        throw Error(ErrorKind::InvalidCone, "generators " + std::to_string(j) + " and " +
                                                std::to_string(i) + " are proportional");
      }
    }
  }
  if (matrix_rank(generators) != lattice.rank()) {
    throw Error(ErrorKind::InvalidCone, "cone generators do not span the lattice");
  }
}

bool meets_open_cone(const NSClass& D, const AmpleConeSpec& cone, const NSLattice& lattice) {
  // The cone spans the space, so its interior is {sum lambda_i g_i : lambda_i > 0}.
  // A hyperplane meets it iff (g_i, D) takes both signs.
  bool positive = false;
  bool negative = false;
  for (const auto& g : cone.generators) {
    Rational value = dot(lattice, g, D);
    if (value > 0) positive = true;
    if (value < 0) negative = true;
  }
  return positive && negative;
}

bool in_open_cone(const RationalClass& x, const AmpleConeSpec& cone) {
  if (cone.generators.size() != x.size()) {
    throw Error(ErrorKind::InvalidCone, "interior test needs a simplicial cone");
  }
  auto lambda = cone_coordinates(x, cone.generators);
  return std::all_of(lambda.begin(), lambda.end(), [](const Rational& c) { return c > 0; });
}

NSClass normalize_wall_class(const NSClass& D) {
  Int g = gcd_all(D);
  if (g == 0) throw Error(ErrorKind::ZeroVector, "wall class is zero");
  NSClass out;
  out.reserve(D.size());
  for (const auto& c : D) out.push_back(c / g);
  auto first = std::find_if(out.begin(), out.end(), [](const Int& c) { return c != 0; });
  if (*first < 0) out = -out;
  return out;
}

std::vector<NSClass> default_subclasses(const NSClass& xi_E, const NSLattice& lattice) {
  lattice.require_class(xi_E, "xi_E");
  if (lattice.rank() > 2) {
    throw Error(ErrorKind::InvalidArgument,
                "the default subclass box is only offered for rank <= 2; pass subclasses");
  }
  std::vector<NSClass> out;
  NSClass current(xi_E.size());
  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == xi_E.size()) {
      if (!is_zero(current) && current != xi_E) out.push_back(current);
      return;
    }
    Int lo = std::min(Int(0), xi_E[idx]);
    Int hi = std::max(Int(0), xi_E[idx]);
    for (Int c = lo; c <= hi; ++c) {
      current[idx] = c;
      self(self, idx + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Wall> enumerate_walls(const MukaiVector& v, const NSLattice& lattice,
                                  const AmpleConeSpec& cone,
                                  const std::vector<NSClass>& subclasses) {
  require_vector(v, lattice);
  if (v.r != 0) {
    throw Error(ErrorKind::NotPureDimensionOne, "walls need r = 0, got r = " + to_string(v.r));
  }
  if (lattice.square(v.xi) <= 0) {
    throw Error(ErrorKind::NonPositiveSquare, "(xi_E^2) must be positive");
  }
  cone.validate(lattice);
  for (const auto& xi_F : subclasses) {
    lattice.require_class(xi_F, "subclass");
    if (is_zero(xi_F) || xi_F == v.xi) {
      throw Error(ErrorKind::InvalidArgument, "subclasses must differ from 0 and xi_E");
    }
  }
  const Int& chi_E = v.a;

  std::vector<std::vector<RawWall>> slots(subclasses.size());
  parallel_for(subclasses.size(), [&](std::size_t i) {
    slots[i] = walls_for_subclass(v.xi, chi_E, subclasses[i], lattice, cone);
  });

  std::map<NSClass, Wall> merged;
  for (auto& slot : slots) {
    for (auto& raw : slot) {
      auto [it, inserted] = merged.try_emplace(raw.D);
      if (inserted) {
        it->second.D = raw.D;
        it->second.D_square = lattice.square(raw.D);
      }
      it->second.witnesses.push_back(std::move(raw.witness));
    }
  }
  std::vector<Wall> out;
  out.reserve(merged.size());
  for (auto& [key, wall] : merged) {
    std::sort(wall.witnesses.begin(), wall.witnesses.end());
    out.push_back(std::move(wall));
  }
  return out;
}

ChamberDecomposition chambers_rank2(const std::vector<Wall>& walls, const AmpleConeSpec& cone,
                                    const NSLattice& lattice) {
  if (lattice.rank() != 2 || cone.generators.size() != 2) {
    throw Error(ErrorKind::NotRankTwo, "chambers_rank2 needs a rank-two lattice and two generators");
  }
  const auto& g1 = cone.generators[0];
  const auto& g2 = cone.generators[1];
  ChamberDecomposition out;
  for (const auto& wall : walls) {
    lattice.require_class(wall.D, "wall class");
    Rational f1 = dot(lattice, g1, wall.D);
    Rational f2 = dot(lattice, g2, wall.D);
    // (1-t) f1 + t f2 = 0.
    if (f1 == f2) continue;
    Rational t = f1 / (f1 - f2);
    if (t > 0 && t < 1) out.crossings.push_back(t);
  }
  std::sort(out.crossings.begin(), out.crossings.end());
  out.crossings.erase(std::unique(out.crossings.begin(), out.crossings.end()),
                      out.crossings.end());
  std::vector<Rational> cuts{Rational(0)};
  cuts.insert(cuts.end(), out.crossings.begin(), out.crossings.end());
  cuts.push_back(Rational(1));
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Chamber ch{cuts[i], cuts[i + 1], {}};
    Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    for (std::size_t j = 0; j < 2; ++j) ch.interior_point.push_back((1 - mid) * g1[j] + mid * g2[j]);
    out.chambers.push_back(std::move(ch));
  }
  return out;
}

bool is_general(const RationalClass& polarization, const std::vector<Wall>& walls,
                const NSLattice& lattice) {
  require_dim(polarization, lattice, "polarization");
  return std::none_of(walls.begin(), walls.end(), [&](const Wall& wall) {
    return dot(lattice, polarization, wall.D) == 0;
  });
}

}  // namespace mukai
