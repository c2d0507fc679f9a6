#pragma once

#include "mukai/integer.hpp"
#include "mukai/lattice.hpp"

#include <vector>

namespace mukai {

/// A class with rational coordinates in the lattice basis.
using RationalClass = std::vector<Rational>;

Rational dot(const NSLattice& lattice, const RationalClass& x, const NSClass& y);
Rational dot(const NSLattice& lattice, const RationalClass& x, const RationalClass& y);
RationalClass to_rational(const NSClass& x);

/// Caller-supplied description of Amp(X): generators of a full-dimensional
/// cone plus one class strictly inside it.
struct AmpleConeSpec {
  std::vector<RationalClass> generators;
  RationalClass reference;

  /// Throws InvalidCone unless the reference has positive square and positive
  /// pairing with every generator, generators are pairwise non-proportional
  /// and span the lattice.
  void validate(const NSLattice& lattice) const;

  friend bool operator==(const AmpleConeSpec&, const AmpleConeSpec&) = default;
};

/// True when the hyperplane (x, D) = 0 passes through the interior of the cone.
bool meets_open_cone(const NSClass& D, const AmpleConeSpec& cone, const NSLattice& lattice);

/// Strict interior membership. Only simplicial cones (#generators = rank) are
/// supported; anything else throws InvalidCone.
bool in_open_cone(const RationalClass& x, const AmpleConeSpec& cone);

struct WallWitness {
  NSClass xi_F;
  Int chi_F;
  friend bool operator<(const WallWitness& x, const WallWitness& y) {
    if (x.xi_F != y.xi_F) return x.xi_F < y.xi_F;
    return x.chi_F < y.chi_F;
  }
  friend bool operator==(const WallWitness&, const WallWitness&) = default;
};

struct Wall {
  NSClass D;  // primitive, first nonzero coordinate positive
  std::vector<WallWitness> witnesses;
  Int D_square;
  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Divides by the coordinate gcd and makes the first nonzero coordinate positive.
NSClass normalize_wall_class(const NSClass& D);

/// Classes between 0 and xi_E coordinatewise, minus 0 and xi_E itself.
/// Only offered for lattices of rank <= 2.
std::vector<NSClass> default_subclasses(const NSClass& xi_E, const NSLattice& lattice);

/// Numerical walls W_D for v = (0, xi_E, a), with chi(E) = a and
/// D = chi_F xi_E - chi_E xi_F ranging over the candidate c1(F) in `subclasses`.
std::vector<Wall> enumerate_walls(const MukaiVector& v, const NSLattice& lattice,
                                  const AmpleConeSpec& cone,
                                  const std::vector<NSClass>& subclasses);

struct Chamber {
  Rational lower;
  Rational upper;
  RationalClass interior_point;
  friend bool operator==(const Chamber&, const Chamber&) = default;
};

struct ChamberDecomposition {
  std::vector<Rational> crossings;  // sorted distinct t in (0, 1)
  std::vector<Chamber> chambers;
  friend bool operator==(const ChamberDecomposition&, const ChamberDecomposition&) = default;
};

/// Chambers along the segment (1-t) g1 + t g2 of a rank-two cone.
ChamberDecomposition chambers_rank2(const std::vector<Wall>& walls, const AmpleConeSpec& cone,
                                    const NSLattice& lattice);

/// True iff (polarization, D) != 0 for every wall.
bool is_general(const RationalClass& polarization, const std::vector<Wall>& walls,
                const NSLattice& lattice);

}  // namespace mukai
