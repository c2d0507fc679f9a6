#pragma once

#include "mukai/integer.hpp"
#include "mukai/normal_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mukai {

/// A divisor class, as coordinates in the lattice basis.
using NSClass = std::vector<Int>;

/// Neron-Severi lattice: a named basis with an even symmetric Gram matrix.
///
/// Signature is not checked; whether a K3 surface with this Picard lattice
/// exists is the caller's business.
class NSLattice {
 public:
  NSLattice(IntMatrix gram, std::vector<std::string> basis_names);

  /// Z*H with (H^2) = h_square.
  static NSLattice rank_one(const Int& h_square, std::string name = "H");
  /// Z*C + Z*f with C^2 = -2, C.f = 1, f^2 = 0 (elliptic K3 with a section).
  static NSLattice elliptic();

  std::size_t rank() const noexcept { return names_.size(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const Int& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  /// Intersection number x . y.
  Int dot(const NSClass& x, const NSClass& y) const;
  Int square(const NSClass& x) const { return dot(x, x); }

  /// G * x, the linear form y -> x . y.
  NSClass apply(const NSClass& x) const;

  void require_class(const NSClass& x, const char* what) const;

  friend bool operator==(const NSLattice&, const NSLattice&) = default;

 private:
  IntMatrix gram_;
  std::vector<std::string> names_;
};

NSClass zero_class(std::size_t rank);
NSClass operator+(const NSClass& x, const NSClass& y);
NSClass operator-(const NSClass& x, const NSClass& y);
NSClass operator-(const NSClass& x);
NSClass operator*(const Int& m, const NSClass& x);
bool is_zero(const NSClass& x);

/// Element (r, xi, a) of the algebraic Mukai lattice Z + NS + Z*omega.
struct MukaiVector {
  Int r;
  NSClass xi;
  Int a;

  /// Flattened coordinates (r, xi_1, ..., xi_rho, a).
  std::vector<Int> coordinates() const;
  static MukaiVector from_coordinates(const std::vector<Int>& coords);

  bool is_zero() const;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

MukaiVector operator+(const MukaiVector& x, const MukaiVector& y);
MukaiVector operator-(const MukaiVector& x, const MukaiVector& y);
MukaiVector operator-(const MukaiVector& x);
MukaiVector operator*(const Int& m, const MukaiVector& x);

/// Mukai pairing <x, y> = (xi . xi') - r a' - r' a.
Int pair(const MukaiVector& x, const MukaiVector& y, const NSLattice& lattice);
inline Int square(const MukaiVector& x, const NSLattice& lattice) { return pair(x, x, lattice); }

/// x -> x^vee: negates the degree-two part.
MukaiVector dualize(const MukaiVector& x);

/// Mukai vector ch(E)(1 + omega) of a sheaf with rank r, c1, c2.
MukaiVector vector_from_chern(const Int& r, const NSClass& c1, const Int& c2,
                              const NSLattice& lattice);

/// c2 of a class with the given Mukai vector (inverse of vector_from_chern).
Int second_chern_class(const MukaiVector& v, const NSLattice& lattice);

/// Multiplication by ch(N) = e^N; an isometry with inverse twist(., -N).
MukaiVector twist(const MukaiVector& x, const NSClass& n, const NSLattice& lattice);

/// Spherical reflection x -> x + <x, v1> v1. Throws NotSpherical unless <v1^2> = -2.
MukaiVector reflect(const MukaiVector& x, const MukaiVector& v1, const NSLattice& lattice);

struct Classification {
  bool primitive = false;
  bool spherical = false;
  bool isotropic = false;
  Int square;
};

Classification classify(const MukaiVector& x, const NSLattice& lattice);

/// gcd of all rho + 2 coordinates.
Int content(const MukaiVector& x);

/// Saturated basis of v^perp in Hermite normal form (in flattened coordinates).
struct OrthBasis {
  MukaiVector vector;
  std::vector<MukaiVector> basis;
  IntMatrix gram;

  /// Integer coordinates of y in `basis`, or nullopt if y is not in v^perp.
  std::optional<std::vector<Int>> coordinates_of(const MukaiVector& y) const;
};

OrthBasis orth_basis(const MukaiVector& v, const NSLattice& lattice);

/// Throws DimensionMismatch unless x lives on `lattice`.
void require_vector(const MukaiVector& x, const NSLattice& lattice);

}  // namespace mukai
