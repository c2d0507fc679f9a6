#include "mukai/lattice.hpp"

#include "mukai/error.hpp"

#include <set>

namespace mukai {

NSLattice::NSLattice(IntMatrix gram, std::vector<std::string> basis_names)
    : gram_(std::move(gram)), names_(std::move(basis_names)) {
  const std::size_t rho = names_.size();
  if (rho == 0) throw Error(ErrorKind::InvalidLattice, "rank must be positive");
  if (gram_.size() != rho) {
    throw Error(ErrorKind::InvalidLattice, "Gram matrix has " + std::to_string(gram_.size()) +
                                               " rows but there are " + std::to_string(rho) +
                                               " basis names");
  }
  for (std::size_t i = 0; i < rho; ++i) {
    if (gram_[i].size() != rho) throw Error(ErrorKind::InvalidLattice, "Gram matrix is not square");
  }
  for (std::size_t i = 0; i < rho; ++i) {
    if (gram_[i][i] % 2 != 0) {
      throw Error(ErrorKind::InvalidLattice, "odd diagonal entry at " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < rho; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw Error(ErrorKind::InvalidLattice, "Gram matrix is not symmetric");
      }
    }
  }
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != rho) throw Error(ErrorKind::InvalidLattice, "basis names are not distinct");
  for (const auto& name : names_) {
    if (name.empty()) throw Error(ErrorKind::InvalidLattice, "empty basis name");
  }
}

NSLattice NSLattice::rank_one(const Int& h_square, std::string name) {
  return NSLattice({{h_square}}, {std::move(name)});
}

NSLattice NSLattice::elliptic() { return NSLattice({{-2, 1}, {1, 0}}, {"C", "f"}); }

void NSLattice::require_class(const NSClass& x, const char* what) const {
  if (x.size() != rank()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has " +
                                                  std::to_string(x.size()) +
                                                  " coordinates, lattice rank is " +
                                                  std::to_string(rank()));
  }
}

Int NSLattice::dot(const NSClass& x, const NSClass& y) const {
  require_class(x, "class");
  require_class(y, "class");
  Int total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) total += x[i] * gram_[i][j] * y[j];
  }
  return total;
}

NSClass NSLattice::apply(const NSClass& x) const {
  require_class(x, "class");
  NSClass out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) out[i] += gram_[i][j] * x[j];
  }
  return out;
}

NSClass zero_class(std::size_t rank) { return NSClass(rank, 0); }

NSClass operator+(const NSClass& x, const NSClass& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "class sizes differ");
  NSClass out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

NSClass operator-(const NSClass& x, const NSClass& y) { return x + (-y); }

NSClass operator-(const NSClass& x) {
  NSClass out(x);
  for (auto& c : out) c = -c;
  return out;
}

NSClass operator*(const Int& m, const NSClass& x) {
  NSClass out(x);
  for (auto& c : out) c *= m;
  return out;
}

bool is_zero(const NSClass& x) {
  for (const auto& c : x) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<Int> MukaiVector::coordinates() const {
  std::vector<Int> out;
  out.reserve(xi.size() + 2);
  out.push_back(r);
  out.insert(out.end(), xi.begin(), xi.end());
  out.push_back(a);
  return out;
}

MukaiVector MukaiVector::from_coordinates(const std::vector<Int>& coords) {
  if (coords.size() < 3) throw Error(ErrorKind::DimensionMismatch, "too few coordinates");
  return {coords.front(), NSClass(coords.begin() + 1, coords.end() - 1), coords.back()};
}

bool MukaiVector::is_zero() const { return r == 0 && a == 0 && mukai::is_zero(xi); }

MukaiVector operator+(const MukaiVector& x, const MukaiVector& y) {
  return {x.r + y.r, x.xi + y.xi, x.a + y.a};
}

MukaiVector operator-(const MukaiVector& x, const MukaiVector& y) {
  return {x.r - y.r, x.xi - y.xi, x.a - y.a};
}

MukaiVector operator-(const MukaiVector& x) { return {-x.r, -x.xi, -x.a}; }

MukaiVector operator*(const Int& m, const MukaiVector& x) { return {m * x.r, m * x.xi, m * x.a}; }

void require_vector(const MukaiVector& x, const NSLattice& lattice) {
  lattice.require_class(x.xi, "Mukai vector NS component");
}

Int pair(const MukaiVector& x, const MukaiVector& y, const NSLattice& lattice) {
  require_vector(x, lattice);
  require_vector(y, lattice);
  return lattice.dot(x.xi, y.xi) - x.r * y.a - y.r * x.a;
}

MukaiVector dualize(const MukaiVector& x) { return {x.r, -x.xi, x.a}; }

MukaiVector vector_from_chern(const Int& r, const NSClass& c1, const Int& c2,
                              const NSLattice& lattice) {
  lattice.require_class(c1, "c1");
  // ch2 = c1^2/2 - c2; c1^2 is even on an even lattice.
  return {r, c1, r + lattice.square(c1) / 2 - c2};
}

Int second_chern_class(const MukaiVector& v, const NSLattice& lattice) {
  require_vector(v, lattice);
  return lattice.square(v.xi) / 2 - (v.a - v.r);
}

MukaiVector twist(const MukaiVector& x, const NSClass& n, const NSLattice& lattice) {
  require_vector(x, lattice);
  lattice.require_class(n, "twist class");
  return {x.r, x.xi + x.r * n, x.a + lattice.dot(x.xi, n) + x.r * (lattice.square(n) / 2)};
}

MukaiVector reflect(const MukaiVector& x, const MukaiVector& v1, const NSLattice& lattice) {
  const Int s = square(v1, lattice);
  if (s != -2) {
    throw Error(ErrorKind::NotSpherical, "reflection class has square " + to_string(s));
  }
  return x + pair(x, v1, lattice) * v1;
}

Int content(const MukaiVector& x) {
  auto coords = x.coordinates();
  return gcd_all(coords);
}

Classification classify(const MukaiVector& x, const NSLattice& lattice) {
  Classification c;
  c.square = square(x, lattice);
  c.primitive = content(x) == 1;
  c.spherical = c.square == -2;
  c.isotropic = c.square == 0;
  return c;
}

namespace {

// Coefficients of the linear form y -> <v, y> in flattened coordinates.
std::vector<Int> pairing_form(const MukaiVector& v, const NSLattice& lattice) {
  std::vector<Int> coeffs;
  coeffs.push_back(-v.a);
  for (auto& c : lattice.apply(v.xi)) coeffs.push_back(c);
  coeffs.push_back(-v.r);
  return coeffs;
}

}  // namespace

std::optional<std::vector<Int>> OrthBasis::coordinates_of(const MukaiVector& y) const {
  IntMatrix rows;
  rows.reserve(basis.size());
  for (const auto& b : basis) rows.push_back(b.coordinates());
  auto coords = y.coordinates();
  return solve_in_hnf(rows, coords);
}

OrthBasis orth_basis(const MukaiVector& v, const NSLattice& lattice) {
  require_vector(v, lattice);
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "v^perp of the zero vector");
  OrthBasis out;
  out.vector = v;
  auto coeffs = pairing_form(v, lattice);
  for (const auto& row : integer_kernel(coeffs)) {
    out.basis.push_back(MukaiVector::from_coordinates(row));
  }
  const std::size_t n = out.basis.size();
  out.gram.assign(n, IntRow(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.gram[i][j] = out.gram[j][i] = pair(out.basis[i], out.basis[j], lattice);
    }
  }
  return out;
}

}  // namespace mukai
