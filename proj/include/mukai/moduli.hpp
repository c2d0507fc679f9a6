#pragma once

#include "mukai/integer.hpp"
#include "mukai/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mukai {

enum class ModuliKind { Point, K3, Positive };

std::string_view to_string(ModuliKind kind);

struct ModuliDimension {
  Int dim;
  ModuliKind kind = ModuliKind::Point;
};

/// dim M(v) = <v^2> + 2. Throws BelowSpherical when <v^2> < -2.
ModuliDimension moduli_dim(const MukaiVector& v, const NSLattice& lattice);
ModuliDimension moduli_dim_from_square(const Int& square);

/// Gr(n, m): m-dimensional subspaces of an n-dimensional space.
struct Grassmannian {
  Int n;
  Int m;
  Int dim() const { return m * (n - m); }
};

/// Fibers of the incidence variety N(m v1, v, w)_i over M(v)_i and M(w)_{i+m}.
struct StratumFibers {
  Int m;
  MukaiVector w;         // v - m v1
  Int w_index;           // i + m
  Int w_codim;           // codim M(w)_{i+m}
  Grassmannian over_v;   // Gr(i - 1 - <v1,v>, m)
  Grassmannian over_w;   // Gr(i - 1 + m, m)
  Int incidence_dim;
};

struct StratumReport {
  Int i;
  Int v_dot_v1;
  Int hom_dim;   // dim Hom(E1, E) = -<v1,v> - 1 + i
  Int ext1_dim;  // i - 1
  Int k;         // 2i - 2 - <v1,v>
  MukaiVector vG;  // v + (i-1) v1
  Int vG_square;
  Grassmannian extension_fiber;  // Gr(k, i - 1)
  Int codim;
  Int dim_stratum;
  bool in_stated_range = true;
  std::optional<StratumFibers> fibers;
  std::vector<std::string> flags;
};

/// Numerics of the stratum M(v)_i cut out by dim Hom(E1, -), E1 the rigid bundle of v1.
StratumReport stratum_report(const MukaiVector& v, const MukaiVector& v1, const Int& i,
                             const Int& m, const NSLattice& lattice);

/// codim M(v)_i = (i-1)(i-1-<v,v1>), as a bare formula.
Int stratum_codim(const Int& v_dot_v1, const Int& i);

struct MuCodimBound {
  Int square;
  Int l;
  Rational bound;                   // <v^2>/2l - l + 1
  bool hypothesis_holds = false;    // <v^2>/2l >= l
  bool codim_at_least_two = false;  // <v^2>/2l > l
  std::vector<std::string> flags;
};

/// Lower bound on dim M(v) - dim(M(v) \ M(v)^mu). Hypothesis failure is flagged, not thrown.
MuCodimBound mu_codim_bound(const Int& square, const Int& l);

struct FiltrationPart {
  Int l;
  Int a;
};

struct FiltrationShape {
  std::vector<FiltrationPart> parts;
  std::vector<Int> squares;  // <v(E_i)^2>
  IntMatrix chi;             // chi[j][i] = chi(E_j, E_i) = -<v(E_j), v(E_i)>
  Int chi_sum;               // sum_{i>j} chi(E_j, E_i), from the pairings
  Rational chi_sum_closed;   // -sum_i (l - l_i) <v(E_i)^2> / 2 l_i
  Int k;                     // l - max l_i
  Rational implied_codim;
};

struct FiltrationOracleReport {
  Int l;
  Int r;
  Int d;
  Int a;
  Int square;
  std::uint64_t shapes_enumerated = 0;
  bool identity_verified = true;
  bool chain_inequality_verified = true;
  std::optional<Rational> min_codim_bound;
  std::optional<FiltrationShape> minimizing_shape;
  Rational mu_bound;
  /// min_codim_bound >= mu_bound whenever <v^2>/2l > l (vacuously true otherwise).
  bool dominates = true;
  std::vector<std::string> assumptions;
};

/// Enumerates Jordan-Holder shapes of v = (lr, ldH, a) on a rank-one lattice
/// (t >= 2 parts, each part square >= -2), checks the chi-sum identity on each
/// and reports the smallest codimension the dimension count implies.
FiltrationOracleReport filtration_oracle(const MukaiVector& v, const Int& l,
                                         const NSLattice& lattice, std::uint64_t budget);

/// All shapes the oracle would evaluate (exposed for testing).
std::vector<FiltrationShape> enumerate_filtration_shapes(const MukaiVector& v, const Int& l,
                                                         const NSLattice& lattice,
                                                         std::uint64_t budget);

}  // namespace mukai
