#pragma once

#include "mukai/families.hpp"
#include "mukai/integer.hpp"
#include "mukai/lattice.hpp"
#include "mukai/walls.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mukai {

/// v(I_Z) for Z of length n: (1, 0, 1 - n) on a lattice of the given rank.
MukaiVector hilbert_vector(const Int& n, std::size_t ns_rank = 1);

/// l = gcd(r, xi) for v = l(r + xi) + a*omega; 0 for v = a*omega.
Int multiplicity(const MukaiVector& v);

struct PrimitivizingTwist {
  NSClass N;             // n * generator direction
  Int n;
  std::size_t generator = 0;
  NSClass xi_prime;      // xi + rN, in the primitive (r + xi) normalization
  Int xi_prime_square;
  bool primitive = false;
  bool in_cone = false;
};

/// Smallest |n| (ties to n > 0, then generator order) such that N = n L' on
/// a primitive generator direction L' gives xi' = xi + rN primitive, inside
/// the open cone, with (xi'^2) >= 4 and gcd(n, r) = 1.
PrimitivizingTwist find_primitivizing_twist(const MukaiVector& v, const NSLattice& lattice,
                                            const AmpleConeSpec& cone,
                                            const Int& max_n = 1000);

struct LatticeState {
  NSLattice lattice;
  MukaiVector vector;
  friend bool operator==(const LatticeState&, const LatticeState&) = default;
};

struct TwistMove {
  NSClass N;
  friend bool operator==(const TwistMove&, const TwistMove&) = default;
};

enum class ReflectDirection { Down, Up };

std::string_view to_string(ReflectDirection direction);
ReflectDirection parse_reflect_direction(std::string_view name);

/// Down: the current vector is the family's v and becomes w = v - v1.
/// Up: the current vector is the family's w and becomes v.
struct ReflectMove {
  ReflectDirection direction = ReflectDirection::Down;
  MukaiVector v1;
  FamilyParams family;
  friend bool operator==(const ReflectMove&, const ReflectMove&) = default;
};

/// Jump to another (lattice, vector) with the same l, rank, square and a mod l.
struct DeformMove {
  friend bool operator==(const DeformMove&, const DeformMove&) = default;
};

using MoveKind = std::variant<TwistMove, ReflectMove, DeformMove>;

struct Move {
  MoveKind kind;
  std::string justification;
  std::vector<HypothesisReport> checks;
  LatticeState state;  // state after the move
  friend bool operator==(const Move&, const Move&) = default;
};

struct Certificate {
  LatticeState initial;
  std::vector<Move> moves;
  MukaiVector final;
  Int target_n;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct PlanRequest {
  Int r;  // rank of the primitive part r + xi
  Int l = 1;
  Int square;
  Int a_mod_l = 0;
  /// Starting point; a canonical representative on the elliptic lattice when absent.
  std::optional<LatticeState> initial;
  /// Largest rank the l = 1 search may visit; 0 means 4r + 8.
  Int rank_cap = 0;
  std::uint64_t budget = 1'000'000;
};

/// Canonical start (lr, l(C + yf), a) on Z C + Z f for the requested invariants.
LatticeState canonical_initial(const Int& r, const Int& l, const Int& square, const Int& a_mod_l);

Certificate plan_certificate(const PlanRequest& request);

struct VerificationFailure {
  std::size_t move_index;  // moves.size() for checks on the final vector
  std::string reason;
  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationResult {
  bool accepted = false;
  std::vector<VerificationFailure> failures;
};

VerificationResult verify_certificate(const Certificate& cert);

/// Reports a Reflect move must carry, recomputed from its family parameters.
std::vector<HypothesisReport> reflect_checks(const FamilyInstance& family);

}  // namespace mukai
