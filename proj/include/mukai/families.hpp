#pragma once

#include "mukai/integer.hpp"
#include "mukai/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mukai {

/// (r1, d1) with r1*d - r*d1 = 1 and 0 < r1 <= r.
struct BezoutPair {
  Int r1;
  Int d1;
};

BezoutPair solve_bezout(const Int& r, const Int& d);

/// (p, q) with p*r1 - q*l = -1 and 0 <= p < l.
struct PQPair {
  Int p;
  Int q;
};

PQPair solve_pq(const Int& l, const Int& r1);

/// Parameters of the rank-one-Picard family built from coprime (r, d).
struct CoprimeParams {
  Int r;
  Int d;
  Int s;
  friend bool operator==(const CoprimeParams&, const CoprimeParams&) = default;
};

/// Parameters of the non-primitive family v = l(r + dH) + a*omega.
struct GeneralParams {
  Int l;
  Int r;
  Int d;
  Int r1;
  Int s;
  friend bool operator==(const GeneralParams&, const GeneralParams&) = default;
};

using FamilyParams = std::variant<CoprimeParams, GeneralParams>;

/// k(s) = s*r1^2 + r*r1 - r^2.
Int k_coprime(const Int& r, const Int& r1, const Int& s);
/// k(s) = r1*(q*r + r1*s) - r^2.
Int k_general(const Int& r, const Int& r1, const Int& q, const Int& s);

struct FamilyIdentities {
  Int v1_square;
  Int v_square;
  Int v_dot_v1;
};

/// A concrete pair (v, v1) on Z*H with (H^2) = 2k(s), v1 spherical and <v, v1> = -1.
struct FamilyInstance {
  FamilyParams params;
  Int l = 1;
  Int r1;
  Int d1;
  Int p = 0;
  Int q = 0;
  Int k;
  NSLattice lattice;
  MukaiVector v;
  MukaiVector v1;
  FamilyIdentities identities;

  /// Expected <v^2>: 2s for the coprime family, 2l(ls + rp) for the general one.
  Int expected_v_square() const;
  /// The reflected vector v - v1 = R_{v1}(v).
  MukaiVector w() const { return v - v1; }
};

FamilyInstance family_coprime(const Int& r, const Int& d, const Int& s);
FamilyInstance family_general(const Int& l, const Int& r, const Int& d, const Int& r1,
                              const Int& s);
FamilyInstance build_family(const FamilyParams& params);

enum class HypothesisKind {
  KCriterion,        // sufficient conditions for k(s) > 0
  DeformationBound,  // <v^2>/2 > max{rl(rl-1), l^2}
  MuBound,           // <v^2>/2l > l: mu-unstable locus has codimension >= 2
  MuNonEmpty,        // <v^2>/2l >= l: mu-stable locus is nonempty
  KPositive,         // k(s) >= 1
};

std::string_view to_string(HypothesisKind kind);
HypothesisKind parse_hypothesis_kind(std::string_view name);

using ParamMap = std::map<std::string, Int>;

struct HypothesisReport {
  HypothesisKind kind = HypothesisKind::KPositive;
  ParamMap inputs;
  bool passed = false;
  /// Slack of the inequality; negative on failure.
  Rational margin;
  /// passed <=> margin > 0 when strict, margin >= 0 otherwise.
  bool strict = true;
  std::string citation;
  std::map<std::string, Rational> derived;
  std::vector<std::string> notes;

  friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

HypothesisReport check_hypotheses(HypothesisKind kind, const ParamMap& params);

/// Every report that applies to a family instance, in HypothesisKind order.
std::vector<HypothesisReport> family_reports(const FamilyInstance& family);

}  // namespace mukai
