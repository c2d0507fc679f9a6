#pragma once

#include "mukai/certificates.hpp"
#include "mukai/families.hpp"
#include "mukai/lattice.hpp"
#include "mukai/moduli.hpp"
#include "mukai/walls.hpp"

#include "json.hpp"

namespace mukai {

using Json = nlohmann::ordered_json;

// Integers within +-(2^53 - 1) are written as JSON numbers, larger ones as
// decimal strings. Rationals are always strings ("p" or "p/q"). Readers
// accept both forms.

Json to_json(const Int& value);
Json to_json(const Rational& value);
Json to_json(const NSClass& value);
Json to_json(const RationalClass& value);
Json to_json(const IntMatrix& value);
Json to_json(const NSLattice& lattice);
Json to_json(const MukaiVector& v);
Json to_json(const Classification& c);
Json to_json(const OrthBasis& basis);
Json to_json(const FamilyParams& params);
Json to_json(const FamilyInstance& family);
Json to_json(const HypothesisReport& report);
Json to_json(const ModuliDimension& dim);
Json to_json(const StratumReport& report);
Json to_json(const MuCodimBound& bound);
Json to_json(const FiltrationShape& shape);
Json to_json(const FiltrationOracleReport& report);
Json to_json(const AmpleConeSpec& cone);
Json to_json(const Wall& wall);
Json to_json(const std::vector<Wall>& walls);
Json to_json(const ChamberDecomposition& chambers);
Json to_json(const PrimitivizingTwist& twist);
Json to_json(const LatticeState& state);
Json to_json(const Move& move);
Json to_json(const Certificate& cert);
Json to_json(const VerificationResult& result);

Int int_from_json(const Json& j);
Rational rational_from_json(const Json& j);
NSClass class_from_json(const Json& j);
RationalClass rational_class_from_json(const Json& j);
NSLattice lattice_from_json(const Json& j);
MukaiVector vector_from_json(const Json& j);
FamilyParams family_params_from_json(const Json& j);
HypothesisReport report_from_json(const Json& j);
AmpleConeSpec cone_from_json(const Json& j);
Wall wall_from_json(const Json& j);
LatticeState state_from_json(const Json& j);
Move move_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

/// Parses JSON text; syntax errors become Error(Parse) with the byte offset.
Json parse_json(const std::string& text);

}  // namespace mukai
