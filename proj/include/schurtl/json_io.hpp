#pragma once

#include "json.hpp"

#include "schurtl/character.hpp"
#include "schurtl/horn.hpp"
#include "schurtl/schur.hpp"
#include "schurtl/tl.hpp"
#include "schurtl/verifier.hpp"

namespace schurtl {

// Key order is fixed everywhere so identical inputs produce identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// List of {"partition":[...],"coeff":k}, sorted lexicographically by partition.
Json to_json(const SchurVector& v);
SchurVector schur_vector_from_json(const Json& j);

/// Same list form with partitions zero-padded to the rank.
Json to_json(const CharacterVector& v);
CharacterVector character_vector_from_json(const Json& j, int rank);

/// {"n":..., "pairs":[[a,b],...]} with a < b, sorted.
Json to_json(const NonCrossingMatching& m);
NonCrossingMatching matching_from_json(const Json& j);

/// {"n":..., "members":[...]}.
Json to_json(const ColorSet& s);

/// List of {"h":[...],"coeff":k}; the unit monomial has "h":[].
Json to_json(const HPolynomial& p);
HPolynomial h_polynomial_from_json(const Json& j);

Json to_json(const SquareMatrix<HPolynomial>& X);
Json to_json(const SquareMatrix<CheckedInt>& X);

/// {"n":..., "I":[...], "J":[...], "K":[...]} with ascending subsets.
Json to_json(const Triple& t);
Triple triple_from_json(const Json& j);

Json to_json(const WeightQuadruple& q);
WeightQuadruple weight_quadruple_from_json(const Json& j);

Json to_json(const ContainmentReport& r);
ContainmentReport containment_report_from_json(const Json& j);
Json to_json(const ChiNonnegReport& r);

Json to_json(const Pairing& p);
Pairing pairing_from_json(const Json& j);
Json to_json(const PairingTrace& t);

SquareMatrix<HPolynomial> h_matrix_from_json(const Json& j);

Json to_json(const SweepReport& r);
SweepReport sweep_report_from_json(const Json& j);

}  // namespace schurtl
