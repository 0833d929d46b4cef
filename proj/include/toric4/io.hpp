/**
 * JSON input/output: the {"edges": [[a,b],...]} pair format, the morphism
 * description format, and serializers for reports. Rationals serialize as
 * "p/q" strings, never floats.
 */
#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "toric4/charpair.hpp"
#include "toric4/cohomology.hpp"
#include "toric4/fuzz.hpp"
#include "toric4/morphisms.hpp"

namespace toric4 {

class IoError : public Error {
public:
    using Error::Error;
};

using Json = nlohmann::json;

std::vector<IntVec2> parse_edges(const Json& doc);
std::vector<IntVec2> parse_edges_file(const std::string& path);

Json edges_to_json(const DegenerateCharacteristicPair& p);

struct MorphContract {
    std::vector<int> rho;
};
struct MorphBend {
    int i = 0;
};
struct MorphRescale {
    int i = 0;
};
struct MorphBasisChange {
    UnimodularMatrix2 u = UnimodularMatrix2::identity();
};
struct MorphCustom {
    std::vector<int> rho;
    TorusHom2 psi;
};

using MorphismSpec =
    std::variant<MorphContract, MorphBend, MorphRescale, MorphBasisChange, MorphCustom>;

MorphismSpec parse_morphism(const Json& doc);
MorphismSpec parse_morphism_file(const std::string& path);

Json violations_to_json(const std::vector<Violation>& vs);
Json groups_to_json(const CohomologyGroups& g, const RingSpec& ring);
Json qmatrix_to_json(const QMatrix& m);
Json cup_matrix_to_json(const CupMatrix& m);
Json int_matrix_to_json(const IntMatrix& m);
Json fuzz_report_to_json(const FuzzReport& r);

/// Aligned plain-text rendering of a JSON report.
std::string render_text(const Json& doc);

}  // namespace toric4
