#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uccone/boxgeom.hpp"
#include "uccone/cone.hpp"
#include "uccone/core.hpp"
#include "uccone/covers.hpp"
#include "uccone/farkas.hpp"
#include "uccone/realize.hpp"
#include "uccone/witness.hpp"

// JSON file formats. Subsets are written as ascending 1-based labels ("1,2,4"), rationals as
// "p/q" or integer strings. Readers throw ParseError on any malformed input, including duplicate keys.

namespace uccone::io {

using Json = nlohmann::ordered_json;

/// Parses JSON, rejecting duplicate object keys.
Json parse_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// {"n": 2, "entries": {"1": "1", "2": "1", "1,2": "1"}}; absent keys are 0.
ProjectionVector read_vector(std::string_view text);
std::string write_vector(const ProjectionVector& v);
Json vector_json(const ProjectionVector& v);

// {"ground": "1,2,3", "k": 2, "parts": ["1,2", "1,3", "2,3"]}
struct CoverSpec {
    SubsetMask ground;
    int k = 1;
    std::vector<SubsetMask> parts;
};
/// Reads the cover file without checking uniformity (the trace inequality only needs coverage >= k).
CoverSpec read_cover_spec(std::string_view text);
/// Reads the cover file and requires an exact k-uniform cover of ground.
UniformCover read_cover(std::string_view text);
Json cover_json(const UniformCover& c);
std::string write_cover(const UniformCover& c);

// {"n": 4, "lhs": {"1,2": "1"}, "rhs": {"1,2,3": "1"}}
LinearInequality read_inequality(std::string_view text);
std::string write_inequality(const LinearInequality& inequality);

// {"n": 2, "boxes": [{"intervals": [["0", "1"], ["0", "1/2"]]}]}
BoxUnionBody read_body(std::string_view text);
std::string write_body(const BoxUnionBody& body);

// {"n": 4, "members": ["", "1", "2,4"]}; "" is the empty set.
SetFamily read_family(std::string_view text);
std::string write_family(const SetFamily& family);

Json inequality_json(const CoverInequality& g);
Json membership_json(const MembershipReport& report);
Json certificate_json(const ConeSystem& system, const FarkasCertificate& certificate);
Json witness_report_json(const WitnessReport& report);
Json shearer_json(const ShearerReport& report);
Json realization_json(const RealizationResult& result);
Json log_projection_json(const LogProjection& projection);

/// Decimal rendering of a Real with the given number of significant digits.
std::string format_real(const Real& value, int digits = 30);

}  // namespace uccone::io
