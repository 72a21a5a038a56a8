#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "expc/cm.hpp"
#include "expc/corpus.hpp"
#include "expc/distraction.hpp"
#include "expc/grading.hpp"
#include "expc/ideal.hpp"
#include "expc/oracle.hpp"
#include "expc/rank.hpp"

namespace expc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Ideal files:
//   vars: 3
//   gens:
//   2 2 1            (exponent vectors)
//   x1*x2^2*x3^2     (or monomials, but not both kinds in one file)
// Blank lines and lines starting with '#' are ignored. ValidationError
// messages name the offending line.
MonomialIdeal parse_ideal(std::string_view text);
// Canonical form: exponent vectors in generator order.
std::string serialize_ideal(const MonomialIdeal& ideal);

// Matrix files: "d n" on the first line, then d rows of n integers. The
// matrix must pass validate(); the error lists the failed conditions.
GradingMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const GradingMatrix& grading);

std::string read_file(const std::string& path);

Json to_json(const RationalVector& v);
Json to_json(const SimplicialComplex& complex);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const GradingMatrix& grading);
Json to_json(const Component& component);
Json to_json(const CmReport& report);
Json to_json(const BenchmarkReport& report);
Json to_json(const VerifyReport& report);

// {"command", "ideal", "inputs", "results", "provenance"}; inputs and ideal
// may be null.
Json report_document(const std::string& command, const Json& ideal, const Json& inputs, const Json& results,
                     std::uint64_t seed);

}  // namespace expc
