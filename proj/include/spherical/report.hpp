#pragma once

#include <json.hpp>

#include "spherical/modelvarieties.hpp"

namespace spherical {

using nlohmann::json;

// "A2xC3" -> [A2, C3]; whitespace ignored, case-insensitive.
std::vector<SimpleType> parse_type_string(const std::string& s);

struct ParsedInput {
    BasedRootDatum datum;
    std::vector<IntVec> generators;
};

// Throws std::invalid_argument with a human-readable message on bad input.
ParsedInput parse_input(const json& doc);

std::string root_label(const BasedRootDatum& datum, int global_index);

json verdict_to_json(const WeightMonoid& wm, const Verdict& v);
std::string explain_verdict(const WeightMonoid& wm, const Verdict& v);

json sigma_sc_to_json(const BasedRootDatum& datum, const std::vector<SphericalRoot>& roots);

}  // namespace spherical
