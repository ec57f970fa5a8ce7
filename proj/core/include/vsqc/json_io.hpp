#pragma once

#include <optional>

#include <json.hpp>

#include "vsqc/exponent_matrix.hpp"
#include "vsqc/girth.hpp"

namespace vsqc {

/// Canonical matrix JSON: {"J","L","P" (number or null),"rows","tag"}; rows
/// in given order, entries unreduced.
nlohmann::json matrix_to_json(const ExponentMatrix& E, std::optional<std::int64_t> P = std::nullopt);

struct LoadedMatrix {
    ExponentMatrix matrix;
    std::optional<std::int64_t> P;
};

/// Parses matrix JSON; the structure tag is recomputed from the entries
/// (a stored tag is advisory only).
LoadedMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json mask_to_json(const Mask& mask);
Mask mask_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const CycleWitness& w);

/// {"girth": <even int>} when exact, {"girth": ">=<cap+2>"} otherwise;
/// includes "witness" when present.
nlohmann::json girth_to_json(const GirthReport& report);

}  // namespace vsqc
