#pragma once

#include <json.hpp>

#include "rdeg/classify.hpp"

namespace rdeg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "rdeg-classification/1";

// {"t": t, "cap": c, "truncated": b, "entries": [[i, j, value], ...]} with entries sorted.
Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);

// {"n", "e", "deg", "r", "mu", "cm", "depth", "pd", "reg", "truncated", "field", "seed"}
Json to_json(const InvariantReport& report);

Json to_json(const FormulaTable& table);
Json to_json(const StructurePattern& pattern);
Json to_json(const ClassificationReport& report);

// Integers that fit in a long become JSON numbers, larger ones decimal strings.
Json mpz_to_json(const mpz_class& v);

}  // namespace rdeg
