#pragma once

#include <string>

#include "kothedim/conditions.hpp"
#include "kothedim/kothe_set.hpp"

namespace kothedim {

struct RunOptions {
  bool strict = false;
  ConditionOptions conditions;
};

struct ParsedSpec {
  KotheSet set;
  RunOptions options;
};

/*
 * Spec files are JSON objects:
 *   { "family": "l1" | "product" | "power_series" | "matrix_example" | "explicit",
 *     "R": number | "inf",            (power_series; R >= 1)
 *     "alpha": "log_n" | "linear" | "sqrt_log_n" | [numbers],
 *     "weights": [[...], ...],        (explicit)
 *     "truncation": integer,
 *     "options": { "strict": bool, "search_depth": int, "source_probes": int } }
 * Unknown fields are rejected with the offending field path.
 */
ParsedSpec parse_spec(const std::string& text);
ParsedSpec parse_spec_file(const std::string& path);

}  // namespace kothedim
