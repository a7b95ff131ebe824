#pragma once

#include <string>

#include "vinculab/bigint.hpp"
#include "vinculab/oracle.hpp"

namespace vinculab {

enum class Engine { Oracle, Auto };

struct CountResult {
  Int value;
  std::string provenance;  // oracle | recurrence | closed-form | series
};

/// Answers a class query either by brute force or, under Engine::Auto, by the
/// fastest verified non-oracle route that covers it (recurrence evaluators,
/// the closed-form catalog, or a generating-function coefficient). Falls back
/// to the oracle when no such route applies.
CountResult routed_count(const ClassQuery& q, Engine engine);

Engine parse_engine(const std::string& text);

}  // namespace vinculab
