#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace herder {

enum class ColumnKind { numeric, symbolic };
enum class ColumnRole { decision, objective, ignored };
enum class Goal { minimize, maximize, none };

/// What one CSV column is: its role in the search, its value type, and
/// (for objectives) which direction is better.
struct ColumnSpec {
  std::string name;  // trimmed header text, suffix included
  ColumnKind kind = ColumnKind::numeric;
  ColumnRole role = ColumnRole::decision;
  Goal goal = Goal::none;  // none unless role == objective
  std::size_t index = 0;   // position in the header
};

// Derives column specs from header names:
//   trailing '+'  -> objective to maximize
//   trailing '-'  -> objective to minimize
//   trailing 'X'  -> ignored
//   otherwise     -> decision
// An uppercase first character marks a numeric column, lowercase a
// symbolic one. Objectives must be numeric.
//
// Throws ParseError for empty or duplicate names (after trimming), a
// symbolic objective, or a header with no decisions or no objectives.
std::vector<ColumnSpec> parse_header(const std::vector<std::string>& names);

}  // namespace herder
