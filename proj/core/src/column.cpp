#include "herder/column.hpp"

#include <cctype>
#include <unordered_set>

#include "herder/error.hpp"

namespace herder {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<ColumnSpec> parse_header(const std::vector<std::string>& names) {
  if (names.empty()) throw ParseError("header has no columns");

  std::vector<ColumnSpec> columns;
  columns.reserve(names.size());
  std::unordered_set<std::string> seen;
  std::size_t n_decisions = 0;
  std::size_t n_objectives = 0;

  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string name = trim(names[i]);
    if (name.empty())
      throw ParseError("column " + std::to_string(i + 1) + " has an empty name");
    if (!seen.insert(name).second)
      throw ParseError("duplicate column name '" + name + "'", 0, name);

    ColumnSpec spec;
    spec.name = name;
    spec.index = i;

    const char last = name.back();
    if (last == '+') {
      spec.role = ColumnRole::objective;
      spec.goal = Goal::maximize;
    } else if (last == '-') {
      spec.role = ColumnRole::objective;
      spec.goal = Goal::minimize;
    } else if (last == 'X') {
      spec.role = ColumnRole::ignored;
    }

    const bool upper = std::isupper(static_cast<unsigned char>(name.front()));
    spec.kind = upper ? ColumnKind::numeric : ColumnKind::symbolic;

    if (spec.role == ColumnRole::objective) {
      if (!upper)
        throw ParseError("objective column '" + name + "' must be numeric", 0,
                         name);
      ++n_objectives;
    } else if (spec.role == ColumnRole::decision) {
      ++n_decisions;
    }
    columns.push_back(std::move(spec));
  }

  if (n_objectives == 0) throw ParseError("header declares no objective column");
  if (n_decisions == 0) throw ParseError("header declares no decision column");
  return columns;
}

}  // namespace herder
