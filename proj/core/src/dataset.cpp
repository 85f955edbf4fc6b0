#include "herder/dataset.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
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

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

bool parse_finite_double(const std::string& text, double& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  double v = 0.0;
  const auto res = std::from_chars(first, last, v, std::chars_format::general);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v))
    return false;
  out = v;
  return true;
}

}  // namespace

Dataset::Dataset(std::string name, std::vector<ColumnSpec> columns,
                 std::vector<Row> rows)
    : name_(std::move(name)),
      columns_(std::move(columns)),
      rows_(std::move(rows)) {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    switch (columns_[c].role) {
      case ColumnRole::decision:
        decision_cols_.push_back(c);
        break;
      case ColumnRole::objective:
        objective_cols_.push_back(c);
        objective_goals_.push_back(columns_[c].goal);
        break;
      case ColumnRole::ignored:
        break;
    }
  }
  if (objective_cols_.empty())
    throw Error("dataset '" + name_ + "' has no objective column");
  if (decision_cols_.empty())
    throw Error("dataset '" + name_ + "' has no decision column");

  by_id_.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    if (r.cells.size() != columns_.size())
      throw Error("dataset '" + name_ + "': row id " + std::to_string(r.id) +
                  " has " + std::to_string(r.cells.size()) + " cells, expected " +
                  std::to_string(columns_.size()));
    if (!by_id_.emplace(r.id, i).second)
      throw Error("dataset '" + name_ + "': duplicate row id " +
                  std::to_string(r.id));
    bool complete = true;
    for (std::size_t c : objective_cols_) {
      const Cell& cell = r.cells[c];
      if (cell.is_missing()) {
        complete = false;
      } else if (!cell.is_number()) {
        throw Error("dataset '" + name_ + "': row id " + std::to_string(r.id) +
                    ", objective '" + columns_[c].name + "' is not numeric");
      }
    }
    for (std::size_t c : decision_cols_) {
      const Cell& cell = r.cells[c];
      if (columns_[c].kind == ColumnKind::numeric && cell.is_symbol())
        throw Error("dataset '" + name_ + "': row id " + std::to_string(r.id) +
                    ", numeric column '" + columns_[c].name +
                    "' holds a symbol");
      if (columns_[c].kind == ColumnKind::symbolic && cell.is_number())
        throw Error("dataset '" + name_ + "': row id " + std::to_string(r.id) +
                    ", symbolic column '" + columns_[c].name +
                    "' holds a number");
    }
    if (complete) labelable_.push_back(r.id);
  }

  objective_bounds_.assign(objective_cols_.size(), Interval{});
  if (!labelable_.empty()) {
    std::vector<OnlineStats> stats(objective_cols_.size());
    for (RowId id : labelable_) {
      const Row& r = rows_[by_id_.at(id)];
      for (std::size_t k = 0; k < objective_cols_.size(); ++k)
        stats[k].add(r.cells[objective_cols_[k]].number_value());
    }
    for (std::size_t k = 0; k < stats.size(); ++k)
      objective_bounds_[k] = stats[k].bounds();
  }
}

const Row& Dataset::row(RowId id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end())
    throw Error("dataset '" + name_ + "': no row with id " + std::to_string(id));
  return rows_[it->second];
}

bool Dataset::is_labelable(RowId id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) return false;
  const Row& r = rows_[it->second];
  for (std::size_t c : objective_cols_)
    if (!r.cells[c].is_number()) return false;
  return true;
}

std::vector<double> Dataset::objective_values(RowId id) const {
  const Row& r = row(id);
  std::vector<double> out;
  out.reserve(objective_cols_.size());
  for (std::size_t c : objective_cols_) {
    const Cell& cell = r.cells[c];
    if (!cell.is_number())
      throw Error("dataset '" + name_ + "': row id " + std::to_string(id) +
                  " has a missing objective ('" + columns_[c].name + "')");
    out.push_back(cell.number_value());
  }
  return out;
}

Dataset load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path.string() + "'");
  return load_csv(in, path.string());
}

Dataset load_csv(std::istream& in, std::string name) {
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&](std::string& out) {
    if (!std::getline(in, out)) return false;
    ++line_no;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return true;
  };

  if (!next_line(line) || trim(line).empty())
    throw ParseError("'" + name + "' is empty (no header row)");

  std::vector<ColumnSpec> columns;
  try {
    columns = parse_header(split_commas(line));
  } catch (const ParseError& e) {
    throw ParseError("'" + name + "' header: " + e.what(), 1, e.column());
  }

  std::vector<Row> rows;
  RowId next_id = 0;
  while (next_line(line)) {
    if (trim(line).empty()) continue;  // stray blank line
    const std::vector<std::string> tokens = split_commas(line);
    if (tokens.size() != columns.size())
      throw ParseError("'" + name + "' line " + std::to_string(line_no) +
                           ": found " + std::to_string(tokens.size()) +
                           " cells, expected " + std::to_string(columns.size()),
                       line_no, "");

    Row row;
    row.id = next_id++;
    row.cells.reserve(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string tok = trim(tokens[c]);
      if (tok == "?") {
        row.cells.push_back(Cell::missing());
        continue;
      }
      // Ignored columns keep raw text: their kind is only a naming
      // convention and their content takes no part in any computation.
      if (columns[c].role == ColumnRole::ignored) {
        row.cells.push_back(Cell::symbol(tok));
        continue;
      }
      if (columns[c].kind == ColumnKind::numeric) {
        double v = 0.0;
        if (!parse_finite_double(tok, v))
          throw ParseError("'" + name + "' line " + std::to_string(line_no) +
                               ", column '" + columns[c].name +
                               "': cannot parse '" + tok + "' as a number",
                           line_no, columns[c].name);
        row.cells.push_back(Cell::number(v));
      } else {
        row.cells.push_back(Cell::symbol(tok));
      }
    }
    rows.push_back(std::move(row));
  }

  return Dataset(std::move(name), std::move(columns), std::move(rows));
}

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void write_csv(const Dataset& ds, std::ostream& out) {
  const auto& cols = ds.columns();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c) out << ',';
    out << cols[c].name;
  }
  out << '\n';
  for (const Row& r : ds.rows()) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) out << ',';
      const Cell& cell = r.cells[c];
      switch (cell.kind()) {
        case CellKind::missing: out << '?'; break;
        case CellKind::number: out << format_double(cell.number_value()); break;
        case CellKind::symbol: out << cell.symbol_value(); break;
      }
    }
    out << '\n';
  }
}

std::string to_csv(const Dataset& ds) {
  std::ostringstream out;
  write_csv(ds, out);
  return out.str();
}

std::vector<std::filesystem::path> read_manifest(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest '" + path.string() + "'");
  std::vector<std::filesystem::path> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    out.emplace_back(entry);
  }
  return out;
}

}  // namespace herder
