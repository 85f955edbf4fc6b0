#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "herder/cell.hpp"
#include "herder/column.hpp"
#include "herder/online_stats.hpp"

namespace herder {

using RowId = int;

struct Row {
  RowId id = 0;
  std::vector<Cell> cells;  // one per column, header order
};

// An immutable table of candidate configurations. Decision cells are
// always readable; objective cells should be read through a Labeler so
// label budgets stay honest (see labeler.hpp).
//
// Rows whose objective cells are all present are "labelable" and form
// the pool optimizers may sample from.
class Dataset {
 public:
  Dataset(std::string name, std::vector<ColumnSpec> columns,
          std::vector<Row> rows);

  const std::string& name() const { return name_; }
  const std::vector<ColumnSpec>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t n_rows() const { return rows_.size(); }

  bool has_row(RowId id) const { return by_id_.count(id) != 0; }
  const Row& row(RowId id) const;

  /// Column indices by role, ascending.
  const std::vector<std::size_t>& decision_columns() const {
    return decision_cols_;
  }
  const std::vector<std::size_t>& objective_columns() const {
    return objective_cols_;
  }
  /// Goal per objective, aligned with objective_columns().
  const std::vector<Goal>& objective_goals() const { return objective_goals_; }

  /// Ids of rows with every objective present, ascending.
  const std::vector<RowId>& labelable_rows() const { return labelable_; }
  bool is_labelable(RowId id) const;

  /// Raw objective values of a labelable row, objective_columns() order.
  std::vector<double> objective_values(RowId id) const;

  /// Per-objective min/max over all labelable rows; the normalization
  /// used on the evaluation side. Meaningful only when labelable_rows()
  /// is non-empty.
  const std::vector<Interval>& objective_bounds() const {
    return objective_bounds_;
  }

 private:
  std::string name_;
  std::vector<ColumnSpec> columns_;
  std::vector<Row> rows_;
  std::unordered_map<RowId, std::size_t> by_id_;
  std::vector<std::size_t> decision_cols_;
  std::vector<std::size_t> objective_cols_;
  std::vector<Goal> objective_goals_;
  std::vector<RowId> labelable_;
  std::vector<Interval> objective_bounds_;
};

// CSV input/output. Column convention is the one parse_header defines;
// "?" marks a missing cell; rows get ids 0,1,2.. in file order.
Dataset load_csv(const std::filesystem::path& path);
Dataset load_csv(std::istream& in, std::string name);
void write_csv(const Dataset& ds, std::ostream& out);
std::string to_csv(const Dataset& ds);

/// Reads a dataset manifest: one CSV path per line, blank lines and
/// '#' comments skipped. Paths are returned as written.
std::vector<std::filesystem::path> read_manifest(
    const std::filesystem::path& path);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace herder
