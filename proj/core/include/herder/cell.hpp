#pragma once

#include <string>
#include <utility>

#include "herder/error.hpp"

namespace herder {

enum class CellKind { missing, number, symbol };

/// One table cell: a finite real, a symbol, or missing ("?").
class Cell {
 public:
  Cell() = default;

  static Cell missing() { return Cell(); }
  static Cell number(double v) {
    Cell c;
    c.kind_ = CellKind::number;
    c.num_ = v;
    return c;
  }
  static Cell symbol(std::string s) {
    Cell c;
    c.kind_ = CellKind::symbol;
    c.sym_ = std::move(s);
    return c;
  }

  CellKind kind() const { return kind_; }
  bool is_missing() const { return kind_ == CellKind::missing; }
  bool is_number() const { return kind_ == CellKind::number; }
  bool is_symbol() const { return kind_ == CellKind::symbol; }

  double number_value() const {
    if (!is_number()) throw Error("cell is not a number");
    return num_;
  }
  const std::string& symbol_value() const {
    if (!is_symbol()) throw Error("cell is not a symbol");
    return sym_;
  }

  bool operator==(const Cell& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
      case CellKind::missing: return true;
      case CellKind::number: return num_ == o.num_;
      case CellKind::symbol: return sym_ == o.sym_;
    }
    return false;
  }

 private:
  CellKind kind_ = CellKind::missing;
  double num_ = 0.0;
  std::string sym_;
};

}  // namespace herder
