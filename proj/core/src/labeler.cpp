#include "herder/labeler.hpp"

#include "herder/error.hpp"

namespace herder {

Labeler::Labeler(const Dataset& dataset, std::size_t budget)
    : dataset_(&dataset),
      budget_(budget),
      stats_(dataset.objective_columns().size()) {}

const std::vector<double>& Labeler::label(RowId id) {
  const auto it = revealed_.find(id);
  if (it != revealed_.end()) {
    access_log_.push_back(id);
    return it->second;
  }
  if (!dataset_->is_labelable(id))
    throw Error("row id " + std::to_string(id) + " is not labelable in '" +
                dataset_->name() + "'");
  if (used_ == budget_)
    throw BudgetExhausted("label budget (" + std::to_string(budget_) +
                          ") exhausted");
  auto values = dataset_->objective_values(id);
  for (std::size_t k = 0; k < values.size(); ++k) stats_[k].add(values[k]);
  ++used_;
  labeled_.insert(id);
  order_.push_back(id);
  access_log_.push_back(id);
  return revealed_.emplace(id, std::move(values)).first->second;
}

const std::vector<double>& Labeler::objectives(RowId id) const {
  const auto it = revealed_.find(id);
  if (it == revealed_.end()) {
    ++denied_reads_;
    throw Error("objective read of unlabeled row id " + std::to_string(id));
  }
  access_log_.push_back(id);
  return it->second;
}

std::vector<Interval> Labeler::labeled_bounds() const {
  std::vector<Interval> out;
  out.reserve(stats_.size());
  for (const OnlineStats& s : stats_) out.push_back(s.bounds());
  return out;
}

}  // namespace herder
