#include "plogic/admissible.hpp"

#include <limits>
#include <string>

#include "plogic/errors.hpp"

namespace plogic {

AdmissibleMap::AdmissibleMap(std::size_t input_dim, std::size_t output_dim,
                             std::vector<std::size_t> column_targets)
    : input_dim_(input_dim),
      output_dim_(output_dim),
      targets_(std::move(column_targets)) {
  if (input_dim_ == 0 || output_dim_ == 0)
    throw DomainError("admissible map dimensions must be positive");
  if (targets_.size() != input_dim_)
    throw DimensionError("column map has " + std::to_string(targets_.size()) +
                         " entries, expected " + std::to_string(input_dim_));
  for (std::size_t n = 0; n < targets_.size(); ++n)
    if (targets_[n] >= output_dim_)
      throw DomainError("column " + std::to_string(n) + " targets row " +
                        std::to_string(targets_[n]) + ", outside [0, " +
                        std::to_string(output_dim_) + ")");
}

AdmissibleMap AdmissibleMap::identity(std::size_t k) {
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  return AdmissibleMap(k, k, std::move(t));
}

AdmissibleMap AdmissibleMap::constant(std::size_t input_dim,
                                      std::size_t output_dim,
                                      std::size_t target_row) {
  return AdmissibleMap(input_dim, output_dim,
                       std::vector<std::size_t>(input_dim, target_row));
}

AdmissibleMap AdmissibleMap::from_matrix(
    const std::vector<std::vector<int>>& m) {
  const MatrixValidation check = validate_matrix(m);
  if (!check)
    throw DomainError("not an admissible matrix: " + check.reason +
                      " (column " + std::to_string(check.column) + ")");
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> targets(cols, 0);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < m.size(); ++r)
      if (m[r][c] == 1) targets[c] = r;
  return AdmissibleMap(cols, m.size(), std::move(targets));
}

std::size_t AdmissibleMap::column_target(std::size_t column) const {
  if (column >= input_dim_)
    throw DimensionError("column " + std::to_string(column) +
                         " outside [0, " + std::to_string(input_dim_) + ")");
  return targets_[column];
}

std::vector<std::vector<int>> AdmissibleMap::matrix() const {
  std::vector<std::vector<int>> m(output_dim_,
                                  std::vector<int>(input_dim_, 0));
  for (std::size_t n = 0; n < input_dim_; ++n) m[targets_[n]][n] = 1;
  return m;
}

std::vector<double> AdmissibleMap::push_forward(
    std::span<const double> weights) const {
  if (weights.size() != input_dim_)
    throw DimensionError("weight vector has " +
                         std::to_string(weights.size()) +
                         " entries, expected " + std::to_string(input_dim_));
  std::vector<double> out(output_dim_, 0.0);
  for (std::size_t n = 0; n < input_dim_; ++n) out[targets_[n]] += weights[n];
  return out;
}

Likelihood AdmissibleMap::apply(const Likelihood& rho) const {
  return Likelihood(push_forward(rho.probs()));
}

AdmissibleMap compose(const AdmissibleMap& g, const AdmissibleMap& f) {
  if (f.output_dim() != g.input_dim())
    throw DimensionError("cannot compose: inner output dim " +
                         std::to_string(f.output_dim()) +
                         " != outer input dim " +
                         std::to_string(g.input_dim()));
  std::vector<std::size_t> targets(f.input_dim());
  for (std::size_t n = 0; n < f.input_dim(); ++n)
    targets[n] = g.column_target(f.column_target(n));
  return AdmissibleMap(f.input_dim(), g.output_dim(), std::move(targets));
}

AdmissibleMap tensor(const AdmissibleMap& a, const AdmissibleMap& b) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  if (a.input_dim() > kMax / b.input_dim() ||
      a.output_dim() > kMax / b.output_dim())
    throw DomainError("tensor of admissible maps overflows");
  const std::size_t in = a.input_dim() * b.input_dim();
  std::vector<std::size_t> targets(in);
  for (std::size_t i = 0; i < a.input_dim(); ++i)
    for (std::size_t j = 0; j < b.input_dim(); ++j)
      targets[i * b.input_dim() + j] =
          a.column_target(i) * b.output_dim() + b.column_target(j);
  return AdmissibleMap(in, a.output_dim() * b.output_dim(),
                       std::move(targets));
}

MatrixValidation validate_matrix(const std::vector<std::vector<int>>& m) {
  if (m.empty()) return {false, 0, "matrix has no rows"};
  const std::size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) return {false, 0, "rows have unequal lengths"};
  if (cols == 0) return {false, 0, "matrix has no columns"};
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t ones = 0;
    for (std::size_t r = 0; r < m.size(); ++r) {
      const int v = m[r][c];
      if (v != 0 && v != 1) return {false, c, "entry is neither 0 nor 1"};
      ones += static_cast<std::size_t>(v == 1);
    }
    if (ones == 0) return {false, c, "column has no 1"};
    if (ones > 1) return {false, c, "column has more than one 1"};
  }
  return {true, 0, ""};
}

}  // namespace plogic
