#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "plogic/likelihood.hpp"

namespace plogic {

/*! \brief Deterministic reclassification of truth classes.
 *
 * Represents an M x N matrix of 0s and 1s with exactly one 1 per column,
 * stored as the function column -> row. Applying it to a Likelihood pushes
 * the mass of each input class onto its target class, which preserves both
 * total probability and nonnegativity; these are exactly the transforms
 * under which probability vectors stay probability vectors.
 */
class AdmissibleMap {
public:
  /// column_targets[n] is the row holding the 1 in column n. Throws
  /// DomainError on empty dims or a target outside [0, output_dim).
  AdmissibleMap(std::size_t input_dim, std::size_t output_dim,
                std::vector<std::size_t> column_targets);

  static AdmissibleMap identity(std::size_t k);

  /// Maps every input class onto target_row.
  static AdmissibleMap constant(std::size_t input_dim, std::size_t output_dim,
                                std::size_t target_row);

  /// Extracts the column map from a full 0/1 matrix. Throws DomainError when
  /// the matrix is not admissible; see validate_matrix for the non-throwing
  /// check.
  static AdmissibleMap from_matrix(const std::vector<std::vector<int>>& m);

  std::size_t input_dim() const noexcept { return input_dim_; }
  std::size_t output_dim() const noexcept { return output_dim_; }
  std::size_t column_target(std::size_t column) const;
  const std::vector<std::size_t>& column_targets() const noexcept {
    return targets_;
  }

  /// Dense M x N 0/1 form; entry (m, n) is 1 iff column n targets row m.
  std::vector<std::vector<int>> matrix() const;

  /// Raw push-forward: result[m] is the sum of weights[n] over columns n
  /// targeting m. No normalization is applied.
  std::vector<double> push_forward(std::span<const double> weights) const;

  /// Push-forward of a Likelihood. Throws DimensionError on arity mismatch.
  Likelihood apply(const Likelihood& rho) const;

  friend bool operator==(const AdmissibleMap&, const AdmissibleMap&) = default;

private:
  std::size_t input_dim_;
  std::size_t output_dim_;
  std::vector<std::size_t> targets_;
};

/// g after f: apply(compose(g, f), rho) routes classes through f then g.
AdmissibleMap compose(const AdmissibleMap& g, const AdmissibleMap& f);

/// Parallel product acting on tensored classes, left operand major.
AdmissibleMap tensor(const AdmissibleMap& a, const AdmissibleMap& b);

/// Outcome of checking a candidate 0/1 matrix. When not ok, `column` is the
/// first offending column and `reason` says what is wrong with it.
struct MatrixValidation {
  bool ok;
  std::size_t column;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Accepts iff every entry is 0 or 1 and every column has exactly one 1.
MatrixValidation validate_matrix(const std::vector<std::vector<int>>& m);

}  // namespace plogic
