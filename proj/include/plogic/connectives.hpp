#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plogic/admissible.hpp"
#include "plogic/likelihood.hpp"

namespace plogic {

/// Arbitrary-precision count of admissible maps (M^N overflows fast).
using BigCount = boost::multiprecision::cpp_int;

/// Largest map family that enumerate will walk; counting has no cap.
inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

/// Class reversal i -> k-1-i. For k = 2 this is the swap matrix (01;10).
AdmissibleMap not_map(std::size_t k);

/// Push-forward of (i, j) -> max(i, j): the result is only as true as the
/// less-true operand. k = 2 gives diag(pq, 1-pq).
AdmissibleMap and_map(std::size_t k);

/// Push-forward of (i, j) -> min(i, j). k = 2 gives diag(p+q-pq, (1-p)(1-q)).
AdmissibleMap or_map(std::size_t k);

/// "A implies B" as "(not A) or B": push-forward of (i, j) -> min(k-1-i, j).
AdmissibleMap implies_map(std::size_t k);

/*! \brief Total function from tuples of truth classes to an output class.
 *
 * The table is stored flat with the first input as the major index, matching
 * the tensor-product class ordering, so the table doubles as the column map
 * of the equivalent AdmissibleMap.
 */
class ClassFunction {
public:
  ClassFunction(std::vector<std::size_t> input_dims, std::size_t output_dim,
                std::vector<std::size_t> table);

  std::size_t arity() const noexcept { return input_dims_.size(); }
  const std::vector<std::size_t>& input_dims() const noexcept {
    return input_dims_;
  }
  std::size_t output_dim() const noexcept { return output_dim_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  /// Flat index of a class tuple (first input major).
  std::size_t flat_index(std::span<const std::size_t> classes) const;
  std::size_t operator()(std::span<const std::size_t> classes) const;

private:
  std::vector<std::size_t> input_dims_;
  std::size_t output_dim_;
  std::vector<std::size_t> table_;
};

/// The AdmissibleMap acting on tensored inputs whose column map is f.
AdmissibleMap from_class_function(const ClassFunction& f);

/// Number of admissible maps with the given dims, i.e. output_dim^input_dim.
/// For N two-valued propositions (input_dim 2^N, output_dim 2) this is
/// 2^(2^N), the number of N-ary truth functions.
BigCount count_admissible(std::size_t input_dim, std::size_t output_dim);

/*! \brief Walks every admissible map of the given dims exactly once.
 *
 * Yields column maps in lexicographic order (last column fastest). Refuses
 * families larger than kEnumerationCap at construction; use count_admissible
 * for those. Each instance iterates independently.
 */
class AdmissibleEnumerator {
public:
  AdmissibleEnumerator(std::size_t input_dim, std::size_t output_dim);

  static bool enumerable(std::size_t input_dim, std::size_t output_dim);

  /// Next map, or nullopt once exhausted.
  std::optional<AdmissibleMap> next();

private:
  std::size_t input_dim_;
  std::size_t output_dim_;
  std::vector<std::size_t> current_;
  bool done_ = false;
};

/// Embeds a two-valued proposition into k classes: true mass stays on class
/// 0, false mass moves to class k-1, intermediate classes get zero.
Likelihood lift_arity(const Likelihood& rho, std::size_t k);

}  // namespace plogic
