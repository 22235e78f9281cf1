#pragma once

#include <cstddef>
#include <vector>

namespace plogic {

/// Tolerance on the sum of a probability vector. Vectors whose sum is off
/// from 1 by no more than this are silently renormalized; anything worse is
/// rejected as a construction error.
inline constexpr double kNormalizationTolerance = 1e-9;

/*! \brief Probability distribution of a proposition over k ordered truth
 * classes.
 *
 * Class 0 is the most-true class: for k = 2 the classes are (true, false),
 * for k = 3 they are (true, undetermined, false). Entries are nonnegative,
 * finite and sum to one. Instances are immutable, so they can be shared
 * freely between threads.
 */
class Likelihood {
public:
  /// Validates and normalizes. Throws DomainError if fewer than two classes,
  /// any entry is negative or non-finite, or the sum is off by more than
  /// kNormalizationTolerance.
  explicit Likelihood(std::vector<double> probs);

  /// Two-valued proposition that is true with probability p.
  static Likelihood boolean(double p);

  /// Deterministic proposition: all mass on one truth class.
  static Likelihood point(std::size_t truth_class, std::size_t k);

  /// Equal mass on each of the k classes.
  static Likelihood uniform(std::size_t k);

  std::size_t arity() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }
  const std::vector<double>& probs() const noexcept { return probs_; }

  friend bool operator==(const Likelihood&, const Likelihood&) = default;

private:
  std::vector<double> probs_;
};

/// Joint distribution of two independent propositions. The left operand is
/// the major index: entry (i * b.arity() + j) equals a[i] * b[j].
Likelihood tensor(const Likelihood& a, const Likelihood& b);

}  // namespace plogic
