#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "plogic/likelihood.hpp"

namespace plogic {

/// Dense 2^n-state generators only; enough for desk-scale registers.
inline constexpr std::size_t kMaxModes = 12;

/*! \brief Monomial jump operator sqrt(rate/2) * (creators)(annihilators)(numbers).
 *
 * `create` lists modes with a creation factor, `annihilate` modes with an
 * annihilation factor, `control` modes appearing as number operators. The
 * three sets must be pairwise disjoint. The operator induces one occupation
 * transition: it fires in states where all annihilate sites are occupied,
 * all create sites are empty and all control sites are occupied, flipping
 * the create/annihilate bits at the bare `rate`.
 */
struct JumpOperator {
  double rate = 0.0;
  std::vector<std::size_t> create;
  std::vector<std::size_t> annihilate;
  std::vector<std::size_t> control;
};

/*! \brief Gain/loss generator over the 2^n occupation states of an n-mode
 * register.
 *
 * States are indexed by their occupation bit vector read as a binary number
 * with mode 0 as the most significant bit. The generator Q acts on column
 * distributions, dp/dt = Q p: off-diagonal entries are transition rates
 * W(to <- from), each diagonal entry is minus its column's outflow, so
 * columns sum to zero and probability is conserved.
 */
class RateModel {
public:
  RateModel(std::size_t modes, std::vector<JumpOperator> ops);

  std::size_t modes() const noexcept { return modes_; }
  std::size_t state_count() const noexcept { return dim_; }

  /// W(to <- from); to == from returns the (negative) diagonal entry.
  double generator_entry(std::size_t to, std::size_t from) const;

  /// Q p for a raw vector of length state_count().
  std::vector<double> apply_generator(std::span<const double> p) const;

  /// l1 norm of Q p; zero exactly at stationary points.
  double residual_norm(std::span<const double> p) const;

  /*! \brief Distribution at time t of dp/dt = Q p started from p0.
   *
   * Evaluates the exact propagator by uniformization: exp(Qt) expanded in
   * powers of the substochastic hop matrix I + Q/lambda, summed under Poisson
   * weights in chunks of bounded lambda*dt. Every term is nonnegative, so
   * the result is a distribution up to roundoff.
   */
  std::vector<double> evolve(std::span<const double> p0, double t) const;

  struct StationaryResult {
    std::vector<double> distribution;
    double residual;    ///< l1 norm of Q p at the returned point
    double time;        ///< integrated model time
    std::size_t steps;  ///< iterations taken
  };

  /*! \brief Long-time limit of the trajectory started from p0.
   *
   * The limit depends on p0 whenever the generator has conserved sectors, so
   * it is computed by following the trajectory (fixed-step explicit Euler at
   * dt = 1/(1.1 * max outflow), which is a strict contraction toward the
   * stationary sector) until the residual drops below tol. Throws
   * ConvergenceError when the step budget runs out first.
   */
  StationaryResult stationary(std::span<const double> p0, double tol = 1e-10,
                              std::size_t max_steps = 1'000'000) const;

  static bool occupied(std::size_t state, std::size_t mode, std::size_t modes);

private:
  std::vector<double> validated(std::span<const double> p) const;

  std::size_t modes_;
  std::size_t dim_;
  std::vector<double> q_;  // row-major, q_[to * dim_ + from]
  double max_outflow_;
};

/// Two-valued Likelihood of one site: class 0 (true) = P(occupied). The
/// distribution length must be a power of two.
Likelihood marginal(std::span<const double> distribution, std::size_t site);

/// Joint occupation distribution of independent two-valued sites, true =
/// occupied, mode 0 most significant.
std::vector<double> product_state(std::span<const Likelihood> sites);
std::vector<double> product_state(const Likelihood& a, const Likelihood& b);

/// Two-mode model whose unique stationary state is the product state with
/// P(mode 0 occupied) = a/(a+c), P(mode 1 occupied) = b/(b+d): pumps at
/// rates a, b and drains at rates c, d.
RateModel preparation_model(double a, double b, double c, double d);

/// Single hop mode 0 -> mode 1 (swapped: 1 -> 0). Drives site 0 to AND and
/// site 1 to OR of the initial product state (swapped exchanges them).
RateModel and_or_model(bool swapped = false, double rate = 1.0);

/// Controlled pumps filling each site when the other is occupied; both
/// marginals converge to the OR of the inputs.
RateModel copy_model(double rate_a = 1.0, double rate_b = 1.0);

/// Stationary distribution of preparation_model, cross-checked against its
/// closed form. Throws DomainError when a+c or b+d is zero.
std::vector<double> prepare_product_rates(double a, double b, double c,
                                          double d);

/// prepare_product_rates with a = p, c = 1-p, b = q, d = 1-q.
std::vector<double> prepare_product(double p, double q);

/// Runs and_or_model to stationarity from the (p, q) product state and
/// returns the site marginals: (AND, OR), or (OR, AND) when swapped.
std::pair<Likelihood, Likelihood> gate_and_or(double p, double q,
                                              bool swapped = false);

/// Runs copy_model to stationarity from the (p, q) product state; both
/// returned marginals equal (p+q-pq, (1-p)(1-q)).
std::pair<Likelihood, Likelihood> gate_copy(double p, double q);

}  // namespace plogic
