#pragma once

#include <cstdint>

#include "plogic/likelihood.hpp"

namespace plogic {

/// Inputs of the two-alternative reflexive choice model, each the
/// probability of pressing toward the positive pole: x1 environment tension,
/// x2 past experience, x3 personal intention.
struct BipolarInputs {
  double x1;
  double x2;
  double x3;
};

/// The same three influences as three-valued likelihoods (true = positive
/// pole, undetermined = middle, false = negative pole).
struct TripolarInputs {
  Likelihood x1;
  Likelihood x2;
  Likelihood x3;
};

/// Probabilities of choosing the positive pole, the negative pole, and the
/// middle way; they sum to one.
struct ChoiceSplit {
  double positive;
  double negative;
  double middle;
};

/// X = x1 + x3(1-x1)(1-x2), the probability of choosing the positive pole.
/// Throws DomainError when an input leaves [0, 1].
double bipolar_choice(double x1, double x2, double x3);
double bipolar_choice(const BipolarInputs& in);

/// Mean of bipolar_choice under independent uniforms on [0,1]: exactly 5/8.
double bipolar_uniform_expectation();

struct MonteCarloEstimate {
  double mean;
  double std_error;  ///< sample standard error (0 when samples == 1)
  std::uint64_t samples;
};

/// Seeded sampling estimate of the uniform expectation. Each sample draws
/// x1, x2, x3 in that order from an mt19937_64 stream, turning each 64-bit
/// word into a double via its top 53 bits, so results are reproducible
/// across platforms for a fixed seed.
MonteCarloEstimate bipolar_uniform_expectation_mc(std::uint64_t samples,
                                                  std::uint64_t seed);

/// Three-alternative choice, closed form:
///   positive X = p1 + r1 q3 - p1 q3 r1,
///   negative Y = p3 (q1 + r3 - q1 r3),
///   middle   Z = 1 - X - Y,
/// where (p, q, r) are the class probabilities of x1, x2, x3.
ChoiceSplit tripolar_choice(const TripolarInputs& in);

/// Same split computed through the connective pipeline: evaluates the
/// double implication (x3 => x2) => x1 over three-valued inputs and reads
/// positive from the true class, negative from the false class, middle from
/// the undetermined class. Agrees with tripolar_choice to roundoff.
ChoiceSplit tripolar_choice_via_formula(const TripolarInputs& in);

}  // namespace plogic
