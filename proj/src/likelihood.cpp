#include "plogic/likelihood.hpp"

#include <cmath>
#include <string>

#include "plogic/errors.hpp"

namespace plogic {

Likelihood::Likelihood(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2)
    throw DomainError("likelihood needs at least 2 truth classes, got " +
                      std::to_string(probs_.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double v = probs_[i];
    if (!std::isfinite(v))
      throw DomainError("likelihood entry " + std::to_string(i) +
                        " is not finite");
    if (v < 0.0)
      throw DomainError("likelihood entry " + std::to_string(i) +
                        " is negative (" + std::to_string(v) + ")");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance)
    throw DomainError("likelihood entries sum to " + std::to_string(sum) +
                      ", expected 1 within tolerance");
  for (double& v : probs_) v /= sum;
}

Likelihood Likelihood::boolean(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("probability " + std::to_string(p) +
                      " outside [0, 1]");
  return Likelihood({p, 1.0 - p});
}

Likelihood Likelihood::point(std::size_t truth_class, std::size_t k) {
  if (k < 2) throw DomainError("likelihood needs at least 2 truth classes");
  if (truth_class >= k)
    throw DomainError("truth class " + std::to_string(truth_class) +
                      " outside [0, " + std::to_string(k) + ")");
  std::vector<double> v(k, 0.0);
  v[truth_class] = 1.0;
  return Likelihood(std::move(v));
}

Likelihood Likelihood::uniform(std::size_t k) {
  if (k < 2) throw DomainError("likelihood needs at least 2 truth classes");
  return Likelihood(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

Likelihood tensor(const Likelihood& a, const Likelihood& b) {
  std::vector<double> out;
  out.reserve(a.arity() * b.arity());
  for (double x : a.probs())
    for (double y : b.probs()) out.push_back(x * y);
  return Likelihood(std::move(out));
}

}  // namespace plogic
