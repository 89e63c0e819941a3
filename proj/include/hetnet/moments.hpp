#pragma once

#include <functional>

#include "hetnet/distribution.hpp"
#include "hetnet/model.hpp"

namespace hetnet::moments {

// Closed-form fractional moment E[X^q]. Supported for every family at
// q > 0; negative q only where the moment is finite in closed form
// (constant, discrete, log-normal). Throws std::domain_error otherwise.
double moment_closed(const ScalarDistribution& dist, double q);

// E[X^q] by quadrature against the density; independent oracle for
// moment_closed. Constant/discrete are summed exactly.
double moment_quad(const ScalarDistribution& dist, double q,
                   double tol = 1e-10);

double mean(const ScalarDistribution& dist);

// E[S~^{q(beta)}] for one tier, S~ = P*S/A, mixing over the beta atoms:
//   sum_beta P(beta) * E[P^q] * E[S^q] * E[A^{-q}],  q = q_of_beta(beta).
double composite_moment(const TierSpec& tier,
                        const std::function<double(double)>& q_of_beta);

// The propagation moment E[S~^{2/beta}] conditioned on one beta atom.
double propagation_moment(const TierSpec& tier, double beta);

}  // namespace hetnet::moments
