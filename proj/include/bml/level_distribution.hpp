#ifndef BML_LEVEL_DISTRIBUTION_HPP
#define BML_LEVEL_DISTRIBUTION_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "bml/bms.hpp"
#include "bml/claim_count.hpp"
#include "bml/errors.hpp"
#include "bml/gamma_prior.hpp"
#include "bml/quadrature.hpp"
#include "bml/stationary.hpp"

namespace bml {

// Steady-state distribution of the level process at mean claim count mu.
inline std::vector<double> steady_state(const BonusMalusSystem& bms,
                                        const ClaimCountModel& model, double mu) {
    return solve_stationary(transition_matrix(bms, model, mu));
}

inline QuadratureSpec prior_quadrature_spec(const GammaMixturePrior& prior) {
    QuadratureSpec spec;
    spec.breakpoints = prior.hint_points();
    return spec;
}

// P(L = l) = integral of pi_l^ss(lambda * theta) dF(theta): the level
// occupied by a randomly drawn policyholder once the chain has mixed,
// averaged over the structure function.
inline std::vector<double> level_distribution(const BonusMalusSystem& bms,
                                              const ClaimCountModel& model, double lambda,
                                              const GammaMixturePrior& prior) {
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    bms.validate();
    const int s = bms.levels;
    const QuadratureSpec spec = prior_quadrature_spec(prior);
    std::vector<double> P(static_cast<std::size_t>(s), 0.0);
    for (int l = 0; l < s; ++l) {
        // One integral per level against the whole structure function;
        // splitting it per mixture component would turn each small
        // component share into its own relative-tolerance problem.
        const LogValue integral = integrate_halfline(
            [&](double theta) {
                const double pi_l =
                    steady_state(bms, model, lambda * theta)[static_cast<std::size_t>(l)];
                return log_stationary_entry(pi_l) + prior.log_pdf(theta);
            },
            spec);
        P[static_cast<std::size_t>(l)] = integral.to_double();
    }
    double sum = 0.0;
    for (double p : P) sum += p;
    if (std::fabs(sum - 1.0) > 1e-8)
        throw ToleranceError("level distribution does not sum to 1 (got " +
                                 std::to_string(sum) + ")",
                             sum);
    return P;
}

}  // namespace bml

#endif  // BML_LEVEL_DISTRIBUTION_HPP
