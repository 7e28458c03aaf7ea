#ifndef BML_BAYES_RELATIVITY_HPP
#define BML_BAYES_RELATIVITY_HPP

#include <cmath>
#include <limits>

#include "bml/claim_count.hpp"
#include "bml/errors.hpp"
#include "bml/gamma_prior.hpp"
#include "bml/level_distribution.hpp"
#include "bml/log_value.hpp"
#include "bml/quadrature.hpp"

namespace bml {

// Posterior mean of the risk parameter given an observed claim count:
// (n + a)/(lambda + b) under Poisson-Gamma. Under a zero-inflated
// Poisson the n = 0 case mixes the "no exposure" and "no claims"
// explanations; the closed form follows from Gamma conjugacy applied to
// P(N=0|theta) = p + (1-p) e^{-lambda theta}.
inline double bayes_relativity_claims(int n, double a, double b, double lambda,
                                      const ClaimCountModel& model) {
    if (n < 0) throw DomainError("claim count must be nonnegative");
    if (!(a > 0.0 && b > 0.0 && lambda > 0.0))
        throw DomainError("shape, rate and lambda must be positive");
    if (!model.zero_inflated() || n >= 1 || model.zero_inflation() == 0.0)
        return (n + a) / (lambda + b);
    const double p = model.zero_inflation();
    // a * [p b^{-a-1} + (1-p)(lambda+b)^{-a-1}] / [p b^{-a} + (1-p)(lambda+b)^{-a}],
    // evaluated in log space.
    const LogValue t1 = LogValue::from_log(std::log(p) - (a + 1.0) * std::log(b));
    const LogValue t2 =
        LogValue::from_log(std::log1p(-p) - (a + 1.0) * std::log(lambda + b));
    const LogValue u1 = LogValue::from_log(std::log(p) - a * std::log(b));
    const LogValue u2 = LogValue::from_log(std::log1p(-p) - a * std::log(lambda + b));
    return a * ((t1 + t2) / (u1 + u2)).to_double();
}

// Expectation of the claims-conditional estimator over the predictive
// law of N. Collapses to the prior mean a/b for Poisson-Gamma; for the
// zero-inflated model it is evaluated by direct predictive summation.
inline double expected_bayes_relativity_claims(double a, double b, double lambda,
                                               const ClaimCountModel& model,
                                               double tail_tol = 1e-12) {
    if (!(a > 0.0 && b > 0.0 && lambda > 0.0))
        throw DomainError("shape, rate and lambda must be positive");
    if (!model.zero_inflated() || model.zero_inflation() == 0.0) return a / b;

    const double p = model.zero_inflation();
    // Predictive law: P(N=0) = p + (1-p) q^a with q = b/(b+lambda);
    // P(N=n) = (1-p) NegBin(n; a, q) for n >= 1.
    const double q = b / (b + lambda);
    const double log_q = std::log(q);
    const double ratio = lambda / (b + lambda);
    const double log_r = std::log(ratio);
    double acc = (p + (1.0 - p) * std::pow(q, a)) *
                 bayes_relativity_claims(0, a, b, lambda, model);
    double mass = p + (1.0 - p) * std::pow(q, a);
    for (int n = 1; n < 100000; ++n) {
        const double log_nb = std::lgamma(n + a) - std::lgamma(a) -
                              std::lgamma(n + 1.0) + a * log_q + n * log_r;
        const double pn = (1.0 - p) * std::exp(log_nb);
        acc += pn * ((n + a) / (lambda + b));
        mass += pn;
        // The estimator grows linearly while the predictive tail decays
        // geometrically; this bounds the whole remaining contribution.
        const double tail_bound =
            (1.0 - mass) * ((n + 1 + a) / (lambda + b)) / (1.0 - ratio);
        if (1.0 - mass < tail_tol && tail_bound < tail_tol) break;
    }
    return acc;
}

// Posterior mean of the risk parameter given occupancy of level l in
// steady state, with per-level prior Gamma(a_l, b_l): the ratio of the
// two half-line integrals of theta^k pi_l^ss(lambda theta) dF(theta).
inline double bayes_relativity_level(int level, const BonusMalusSystem& bms,
                                     const ClaimCountModel& model, double lambda,
                                     const GammaDistribution& prior) {
    if (level < 1 || level > bms.levels) throw DomainError("level out of range");
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    prior.validate();

    QuadratureSpec spec;
    spec.breakpoints = prior.hint_points();
    const std::size_t l = static_cast<std::size_t>(level - 1);
    auto log_pi_l = [&](double theta) {
        return log_stationary_entry(steady_state(bms, model, lambda * theta)[l]);
    };
    const LogValue den = integrate_halfline(
        [&](double theta) { return log_pi_l(theta) + prior.log_pdf(theta); }, spec);
    if (den.is_zero() || den.log_magnitude() < std::log(1e-300))
        throw UnreachableLevelError("level " + std::to_string(level) +
                                    " carries no posterior mass");
    const LogValue num = integrate_halfline(
        [&](double theta) {
            return std::log(theta) + log_pi_l(theta) + prior.log_pdf(theta);
        },
        spec);
    return (num / den).to_double();
}

}  // namespace bml

#endif  // BML_BAYES_RELATIVITY_HPP
