#ifndef BML_CLAIM_COUNT_HPP
#define BML_CLAIM_COUNT_HPP

#include <cmath>
#include <string>

#include "bml/errors.hpp"

namespace bml {

// Annual number of reported claims given its mean mu: Poisson, or
// zero-inflated Poisson with extra mass p at zero. ZIPoisson(p = 0)
// coincides with Poisson for all n and mu.
class ClaimCountModel {
public:
    static ClaimCountModel poisson() { return ClaimCountModel(0.0, false); }

    static ClaimCountModel zi_poisson(double p) {
        if (!(p >= 0.0 && p <= 1.0))
            throw DomainError("zero-inflation p must lie in [0, 1]");
        return ClaimCountModel(p, true);
    }

    bool zero_inflated() const { return zero_inflated_; }
    double zero_inflation() const { return p_; }

    double pmf(int n, double mu) const {
        if (n < 0) return 0.0;
        if (!(mu > 0.0)) throw DomainError("claim count mean must be positive");
        const double base = std::exp(-mu + n * std::log(mu) - std::lgamma(n + 1.0));
        if (n == 0) return p_ + (1.0 - p_) * base;
        return (1.0 - p_) * base;
    }

    // P(N >= n), the exact tail mass assigned to the saturated rule.
    // Small tails are summed forward from n so they carry full relative
    // precision; complementing the CDF would cancel them to noise. The
    // branch looks at the plain Poisson mass only: the inflation mass
    // sits at zero and scales the tail by 1 - p.
    double tail_mass(int n, double mu) const {
        if (n <= 0) return 1.0;
        if (!(mu > 0.0)) throw DomainError("claim count mean must be positive");
        double poisson_cdf = 0.0;
        for (int k = 0; k < n; ++k)
            poisson_cdf += std::exp(-mu + k * std::log(mu) - std::lgamma(k + 1.0));
        double poisson_tail;
        if (poisson_cdf <= 0.5) {
            poisson_tail = 1.0 - poisson_cdf;
        } else {
            poisson_tail = 0.0;
            double term = std::exp(-mu + n * std::log(mu) - std::lgamma(n + 1.0));
            for (int k = n; k < n + 100000; ++k) {
                poisson_tail += term;
                if (k > mu && (term == 0.0 || term < poisson_tail * 1e-18)) break;
                term *= mu / (k + 1);
            }
        }
        return (1.0 - p_) * poisson_tail;
    }

    std::string name() const { return zero_inflated_ ? "zip" : "poisson"; }

private:
    ClaimCountModel(double p, bool zi) : p_(p), zero_inflated_(zi) {}

    double p_;
    bool zero_inflated_;
};

}  // namespace bml

#endif  // BML_CLAIM_COUNT_HPP
