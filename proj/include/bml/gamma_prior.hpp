#ifndef BML_GAMMA_PRIOR_HPP
#define BML_GAMMA_PRIOR_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "bml/errors.hpp"

namespace bml {

// Gamma(shape a, rate b), mean a/b.
struct GammaDistribution {
    double shape = 1.0;
    double rate = 1.0;

    void validate() const {
        if (!(shape > 0.0) || !(rate > 0.0))
            throw ConfigError("gamma shape and rate must be strictly positive");
    }

    double mean() const { return shape / rate; }
    double sd() const { return std::sqrt(shape) / rate; }

    double log_pdf(double x) const {
        if (x < 0.0) return -std::numeric_limits<double>::infinity();
        if (x == 0.0)
            return shape == 1.0 ? std::log(rate)
                                : (shape > 1.0 ? -std::numeric_limits<double>::infinity()
                                               : std::numeric_limits<double>::infinity());
        return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) -
               rate * x;
    }

    // E[e^{-c X}] = (b/(b+c))^a for c > -b.
    double laplace(double c) const { return std::pow(rate / (rate + c), shape); }

    // E[X e^{-c X}] = a b^a / (b+c)^{a+1}.
    double laplace_mean(double c) const {
        return shape * std::exp(shape * std::log(rate) - (shape + 1.0) * std::log(rate + c));
    }

    // Where the density has structure; used as quadrature hints.
    std::vector<double> hint_points() const {
        const double m = mean(), s = sd();
        std::vector<double> h;
        for (double k : {-6.0, -3.0, -1.0, 0.0, 1.0, 3.0, 6.0, 12.0}) {
            const double x = m + k * s;
            if (x > 0.0) h.push_back(x);
        }
        return h;
    }
};

struct GammaComponent {
    double weight = 1.0;
    GammaDistribution dist;
};

// Finite Gamma mixture: the structure function of the portfolio, the
// per-level priors, and the base-premium priors are all instances.
class GammaMixturePrior {
public:
    static constexpr double kWeightSumTol = 1e-12;

    explicit GammaMixturePrior(std::vector<GammaComponent> components)
        : components_(std::move(components)) {
        if (components_.empty()) throw ConfigError("prior needs at least one component");
        double sum = 0.0;
        for (const auto& c : components_) {
            if (!(c.weight >= 0.0 && c.weight <= 1.0))
                throw ConfigError("prior weights must lie in [0, 1]");
            c.dist.validate();
            sum += c.weight;
        }
        if (std::fabs(sum - 1.0) > kWeightSumTol)
            throw ConfigError("prior weights must sum to 1");
    }

    // Rescales arbitrary nonnegative weights to sum to 1.
    static GammaMixturePrior normalized(std::vector<GammaComponent> components) {
        double sum = 0.0;
        for (const auto& c : components) sum += c.weight;
        if (!(sum > 0.0)) throw ConfigError("prior weights must have positive sum");
        for (auto& c : components) c.weight /= sum;
        return GammaMixturePrior(std::move(components));
    }

    static GammaMixturePrior single(GammaDistribution d) {
        return GammaMixturePrior({GammaComponent{1.0, d}});
    }

    const std::vector<GammaComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    double mean() const {
        double m = 0.0;
        for (const auto& c : components_) m += c.weight * c.dist.mean();
        return m;
    }

    double laplace(double c) const {
        double v = 0.0;
        for (const auto& comp : components_) v += comp.weight * comp.dist.laplace(c);
        return v;
    }

    double log_pdf(double x) const {
        double best = -std::numeric_limits<double>::infinity();
        std::vector<double> terms;
        terms.reserve(components_.size());
        for (const auto& c : components_) {
            if (c.weight == 0.0) continue;
            terms.push_back(std::log(c.weight) + c.dist.log_pdf(x));
            best = std::max(best, terms.back());
        }
        if (std::isinf(best) && best < 0) return best;
        double s = 0.0;
        for (double t : terms) s += std::exp(t - best);
        return best + std::log(s);
    }

    std::vector<double> hint_points() const {
        std::vector<double> h;
        for (const auto& c : components_) {
            const auto ch = c.dist.hint_points();
            h.insert(h.end(), ch.begin(), ch.end());
        }
        return h;
    }

private:
    std::vector<GammaComponent> components_;
};

}  // namespace bml

#endif  // BML_GAMMA_PRIOR_HPP
