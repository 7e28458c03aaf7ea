#ifndef BML_LINEAR_RELATIVITY_HPP
#define BML_LINEAR_RELATIVITY_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bml/bayes_relativity.hpp"
#include "bml/errors.hpp"
#include "bml/gamma_prior.hpp"
#include "bml/level_distribution.hpp"

namespace bml {

// Weight placed on the claims-based Bayes target when fitting the
// optimal line; the remainder goes to the level-based target.
struct WeightSetting {
    double xi = 0.5;

    void validate() const {
        if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("xi must lie in [0, 1]");
    }
};

struct LinearCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    // The linear class requires beta >= 0; a negative fitted slope is
    // reported, not clamped.
    bool class_c_violation = false;

    double at(int level) const { return alpha + beta * level; }
};

enum class RelativityMethod {
    kBayesClaims,
    kBayesLevel,
    kOrdinaryLinear,
    kOptimalLinear,
};

inline std::string method_name(RelativityMethod m) {
    switch (m) {
        case RelativityMethod::kBayesClaims: return "bayes-claims";
        case RelativityMethod::kBayesLevel: return "bayes-level";
        case RelativityMethod::kOrdinaryLinear: return "ordinary-linear";
        case RelativityMethod::kOptimalLinear: return "optimal-linear";
    }
    return "unknown";
}

// Per-level premium multipliers under one estimation method.
class RelativityTable {
public:
    RelativityTable(RelativityMethod method, std::vector<double> values)
        : method_(method), values_(std::move(values)) {
        check_positive();
    }

    RelativityTable(RelativityMethod method, const LinearCoefficients& coef, int levels)
        : method_(method), coef_(coef), has_coef_(true) {
        values_.reserve(static_cast<std::size_t>(levels));
        for (int l = 1; l <= levels; ++l) values_.push_back(coef.at(l));
        check_positive();
    }

    RelativityMethod method() const { return method_; }
    const std::vector<double>& values() const { return values_; }
    double at(int level) const { return values_.at(static_cast<std::size_t>(level - 1)); }
    bool has_coefficients() const { return has_coef_; }
    const LinearCoefficients& coefficients() const { return coef_; }

private:
    void check_positive() const {
        for (double v : values_)
            if (!(v > 0.0))
                throw NumericError("relativities must be strictly positive (" +
                                   method_name(method_) + ")");
    }

    RelativityMethod method_;
    std::vector<double> values_;
    LinearCoefficients coef_{};
    bool has_coef_ = false;
};

namespace detail {

struct LevelMoments {
    double mean = 0.0;
    double var = 0.0;
};

inline LevelMoments level_moments(const std::vector<double>& P) {
    LevelMoments m;
    double e2 = 0.0;
    for (std::size_t l = 0; l < P.size(); ++l) {
        const double lv = static_cast<double>(l + 1);
        m.mean += lv * P[l];
        e2 += lv * lv * P[l];
    }
    m.var = e2 - m.mean * m.mean;
    return m;
}

}  // namespace detail

// Classic least-squares line for the relativity: beta = Cov(Theta, L) /
// Var(L), alpha = E(Theta) - beta E(L), under the joint law where theta
// follows the structure function and L the steady state at mean
// lambda * theta.
inline LinearCoefficients ordinary_linear_coefficients(const BonusMalusSystem& bms,
                                                       const ClaimCountModel& model,
                                                       double lambda,
                                                       const GammaMixturePrior& prior) {
    const std::vector<double> P = level_distribution(bms, model, lambda, prior);
    const auto m = detail::level_moments(P);
    if (!(m.var > 1e-14))
        throw DegenerateDistributionError("Var(L) vanishes; no linear fit exists");

    // E[Theta L] = integral of theta * sum_l l pi_l(lambda theta) dF.
    const QuadratureSpec spec = prior_quadrature_spec(prior);
    const double e_theta_l =
        integrate_halfline(
            [&](double theta) {
                const auto pi = steady_state(bms, model, lambda * theta);
                double mean_level = 0.0;
                for (std::size_t l = 0; l < pi.size(); ++l)
                    mean_level += static_cast<double>(l + 1) * pi[l];
                return std::log(theta) + std::log(mean_level) + prior.log_pdf(theta);
            },
            spec)
            .to_double();

    const double e_theta = prior.mean();
    LinearCoefficients coef;
    coef.beta = (e_theta_l - e_theta * m.mean) / m.var;
    coef.alpha = e_theta - coef.beta * m.mean;
    coef.class_c_violation = coef.beta < 0.0;
    return coef;
}

// Weighted least-squares line simultaneously close to both Bayes
// estimators, with all moments taken under the level distribution P.
// The returned pair is the unique minimizer of
//   xi E(r1_L - a - b L)^2 + (1 - xi) E(r2_L - a - b L)^2.
inline LinearCoefficients optimal_linear_coefficients(const std::vector<double>& r1,
                                                      const std::vector<double>& r2,
                                                      const std::vector<double>& P,
                                                      const WeightSetting& weight) {
    weight.validate();
    if (r1.size() != P.size() || r2.size() != P.size() || P.empty())
        throw DomainError("relativity vectors and level distribution must have equal length");
    const auto m = detail::level_moments(P);
    if (!(m.var > 1e-14))
        throw DegenerateDistributionError("Var(L) vanishes; no linear fit exists");

    auto mean_under_p = [&](const std::vector<double>& r) {
        double v = 0.0;
        for (std::size_t l = 0; l < P.size(); ++l) v += r[l] * P[l];
        return v;
    };
    auto cov_with_level = [&](const std::vector<double>& r, double er) {
        double v = 0.0;
        for (std::size_t l = 0; l < P.size(); ++l)
            v += static_cast<double>(l + 1) * r[l] * P[l];
        return v - er * m.mean;
    };

    const double xi = weight.xi;
    const double er1 = mean_under_p(r1);
    const double er2 = mean_under_p(r2);
    const double cov1 = cov_with_level(r1, er1);
    const double cov2 = cov_with_level(r2, er2);

    LinearCoefficients coef;
    coef.beta = (xi * cov1 + (1.0 - xi) * cov2) / m.var;
    coef.alpha = xi * er1 + (1.0 - xi) * er2 - coef.beta * m.mean;
    coef.class_c_violation = coef.beta < 0.0;
    return coef;
}

}  // namespace bml

#endif  // BML_LINEAR_RELATIVITY_HPP
