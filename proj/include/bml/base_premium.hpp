#ifndef BML_BASE_PREMIUM_HPP
#define BML_BASE_PREMIUM_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "bml/errors.hpp"
#include "bml/gamma_prior.hpp"
#include "bml/log_value.hpp"
#include "bml/mixture_family.hpp"
#include "bml/mixture_model.hpp"
#include "bml/quadrature.hpp"

namespace bml {

// Posterior decomposition of the base premium: per-cell Bayes estimates
// delta_{i,l} and posterior weights rho_{i,l} over mixture components i
// and prior components l. estimate = sum rho * delta by construction.
struct BasePremiumResult {
    double estimate = 0.0;
    std::vector<std::vector<double>> rho;    // [component][prior component]
    std::vector<std::vector<double>> delta;  // [component][prior component]
};

namespace detail {

struct WeightedKernel {
    double weight;  // repeat count of the component
    std::function<double(double)> log_kernel;
    std::vector<double> hints;
};

// Shared machinery for the base premium: every kernel is integrated in
// log domain against every prior component, then combined with the
// posterior weights rho.
inline BasePremiumResult base_premium_from_kernels(const std::vector<WeightedKernel>& kernels,
                                                   const GammaMixturePrior& prior) {
    const std::size_t k = kernels.size();
    const std::size_t s = prior.size();
    std::vector<std::vector<LogValue>> m(k, std::vector<LogValue>(s));
    std::vector<std::vector<double>> delta(k, std::vector<double>(s, 0.0));

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < s; ++l) {
            const auto& comp = prior.components()[l];
            QuadratureSpec spec;
            spec.breakpoints = comp.dist.hint_points();
            for (double h : kernels[i].hints)
                if (h > 0.0) spec.breakpoints.push_back(h);

            auto log_integrand = [&](double eta) {
                return kernels[i].log_kernel(eta) + comp.dist.log_pdf(eta);
            };
            const LogValue den = integrate_halfline(log_integrand, spec);
            m[i][l] = den;
            if (den.is_zero()) continue;
            const LogValue num = integrate_halfline(
                [&](double eta) { return std::log(eta) + log_integrand(eta); }, spec);
            delta[i][l] = (num / den).to_double();
        }
    }

    // rho_{i,l} = w_i omega_l m_{i,l} / sum over all cells, evaluated in
    // log space; the common 1/k mixture factor cancels.
    LogValue total = LogValue::zero();
    std::vector<std::vector<LogValue>> cell(k, std::vector<LogValue>(s));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < s; ++l) {
            cell[i][l] = LogValue::from_value(kernels[i].weight *
                                              prior.components()[l].weight) *
                         m[i][l];
            total += cell[i][l];
        }
    }
    if (total.is_zero())
        throw NumericError("all posterior cells underflowed; model cannot explain the data");

    BasePremiumResult out;
    out.rho.assign(k, std::vector<double>(s, 0.0));
    out.delta = delta;
    // Fixed left-to-right accumulation keeps results bit-stable.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < s; ++l) {
            out.rho[i][l] = (cell[i][l] / total).to_double();
            out.estimate += out.rho[i][l] * delta[i][l];
        }
    }
    return out;
}

}  // namespace detail

// Bayes estimate of the claim-size risk parameter under the mean of
// per-component i.i.d. joints, avoiding the label-switching machinery a
// full mixture posterior would need. Each (component, prior component)
// cell is a conjugate-style one-dimensional integral.
inline BasePremiumResult approx_bayes_base_premium(const MixtureClaimModel& model,
                                                   const SufficientStats& stats,
                                                   const GammaMixturePrior& prior) {
    stats.validate();
    std::vector<detail::WeightedKernel> kernels;
    kernels.reserve(static_cast<std::size_t>(model.size()));
    for (const auto& c : model.components()) {
        detail::WeightedKernel kern;
        kern.weight = 1.0;
        kern.log_kernel = [&c, stats](double eta) { return joint_log_density(c, stats, eta); };
        kern.hints = kernel_hints(c, stats);
        kernels.push_back(std::move(kern));
    }
    return detail::base_premium_from_kernels(kernels, prior);
}

// Base premium for the 2/3 LogNormal + 1/3 Normal mixture written out
// as explicit exponential-family kernels. Must agree with
// approx_bayes_base_premium on the same component list; the two code
// paths cross-check each other.
inline BasePremiumResult example1_estimator(const SufficientStats& stats,
                                            const GammaMixturePrior& prior) {
    stats.validate();
    const double n = stats.n;
    const double t1 = stats.n == 0 ? 0.0 : stats.require(stats.sum_log_sq, "sum_log_sq");
    const double t2 = stats.n == 0 ? 0.0 : stats.require(stats.sum_log, "sum_log");
    const double t3 = stats.n == 0 ? 0.0 : stats.require(stats.sum_sq, "sum_sq");
    const double t4 = stats.n == 0 ? 0.0 : stats.require(stats.sum, "sum");

    std::vector<detail::WeightedKernel> kernels(2);
    // The +2 T2 inside the exponent is the log-normal Jacobian; it does
    // not cancel between the two branches and must stay.
    kernels[0].weight = 2.0;
    kernels[0].log_kernel = [=](double eta) {
        return -0.5 * (t1 - 2.0 * eta * t2 + 2.0 * t2 + n * eta * eta);
    };
    kernels[1].weight = 1.0;
    kernels[1].log_kernel = [=](double eta) {
        return -0.5 * (t3 - 2.0 * eta * t4 + n * eta * eta);
    };
    if (stats.n > 0) {
        const double sd = 1.0 / std::sqrt(n);
        kernels[0].hints = {t2 / n - 6 * sd, t2 / n - 2 * sd, t2 / n,
                            t2 / n + 2 * sd, t2 / n + 6 * sd};
        kernels[1].hints = {t4 / n - 6 * sd, t4 / n - 2 * sd, t4 / n,
                            t4 / n + 2 * sd, t4 / n + 6 * sd};
    }
    return detail::base_premium_from_kernels(kernels, prior);
}

// Which exponent the Pareto scale carries in the 1/2 Gamma(2, eta) +
// 1/2 Pareto(scale, eta) estimator. The i.i.d. joint gives scale^{n
// eta}; the published closed form carries scale^{2 eta} instead, and
// only the published reading reproduces the published premiums.
enum class ParetoExponent {
    kSampleSize,  // scale^{n eta}, the derived joint
    kAsPrinted,   // scale^{2 eta}
};

inline BasePremiumResult example2_estimator(const SufficientStats& stats,
                                            const GammaMixturePrior& prior,
                                            ParetoExponent exponent = ParetoExponent::kSampleSize,
                                            double scale = 0.3) {
    stats.validate();
    const double n = stats.n;
    const double t2 = stats.n == 0 ? 0.0 : stats.require(stats.sum_log, "sum_log");
    const double t4 = stats.n == 0 ? 0.0 : stats.require(stats.sum, "sum");
    const bool pareto_support =
        stats.n == 0 || stats.require(stats.min, "min") >= scale;
    const double scale_exponent =
        (exponent == ParetoExponent::kSampleSize) ? n : 2.0;

    std::vector<detail::WeightedKernel> kernels(2);
    kernels[0].weight = 1.0;
    kernels[0].log_kernel = [=](double eta) {
        return 2.0 * n * std::log(eta) + t2 - eta * t4;
    };
    kernels[1].weight = 1.0;
    kernels[1].log_kernel = [=](double eta) {
        if (!pareto_support) return -std::numeric_limits<double>::infinity();
        return n * std::log(eta) + scale_exponent * eta * std::log(scale) -
               (eta + 1.0) * t2;
    };
    if (stats.n > 0) {
        if (t4 > 0.0) {
            const double m = 2.0 * n / t4, sd = std::sqrt(2.0 * n) / t4;
            kernels[0].hints = {m - 6 * sd, m - 2 * sd, m, m + 2 * sd, m + 6 * sd};
        }
        const double rate = t2 - scale_exponent * std::log(scale);
        if (pareto_support && rate > 0.0) {
            const double m = n / rate, sd = std::sqrt(n) / rate;
            kernels[1].hints = {m - 6 * sd, m - 2 * sd, m, m + 2 * sd, m + 6 * sd};
        }
    }
    return detail::base_premium_from_kernels(kernels, prior);
}

// Premium paid at a level: base premium times the level's relativity.
inline double level_premium(double base, double relativity) {
    if (!(base > 0.0)) throw DomainError("base premium must be positive");
    if (!(relativity > 0.0)) throw DomainError("relativity must be positive");
    return base * relativity;
}

}  // namespace bml

#endif  // BML_BASE_PREMIUM_HPP
