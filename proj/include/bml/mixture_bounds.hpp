#ifndef BML_MIXTURE_BOUNDS_HPP
#define BML_MIXTURE_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "bml/errors.hpp"
#include "bml/log_value.hpp"
#include "bml/mixture_model.hpp"
#include "bml/partition.hpp"

namespace bml {

// M^k / k^n * P(n): the error budget for replacing the product of
// mixture densities by the mean of per-component i.i.d. joints.
inline double mixture_joint_error_bound(double density_sup, int k, int n) {
    if (!(density_sup > 0.0)) throw DomainError("density sup bound must be positive");
    if (k < 1) throw DomainError("component count must be >= 1");
    return std::pow(density_sup, k) * std::pow(static_cast<double>(k), -n) *
           static_cast<double>(partition_count(n));
}

struct MixtureJointCheck {
    double lhs = 0.0;    // |prod f(x_j) - (1/k) sum_i g_i(joint)|
    double bound = 0.0;  // M^k / k^n * P(n)
    double density_sup = 0.0;
    bool holds() const { return lhs <= bound; }
};

// Numeric sup of max{f, g_1, ..., g_k} over a grid on the sample's
// bounding interval; the caller may override with a sharper bound.
inline double density_sup_on_samples(const std::vector<double>& samples,
                                     const MixtureClaimModel& model, double eta,
                                     int grid_points = 10000) {
    if (samples.empty()) throw DomainError("need at least one sample");
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *lo_it, hi = *hi_it;
    double sup = 0.0;
    for (int i = 0; i <= grid_points; ++i) {
        const double x = lo + (hi - lo) * i / grid_points;
        sup = std::max(sup, std::exp(model.log_mixture_density(x, eta)));
        for (const auto& c : model.components())
            sup = std::max(sup, std::exp(log_density(c, x, eta)));
    }
    return sup;
}

// Evaluates both sides of the approximation error inequality on a
// concrete sample.
inline MixtureJointCheck check_mixture_joint_bound(const std::vector<double>& samples,
                                                   const MixtureClaimModel& model,
                                                   double eta,
                                                   double density_sup_override = 0.0) {
    const int n = static_cast<int>(samples.size());
    const int k = model.size();

    LogValue product = LogValue::from_value(1.0);
    for (double x : samples)
        product *= LogValue::from_log(model.log_mixture_density(x, eta));

    LogValue approx = LogValue::zero();
    const SufficientStats stats = SufficientStats::from_samples(samples);
    for (const auto& c : model.components())
        approx += LogValue::from_log(joint_log_density(c, stats, eta));
    approx = approx / LogValue::from_value(static_cast<double>(k));

    MixtureJointCheck out;
    out.density_sup = density_sup_override > 0.0
                          ? density_sup_override
                          : density_sup_on_samples(samples, model, eta);
    out.lhs = std::fabs((product - approx).to_double());
    out.bound = mixture_joint_error_bound(out.density_sup, k, n);
    return out;
}

}  // namespace bml

#endif  // BML_MIXTURE_BOUNDS_HPP
