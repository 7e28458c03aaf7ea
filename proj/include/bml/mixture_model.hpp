#ifndef BML_MIXTURE_MODEL_HPP
#define BML_MIXTURE_MODEL_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "bml/errors.hpp"
#include "bml/log_value.hpp"
#include "bml/mixture_family.hpp"

namespace bml {

// Equal-weight finite mixture of claim-size families. Heavier weights
// are encoded by repeating a component, so f(x|eta) = sum_i g_i(x|eta)/k.
class MixtureClaimModel {
public:
    explicit MixtureClaimModel(std::vector<MixtureComponentFamily> components)
        : components_(std::move(components)) {
        if (components_.empty())
            throw ConfigError("mixture model needs at least one component");
    }

    // Expands small rational weights into repeated components, e.g.
    // {(2, LN), (1, N)} -> [LN, LN, N].
    static MixtureClaimModel with_counts(
        const std::vector<std::pair<int, MixtureComponentFamily>>& weighted) {
        std::vector<MixtureComponentFamily> comps;
        for (const auto& [count, fam] : weighted) {
            if (count < 1) throw ConfigError("component repeat count must be >= 1");
            for (int i = 0; i < count; ++i) comps.push_back(fam);
        }
        return MixtureClaimModel(std::move(comps));
    }

    const std::vector<MixtureComponentFamily>& components() const { return components_; }
    int size() const { return static_cast<int>(components_.size()); }

    double log_mixture_density(double x, double eta) const {
        LogValue v = LogValue::zero();
        for (const auto& c : components_)
            v += LogValue::from_log(log_density(c, x, eta));
        return (v / LogValue::from_value(static_cast<double>(size()))).log_magnitude();
    }

private:
    std::vector<MixtureComponentFamily> components_;
};

// Joint density of a sample under the mixture, expanded over every
// component assignment. Algebraically equal to the product of mixture
// densities; exponential in n, so only usable at oracle scale.
inline LogValue exact_mixture_joint(const std::vector<double>& samples,
                                    const MixtureClaimModel& model, double eta) {
    const int n = static_cast<int>(samples.size());
    const int k = model.size();
    if (n > 12) throw OracleScaleError("exact joint expansion supports n <= 12");
    if (n == 0) return LogValue::from_value(1.0);

    double total_assignments = std::pow(static_cast<double>(k), n);
    if (total_assignments > 5e8)
        throw OracleScaleError("exact joint expansion is too large for these n, k");

    LogValue total = LogValue::zero();
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
        double log_term = -n * std::log(static_cast<double>(k));  // equal weights 1/k
        for (int j = 0; j < n; ++j)
            log_term += log_density(model.components()[static_cast<std::size_t>(assign[j])],
                                    samples[static_cast<std::size_t>(j)], eta);
        total += LogValue::from_log(log_term);

        int pos = 0;
        while (pos < n) {
            if (++assign[static_cast<std::size_t>(pos)] < k) break;
            assign[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return total;
}

}  // namespace bml

#endif  // BML_MIXTURE_MODEL_HPP
