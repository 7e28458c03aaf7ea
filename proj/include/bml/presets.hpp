#ifndef BML_PRESETS_HPP
#define BML_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bml/base_premium.hpp"
#include "bml/bms.hpp"
#include "bml/gamma_prior.hpp"
#include "bml/mixture_family.hpp"
#include "bml/mixture_model.hpp"

namespace bml::presets {

inline constexpr double kDefaultLambda = 0.1474;
inline constexpr double kDefaultZeroInflation = 0.2;

// Kenya: 7 levels, start at the top, one level down per claim-free
// year, any claim sends the policyholder straight to the top.
inline BonusMalusSystem kenya() {
    return BonusMalusSystem{7, 7, JumpToTopRule{1}};
}

// 6 levels, -1 per claim-free year, +3 per claim. Registered under both
// country names used for it.
inline BonusMalusSystem hongkong() {
    return BonusMalusSystem{6, 6, StepRule{1, 3}};
}

// Brazil: 7 levels, -1 per claim-free year, +1 per claim.
inline BonusMalusSystem brazil() {
    return BonusMalusSystem{7, 7, StepRule{1, 1}};
}

inline std::optional<BonusMalusSystem> bms_by_name(const std::string& name) {
    if (name == "kenya") return kenya();
    if (name == "hongkong" || name == "ireland") return hongkong();
    if (name == "brazil") return brazil();
    return std::nullopt;
}

// Equal-weight mixture of Gamma(2l - 1, s) over the s levels; both the
// portfolio structure function and the base-premium prior.
inline GammaMixturePrior level_ladder_prior(int levels) {
    std::vector<GammaComponent> comps;
    comps.reserve(static_cast<std::size_t>(levels));
    for (int l = 1; l <= levels; ++l)
        comps.push_back({1.0 / levels,
                         GammaDistribution{2.0 * l - 1.0, static_cast<double>(levels)}});
    return GammaMixturePrior(comps);
}

inline GammaMixturePrior pi1() { return level_ladder_prior(7); }
inline GammaMixturePrior pi2() { return level_ladder_prior(6); }

inline std::optional<GammaMixturePrior> prior_by_name(const std::string& name) {
    if (name == "pi1") return pi1();
    if (name == "pi2") return pi2();
    return std::nullopt;
}

// Per-level prior Gamma(2l - 1, s) used by the level-conditional Bayes
// relativity.
inline GammaDistribution level_prior(int level, int levels) {
    return GammaDistribution{2.0 * level - 1.0, static_cast<double>(levels)};
}

struct BaseModelPreset {
    std::string name;
    MixtureClaimModel mixture;
    SufficientStats stats;
    // Models built on the Gamma+Pareto pair default to the published
    // exponent so the published premiums are reproduced.
    std::optional<ParetoExponent> pareto_exponent;
    bool zero_inflated_counts = false;
};

inline SufficientStats example1_stats() {
    SufficientStats s;
    s.n = 20;
    s.sum_log_sq = 188.7745;
    s.sum_log = 56.95046;
    s.sum_sq = 86422.7;
    s.sum = 691.2832;
    return s;
}

inline SufficientStats example2_stats() {
    SufficientStats s;
    s.n = 200;
    s.sum_log = 201.1964;
    s.sum = 676.6038;
    s.min = 0.3159083;
    return s;
}

inline MixtureClaimModel example1_mixture() {
    return MixtureClaimModel::with_counts(
        {{2, LogNormalUnitVariance{}}, {1, NormalUnitVariance{}}});
}

inline MixtureClaimModel example2_mixture() {
    return MixtureClaimModel::with_counts(
        {{1, GammaShapeTwo{}}, {1, ParetoTypeOne{0.3}}});
}

inline std::optional<BaseModelPreset> base_model_by_name(const std::string& name) {
    if (name == "model1")
        return BaseModelPreset{name, example1_mixture(), example1_stats(), std::nullopt, false};
    if (name == "model2")
        return BaseModelPreset{name, example2_mixture(), example2_stats(),
                               ParetoExponent::kAsPrinted, false};
    if (name == "model3")
        return BaseModelPreset{name, example1_mixture(), example1_stats(), std::nullopt, true};
    if (name == "model4")
        return BaseModelPreset{name, example2_mixture(), example2_stats(),
                               ParetoExponent::kAsPrinted, true};
    return std::nullopt;
}

}  // namespace bml::presets

#endif  // BML_PRESETS_HPP
