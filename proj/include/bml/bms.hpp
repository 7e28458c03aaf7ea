#ifndef BML_BMS_HPP
#define BML_BMS_HPP

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bml/claim_count.hpp"
#include "bml/errors.hpp"
#include "bml/matrix.hpp"

namespace bml {

// Claim-free year: down bonus_step levels; each claim: up malus_step.
struct StepRule {
    int bonus_step = 1;
    int malus_step = 1;
};

// Claim-free year: down bonus_step levels; any claim: straight to the
// maximum-malus level.
struct JumpToTopRule {
    int bonus_step = 1;
};

// Arbitrary deterministic rule: target per (level, claim count), with a
// saturation count beyond which targets repeat.
struct ExplicitRule {
    std::map<std::pair<int, int>, int> targets;  // (level, claims) -> level
    int saturation = 1;
};

using TransitionRule = std::variant<StepRule, JumpToTopRule, ExplicitRule>;

// A Bonus-Malus system. Level 1 is the maximum-bonus (cheapest) level,
// level s the maximum-malus level.
struct BonusMalusSystem {
    int levels = 0;       // s >= 2
    int start_level = 0;  // in [1, s]
    TransitionRule rule;

    void validate() const {
        if (levels < 2) throw ConfigError("a BMS needs at least 2 levels");
        if (start_level < 1 || start_level > levels)
            throw ConfigError("start level must lie in [1, levels]");
        if (const auto* st = std::get_if<StepRule>(&rule)) {
            if (st->bonus_step < 1 || st->malus_step < 1)
                throw ConfigError("step rule needs positive bonus and malus steps");
        } else if (const auto* jt = std::get_if<JumpToTopRule>(&rule)) {
            if (jt->bonus_step < 1) throw ConfigError("jump-to-top rule needs a positive bonus step");
        } else if (const auto* ex = std::get_if<ExplicitRule>(&rule)) {
            if (ex->saturation < 1) throw ConfigError("explicit rule needs saturation >= 1");
            for (const auto& [key, to] : ex->targets)
                if (to < 1 || to > levels)
                    throw ConfigError("explicit rule target out of [1, levels]");
        }
    }
};

// Claim count from which every T(n) is identical to T(n*): 1 for
// jump-to-top, ceil((s-1)/malus_step) + 1 for step rules, declared for
// explicit rules. Makes the infinite sum in the transition matrix exact.
inline int saturation_count(const BonusMalusSystem& bms) {
    if (std::holds_alternative<JumpToTopRule>(bms.rule)) return 1;
    if (const auto* st = std::get_if<StepRule>(&bms.rule)) {
        const int steps = (bms.levels - 1 + st->malus_step - 1) / st->malus_step;
        return steps + 1;
    }
    return std::get<ExplicitRule>(bms.rule).saturation;
}

// 0/1 matrix T(n): row i has a single 1 at the level reached from i
// when n claims are reported in a year.
inline SquareMatrix compile_transition_table(const BonusMalusSystem& bms, int n) {
    if (n < 0) throw DomainError("claim count must be nonnegative");
    bms.validate();
    const int s = bms.levels;
    SquareMatrix T(static_cast<std::size_t>(s));
    for (int i = 1; i <= s; ++i) {
        int target;
        if (const auto* st = std::get_if<StepRule>(&bms.rule)) {
            target = (n == 0) ? std::max(i - st->bonus_step, 1)
                              : std::min(i + n * st->malus_step, s);
        } else if (const auto* jt = std::get_if<JumpToTopRule>(&bms.rule)) {
            target = (n == 0) ? std::max(i - jt->bonus_step, 1) : s;
        } else {
            const auto& ex = std::get<ExplicitRule>(bms.rule);
            const int n_eff = std::min(n, ex.saturation);
            const auto it = ex.targets.find({i, n_eff});
            if (it == ex.targets.end())
                throw MalformedRuleError("explicit rule has no target for level " +
                                         std::to_string(i) + " with " +
                                         std::to_string(n_eff) + " claims");
            target = it->second;
        }
        T(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(target - 1)) = 1.0;
    }
    return T;
}

namespace detail {

inline SquareMatrix transition_matrix_rows(const BonusMalusSystem& bms,
                                           const ClaimCountModel& model,
                                           const std::vector<double>& mu_by_level) {
    bms.validate();
    const int s = bms.levels;
    const int n_star = saturation_count(bms);
    std::vector<SquareMatrix> tables;
    tables.reserve(static_cast<std::size_t>(n_star) + 1);
    for (int n = 0; n <= n_star; ++n) tables.push_back(compile_transition_table(bms, n));

    SquareMatrix A(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        const double mu = mu_by_level[static_cast<std::size_t>(i)];
        if (!(mu > 0.0)) throw DomainError("claim count mean must be positive");
        for (int n = 0; n < n_star; ++n) {
            const double p = model.pmf(n, mu);
            for (int j = 0; j < s; ++j)
                A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) +=
                    tables[static_cast<std::size_t>(n)](static_cast<std::size_t>(i),
                                                        static_cast<std::size_t>(j)) *
                    p;
        }
        // Exact tail: T(n) repeats from n* on, so P(N >= n*) lands there.
        const double tail = model.tail_mass(n_star, mu);
        for (int j = 0; j < s; ++j)
            A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) +=
                tables[static_cast<std::size_t>(n_star)](static_cast<std::size_t>(i),
                                                         static_cast<std::size_t>(j)) *
                tail;
    }
    return A;
}

}  // namespace detail

// Transition matrix for a homogeneous mean claim count mu.
inline StochasticMatrix transition_matrix(const BonusMalusSystem& bms,
                                          const ClaimCountModel& model, double mu) {
    if (!(mu > 0.0)) throw DomainError("claim count mean must be positive");
    std::vector<double> mus(static_cast<std::size_t>(bms.levels), mu);
    return StochasticMatrix(detail::transition_matrix_rows(bms, model, mus));
}

// Per-level variant: row i uses its own mean mu_i.
inline StochasticMatrix transition_matrix(const BonusMalusSystem& bms,
                                          const ClaimCountModel& model,
                                          const std::vector<double>& mu_by_level) {
    if (mu_by_level.size() != static_cast<std::size_t>(bms.levels))
        throw DomainError("need one mean per level");
    return StochasticMatrix(detail::transition_matrix_rows(bms, model, mu_by_level));
}

}  // namespace bml

#endif  // BML_BMS_HPP
