#ifndef BML_EFFICIENCY_HPP
#define BML_EFFICIENCY_HPP

#include <map>
#include <string>
#include <vector>

#include "bml/bms.hpp"
#include "bml/claim_count.hpp"
#include "bml/derivative.hpp"
#include "bml/errors.hpp"
#include "bml/level_distribution.hpp"
#include "bml/linear_relativity.hpp"

namespace bml {

// Mean relativity paid in the long run by a policyholder with annual
// expected claim frequency vartheta.
inline double mean_relativity(const std::vector<double>& relativities,
                              const BonusMalusSystem& bms, const ClaimCountModel& model,
                              double vartheta) {
    const auto pi = steady_state(bms, model, vartheta);
    if (pi.size() != relativities.size())
        throw DomainError("relativity table does not match the number of levels");
    double r_bar = 0.0;
    for (std::size_t l = 0; l < pi.size(); ++l) r_bar += relativities[l] * pi[l];
    return r_bar;
}

// Elasticity d ln Rbar / d ln vartheta of the long-run mean relativity:
// how strongly the premium responds to the claim frequency. The table
// is held fixed, not re-estimated per vartheta. Central difference with
// relative log-step h.
inline double loimaranta_efficiency(const std::vector<double>& relativities,
                                    const BonusMalusSystem& bms,
                                    const ClaimCountModel& model, double vartheta,
                                    double h = 1e-4) {
    if (!(vartheta > 0.0)) throw DomainError("vartheta must be positive");
    return log_derivative(
        [&](double t) {
            const double r_bar = mean_relativity(relativities, bms, model, t);
            if (!(r_bar > 0.0)) throw NumericError("mean relativity is not positive");
            return r_bar;
        },
        vartheta, h);
}

inline double loimaranta_efficiency(const RelativityTable& table,
                                    const BonusMalusSystem& bms,
                                    const ClaimCountModel& model, double vartheta,
                                    double h = 1e-4) {
    return loimaranta_efficiency(table.values(), bms, model, vartheta, h);
}

struct EfficiencySweepRow {
    double vartheta = 0.0;
    std::vector<double> efficiency;  // one per table, in input order
};

// One row per grid frequency with the efficiency of every supplied
// table; deterministic given inputs.
inline std::vector<EfficiencySweepRow> efficiency_sweep(
    const std::vector<RelativityTable>& tables, const BonusMalusSystem& bms,
    const ClaimCountModel& model, const std::vector<double>& grid, double h = 1e-4) {
    if (grid.empty()) throw DomainError("efficiency sweep needs a nonempty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw DomainError("sweep grid must be strictly positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw DomainError("sweep grid must be strictly increasing");
    }
    std::vector<EfficiencySweepRow> rows;
    rows.reserve(grid.size());
    for (double t : grid) {
        EfficiencySweepRow row;
        row.vartheta = t;
        row.efficiency.reserve(tables.size());
        for (const auto& table : tables)
            row.efficiency.push_back(loimaranta_efficiency(table, bms, model, t, h));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace bml

#endif  // BML_EFFICIENCY_HPP
