#ifndef BML_RUN_HPP
#define BML_RUN_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bml/base_premium.hpp"
#include "bml/bayes_relativity.hpp"
#include "bml/config.hpp"
#include "bml/efficiency.hpp"
#include "bml/level_distribution.hpp"
#include "bml/linear_relativity.hpp"
#include "bml/report.hpp"

namespace bml {

enum class Command {
    kSteadyState,
    kRelativities,
    kEfficiency,
    kBasePremium,
    kPrice,
};

inline std::optional<Command> command_by_name(const std::string& name) {
    if (name == "steady-state") return Command::kSteadyState;
    if (name == "relativities") return Command::kRelativities;
    if (name == "efficiency") return Command::kEfficiency;
    if (name == "base-premium") return Command::kBasePremium;
    if (name == "price") return Command::kPrice;
    return std::nullopt;
}

// Everything the relativity commands share: level distribution and the
// four per-level relativity tables at the configured lambda.
struct RelativityBundle {
    std::vector<double> level_probs;
    RelativityTable bayes_claims;
    RelativityTable bayes_level;
    RelativityTable ordinary_linear;
    RelativityTable optimal_linear;
};

// The Bayes relativities condition on a per-level prior: component l of
// the configured mixture serves level l, so the prior must carry one
// component per level.
inline GammaDistribution per_level_prior(const RunConfig& cfg, int level) {
    if (cfg.prior.size() != static_cast<std::size_t>(cfg.bms.levels))
        throw ConfigError("per-level relativities need one prior component per level (got " +
                          std::to_string(cfg.prior.size()) + " components for " +
                          std::to_string(cfg.bms.levels) + " levels)");
    return cfg.prior.components()[static_cast<std::size_t>(level - 1)].dist;
}

inline RelativityBundle compute_relativities(const RunConfig& cfg) {
    const int s = cfg.bms.levels;
    const auto P = level_distribution(cfg.bms, cfg.count_model, cfg.lambda, cfg.prior);

    // Claims-conditional estimator in its predictive-expectation form:
    // the level-l entry carries the level's prior through a_l/b_l.
    std::vector<double> r1, r2;
    for (int l = 1; l <= s; ++l) {
        const GammaDistribution prior_l = per_level_prior(cfg, l);
        r1.push_back(expected_bayes_relativity_claims(prior_l.shape, prior_l.rate,
                                                      cfg.lambda, cfg.count_model));
        r2.push_back(
            bayes_relativity_level(l, cfg.bms, cfg.count_model, cfg.lambda, prior_l));
    }
    const LinearCoefficients ord =
        ordinary_linear_coefficients(cfg.bms, cfg.count_model, cfg.lambda, cfg.prior);
    const LinearCoefficients opt =
        optimal_linear_coefficients(r1, r2, P, WeightSetting{cfg.xi});

    return RelativityBundle{
        P,
        RelativityTable(RelativityMethod::kBayesClaims, std::move(r1)),
        RelativityTable(RelativityMethod::kBayesLevel, std::move(r2)),
        RelativityTable(RelativityMethod::kOrdinaryLinear, ord, s),
        RelativityTable(RelativityMethod::kOptimalLinear, opt, s)};
}

struct BasePremiumOutcome {
    BasePremiumResult result;
    std::string reading;  // "sample-size", "as-printed", or "" when moot
};

struct PricingRow {
    int level = 0;
    double level_probability = 0.0;
    double bayes_claims = 0.0;
    double bayes_level = 0.0;
    double ordinary_linear = 0.0;
    double optimal_linear = 0.0;
    double base = 0.0;
    double premium = 0.0;  // base times the optimal-linear relativity, exact
};

struct PricingReport {
    std::vector<PricingRow> rows;
    nlohmann::json metadata;
};

inline BasePremiumOutcome compute_base_premium(const BaseModelConfig& bm,
                                               const GammaMixturePrior& prior) {
    // The exact Gamma+Pareto pair goes through its dedicated estimator
    // so the scale-exponent reading stays selectable; everything else
    // uses the generic per-family machinery, whose Pareto joint is the
    // sample-size reading.
    const auto& comps = bm.mixture.components();
    const ParetoTypeOne* pareto = nullptr;
    bool has_gamma2 = false;
    for (const auto& f : comps) {
        if (const auto* p = std::get_if<ParetoTypeOne>(&f)) pareto = p;
        if (std::holds_alternative<GammaShapeTwo>(f)) has_gamma2 = true;
    }
    if (pareto != nullptr && has_gamma2 && comps.size() == 2) {
        const ParetoExponent exponent =
            bm.pareto_exponent.value_or(ParetoExponent::kSampleSize);
        return BasePremiumOutcome{
            example2_estimator(bm.stats, prior, exponent, pareto->scale),
            exponent == ParetoExponent::kAsPrinted ? "as-printed" : "sample-size"};
    }
    if (bm.pareto_exponent == ParetoExponent::kAsPrinted)
        throw ConfigError(
            "pareto_exponent 'as-printed' is only defined for the gamma + pareto pair");
    return BasePremiumOutcome{approx_bayes_base_premium(bm.mixture, bm.stats, prior),
                              pareto != nullptr ? "sample-size" : ""};
}

namespace detail {

inline nlohmann::json run_metadata(const RunConfig& cfg, const std::string& command) {
    nlohmann::json meta;
    meta["tool_version"] = kToolVersion;
    meta["command"] = command;
    meta["bms"] = cfg.bms_name;
    meta["levels"] = cfg.bms.levels;
    meta["count_family"] = cfg.count_model.name();
    if (cfg.count_model.zero_inflated()) meta["zip_p"] = cfg.count_model.zero_inflation();
    meta["lambda"] = cfg.lambda;
    meta["prior"] = cfg.prior_name;
    meta["xi"] = cfg.xi;
    if (cfg.base_model) meta["base_model"] = cfg.base_model->name;
    return meta;
}

inline void add_value_columns(std::vector<std::string>& header,
                              const std::vector<std::string>& names, bool raw) {
    for (const auto& n : names) header.push_back(n);
    if (raw)
        for (const auto& n : names) header.push_back(n + "_raw");
}

}  // namespace detail

inline PricingReport build_pricing_report(const RunConfig& cfg) {
    if (!cfg.base_model)
        throw ConfigError("pricing needs a base_model in the config");
    const auto bundle = compute_relativities(cfg);
    const auto outcome = compute_base_premium(*cfg.base_model, cfg.prior);

    PricingReport report;
    report.metadata = detail::run_metadata(cfg, "price");
    report.metadata["base_premium"] = outcome.result.estimate;
    if (!outcome.reading.empty()) report.metadata["pareto_exponent"] = outcome.reading;
    for (int l = 1; l <= cfg.bms.levels; ++l) {
        PricingRow row;
        row.level = l;
        row.level_probability = bundle.level_probs[static_cast<std::size_t>(l - 1)];
        row.bayes_claims = bundle.bayes_claims.at(l);
        row.bayes_level = bundle.bayes_level.at(l);
        row.ordinary_linear = bundle.ordinary_linear.at(l);
        row.optimal_linear = bundle.optimal_linear.at(l);
        row.base = outcome.result.estimate;
        row.premium = level_premium(row.base, row.optimal_linear);
        report.rows.push_back(row);
    }
    return report;
}

// Runs one CLI command against a validated config, writing its report
// files under out_dir. Returns the paths written.
inline std::vector<std::string> run_command(const RunConfig& cfg, Command command,
                                            const std::string& out_dir, bool raw = false) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& text) {
        const std::string path = (fs::path(out_dir) / name).string();
        write_text_file(path, text);
        written.push_back(path);
    };
    auto emit_meta = [&](const std::string& command_name) {
        emit(command_name + ".meta.json",
             detail::run_metadata(cfg, command_name).dump(2) + "\n");
    };

    switch (command) {
        case Command::kSteadyState: {
            const auto pi = steady_state(cfg.bms, cfg.count_model, cfg.lambda);
            const auto P =
                level_distribution(cfg.bms, cfg.count_model, cfg.lambda, cfg.prior);
            std::vector<std::string> header{"level"};
            detail::add_value_columns(header, {"pi_ss", "p_level"}, raw);
            CsvWriter csv(header);
            for (int l = 1; l <= cfg.bms.levels; ++l) {
                const std::size_t i = static_cast<std::size_t>(l - 1);
                std::vector<CsvCell> row{l, format_fixed(pi[i], 3), format_fixed(P[i], 3)};
                if (raw) {
                    row.push_back(format_raw(pi[i]));
                    row.push_back(format_raw(P[i]));
                }
                csv.add_row(std::move(row));
            }
            emit("steady_state.csv", csv.text());
            emit_meta("steady_state");
            break;
        }
        case Command::kRelativities: {
            const auto bundle = compute_relativities(cfg);
            std::vector<std::string> header{"level", "weight", "prior_shape", "prior_rate"};
            detail::add_value_columns(
                header,
                {"p_level", "r_bayes_claims", "r_bayes_level", "r_ordinary_linear",
                 "r_optimal_linear"},
                raw);
            CsvWriter csv(header);
            for (int l = 1; l <= cfg.bms.levels; ++l) {
                const std::size_t i = static_cast<std::size_t>(l - 1);
                const GammaDistribution prior_l = presets::level_prior(l, cfg.bms.levels);
                const double vals[] = {bundle.level_probs[i], bundle.bayes_claims.at(l),
                                       bundle.bayes_level.at(l), bundle.ordinary_linear.at(l),
                                       bundle.optimal_linear.at(l)};
                std::vector<CsvCell> row{l, format_fixed(1.0 / cfg.bms.levels, 4),
                                         format_fixed(prior_l.shape, 0),
                                         format_fixed(prior_l.rate, 0)};
                for (double v : vals) row.push_back(format_fixed(v, 3));
                if (raw)
                    for (double v : vals) row.push_back(format_raw(v));
                csv.add_row(std::move(row));
            }
            emit("relativities.csv", csv.text());
            auto meta = detail::run_metadata(cfg, "relativities");
            meta["ordinary_linear"] = {
                {"alpha", bundle.ordinary_linear.coefficients().alpha},
                {"beta", bundle.ordinary_linear.coefficients().beta},
                {"class_c_violation",
                 bundle.ordinary_linear.coefficients().class_c_violation}};
            meta["optimal_linear"] = {
                {"alpha", bundle.optimal_linear.coefficients().alpha},
                {"beta", bundle.optimal_linear.coefficients().beta},
                {"class_c_violation",
                 bundle.optimal_linear.coefficients().class_c_violation}};
            emit("relativities.meta.json", meta.dump(2) + "\n");
            break;
        }
        case Command::kEfficiency: {
            const auto bundle = compute_relativities(cfg);
            std::vector<RelativityTable> tables{bundle.bayes_claims, bundle.bayes_level,
                                                bundle.ordinary_linear,
                                                bundle.optimal_linear};
            std::vector<std::string> names{"eff_bayes_claims", "eff_bayes_level",
                                           "eff_ordinary_linear", "eff_optimal_linear"};
            if (cfg.relativity_override) {
                tables.emplace_back(RelativityMethod::kBayesClaims,
                                    *cfg.relativity_override);
                names.push_back("eff_override");
            }
            const auto rows =
                efficiency_sweep(tables, cfg.bms, cfg.count_model, cfg.sweep.values());

            std::vector<std::string> header{"vartheta"};
            detail::add_value_columns(header, names, raw);
            CsvWriter csv(header);
            for (const auto& row : rows) {
                std::vector<CsvCell> cells{format_fixed(row.vartheta, 6)};
                for (double v : row.efficiency) cells.push_back(format_fixed(v, 6));
                if (raw)
                    for (double v : row.efficiency) cells.push_back(format_raw(v));
                csv.add_row(std::move(cells));
            }
            emit("efficiency.csv", csv.text());

            const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
            std::vector<ChartSeries> series;
            for (std::size_t t = 0; t < tables.size(); ++t) {
                ChartSeries s;
                s.label = names[t].substr(4);  // drop the eff_ prefix
                s.color = colors[t % 5];
                for (const auto& row : rows)
                    s.points.push_back({row.vartheta, row.efficiency[t]});
                series.push_back(std::move(s));
            }
            emit("efficiency.svg",
                 render_line_chart(series, "annual expected claim frequency",
                                   "Loimaranta efficiency"));
            emit_meta("efficiency");
            break;
        }
        case Command::kBasePremium: {
            if (!cfg.base_model)
                throw ConfigError("base-premium needs a base_model in the config");
            const auto outcome = compute_base_premium(*cfg.base_model, cfg.prior);

            std::vector<std::string> header{"model", "prior", "pareto_exponent"};
            detail::add_value_columns(header, {"estimate"}, raw);
            CsvWriter csv(header);
            std::vector<CsvCell> row{cfg.base_model->name, cfg.prior_name, outcome.reading,
                                     format_fixed(outcome.result.estimate, 3)};
            if (raw) row.push_back(format_raw(outcome.result.estimate));
            csv.add_row(std::move(row));
            emit("base_premium.csv", csv.text());

            std::vector<std::string> cell_header{"component", "family", "prior_component"};
            detail::add_value_columns(cell_header, {"rho", "delta"}, raw);
            CsvWriter cells(cell_header);
            for (std::size_t i = 0; i < outcome.result.rho.size(); ++i) {
                const std::string fam =
                    i < cfg.base_model->mixture.components().size()
                        ? family_name(cfg.base_model->mixture.components()[i])
                        : "kernel";
                for (std::size_t l = 0; l < outcome.result.rho[i].size(); ++l) {
                    std::vector<CsvCell> r{static_cast<int>(i + 1), fam,
                                           static_cast<int>(l + 1),
                                           format_fixed(outcome.result.rho[i][l], 3),
                                           format_fixed(outcome.result.delta[i][l], 3)};
                    if (raw) {
                        r.push_back(format_raw(outcome.result.rho[i][l]));
                        r.push_back(format_raw(outcome.result.delta[i][l]));
                    }
                    cells.add_row(std::move(r));
                }
            }
            emit("base_premium_cells.csv", cells.text());
            emit_meta("base_premium");
            break;
        }
        case Command::kPrice: {
            const PricingReport report = build_pricing_report(cfg);
            std::vector<std::string> header{"level"};
            detail::add_value_columns(header, {"relativity", "base", "premium"}, raw);
            CsvWriter csv(header);
            for (const auto& row : report.rows) {
                std::vector<CsvCell> cells{row.level, format_fixed(row.optimal_linear, 3),
                                           format_fixed(row.base, 3),
                                           format_fixed(row.premium, 3)};
                if (raw) {
                    cells.push_back(format_raw(row.optimal_linear));
                    cells.push_back(format_raw(row.base));
                    cells.push_back(format_raw(row.premium));
                }
                csv.add_row(std::move(cells));
            }
            emit("price.csv", csv.text());
            emit("price.meta.json", report.metadata.dump(2) + "\n");
            break;
        }
    }
    return written;
}

}  // namespace bml

#endif  // BML_RUN_HPP
