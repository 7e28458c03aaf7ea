#ifndef BML_CONFIG_HPP
#define BML_CONFIG_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bml/base_premium.hpp"
#include "bml/bms.hpp"
#include "bml/claim_count.hpp"
#include "bml/errors.hpp"
#include "bml/gamma_prior.hpp"
#include "bml/presets.hpp"

namespace bml {

struct SweepGrid {
    double start = 0.01;
    double stop = 1.0;
    int points = 100;

    void validate() const {
        if (!(start > 0.0)) throw ConfigError("sweep.start must be positive");
        if (!(stop > start)) throw ConfigError("sweep.stop must exceed sweep.start");
        if (points < 1) throw ConfigError("sweep.points must be >= 1");
    }

    std::vector<double> values() const {
        validate();
        std::vector<double> g;
        g.reserve(static_cast<std::size_t>(points));
        if (points == 1) {
            g.push_back(start);
            return g;
        }
        for (int i = 0; i < points; ++i)
            g.push_back(start + (stop - start) * i / (points - 1));
        return g;
    }
};

struct BaseModelConfig {
    std::string name;  // preset name or "custom"
    MixtureClaimModel mixture;
    SufficientStats stats;
    std::optional<ParetoExponent> pareto_exponent;
    bool zero_inflated_counts = false;
};

// A fully validated run configuration; every embedded invariant is
// checked at parse time.
struct RunConfig {
    static constexpr const char* kVersion = "v1";

    std::string bms_name = "kenya";  // preset name or "custom"
    BonusMalusSystem bms = presets::kenya();
    ClaimCountModel count_model = ClaimCountModel::poisson();
    double lambda = presets::kDefaultLambda;
    std::string prior_name = "pi1";  // preset name or "custom"
    GammaMixturePrior prior = presets::pi1();
    double xi = 0.5;
    std::optional<BaseModelConfig> base_model;
    SweepGrid sweep;
    std::optional<std::vector<double>> relativity_override;

    nlohmann::json to_json() const;
    bool operator==(const RunConfig& o) const { return to_json() == o.to_json(); }
};

namespace detail {

using nlohmann::json;

inline const json& require_field(const json& j, const std::string& key,
                                 const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError("missing field " + path + "." + key);
    return *it;
}

inline double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError("field " + path + " must be a number");
    return j.get<double>();
}

inline int int_at(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ConfigError("field " + path + " must be an integer");
    return j.get<int>();
}

inline BonusMalusSystem parse_bms(const json& j, const std::string& path) {
    if (j.is_string()) {
        const auto preset = presets::bms_by_name(j.get<std::string>());
        if (!preset)
            throw ConfigError("unknown BMS preset '" + j.get<std::string>() + "' at " + path);
        return *preset;
    }
    if (!j.is_object()) throw ConfigError("field " + path + " must be a preset name or object");
    BonusMalusSystem bms;
    bms.levels = int_at(require_field(j, "levels", path), path + ".levels");
    bms.start_level = int_at(require_field(j, "start_level", path), path + ".start_level");
    const json& rj = require_field(j, "rule", path);
    const std::string type =
        require_field(rj, "type", path + ".rule").get<std::string>();
    if (type == "step") {
        StepRule r;
        r.bonus_step = int_at(require_field(rj, "bonus_step", path + ".rule"),
                              path + ".rule.bonus_step");
        r.malus_step = int_at(require_field(rj, "malus_step", path + ".rule"),
                              path + ".rule.malus_step");
        bms.rule = r;
    } else if (type == "jump-to-top") {
        JumpToTopRule r;
        r.bonus_step = int_at(require_field(rj, "bonus_step", path + ".rule"),
                              path + ".rule.bonus_step");
        bms.rule = r;
    } else if (type == "explicit") {
        ExplicitRule r;
        r.saturation = int_at(require_field(rj, "saturation", path + ".rule"),
                              path + ".rule.saturation");
        const json& targets = require_field(rj, "targets", path + ".rule");
        if (!targets.is_array())
            throw ConfigError("field " + path + ".rule.targets must be an array");
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const std::string tpath = path + ".rule.targets[" + std::to_string(i) + "]";
            const json& t = targets[i];
            r.targets[{int_at(require_field(t, "level", tpath), tpath + ".level"),
                       int_at(require_field(t, "claims", tpath), tpath + ".claims")}] =
                int_at(require_field(t, "to", tpath), tpath + ".to");
        }
        bms.rule = r;
    } else {
        throw ConfigError("unknown rule type '" + type + "' at " + path + ".rule.type");
    }
    try {
        bms.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(e.what()) + " at " + path);
    }
    return bms;
}

inline GammaMixturePrior parse_prior(const json& j, const std::string& path) {
    if (j.is_string()) {
        const auto preset = presets::prior_by_name(j.get<std::string>());
        if (!preset)
            throw ConfigError("unknown prior preset '" + j.get<std::string>() + "' at " + path);
        return *preset;
    }
    if (!j.is_object()) throw ConfigError("field " + path + " must be a preset name or object");
    const json& comps = require_field(j, "components", path);
    if (!comps.is_array() || comps.empty())
        throw ConfigError("field " + path + ".components must be a nonempty array");
    std::vector<GammaComponent> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string cpath = path + ".components[" + std::to_string(i) + "]";
        const json& c = comps[i];
        GammaComponent gc;
        gc.weight = number_at(require_field(c, "weight", cpath), cpath + ".weight");
        gc.dist.shape = number_at(require_field(c, "shape", cpath), cpath + ".shape");
        gc.dist.rate = number_at(require_field(c, "rate", cpath), cpath + ".rate");
        out.push_back(gc);
    }
    try {
        return GammaMixturePrior(out);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(e.what()) + " at " + path + ".components");
    }
}

inline MixtureComponentFamily parse_family(const json& j, const std::string& path) {
    std::string name;
    double scale = 0.3;
    if (j.is_string()) {
        name = j.get<std::string>();
    } else if (j.is_object()) {
        name = require_field(j, "family", path).get<std::string>();
        if (j.contains("scale")) scale = number_at(j["scale"], path + ".scale");
    } else {
        throw ConfigError("field " + path + " must be a family name or object");
    }
    if (name == "log-normal-unit-variance") return LogNormalUnitVariance{};
    if (name == "normal-unit-variance") return NormalUnitVariance{};
    if (name == "gamma-shape-two") return GammaShapeTwo{};
    if (name == "pareto-type-one") {
        if (!(scale > 0.0)) throw ConfigError("field " + path + ".scale must be positive");
        return ParetoTypeOne{scale};
    }
    throw ConfigError("unknown component family '" + name + "' at " + path);
}

inline SufficientStats parse_stats(const json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError("field " + path + " must be an object");
    SufficientStats s;
    s.n = int_at(require_field(j, "n", path), path + ".n");
    auto opt = [&](const char* key) -> std::optional<double> {
        if (!j.contains(key)) return std::nullopt;
        return number_at(j[key], path + "." + key);
    };
    s.sum_log_sq = opt("sum_log_sq");
    s.sum_log = opt("sum_log");
    s.sum_sq = opt("sum_sq");
    s.sum = opt("sum");
    s.min = opt("min");
    try {
        s.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string(e.what()) + " at " + path);
    }
    return s;
}

inline BaseModelConfig parse_base_model(const json& j, const std::string& path) {
    if (j.is_string()) {
        const auto preset = presets::base_model_by_name(j.get<std::string>());
        if (!preset)
            throw ConfigError("unknown base model preset '" + j.get<std::string>() +
                              "' at " + path);
        return BaseModelConfig{preset->name, preset->mixture, preset->stats,
                               preset->pareto_exponent, preset->zero_inflated_counts};
    }
    if (!j.is_object()) throw ConfigError("field " + path + " must be a preset name or object");
    const json& fams = require_field(j, "families", path);
    if (!fams.is_array() || fams.empty())
        throw ConfigError("field " + path + ".families must be a nonempty array");
    std::vector<MixtureComponentFamily> comps;
    for (std::size_t i = 0; i < fams.size(); ++i)
        comps.push_back(parse_family(fams[i], path + ".families[" + std::to_string(i) + "]"));
    BaseModelConfig out{"custom", MixtureClaimModel(std::move(comps)),
                        parse_stats(require_field(j, "stats", path), path + ".stats"),
                        std::nullopt, false};
    if (j.contains("pareto_exponent")) {
        const std::string v = j["pareto_exponent"].get<std::string>();
        if (v == "sample-size") out.pareto_exponent = ParetoExponent::kSampleSize;
        else if (v == "as-printed") out.pareto_exponent = ParetoExponent::kAsPrinted;
        else throw ConfigError("field " + path + ".pareto_exponent must be 'sample-size' or 'as-printed'");
    }
    return out;
}

}  // namespace detail

inline RunConfig parse_config_json(const nlohmann::json& j) {
    using detail::require_field;
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    const std::string version = require_field(j, "version", "$").get<std::string>();
    if (version != RunConfig::kVersion)
        throw ConfigError("unsupported config version '" + version + "' (expected v1)");

    RunConfig cfg;
    if (j.contains("bms")) {
        cfg.bms = detail::parse_bms(j["bms"], "$.bms");
        cfg.bms_name = j["bms"].is_string() ? j["bms"].get<std::string>() : "custom";
    }

    // The base-model preset implies its count family; an explicit
    // claim_count field overrides it.
    if (j.contains("base_model")) {
        cfg.base_model = detail::parse_base_model(j["base_model"], "$.base_model");
        if (cfg.base_model->zero_inflated_counts)
            cfg.count_model = ClaimCountModel::zi_poisson(presets::kDefaultZeroInflation);
    }
    if (j.contains("claim_count")) {
        const nlohmann::json& cj = j["claim_count"];
        const std::string family =
            require_field(cj, "family", "$.claim_count").get<std::string>();
        if (family == "poisson") {
            cfg.count_model = ClaimCountModel::poisson();
        } else if (family == "zip") {
            double p = presets::kDefaultZeroInflation;
            if (cj.contains("p")) p = detail::number_at(cj["p"], "$.claim_count.p");
            try {
                cfg.count_model = ClaimCountModel::zi_poisson(p);
            } catch (const DomainError& e) {
                throw ConfigError(std::string(e.what()) + " at $.claim_count.p");
            }
        } else {
            throw ConfigError("unknown claim count family '" + family +
                              "' at $.claim_count.family");
        }
    }

    if (j.contains("lambda")) {
        cfg.lambda = detail::number_at(j["lambda"], "$.lambda");
        if (!(cfg.lambda > 0.0)) throw ConfigError("field $.lambda must be positive");
    }
    if (j.contains("prior")) {
        cfg.prior = detail::parse_prior(j["prior"], "$.prior");
        cfg.prior_name = j["prior"].is_string() ? j["prior"].get<std::string>() : "custom";
    } else if (j.contains("bms")) {
        // Preset priors follow the level count unless given explicitly.
        cfg.prior = presets::level_ladder_prior(cfg.bms.levels);
        cfg.prior_name = cfg.bms.levels == 7 ? "pi1" : (cfg.bms.levels == 6 ? "pi2" : "custom");
    }
    if (j.contains("xi")) {
        cfg.xi = detail::number_at(j["xi"], "$.xi");
        if (!(cfg.xi >= 0.0 && cfg.xi <= 1.0))
            throw ConfigError("field $.xi must lie in [0, 1]");
    }
    if (j.contains("sweep")) {
        const nlohmann::json& sj = j["sweep"];
        cfg.sweep.start = detail::number_at(require_field(sj, "start", "$.sweep"), "$.sweep.start");
        cfg.sweep.stop = detail::number_at(require_field(sj, "stop", "$.sweep"), "$.sweep.stop");
        cfg.sweep.points = detail::int_at(require_field(sj, "points", "$.sweep"), "$.sweep.points");
        try {
            cfg.sweep.validate();
        } catch (const ConfigError& e) {
            throw ConfigError(std::string(e.what()) + " at $.sweep");
        }
    }
    if (j.contains("relativity_override")) {
        const nlohmann::json& rj = j["relativity_override"];
        if (!rj.is_array() || rj.size() != static_cast<std::size_t>(cfg.bms.levels))
            throw ConfigError("field $.relativity_override must list one value per level");
        std::vector<double> vals;
        for (std::size_t i = 0; i < rj.size(); ++i) {
            vals.push_back(detail::number_at(rj[i], "$.relativity_override[" +
                                                        std::to_string(i) + "]"));
            if (!(vals.back() > 0.0))
                throw ConfigError("field $.relativity_override[" + std::to_string(i) +
                                  "] must be positive");
        }
        cfg.relativity_override = std::move(vals);
    }
    return cfg;
}

inline RunConfig parse_config_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config_json(j);
}

inline RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

inline nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["version"] = kVersion;

    nlohmann::json bj;
    bj["levels"] = bms.levels;
    bj["start_level"] = bms.start_level;
    if (const auto* st = std::get_if<StepRule>(&bms.rule)) {
        bj["rule"] = {{"type", "step"},
                      {"bonus_step", st->bonus_step},
                      {"malus_step", st->malus_step}};
    } else if (const auto* jt = std::get_if<JumpToTopRule>(&bms.rule)) {
        bj["rule"] = {{"type", "jump-to-top"}, {"bonus_step", jt->bonus_step}};
    } else {
        const auto& ex = std::get<ExplicitRule>(bms.rule);
        nlohmann::json targets = nlohmann::json::array();
        for (const auto& [key, to] : ex.targets)
            targets.push_back(
                {{"level", key.first}, {"claims", key.second}, {"to", to}});
        bj["rule"] = {{"type", "explicit"}, {"saturation", ex.saturation}, {"targets", targets}};
    }
    j["bms"] = bj;

    if (count_model.zero_inflated())
        j["claim_count"] = {{"family", "zip"}, {"p", count_model.zero_inflation()}};
    else
        j["claim_count"] = {{"family", "poisson"}};

    j["lambda"] = lambda;

    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : prior.components())
        comps.push_back(
            {{"weight", c.weight}, {"shape", c.dist.shape}, {"rate", c.dist.rate}});
    j["prior"] = {{"components", comps}};

    j["xi"] = xi;
    j["sweep"] = {{"start", sweep.start}, {"stop", sweep.stop}, {"points", sweep.points}};

    if (base_model) {
        nlohmann::json bm;
        nlohmann::json fams = nlohmann::json::array();
        for (const auto& f : base_model->mixture.components()) {
            nlohmann::json fj = {{"family", family_name(f)}};
            if (const auto* p = std::get_if<ParetoTypeOne>(&f)) fj["scale"] = p->scale;
            fams.push_back(fj);
        }
        bm["families"] = fams;
        nlohmann::json stats;
        stats["n"] = base_model->stats.n;
        if (base_model->stats.sum_log_sq) stats["sum_log_sq"] = *base_model->stats.sum_log_sq;
        if (base_model->stats.sum_log) stats["sum_log"] = *base_model->stats.sum_log;
        if (base_model->stats.sum_sq) stats["sum_sq"] = *base_model->stats.sum_sq;
        if (base_model->stats.sum) stats["sum"] = *base_model->stats.sum;
        if (base_model->stats.min) stats["min"] = *base_model->stats.min;
        bm["stats"] = stats;
        if (base_model->pareto_exponent)
            bm["pareto_exponent"] = *base_model->pareto_exponent == ParetoExponent::kAsPrinted
                                        ? "as-printed"
                                        : "sample-size";
        j["base_model"] = bm;
    }
    if (relativity_override) j["relativity_override"] = *relativity_override;
    return j;
}

}  // namespace bml

#endif  // BML_CONFIG_HPP
