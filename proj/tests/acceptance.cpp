// Acceptance suite: one verdict line per criterion, nonzero exit if any
// criterion fails. `--criterion N` runs a single criterion.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "bml/bml.hpp"

namespace {

using bml::ClaimCountModel;
using bml::GammaDistribution;
using bml::GammaMixturePrior;
using bml::LogValue;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

// ---- published reference values -------------------------------------

const double kLambda = 0.1474;

const std::vector<double> kKenyaLevelProbs{0.486, 0.051, 0.061, 0.073,
                                           0.088, 0.108, 0.133};
const std::vector<double> kKenyaR2{0.127, 0.513, 0.783, 1.065, 1.358, 1.663, 1.980};
const std::vector<double> kKenyaRLin{0.796, 0.894, 0.992, 1.090, 1.188, 1.287, 1.385};
const std::vector<double> kKenyaROpt{0.139, 0.436, 0.732, 1.029, 1.326, 1.622, 1.919};
const std::vector<double> kHongKongROpt{0.917, 1.036, 1.154, 1.273, 1.392, 1.510};
const std::vector<double> kBrazilROpt{0.141, 0.499, 0.846, 1.199, 1.551, 1.904, 2.257};

struct PremiumTable {
    const char* name;
    bml::BonusMalusSystem bms;
    const std::vector<double>* printed_ropt;
    const char* prior_name;
    std::vector<double> premiums_model1;
    std::vector<double> premiums_model2;
};

std::vector<PremiumTable> premium_tables() {
    return {
        {"kenya", bml::presets::kenya(), &kKenyaROpt, "pi1",
         {0.376, 1.179, 1.983, 2.786, 3.590, 4.393, 5.196},
         {0.137, 0.429, 0.721, 1.014, 1.306, 1.598, 1.890}},
        {"hongkong", bml::presets::hongkong(), &kHongKongROpt, "pi2",
         {2.480, 2.802, 3.124, 3.446, 3.768, 4.090},
         {0.902, 1.019, 1.137, 1.254, 1.371, 1.488}},
        {"brazil", bml::presets::brazil(), &kBrazilROpt, "pi1",
         {0.381, 1.350, 2.318, 3.287, 4.255, 5.223, 6.192},
         {0.139, 0.491, 0.843, 1.196, 1.548, 1.900, 2.252}},
    };
}

// ---- independent oracles ---------------------------------------------

// -1/Top level distribution through Laplace transforms of the prior.
std::vector<double> kenya_levels_closed(double lambda, const GammaMixturePrior& prior) {
    std::vector<double> P(7, 0.0);
    P[0] = prior.laplace(6.0 * lambda);
    for (int l = 2; l <= 7; ++l)
        P[static_cast<std::size_t>(l - 1)] =
            prior.laplace((7.0 - l) * lambda) - prior.laplace((8.0 - l) * lambda);
    return P;
}

double kenya_r2_closed(int level, double a, double b, double lambda) {
    if (level == 1) return a / (b + 6.0 * lambda);
    const double c1 = b + (7.0 - level) * lambda;
    const double c2 = b + (8.0 - level) * lambda;
    return a * (std::pow(c1, -(a + 1.0)) - std::pow(c2, -(a + 1.0))) /
           (std::pow(c1, -a) - std::pow(c2, -a));
}

// Deterministic draws on the raw mt19937 word stream.
struct Draws {
    std::mt19937 rng;
    explicit Draws(unsigned seed) : rng(seed) {}
    double uniform() { return (rng() >> 5) * (1.0 / 134217728.0); }
    double normal() {
        const double u1 = std::max(uniform(), 1e-12), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    double exponential() { return -std::log(std::max(uniform(), 1e-12)); }
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    }
};

double max_abs_dev(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

std::vector<double> kenya_r2_computed(const ClaimCountModel& model, double lambda) {
    std::vector<double> r2;
    for (int l = 1; l <= 7; ++l)
        r2.push_back(bml::bayes_relativity_level(l, bml::presets::kenya(), model, lambda,
                                                 bml::presets::level_prior(l, 7)));
    return r2;
}

// ---- criteria ---------------------------------------------------------

Outcome criterion1_level_distribution() {
    const auto P = bml::level_distribution(bml::presets::kenya(),
                                           ClaimCountModel::poisson(), kLambda,
                                           bml::presets::pi1());
    const auto closed = kenya_levels_closed(kLambda, bml::presets::pi1());
    const double dev_table = max_abs_dev(P, kKenyaLevelProbs);
    const double dev_oracle = max_abs_dev(P, closed);
    Outcome out;
    out.pass = dev_table <= 2e-3 && dev_oracle <= 1e-9;
    out.detail = fmt("max dev vs published %.2e (tol 2e-3), vs analytic oracle %.2e (tol 1e-9)",
                     dev_table, dev_oracle);
    return out;
}

Outcome criterion2_bayes_level_column() {
    const auto r2 = kenya_r2_computed(ClaimCountModel::poisson(), kLambda);
    std::vector<double> closed;
    for (int l = 1; l <= 7; ++l) {
        const auto prior = bml::presets::level_prior(l, 7);
        closed.push_back(kenya_r2_closed(l, prior.shape, prior.rate, kLambda));
    }
    const double dev_table = max_abs_dev(r2, kKenyaR2);
    const double dev_oracle = max_abs_dev(r2, closed);
    Outcome out;
    out.pass = dev_table <= 5e-3 && dev_oracle <= 1e-9;
    out.detail = fmt("max dev vs published %.2e (tol 5e-3), vs closed form %.2e (tol 1e-9)",
                     dev_table, dev_oracle);
    return out;
}

Outcome criterion3_predictive_convention() {
    Outcome out;
    double worst_exact = 0.0;
    std::string mismatch;
    for (int levels : {7, 6}) {
        for (int l = 1; l <= levels; ++l) {
            const auto prior = bml::presets::level_prior(l, levels);
            const double analytic = prior.shape / prior.rate;
            const double poisson = bml::expected_bayes_relativity_claims(
                prior.shape, prior.rate, kLambda, ClaimCountModel::poisson());
            const double zip0 = bml::expected_bayes_relativity_claims(
                prior.shape, prior.rate, kLambda, ClaimCountModel::zi_poisson(0.0));
            worst_exact = std::max(worst_exact, std::fabs(poisson - analytic));
            worst_exact = std::max(worst_exact, std::fabs(zip0 - analytic));
            // Three-decimal reproduction of the published columns. The
            // 7-level table prints 0.999 at l = 4 where a/b = 1 exactly;
            // linearity of the column pins that as a typo for 1.000.
            char shown[16];
            std::snprintf(shown, sizeof(shown), "%.3f", poisson);
            char expected[16];
            std::snprintf(expected, sizeof(expected), "%.3f", analytic);
            if (std::strcmp(shown, expected) != 0)
                mismatch = fmt("level %d/%d: %s vs %s", l, levels, shown, expected);
        }
    }
    out.pass = worst_exact <= 1e-12 && mismatch.empty();
    out.detail = fmt("max |predictive - a/b| = %.2e (tol 1e-12); 3-decimal columns %s "
                     "(7-level l=4 printed 0.999 read as 1.000 typo)",
                     worst_exact, mismatch.empty() ? "reproduced" : mismatch.c_str());
    return out;
}

Outcome criterion4_ordinary_linear() {
    const auto coef = bml::ordinary_linear_coefficients(
        bml::presets::kenya(), ClaimCountModel::poisson(), kLambda, bml::presets::pi1());
    std::vector<double> line;
    for (int l = 1; l <= 7; ++l) line.push_back(coef.at(l));
    const double dev = max_abs_dev(line, kKenyaRLin);
    Outcome out;
    out.pass = dev <= 1e-2;
    out.detail = fmt(
        "Cov(Theta,L)/Var(L) line: alpha=%.4f beta=%.4f, levels %.3f..%.3f; max dev vs "
        "published column %.2e (tol 1e-2); published slope 0.0982 is not reproducible "
        "from the stated estimator (see notes)",
        coef.alpha, coef.beta, line.front(), line.back(), dev);
    return out;
}

Outcome criterion5_optimal_linear_fit() {
    const auto P = bml::level_distribution(bml::presets::kenya(),
                                           ClaimCountModel::poisson(), kLambda,
                                           bml::presets::pi1());
    std::vector<double> r1;
    for (int l = 1; l <= 7; ++l) {
        const auto prior = bml::presets::level_prior(l, 7);
        r1.push_back(bml::expected_bayes_relativity_claims(prior.shape, prior.rate, kLambda,
                                                           ClaimCountModel::poisson()));
    }
    const auto r2 = kenya_r2_computed(ClaimCountModel::poisson(), kLambda);

    double best_xi = -1.0, best_dev = 1e300;
    for (int i = 0; i <= 1000; ++i) {
        const double xi = i / 1000.0;
        const auto coef = bml::optimal_linear_coefficients(r1, r2, P, bml::WeightSetting{xi});
        double dev = 0.0;
        for (int l = 1; l <= 7; ++l)
            dev = std::max(dev,
                           std::fabs(coef.at(l) - kKenyaROpt[static_cast<std::size_t>(l - 1)]));
        if (dev < best_dev) {
            best_dev = dev;
            best_xi = xi;
        }
    }
    Outcome out;
    out.pass = best_dev < 1e-2;
    out.detail = fmt("fitted xi = %.3f with max per-level deviation %.2e (tol 1e-2)",
                     best_xi, best_dev);
    return out;
}

Outcome criterion6_base_premiums() {
    const auto stats1 = bml::presets::example1_stats();
    const auto stats2 = bml::presets::example2_stats();
    const double m1_pi1 = bml::example1_estimator(stats1, bml::presets::pi1()).estimate;
    const double m1_pi2 = bml::example1_estimator(stats1, bml::presets::pi2()).estimate;
    const double m2_pi1_printed =
        bml::example2_estimator(stats2, bml::presets::pi1(), bml::ParetoExponent::kAsPrinted)
            .estimate;
    const double m2_pi2_printed =
        bml::example2_estimator(stats2, bml::presets::pi2(), bml::ParetoExponent::kAsPrinted)
            .estimate;
    const double m2_pi1_derived =
        bml::example2_estimator(stats2, bml::presets::pi1(), bml::ParetoExponent::kSampleSize)
            .estimate;

    const bool pass_m1 = std::fabs(m1_pi1 - 2.705) <= 5e-3 && std::fabs(m1_pi2 - 2.719) <= 5e-3;
    const bool printed_matches =
        std::fabs(m2_pi1_printed - 0.984) <= 5e-3 && std::fabs(m2_pi2_printed - 0.983) <= 5e-3;
    const bool derived_matches = std::fabs(m2_pi1_derived - 0.984) <= 5e-3;

    Outcome out;
    out.pass = pass_m1 && (printed_matches || derived_matches);
    out.detail = fmt(
        "model1: %.4f / %.4f (want 2.705 / 2.719); model2 scale^(2 eta) reading: %.4f / %.4f "
        "(want 0.984 / 0.983) -> %s; scale^(n eta) reading gives %.4f -> %s",
        m1_pi1, m1_pi2, m2_pi1_printed, m2_pi2_printed,
        printed_matches ? "matches" : "differs", m2_pi1_derived,
        derived_matches ? "matches" : "differs");
    return out;
}

Outcome criterion7_level_premiums() {
    const auto stats1 = bml::presets::example1_stats();
    const auto stats2 = bml::presets::example2_stats();
    Outcome out;
    std::string parts;
    for (const auto& table : premium_tables()) {
        const auto prior = bml::presets::level_ladder_prior(table.bms.levels);
        const double base1 = bml::example1_estimator(stats1, prior).estimate;
        const double base2 =
            bml::example2_estimator(stats2, prior, bml::ParetoExponent::kAsPrinted).estimate;
        for (int model = 1; model <= 2; ++model) {
            const double base = model == 1 ? base1 : base2;
            const auto& premiums =
                model == 1 ? table.premiums_model1 : table.premiums_model2;
            double dev = 0.0;
            for (std::size_t l = 0; l < premiums.size(); ++l) {
                const double ours = bml::level_premium(base, (*table.printed_ropt)[l]);
                dev = std::max(dev, std::fabs(ours - premiums[l]));
            }
            if (dev > 5e-3) out.pass = false;
            parts += fmt("%s/model%d max dev %.4f%s; ", table.name, model, dev,
                         dev > 5e-3 ? " EXCEEDS 5e-3" : "");
        }
    }
    out.detail = parts +
                 "(computed base x published optimal-linear column vs published premium; "
                 "several published premium cells are inconsistent with their own printed "
                 "factors - see notes)";
    return out;
}

Outcome criterion8_mixture_property_suite() {
    Outcome out;
    // Theorem-1 identity on 200 random cases.
    Draws draws(20250811);
    const std::vector<bml::MixtureComponentFamily> pool{
        bml::LogNormalUnitVariance{}, bml::GammaShapeTwo{}, bml::NormalUnitVariance{}};
    double worst_rel = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = draws.uniform_int(1, 8);
        const int k = draws.uniform_int(1, 3);
        const double eta = 0.5 + 1.5 * draws.uniform();
        std::vector<bml::MixtureComponentFamily> comps;
        for (int i = 0; i < k; ++i)
            comps.push_back(pool[static_cast<std::size_t>(draws.uniform_int(0, 2))]);
        const bml::MixtureClaimModel model(comps);
        std::vector<double> xs;
        for (int i = 0; i < n; ++i) xs.push_back(0.35 + 4.0 * draws.uniform());
        double log_prod = 0.0;
        for (double x : xs) log_prod += model.log_mixture_density(x, eta);
        const LogValue joint = bml::exact_mixture_joint(xs, model, eta);
        worst_rel = std::max(worst_rel, std::fabs(joint.log_magnitude() - log_prod));
    }
    if (worst_rel > 1e-12) out.pass = false;

    // Theorem-2 bound on the fixed 100-case suite with mixture-drawn samples.
    Draws bdraws(1);
    const std::vector<bml::MixtureComponentFamily> bpool{bml::LogNormalUnitVariance{},
                                                         bml::GammaShapeTwo{}};
    int holds = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = bdraws.uniform_int(1, 6);
        const int k = bdraws.uniform_int(1, 3);
        const double eta = 0.5 + 1.5 * bdraws.uniform();
        std::vector<bml::MixtureComponentFamily> comps;
        for (int i = 0; i < k; ++i)
            comps.push_back(bpool[static_cast<std::size_t>(bdraws.uniform_int(0, 1))]);
        const bml::MixtureClaimModel model(comps);
        std::vector<double> xs;
        for (int i = 0; i < n; ++i) {
            const auto& comp =
                comps[static_cast<std::size_t>(bdraws.uniform_int(0, k - 1))];
            if (std::holds_alternative<bml::LogNormalUnitVariance>(comp))
                xs.push_back(std::exp(eta + bdraws.normal()));
            else
                xs.push_back((bdraws.exponential() + bdraws.exponential()) / eta);
        }
        if (bml::check_mixture_joint_bound(xs, model, eta).holds()) ++holds;
    }
    if (holds != 100) out.pass = false;

    // Partition counts against brute force and the known value.
    std::function<long long(int, int)> brute = [&](int n, int max_part) -> long long {
        if (n == 0) return 1;
        if (n < 0 || max_part == 0) return 0;
        return brute(n - max_part, max_part) + brute(n, max_part - 1);
    };
    bool partitions_ok = bml::partition_count(10) == 42;
    for (int n = 0; n <= 10; ++n)
        partitions_ok = partitions_ok && bml::partition_count(n) == brute(n, n);
    if (!partitions_ok) out.pass = false;

    out.detail = fmt(
        "identity max |log dev| %.2e over 200 cases (tol 1e-12); bound holds %d/100 on "
        "the fixed suite; partition counts vs enumeration (P(10)=42) %s",
        worst_rel, holds, partitions_ok ? "match" : "MISMATCH");
    return out;
}

Outcome criterion9_loimaranta_properties() {
    Outcome out;
    const auto kenya = bml::presets::kenya();
    const auto poisson = ClaimCountModel::poisson();

    double worst_const = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double t = 0.01 + (1.0 - 0.01) * i / 49.0;
        worst_const = std::max(
            worst_const,
            std::fabs(bml::loimaranta_efficiency(std::vector<double>(7, 1.3), kenya,
                                                 poisson, t)));
    }
    if (worst_const > 1e-10) out.pass = false;

    const std::vector<double> some_r{0.14, 0.44, 0.73, 1.03, 1.33, 1.62, 1.92};
    std::vector<double> scaled(some_r);
    for (double& v : scaled) v *= 2.0;
    double worst_scale = 0.0;
    for (double t : {0.05, 0.2, 0.5, 1.0})
        worst_scale = std::max(
            worst_scale, std::fabs(bml::loimaranta_efficiency(some_r, kenya, poisson, t) -
                                   bml::loimaranta_efficiency(scaled, kenya, poisson, t)));
    if (worst_scale > 1e-10) out.pass = false;

    // Comparative claim on the Kenya sweep: the optimal line is at least
    // as efficient as the ordinary line at every grid frequency.
    bml::RunConfig cfg;  // kenya/pi1/poisson defaults
    const auto bundle = bml::compute_relativities(cfg);
    int dominated = 0;
    const int grid_n = 100;
    double min_gap = 1e300;
    for (int i = 0; i < grid_n; ++i) {
        const double t = 0.05 + (1.0 - 0.05) * i / (grid_n - 1.0);
        const double eff_opt =
            bml::loimaranta_efficiency(bundle.optimal_linear, kenya, poisson, t);
        const double eff_lin =
            bml::loimaranta_efficiency(bundle.ordinary_linear, kenya, poisson, t);
        if (eff_opt >= eff_lin - 1e-12) ++dominated;
        min_gap = std::min(min_gap, eff_opt - eff_lin);
    }
    if (dominated != grid_n) out.pass = false;

    out.detail = fmt(
        "constant-table efficiency max %.2e (tol 1e-10); scale invariance max dev %.2e "
        "(tol 1e-10); optimal >= ordinary at %d/%d grid points (min gap %.3e)",
        worst_const, worst_scale, dominated, grid_n, min_gap);
    return out;
}

Outcome criterion10_zip_properties() {
    Outcome out;
    // p = 0 reproduces the Poisson-half numbers at the same tolerances.
    const auto zip0 = ClaimCountModel::zi_poisson(0.0);
    const auto P0 = bml::level_distribution(bml::presets::kenya(), zip0, kLambda,
                                            bml::presets::pi1());
    const double dev_p = max_abs_dev(P0, kKenyaLevelProbs);
    const double dev_r2 = max_abs_dev(kenya_r2_computed(zip0, kLambda), kKenyaR2);
    if (dev_p > 2e-3 || dev_r2 > 5e-3) out.pass = false;

    // Invariant suites under inflated models.
    std::string invariant_note = "invariants ok";
    for (double p : {0.1, 0.2, 0.3}) {
        const auto model = ClaimCountModel::zi_poisson(p);
        const auto P = bml::level_distribution(bml::presets::kenya(), model, kLambda,
                                               bml::presets::pi1());
        double sum = 0.0;
        for (double v : P) sum += v;
        if (std::fabs(sum - 1.0) > 1e-8) {
            out.pass = false;
            invariant_note = fmt("P sums to %.10f at p=%.1f", sum, p);
        }
        for (int l = 1; l <= 7; ++l) {
            const auto prior = bml::presets::level_prior(l, 7);
            const double r2 = bml::bayes_relativity_level(l, bml::presets::kenya(), model,
                                                          kLambda, prior);
            if (!(r2 > 0.0) || !std::isfinite(r2)) {
                out.pass = false;
                invariant_note = fmt("r2 invalid at p=%.1f l=%d", p, l);
            }
            const double expectation = bml::expected_bayes_relativity_claims(
                prior.shape, prior.rate, kLambda, model);
            if (std::fabs(expectation - prior.mean()) > 1e-10) {
                out.pass = false;
                invariant_note = fmt("predictive mean off at p=%.1f l=%d", p, l);
            }
        }
    }

    // Search the inflation mass that best matches the published
    // bottom-level occupancy 0.635.
    const auto pi1 = bml::presets::pi1();
    double best_p = 0.0, best_dev = 1e300;
    for (int i = 0; i <= 60; ++i) {
        const double p = i / 100.0;
        const auto model = p == 0.0 ? ClaimCountModel::poisson()
                                    : ClaimCountModel::zi_poisson(p);
        double p1 = 0.0;
        for (const auto& comp : pi1.components()) {
            bml::QuadratureSpec spec;
            spec.breakpoints = comp.dist.hint_points();
            p1 += comp.weight *
                  bml::integrate_halfline(
                          [&](double theta) {
                              const double pi1v = bml::steady_state(
                                  bml::presets::kenya(), model, kLambda * theta)[0];
                              return std::log(pi1v) + comp.dist.log_pdf(theta);
                          },
                          spec)
                      .to_double();
        }
        const double dev = std::fabs(p1 - 0.635);
        if (dev < best_dev) {
            best_dev = dev;
            best_p = p;
        }
    }

    out.detail = fmt(
        "p=0 reproduces Poisson half (P dev %.2e, r2 dev %.2e); %s; closest match to "
        "published bottom-level occupancy 0.635: p = %.2f (|dev| %.4f)",
        dev_p, dev_r2, invariant_note.c_str(), best_p, best_dev);
    return out;
}

Outcome criterion11_numerics() {
    Outcome out;
    const GammaDistribution g{3.0, 7.0};
    bml::QuadratureSpec spec;
    spec.breakpoints = g.hint_points();
    const double norm =
        bml::integrate_halfline([&](double t) { return g.log_pdf(t); }, spec).to_double();
    const double mean =
        bml::integrate_halfline([&](double t) { return std::log(t) + g.log_pdf(t); }, spec)
            .to_double();
    const double laplace =
        bml::integrate_halfline([&](double t) { return -0.737 * t + g.log_pdf(t); }, spec)
            .to_double();
    const double dev_quad =
        std::max({std::fabs(norm - 1.0), std::fabs(mean - 3.0 / 7.0),
                  std::fabs(laplace - std::pow(7.0 / 7.737, 3.0))});
    if (dev_quad > 1e-10) out.pass = false;

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> size_dist(2, 10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_resid = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = static_cast<std::size_t>(size_dist(rng));
        bml::SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = u(rng) + 1e-3;
                sum += m(i, j);
            }
            for (std::size_t j = 0; j < n; ++j) m(i, j) /= sum;
        }
        const bml::StochasticMatrix A(m);
        const auto pi = bml::solve_stationary(A);
        for (std::size_t j = 0; j < n; ++j) {
            double v = 0.0;
            for (std::size_t i = 0; i < n; ++i) v += pi[i] * A(i, j);
            worst_resid = std::max(worst_resid, std::fabs(v - pi[j]));
        }
    }
    if (worst_resid >= 1e-12) out.pass = false;

    auto f = [](double x) { return std::exp(std::sin(x)); };
    const double exact = 0.8 * std::cos(0.8);
    const double e1 = std::fabs(bml::log_derivative(f, 0.8, 2e-3) - exact);
    const double e2 = std::fabs(bml::log_derivative(f, 0.8, 1e-3) - exact);
    const double ratio = e1 / e2;
    if (!(ratio > 3.5 && ratio < 4.5)) out.pass = false;

    out.detail = fmt(
        "quadrature closed-form dev %.2e (tol 1e-10); stationary residual %.2e over 1000 "
        "chains (tol 1e-12); halving h shrinks derivative error %.2fx (want ~4x)",
        dev_quad, worst_resid, ratio);
    return out;
}

struct Criterion {
    int id;
    const char* label;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

    const std::vector<Criterion> criteria{
        {1, "Kenya level distribution vs published column and analytic oracle",
         criterion1_level_distribution},
        {2, "Kenya level-conditional Bayes relativities vs published column and closed form",
         criterion2_bayes_level_column},
        {3, "claims-conditional predictive convention equals a/b and the published columns",
         criterion3_predictive_convention},
        {4, "ordinary linear line vs published column", criterion4_ordinary_linear},
        {5, "optimal linear fit over the xi grid", criterion5_optimal_linear_fit},
        {6, "base premiums for both claim-size mixtures and priors", criterion6_base_premiums},
        {7, "level premiums across the three systems and two models",
         criterion7_level_premiums},
        {8, "mixture joint identity, error bound, and partition counts",
         criterion8_mixture_property_suite},
        {9, "Loimaranta efficiency properties and the optimal-vs-ordinary comparison",
         criterion9_loimaranta_properties},
        {10, "zero-inflated model properties and inflation-mass search",
         criterion10_zip_properties},
        {11, "numerics: quadrature closed forms, stationary residuals, derivative order",
         criterion11_numerics},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s — %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                    c.label, outcome.detail.c_str());
        if (!outcome.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
