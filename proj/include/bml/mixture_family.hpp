#ifndef BML_MIXTURE_FAMILY_HPP
#define BML_MIXTURE_FAMILY_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bml/errors.hpp"

namespace bml {

// Sufficient statistics of a claim-size sample. Individual fields are
// optional: each component family declares which ones it consumes.
struct SufficientStats {
    int n = 0;
    std::optional<double> sum_log_sq;  // T1 = sum ln^2 x_j
    std::optional<double> sum_log;     // T2 = sum ln x_j
    std::optional<double> sum_sq;      // T3 = sum x_j^2
    std::optional<double> sum;         // T4 = sum x_j
    std::optional<double> min;         // smallest observation

    static SufficientStats from_samples(const std::vector<double>& xs) {
        SufficientStats s;
        s.n = static_cast<int>(xs.size());
        double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;
        double mn = std::numeric_limits<double>::infinity();
        for (double x : xs) {
            if (!(x > 0.0)) throw DomainError("claim sizes must be positive");
            const double lx = std::log(x);
            t1 += lx * lx;
            t2 += lx;
            t3 += x * x;
            t4 += x;
            mn = std::min(mn, x);
        }
        if (s.n > 0) {
            s.sum_log_sq = t1;
            s.sum_log = t2;
            s.sum_sq = t3;
            s.sum = t4;
            s.min = mn;
        }
        return s;
    }

    void validate() const {
        if (n < 0) throw DomainError("sample size must be nonnegative");
        if (n == 0) return;
        if (min && !(*min > 0.0)) throw DomainError("minimum claim size must be positive");
        // Cauchy-Schwarz between the sums and the sums of squares.
        if (sum_log_sq && sum_log && *sum_log_sq < (*sum_log) * (*sum_log) / n - 1e-9)
            throw DomainError("sum_log_sq violates the Cauchy-Schwarz bound");
        if (sum_sq && sum && *sum_sq < (*sum) * (*sum) / n - 1e-9)
            throw DomainError("sum_sq violates the Cauchy-Schwarz bound");
    }

    double require(const std::optional<double>& field, const char* what) const {
        if (!field)
            throw DomainError(std::string("statistic ") + what + " is required but missing");
        return *field;
    }
};

// LogNormal(eta, 1): location parameter is the risk parameter.
struct LogNormalUnitVariance {
    double log_density(double x, double eta) const {
        if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
        const double lx = std::log(x);
        const double d = lx - eta;
        return -lx - 0.5 * std::log(2.0 * M_PI) - 0.5 * d * d;
    }

    double joint_log_density(const SufficientStats& s, double eta) const {
        if (s.n == 0) return 0.0;
        const double t1 = s.require(s.sum_log_sq, "sum_log_sq");
        const double t2 = s.require(s.sum_log, "sum_log");
        return -t2 - 0.5 * s.n * std::log(2.0 * M_PI) -
               0.5 * (t1 - 2.0 * eta * t2 + s.n * eta * eta);
    }

    // Peak of the eta-kernel; quadrature hints.
    std::vector<double> kernel_hints(const SufficientStats& s) const {
        if (s.n == 0) return {};
        const double m = s.require(s.sum_log, "sum_log") / s.n;
        const double sd = 1.0 / std::sqrt(static_cast<double>(s.n));
        return {m - 6 * sd, m - 2 * sd, m, m + 2 * sd, m + 6 * sd};
    }

    std::string name() const { return "log-normal-unit-variance"; }
};

// Normal(eta, 1).
struct NormalUnitVariance {
    double log_density(double x, double eta) const {
        const double d = x - eta;
        return -0.5 * std::log(2.0 * M_PI) - 0.5 * d * d;
    }

    double joint_log_density(const SufficientStats& s, double eta) const {
        if (s.n == 0) return 0.0;
        const double t3 = s.require(s.sum_sq, "sum_sq");
        const double t4 = s.require(s.sum, "sum");
        return -0.5 * s.n * std::log(2.0 * M_PI) -
               0.5 * (t3 - 2.0 * eta * t4 + s.n * eta * eta);
    }

    std::vector<double> kernel_hints(const SufficientStats& s) const {
        if (s.n == 0) return {};
        const double m = s.require(s.sum, "sum") / s.n;
        const double sd = 1.0 / std::sqrt(static_cast<double>(s.n));
        return {m - 6 * sd, m - 2 * sd, m, m + 2 * sd, m + 6 * sd};
    }

    std::string name() const { return "normal-unit-variance"; }
};

// Gamma(2, eta): rate parameter is the risk parameter.
struct GammaShapeTwo {
    double log_density(double x, double eta) const {
        if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
        return 2.0 * std::log(eta) + std::log(x) - eta * x;
    }

    double joint_log_density(const SufficientStats& s, double eta) const {
        if (s.n == 0) return 0.0;
        const double t2 = s.require(s.sum_log, "sum_log");
        const double t4 = s.require(s.sum, "sum");
        return 2.0 * s.n * std::log(eta) + t2 - eta * t4;
    }

    std::vector<double> kernel_hints(const SufficientStats& s) const {
        if (s.n == 0) return {};
        const double t4 = s.require(s.sum, "sum");
        if (!(t4 > 0.0)) return {};
        const double m = 2.0 * s.n / t4;
        const double sd = std::sqrt(2.0 * s.n) / t4;
        return {m - 6 * sd, m - 2 * sd, m, m + 2 * sd, m + 6 * sd};
    }

    std::string name() const { return "gamma-shape-two"; }
};

// Pareto type I with fixed scale and shape parameter eta. The joint
// density vanishes whenever the smallest observation falls below the
// scale.
struct ParetoTypeOne {
    double scale = 0.3;

    double log_density(double x, double eta) const {
        if (!(x >= scale)) return -std::numeric_limits<double>::infinity();
        return std::log(eta) + eta * std::log(scale) - (eta + 1.0) * std::log(x);
    }

    double joint_log_density(const SufficientStats& s, double eta) const {
        if (s.n == 0) return 0.0;
        const double t2 = s.require(s.sum_log, "sum_log");
        const double mn = s.require(s.min, "min");
        if (!(mn >= scale)) return -std::numeric_limits<double>::infinity();
        return s.n * std::log(eta) + s.n * eta * std::log(scale) - (eta + 1.0) * t2;
    }

    std::vector<double> kernel_hints(const SufficientStats& s) const {
        if (s.n == 0) return {};
        const double t2 = s.require(s.sum_log, "sum_log");
        const double rate = t2 - s.n * std::log(scale);
        if (!(rate > 0.0)) return {};
        const double m = s.n / rate;
        const double sd = std::sqrt(static_cast<double>(s.n)) / rate;
        return {m - 6 * sd, m - 2 * sd, m, m + 2 * sd, m + 6 * sd};
    }

    std::string name() const { return "pareto-type-one"; }
};

using MixtureComponentFamily =
    std::variant<LogNormalUnitVariance, NormalUnitVariance, GammaShapeTwo, ParetoTypeOne>;

inline double log_density(const MixtureComponentFamily& f, double x, double eta) {
    return std::visit([&](const auto& fam) { return fam.log_density(x, eta); }, f);
}

inline double joint_log_density(const MixtureComponentFamily& f, const SufficientStats& s,
                                double eta) {
    return std::visit([&](const auto& fam) { return fam.joint_log_density(s, eta); }, f);
}

inline std::vector<double> kernel_hints(const MixtureComponentFamily& f,
                                        const SufficientStats& s) {
    return std::visit([&](const auto& fam) { return fam.kernel_hints(s); }, f);
}

inline std::string family_name(const MixtureComponentFamily& f) {
    return std::visit([](const auto& fam) { return fam.name(); }, f);
}

}  // namespace bml

#endif  // BML_MIXTURE_FAMILY_HPP
