#ifndef BML_QUADRATURE_HPP
#define BML_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "bml/errors.hpp"
#include "bml/log_value.hpp"

namespace bml {

enum class HalfLineTransform {
    // theta = u / (1 - u), the only transform in use.
    kRational
};

// Contract shared by every half-line integral in the library.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    int max_depth = 48;
    HalfLineTransform transform = HalfLineTransform::kRational;
    // Optional hints (in theta space) where the integrand has structure;
    // sharp posterior kernels are found through these.
    std::vector<double> breakpoints;
    bool cross_check = true;
    double cross_check_tol = 1e-8;
    int initial_subdivisions = 32;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol <= 1e-4))
            throw DomainError("quadrature rel_tol must lie in (0, 1e-4]");
        if (max_depth < 10)
            throw DomainError("quadrature max_depth must be >= 10");
        if (initial_subdivisions < 1)
            throw DomainError("quadrature initial_subdivisions must be >= 1");
    }
};

namespace detail {

// Gauss-7 / Kronrod-15 pair on [-1, 1].
inline constexpr double kK15Nodes[15] = {
    0.0,
    -0.2077849550078985, 0.2077849550078985,
    -0.4058451513773972, 0.4058451513773972,
    -0.5860872354676911, 0.5860872354676911,
    -0.7415311855993944, 0.7415311855993944,
    -0.8648644233597691, 0.8648644233597691,
    -0.9491079123427585, 0.9491079123427585,
    -0.9914553711208126, 0.9914553711208126};

inline constexpr double kK15Weights[15] = {
    0.2094821410847278,
    0.2044329400752989, 0.2044329400752989,
    0.1903505780647854, 0.1903505780647854,
    0.1690047266392679, 0.1690047266392679,
    0.1406532597155259, 0.1406532597155259,
    0.1047900103222502, 0.1047900103222502,
    0.0630920926299786, 0.0630920926299786,
    0.0229353220105292, 0.0229353220105292};

// Indices into kK15Nodes that form the embedded Gauss-7 rule.
inline constexpr int kG7Index[7] = {0, 3, 4, 7, 8, 11, 12};

inline constexpr double kG7Weights[7] = {
    0.4179591836734694,
    0.3818300505051189, 0.3818300505051189,
    0.2797053914892767, 0.2797053914892767,
    0.1294849661688697, 0.1294849661688697};

inline constexpr double kGL20Nodes[20] = {
    -9.93128599185094885e-01, -9.63971927277913809e-01, -9.12234428251325835e-01,
    -8.39116971822218782e-01, -7.46331906460150796e-01, -6.36053680726515025e-01,
    -5.10867001950827126e-01, -3.73706088715419549e-01, -2.27785851141645096e-01,
    -7.65265211334973383e-02, 7.65265211334973383e-02,  2.27785851141645096e-01,
    3.73706088715419549e-01,  5.10867001950827126e-01,  6.36053680726515025e-01,
    7.46331906460150796e-01,  8.39116971822218782e-01,  9.12234428251325835e-01,
    9.63971927277913809e-01,  9.93128599185094885e-01};

inline constexpr double kGL20Weights[20] = {
    1.76140071391532732e-02, 4.06014298003862170e-02, 6.26720483341094425e-02,
    8.32767415767046715e-02, 1.01930119817240261e-01, 1.18194531961518245e-01,
    1.31688638449176526e-01, 1.42096109318381875e-01, 1.49172986472603658e-01,
    1.52753387130725782e-01, 1.52753387130725782e-01, 1.49172986472603658e-01,
    1.42096109318381875e-01, 1.31688638449176526e-01, 1.18194531961518245e-01,
    1.01930119817240261e-01, 8.32767415767046715e-02, 6.26720483341094425e-02,
    4.06014298003862170e-02, 1.76140071391532732e-02};

inline double log_sum_exp(const std::vector<double>& v) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : v) m = std::max(m, x);
    if (std::isinf(m) && m < 0) return m;
    double s = 0.0;
    for (double x : v) s += std::exp(x - m);
    return m + std::log(s);
}

struct Segment {
    double a, b;       // in u space
    int depth;
    double log_k15;    // log of the K15 estimate (integrand nonnegative)
    double log_err;    // log |K15 - G7|
};

}  // namespace detail

// Integral over [0, infinity) of exp(log_integrand(theta)) d(theta).
// The integrand must be nonnegative; log_integrand returns its log
// (-inf where it vanishes). Global-adaptive Gauss-Kronrod on the
// transformed variable u = theta/(1+theta), all sums in log space,
// with a fixed-node Gauss-Legendre cross-check of the final partition.
inline LogValue integrate_halfline(const std::function<double(double)>& log_integrand,
                                   const QuadratureSpec& spec = QuadratureSpec{}) {
    spec.validate();
    const double neg_inf = -std::numeric_limits<double>::infinity();

    auto log_h = [&](double u) {
        const double theta = u / (1.0 - u);
        const double v = log_integrand(theta);
        if (std::isnan(v) || (std::isinf(v) && v > 0))
            throw NumericError("integrand is not finite");
        return v - 2.0 * std::log1p(-u);
    };

    auto make_segment = [&](double a, double b, int depth) {
        detail::Segment s{a, b, depth, neg_inf, neg_inf};
        const double m = 0.5 * (a + b);
        const double k = 0.5 * (b - a);
        double logs[15];
        std::vector<double> terms(15);
        for (int i = 0; i < 15; ++i) {
            logs[i] = log_h(m + k * detail::kK15Nodes[i]);
            terms[i] = logs[i] + std::log(detail::kK15Weights[i]);
        }
        const double log_k = std::log(k);
        s.log_k15 = detail::log_sum_exp(terms) + log_k;
        std::vector<double> gterms(7);
        for (int i = 0; i < 7; ++i)
            gterms[i] = logs[detail::kG7Index[i]] + std::log(detail::kG7Weights[i]);
        const double log_g7 = detail::log_sum_exp(gterms) + log_k;
        const LogValue diff =
            LogValue::from_log(s.log_k15) - LogValue::from_log(log_g7);
        s.log_err = diff.is_zero() ? neg_inf : diff.log_magnitude();
        return s;
    };

    // Initial partition: uniform grid plus mapped breakpoints.
    std::vector<double> cuts;
    for (int i = 0; i <= spec.initial_subdivisions; ++i)
        cuts.push_back(static_cast<double>(i) / spec.initial_subdivisions);
    for (double theta : spec.breakpoints) {
        if (theta > 0.0 && std::isfinite(theta)) cuts.push_back(theta / (1.0 + theta));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<detail::Segment> segs;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i]) segs.push_back(make_segment(cuts[i], cuts[i + 1], 0));

    const std::size_t max_segments = 60000;
    double log_total = neg_inf;
    double log_total_err = neg_inf;
    double best_err = std::numeric_limits<double>::infinity();
    int stagnant_rounds = 0;
    while (true) {
        std::vector<double> vals, errs;
        vals.reserve(segs.size());
        errs.reserve(segs.size());
        for (const auto& s : segs) {
            vals.push_back(s.log_k15);
            errs.push_back(s.log_err);
        }
        log_total = detail::log_sum_exp(vals);
        log_total_err = detail::log_sum_exp(errs);

        if (std::isinf(log_total) && log_total < 0) return LogValue::zero();
        if (std::isinf(log_total_err) && log_total_err < 0) break;
        if (log_total_err <= std::log(spec.rel_tol) + log_total) break;

        // Refinement that stops reducing the error means the integrand
        // itself is noisy at this level; report instead of churning.
        if (log_total_err < best_err - 0.02) {
            best_err = log_total_err;
            stagnant_rounds = 0;
        } else if (++stagnant_rounds >= 4) {
            throw ToleranceError(
                "half-line quadrature error stagnated above the requested tolerance",
                std::exp(log_total));
        }

        // Split every segment holding more than its equal share of the
        // error budget.
        const double share =
            std::log(spec.rel_tol) + log_total - std::log(2.0 * static_cast<double>(segs.size()));
        std::vector<detail::Segment> next;
        next.reserve(segs.size() * 2);
        bool split_any = false;
        for (const auto& s : segs) {
            const double mid = 0.5 * (s.a + s.b);
            const bool splittable =
                s.log_err > share && s.depth < spec.max_depth && mid > s.a && mid < s.b;
            if (splittable && next.size() + 2 <= max_segments) {
                next.push_back(make_segment(s.a, mid, s.depth + 1));
                next.push_back(make_segment(mid, s.b, s.depth + 1));
                split_any = true;
            } else {
                next.push_back(s);
            }
        }
        if (!split_any)
            throw ToleranceError("half-line quadrature did not reach the requested tolerance",
                                 std::exp(log_total));
        segs.swap(next);
    }

    if (spec.cross_check) {
        // Independent composite rule on the converged partition, one
        // extra halving per segment, different node placement.
        std::vector<double> terms;
        terms.reserve(segs.size() * 40);
        for (const auto& s : segs) {
            const double mid = 0.5 * (s.a + s.b);
            for (const auto& [a, b] : {std::pair{s.a, mid}, std::pair{mid, s.b}}) {
                const double m = 0.5 * (a + b);
                const double k = 0.5 * (b - a);
                if (k <= 0.0) continue;
                for (int i = 0; i < 20; ++i)
                    terms.push_back(log_h(m + k * detail::kGL20Nodes[i]) +
                                    std::log(detail::kGL20Weights[i]) + std::log(k));
            }
        }
        const double log_check = detail::log_sum_exp(terms);
        const double rel = std::fabs(1.0 - std::exp(log_check - log_total));
        if (!(rel <= spec.cross_check_tol))
            throw ToleranceError(
                "half-line quadrature cross-check disagrees beyond tolerance (rel " +
                    std::to_string(rel) + ")",
                std::exp(log_total));
    }

    return LogValue::from_log(log_total);
}

}  // namespace bml

#endif  // BML_QUADRATURE_HPP
