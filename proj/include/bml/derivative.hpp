#ifndef BML_DERIVATIVE_HPP
#define BML_DERIVATIVE_HPP

#include <cmath>
#include <functional>

#include "bml/errors.hpp"

namespace bml {

// d ln f / d ln x at x0 by central difference with relative log-step h:
// [ln f(x0 e^h) - ln f(x0 e^-h)] / (2h). Error O(h^2).
inline double log_derivative(const std::function<double(double)>& f, double x0,
                             double h = 1e-4) {
    if (!(x0 > 0.0)) throw DomainError("log_derivative requires x0 > 0");
    if (!(h > 0.0)) throw DomainError("log_derivative requires h > 0");
    const double fp = f(x0 * std::exp(h));
    const double fm = f(x0 * std::exp(-h));
    if (!(fp > 0.0) || !(fm > 0.0))
        throw DomainError("log_derivative requires a positive function");
    return (std::log(fp) - std::log(fm)) / (2.0 * h);
}

}  // namespace bml

#endif  // BML_DERIVATIVE_HPP
