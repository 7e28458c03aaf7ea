#ifndef BML_MATRIX_HPP
#define BML_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "bml/errors.hpp"

namespace bml {

// Dense square matrix, row major. Sized for BMS work (s <= ~30).
class SquareMatrix {
public:
    SquareMatrix() : n_(0) {}
    explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

    double row_sum(std::size_t i) const {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
        return s;
    }

    double max_abs_diff(const SquareMatrix& o) const {
        double d = 0.0;
        for (std::size_t k = 0; k < data_.size(); ++k)
            d = std::max(d, std::fabs(data_[k] - o.data_[k]));
        return d;
    }

private:
    std::size_t n_;
    std::vector<double> data_;
};

// Row-stochastic matrix: nonnegative entries, each row sums to 1
// within 1e-12. Validated on construction.
class StochasticMatrix {
public:
    static constexpr double kRowSumTol = 1e-12;

    explicit StochasticMatrix(SquareMatrix m) : m_(std::move(m)) {
        for (std::size_t i = 0; i < m_.size(); ++i) {
            for (std::size_t j = 0; j < m_.size(); ++j)
                if (m_(i, j) < 0.0)
                    throw NumericError("stochastic matrix has a negative entry");
            if (std::fabs(m_.row_sum(i) - 1.0) > kRowSumTol)
                throw NumericError("stochastic matrix row does not sum to 1");
        }
    }

    std::size_t size() const { return m_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const SquareMatrix& matrix() const { return m_; }

private:
    SquareMatrix m_;
};

}  // namespace bml

#endif  // BML_MATRIX_HPP
