#ifndef BML_LOG_VALUE_HPP
#define BML_LOG_VALUE_HPP

#include <cmath>
#include <limits>

namespace bml {

// Signed number stored as (sign, log magnitude). The mandatory currency
// for density products and marginals: the mixture kernels in this
// library underflow doubles by hundreds of orders of magnitude.
class LogValue {
public:
    LogValue() : sign_(0), logmag_(-std::numeric_limits<double>::infinity()) {}

    static LogValue zero() { return LogValue(); }

    static LogValue from_log(double logmag) {
        LogValue v;
        if (std::isinf(logmag) && logmag < 0) return v;
        v.sign_ = 1;
        v.logmag_ = logmag;
        return v;
    }

    static LogValue from_value(double x) {
        LogValue v;
        if (x == 0.0) return v;
        v.sign_ = x > 0 ? 1 : -1;
        v.logmag_ = std::log(std::fabs(x));
        return v;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    // log of |value|; -inf when zero.
    double log_magnitude() const { return logmag_; }

    double to_double() const {
        if (sign_ == 0) return 0.0;
        return sign_ * std::exp(logmag_);
    }

    LogValue operator*(const LogValue& o) const {
        if (sign_ == 0 || o.sign_ == 0) return zero();
        LogValue v;
        v.sign_ = sign_ * o.sign_;
        v.logmag_ = logmag_ + o.logmag_;
        return v;
    }

    LogValue operator/(const LogValue& o) const {
        LogValue v;
        if (sign_ == 0) return v;
        v.sign_ = sign_ * o.sign_;
        v.logmag_ = logmag_ - o.logmag_;
        return v;
    }

    LogValue operator-() const {
        LogValue v(*this);
        v.sign_ = -v.sign_;
        return v;
    }

    // Signed log-sum-exp.
    LogValue operator+(const LogValue& o) const {
        if (sign_ == 0) return o;
        if (o.sign_ == 0) return *this;
        const LogValue& hi = (logmag_ >= o.logmag_) ? *this : o;
        const LogValue& lo = (logmag_ >= o.logmag_) ? o : *this;
        const double d = lo.logmag_ - hi.logmag_;  // <= 0
        LogValue v;
        if (hi.sign_ == lo.sign_) {
            v.sign_ = hi.sign_;
            v.logmag_ = hi.logmag_ + std::log1p(std::exp(d));
        } else {
            const double m = -std::expm1(d);  // 1 - exp(d) in [0, 1]
            if (m == 0.0) return zero();
            v.sign_ = hi.sign_;
            v.logmag_ = hi.logmag_ + std::log(m);
        }
        return v;
    }

    LogValue operator-(const LogValue& o) const { return *this + (-o); }

    LogValue& operator+=(const LogValue& o) { return *this = *this + o; }
    LogValue& operator*=(const LogValue& o) { return *this = *this * o; }

private:
    int sign_;
    double logmag_;
};

}  // namespace bml

#endif  // BML_LOG_VALUE_HPP
