#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bsp::detail {

/// Neumaier-compensated accumulator for sums of doubles.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline void require_p_at_least_one(double p) {
    if (!(p >= 1.0))
        throw std::domain_error("exponent p must satisfy p >= 1, got " + std::to_string(p));
}

inline void require_p_above_one(double p) {
    if (!(p > 1.0))
        throw std::domain_error("exponent p must satisfy p > 1, got " + std::to_string(p));
}

}  // namespace bsp::detail
