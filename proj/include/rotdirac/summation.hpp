#pragma once

#include <cmath>
#include <span>

namespace rotdirac {

/// Neumaier's variant of Kahan summation. Result depends only on the order
/// in which terms are added.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double term) {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) {
            carry_ += (sum_ - t) + term;
        } else {
            carry_ += (term - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

inline double compensated_sum(std::span<const double> terms) {
    CompensatedSum acc;
    for (double t : terms) {
        acc += t;
    }
    return acc.value();
}

} // namespace rotdirac
