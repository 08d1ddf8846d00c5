#pragma once

#include <cmath>

namespace wbt {

/// Neumaier-compensated running sum.
///
/// Keeps the rounding residue of every addition in a separate term, so the
/// relative error of `value()` stays near one ulp for sums of billions of
/// positive terms. The pair (sum, compensation) is the full state; two
/// accumulators holding equal pairs produce identical results for identical
/// subsequent inputs.
#ifdef __FAST_MATH__
#error "fast-math would remove the compensation term"
#endif
class CompensatedSum {
public:
    constexpr CompensatedSum() = default;
    constexpr CompensatedSum(double sum, double compensation) : sum_(sum), comp_(compensation) {}

    void add(double v)
    {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    /// Adds another compensated sum, carrying its residue along.
    void add(const CompensatedSum& other)
    {
        add(other.sum_);
        add(other.comp_);
    }

    CompensatedSum& operator+=(double v)
    {
        add(v);
        return *this;
    }

    [[nodiscard]] double value() const { return sum_ + comp_; }
    [[nodiscard]] double sum() const { return sum_; }
    [[nodiscard]] double compensation() const { return comp_; }

    bool operator==(const CompensatedSum&) const = default;

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace wbt
