#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wbt {

/// Closed interval [x, x + y] with x, y >= 0.
class Interval {
public:
    Interval(double x, double y);

    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] double y() const { return y_; }
    [[nodiscard]] double left() const { return x_; }
    [[nodiscard]] double right() const { return right_; }

private:
    double x_;
    double y_;
    double right_;
};

/// L1 norm, sup norm and total variation (= L1 norm of the derivative) of a weight.
struct Norms {
    double l1 = 0.0;
    double sup = 0.0;
    double tv = 0.0;

    bool operator==(const Norms&) const = default;
};

/// Non-negative piecewise-linear function on an interval.
///
/// Breakpoints t_0 < t_1 < ... < t_m span the interval exactly; between
/// breakpoints the function is the linear interpolant of the stored values.
/// All three norms are closed-form, so inequalities involving them can be
/// checked without quadrature error. A single breakpoint is allowed only for
/// the degenerate interval y = 0.
class WeightFunction {
public:
    WeightFunction(std::vector<double> breakpoints, std::vector<double> values);

    [[nodiscard]] Interval domain() const;
    /// Exact endpoints as stored (x + y may round differently).
    [[nodiscard]] double left() const { return t_.front(); }
    [[nodiscard]] double right() const { return t_.back(); }
    [[nodiscard]] const std::vector<double>& breakpoints() const { return t_; }
    [[nodiscard]] const std::vector<double>& values() const { return v_; }

    /// Linear interpolation; throws DomainError off the interval.
    [[nodiscard]] double eval(double t) const;
    [[nodiscard]] double operator()(double t) const { return eval(t); }

    [[nodiscard]] Norms norms() const { return norms_; }
    [[nodiscard]] bool is_zero() const { return norms_.sup == 0.0; }

    /// c * f for c >= 0.
    [[nodiscard]] WeightFunction scaled(double c) const;
    /// f / (sup + tv); throws PreconditionError for the zero function.
    [[nodiscard]] WeightFunction normalized() const;
    /// Same function with an extra breakpoint at t (no-op if t is already one).
    [[nodiscard]] WeightFunction refined(double t) const;

private:
    std::vector<double> t_;
    std::vector<double> v_;
    Norms norms_;
};

[[nodiscard]] inline Norms norms(const WeightFunction& f) { return f.norms(); }

/// ||f||_1 / (||f||_inf + ||f'||_1), and 0 for the zero function.
[[nodiscard]] double rho(const WeightFunction& f);

enum class Shape { constant, linear_ramp, hat, smooth_bump_approx };

[[nodiscard]] Shape parse_shape(std::string_view name);
[[nodiscard]] std::string_view shape_name(Shape s);

/// Test-corpus weights on a domain.
///
/// constant: 1. linear_ramp: 0 at x rising to 1 at x+y. hat: 0, 1, 0 at
/// x, x+y/2, x+y. smooth_bump_approx: (1 - (2(t-x)/y - 1)^2)^2 sampled at
/// resolution+1 equispaced points. Only the bump uses resolution.
[[nodiscard]] WeightFunction builtin(Shape shape, const Interval& domain, int resolution);

/// Parses "t value" lines (blank lines and '#' comments skipped), t strictly increasing.
[[nodiscard]] WeightFunction parse_weight_text(std::istream& in);

} // namespace wbt
