#include "wbt/weights.hpp"

#include "wbt/compensated.hpp"
#include "wbt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

namespace wbt {

Interval::Interval(double x, double y) : x_(x), y_(y), right_(x + y)
{
    detail::require<PreconditionError>(std::isfinite(x) && std::isfinite(y) && x >= 0.0 && y >= 0.0,
                                       "Interval: need finite x >= 0 and y >= 0");
}

WeightFunction::WeightFunction(std::vector<double> breakpoints, std::vector<double> values)
    : t_(std::move(breakpoints)), v_(std::move(values))
{
    detail::require<PreconditionError>(!t_.empty() && t_.size() == v_.size(),
                                       "WeightFunction: need matching, non-empty breakpoints and values");
    detail::require<PreconditionError>(t_.front() >= 0.0, "WeightFunction: domain must lie in [0, inf)");
    for (std::size_t i = 0; i < t_.size(); ++i) {
        detail::require<PreconditionError>(std::isfinite(t_[i]) && std::isfinite(v_[i]),
                                           "WeightFunction: non-finite breakpoint or value");
        detail::require<PreconditionError>(v_[i] >= 0.0, "WeightFunction: values must be non-negative");
        if (i > 0)
            detail::require<PreconditionError>(t_[i] > t_[i - 1], "WeightFunction: breakpoints must increase");
    }

    CompensatedSum l1;
    CompensatedSum tv;
    double sup = v_.front();
    for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
        l1 += 0.5 * (t_[i + 1] - t_[i]) * (v_[i] + v_[i + 1]);
        tv += std::fabs(v_[i + 1] - v_[i]);
        sup = std::max(sup, v_[i + 1]);
    }
    norms_ = {l1.value(), sup, tv.value()};
}

Interval WeightFunction::domain() const
{
    return Interval(t_.front(), t_.back() - t_.front());
}

double WeightFunction::eval(double t) const
{
    if (!(t >= t_.front() && t <= t_.back()))
        throw DomainError("WeightFunction::eval: t outside [x, x+y]");
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    if (it == t_.end())
        return v_.back();
    const auto j = static_cast<std::size_t>(it - t_.begin());
    const std::size_t i = j - 1;
    if (t == t_[i])
        return v_[i];
    const double w = (t - t_[i]) / (t_[j] - t_[i]);
    return v_[i] + w * (v_[j] - v_[i]);
}

WeightFunction WeightFunction::scaled(double c) const
{
    detail::require<PreconditionError>(c >= 0.0 && std::isfinite(c), "scaled: factor must be finite and >= 0");
    std::vector<double> v(v_);
    for (double& x : v)
        x *= c;
    return WeightFunction(t_, std::move(v));
}

WeightFunction WeightFunction::normalized() const
{
    detail::require<PreconditionError>(!is_zero(), "normalized: zero function");
    return scaled(1.0 / (norms_.sup + norms_.tv));
}

WeightFunction WeightFunction::refined(double t) const
{
    const double value = eval(t);
    const auto it = std::lower_bound(t_.begin(), t_.end(), t);
    if (it != t_.end() && *it == t)
        return *this;
    const auto pos = it - t_.begin();
    std::vector<double> tt(t_), vv(v_);
    tt.insert(tt.begin() + pos, t);
    vv.insert(vv.begin() + pos, value);
    return WeightFunction(std::move(tt), std::move(vv));
}

double rho(const WeightFunction& f)
{
    const Norms n = f.norms();
    if (f.is_zero())
        return 0.0;
    return n.l1 / (n.sup + n.tv);
}

Shape parse_shape(std::string_view name)
{
    if (name == "constant")
        return Shape::constant;
    if (name == "linear_ramp" || name == "ramp")
        return Shape::linear_ramp;
    if (name == "hat")
        return Shape::hat;
    if (name == "smooth_bump_approx" || name == "bump")
        return Shape::smooth_bump_approx;
    throw PreconditionError("unknown weight shape '" + std::string(name) + "'");
}

std::string_view shape_name(Shape s)
{
    switch (s) {
    case Shape::constant:
        return "constant";
    case Shape::linear_ramp:
        return "linear_ramp";
    case Shape::hat:
        return "hat";
    case Shape::smooth_bump_approx:
        return "smooth_bump_approx";
    }
    return "?";
}

WeightFunction builtin(Shape shape, const Interval& domain, int resolution)
{
    detail::require<PreconditionError>(resolution >= 1, "builtin: resolution must be >= 1");
    const double x = domain.x();
    const double y = domain.y();
    const double right = domain.right();
    if (y == 0.0)
        return WeightFunction({x}, {shape == Shape::constant ? 1.0 : 0.0});

    switch (shape) {
    case Shape::constant:
        return WeightFunction({x, right}, {1.0, 1.0});
    case Shape::linear_ramp:
        return WeightFunction({x, right}, {0.0, 1.0});
    case Shape::hat:
        return WeightFunction({x, x + 0.5 * y, right}, {0.0, 1.0, 0.0});
    case Shape::smooth_bump_approx: {
        std::vector<double> t, v;
        t.reserve(static_cast<std::size_t>(resolution) + 1);
        v.reserve(static_cast<std::size_t>(resolution) + 1);
        for (int i = 0; i <= resolution; ++i) {
            const double u = static_cast<double>(i) / resolution; // (t - x) / y
            const double s = 2.0 * u - 1.0;
            const double b = 1.0 - s * s;
            t.push_back(i == resolution ? right : x + u * y);
            v.push_back(std::max(0.0, b * b));
        }
        return WeightFunction(std::move(t), std::move(v));
    }
    }
    throw PreconditionError("builtin: unknown shape");
}

WeightFunction parse_weight_text(std::istream& in)
{
    std::vector<double> t, v;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        double a, b;
        if (!(ls >> a)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            throw PreconditionError("weight text line " + std::to_string(lineno) + ": expected 't value'");
        }
        std::string rest;
        if (!(ls >> b) || (ls >> rest))
            throw PreconditionError("weight text line " + std::to_string(lineno) + ": expected exactly 't value'");
        if (!t.empty() && !(a > t.back()))
            throw PreconditionError("weight text line " + std::to_string(lineno) + ": t must strictly increase");
        t.push_back(a);
        v.push_back(b);
    }
    detail::require<PreconditionError>(!t.empty(), "weight text: no data lines");
    return WeightFunction(std::move(t), std::move(v));
}

} // namespace wbt
