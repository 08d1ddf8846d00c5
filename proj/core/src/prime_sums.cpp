#include "wbt/prime_sums.hpp"

#include "wbt/compensated.hpp"
#include "wbt/errors.hpp"
#include "wbt/number_theory.hpp"
#include "wbt/primes.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace wbt {

double weighted_prime_sum(const WeightFunction& f, std::uint64_t k, std::int64_t l)
{
    detail::require<PreconditionError>(k >= 1, "weighted_prime_sum: k must be >= 1");
    const std::uint64_t residue = mod_floor(l, k);
    detail::require<PreconditionError>(std::gcd(residue, k) == 1, "weighted_prime_sum: gcd(k, l) must be 1");
    detail::require<ResourceError>(f.left() <= kMaxPrimeSumX, "weighted_prime_sum: x beyond 1e12");
    detail::require<ResourceError>(f.right() - f.left() <= static_cast<double>(kPrimeSumBudget),
                                   "weighted_prime_sum: interval longer than the enumeration budget");

    const double a = std::ceil(f.left());
    const double b = std::floor(f.right());
    if (a > b)
        return 0.0;
    CompensatedSum sum;
    PrimeRange(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)).for_each([&](std::uint64_t p) {
        if (p % k == residue)
            sum += f.eval(static_cast<double>(p));
    });
    return sum.value();
}

std::uint64_t pi_count(std::uint64_t z)
{
    if (z < 2)
        return 0;
    return PrimeRange(2, z).count();
}

std::uint64_t pi_ap(std::uint64_t x, std::uint64_t k, std::int64_t l)
{
    detail::require<PreconditionError>(k >= 1, "pi_ap: k must be >= 1");
    const std::uint64_t residue = mod_floor(l, k);
    if (x < 2)
        return 0;
    std::uint64_t c = 0;
    PrimeRange(2, x).for_each([&](std::uint64_t p) { c += (p % k == residue); });
    return c;
}

std::string_view theorem_name(TheoremForm t)
{
    switch (t) {
    case TheoremForm::T4_with_correction:
        return "T4_with_correction";
    case TheoremForm::T4_factor3:
        return "T4_factor3";
    case TheoremForm::T5:
        return "T5";
    }
    return "?";
}

std::pair<TheoremBound, TheoremBound> theorem4_bounds(const WeightFunction& f, std::uint64_t k)
{
    detail::require<PreconditionError>(k >= 1, "theorem4_bounds: k must be >= 1");
    const double r = rho(f);
    TheoremBound a{TheoremForm::T4_with_correction, std::nullopt, r, false};
    TheoremBound b{TheoremForm::T4_factor3, std::nullopt, r, false};
    if (r > static_cast<double>(k)) {
        const double L = std::log(r / static_cast<double>(k));
        const double main = f.norms().l1 / (static_cast<double>(euler_phi(k)) * L);
        a.value = 2.0 * main * (1.0 + 8.0 / L);
        b.value = 3.0 * main;
        a.applicable = b.applicable = true;
    }
    return {a, b};
}

TheoremBound theorem5_bound(const WeightFunction& f)
{
    const double r = rho(f);
    TheoremBound t{TheoremForm::T5, std::nullopt, r, false};
    if (r > 1.0) {
        t.value = 2.0 * f.norms().l1 / std::log(r);
        t.applicable = true;
    }
    return t;
}

std::vector<CorpusCase> parse_corpus(std::istream& in)
{
    std::vector<CorpusCase> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        std::string shape, extra;
        CorpusCase c;
        if (!(ls >> shape >> c.k >> c.l >> c.x >> c.y >> c.scale >> c.resolution) || (ls >> extra))
            throw PreconditionError("corpus line " + std::to_string(lineno) +
                                    ": expected 'shape kmod lres x y scale resolution'");
        c.shape = parse_shape(shape);
        detail::require<PreconditionError>(c.k >= 1 && std::gcd(mod_floor(c.l, c.k), c.k) == 1,
                                           "corpus line " + std::to_string(lineno) + ": need gcd(l, k) = 1");
        detail::require<PreconditionError>(c.scale >= 0.0 && c.resolution >= 1,
                                           "corpus line " + std::to_string(lineno) + ": bad scale or resolution");
        out.push_back(c);
    }
    return out;
}

std::vector<CorpusCase> default_corpus()
{
    std::vector<CorpusCase> out;
    const Shape shapes[] = {Shape::constant, Shape::hat, Shape::linear_ramp, Shape::smooth_bump_approx};
    const std::pair<double, double> intervals[] = {{0.0, 1e3}, {1e6, 1e4}, {1e9, 1e5}};
    const std::uint64_t moduli[] = {1, 2, 3, 5, 12};
    for (const Shape s : shapes)
        for (const auto& [x, y] : intervals)
            for (const std::uint64_t k : moduli)
                for (std::uint64_t l = 0; l < k; ++l)
                    if (std::gcd(l, k) == 1)
                        out.push_back({s, k, static_cast<std::int64_t>(l), x, y, 1.0, 64});
    return out;
}

namespace {

BoundReport theorem_report(const CorpusCase& c, const TheoremBound& t, double lhs, const Norms& n)
{
    Json params;
    params["theorem"] = theorem_name(t.theorem);
    params["shape"] = shape_name(c.shape);
    params["k"] = c.k;
    params["l"] = c.l;
    params["x"] = c.x;
    params["y"] = c.y;
    params["scale"] = c.scale;
    params["resolution"] = c.resolution;
    params["l1"] = n.l1;
    params["sup"] = n.sup;
    params["tv"] = n.tv;
    params["rho"] = t.rho;
    params["applicable"] = t.applicable;
    const std::string label = std::string(theorem_name(t.theorem)) + " weighted Brun-Titchmarsh";
    if (!t.applicable)
        return make_bound_report(label, lhs, NAN, Relation::less, 0.0, std::move(params));
    return make_bound_report(label, lhs, *t.value, Relation::less, kTheoremSlack * *t.value, std::move(params));
}

} // namespace

std::vector<BoundReport> theorem_corpus_check(const std::vector<CorpusCase>& corpus)
{
    std::vector<BoundReport> out;
    for (const CorpusCase& c : corpus) {
        const WeightFunction f = builtin(c.shape, Interval(c.x, c.y), c.resolution).scaled(c.scale);
        const double lhs = weighted_prime_sum(f, c.k, c.l);
        const auto [a, b] = theorem4_bounds(f, c.k);
        out.push_back(theorem_report(c, a, lhs, f.norms()));
        out.push_back(theorem_report(c, b, lhs, f.norms()));
        if (c.k == 1)
            out.push_back(theorem_report(c, theorem5_bound(f), lhs, f.norms()));
    }
    return out;
}

bool corpus_verdict(const std::vector<BoundReport>& reports)
{
    for (const auto& r : reports)
        if (r.params.value("applicable", true) && !r.holds)
            return false;
    return true;
}

} // namespace wbt
