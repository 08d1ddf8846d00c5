#include "wbt/arith_tab.hpp"

#include "wbt/errors.hpp"
#include "wbt/number_theory.hpp"
#include "wbt/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>

namespace wbt {

SegmentTabulator::SegmentTabulator(std::uint64_t hi) : hi_(hi)
{
    detail::require<PreconditionError>(hi >= 1, "SegmentTabulator: hi must be >= 1");
    detail::require<ResourceError>(hi <= (1ULL << 40), "SegmentTabulator: hi beyond supported range");
    base_primes_ = primes_up_to(static_cast<std::uint32_t>(isqrt(hi)));
}

void SegmentTabulator::fill(std::uint64_t base, std::uint64_t length, Segment& seg)
{
    detail::require<PreconditionError>(base >= 1 && length >= 1, "fill: empty or zero-based segment");
    const std::uint64_t last = base + length - 1;
    detail::require<RangeError>(last <= hi_, "fill: segment beyond tabulator range");

    seg.base = base;
    seg.length = length;
    seg.mu.assign(length, 1);
    seg.phi.assign(length, 1);
    seg.sigma.assign(length, 1);
    seg.omega.assign(length, 0);
    rem_.resize(length);
    std::iota(rem_.begin(), rem_.end(), base);

    for (const std::uint32_t p32 : base_primes_) {
        const std::uint64_t p = p32;
        if (p * p > last)
            break;
        for (std::uint64_t n = (base + p - 1) / p * p; n <= last; n += p) {
            const std::uint64_t i = n - base;
            std::uint64_t r = rem_[i] / p;
            std::uint64_t pk = p;
            while (r % p == 0) {
                r /= p;
                pk *= p;
            }
            rem_[i] = r;
            seg.mu[i] = (pk == p) ? static_cast<std::int8_t>(-seg.mu[i]) : std::int8_t{0};
            seg.phi[i] *= pk / p * (p - 1);
            seg.sigma[i] *= (pk * p - 1) / (p - 1);
            seg.omega[i] += 1;
        }
    }
    for (std::uint64_t i = 0; i < length; ++i) {
        const std::uint64_t q = rem_[i];
        if (q > 1) {
            seg.mu[i] = static_cast<std::int8_t>(-seg.mu[i]);
            seg.phi[i] *= q - 1;
            seg.sigma[i] *= q + 1;
            seg.omega[i] += 1;
        }
    }
}

void for_each_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_length,
                      const std::function<void(const Segment&)>& fn)
{
    detail::require<PreconditionError>(lo >= 1 && lo <= hi, "for_each_segment: need 1 <= lo <= hi");
    detail::require<PreconditionError>(segment_length >= 1, "for_each_segment: segment_length must be >= 1");
    SegmentTabulator tab(hi);
    Segment seg;
    for (std::uint64_t base = lo;;) {
        const std::uint64_t len = std::min(segment_length, hi - base + 1);
        tab.fill(base, len, seg);
        fn(seg);
        if (base + len - 1 == hi)
            break;
        base += len;
    }
}

ArithTable tabulate(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_length, std::uint64_t max_entries)
{
    detail::require<PreconditionError>(lo >= 1 && lo <= hi, "tabulate: need 1 <= lo <= hi");
    detail::require<PreconditionError>(segment_length >= 1, "tabulate: segment_length must be >= 1");
    detail::require<ResourceError>(hi - lo < max_entries,
                                   "tabulate: " + std::to_string(hi - lo + 1) +
                                       " entries exceed the table budget; stream with for_each_segment");
    ArithTable t;
    t.lo_ = lo;
    t.hi_ = hi;
    const std::size_t n = hi - lo + 1;
    t.mu_.reserve(n);
    t.phi_.reserve(n);
    t.sigma_.reserve(n);
    t.omega_.reserve(n);
    for_each_segment(lo, hi, segment_length, [&](const Segment& s) {
        t.mu_.insert(t.mu_.end(), s.mu.begin(), s.mu.end());
        t.phi_.insert(t.phi_.end(), s.phi.begin(), s.phi.end());
        t.sigma_.insert(t.sigma_.end(), s.sigma.begin(), s.sigma.end());
        t.omega_.insert(t.omega_.end(), s.omega.begin(), s.omega.end());
    });
    return t;
}

std::size_t ArithTable::index(std::uint64_t n) const
{
    if (n < lo_ || n > hi_)
        throw RangeError("ArithTable: n=" + std::to_string(n) + " outside [" + std::to_string(lo_) + ", " +
                         std::to_string(hi_) + "]");
    return static_cast<std::size_t>(n - lo_);
}

namespace {

constexpr char kMagic[4] = {'W', 'B', 'T', '1'};

template <class T>
void put_le(std::ostream& os, T v)
{
    const auto u = static_cast<std::uint64_t>(static_cast<std::make_unsigned_t<T>>(v));
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i)
        buf[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xFFu);
    os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
T get_le(std::istream& is)
{
    using U = std::make_unsigned_t<T>;
    unsigned char buf[sizeof(T)];
    if (!is.read(reinterpret_cast<char*>(buf), sizeof(T)))
        throw RangeError("ArithTable::read_binary: truncated input");
    U u = 0;
    for (std::size_t i = sizeof(T); i-- > 0;)
        u = static_cast<U>((static_cast<std::uint64_t>(u) << 8) | buf[i]);
    return static_cast<T>(u);
}

} // namespace

void ArithTable::write_binary(std::ostream& os) const
{
    os.write(kMagic, 4);
    put_le<std::uint64_t>(os, lo_);
    put_le<std::uint64_t>(os, hi_);
    for (std::size_t i = 0; i < mu_.size(); ++i) {
        put_le<std::int8_t>(os, mu_[i]);
        put_le<std::uint64_t>(os, phi_[i]);
        put_le<std::uint64_t>(os, sigma_[i]);
        put_le<std::uint8_t>(os, omega_[i]);
    }
}

ArithTable ArithTable::read_binary(std::istream& is)
{
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw PreconditionError("ArithTable::read_binary: bad magic");
    ArithTable t;
    t.lo_ = get_le<std::uint64_t>(is);
    t.hi_ = get_le<std::uint64_t>(is);
    if (t.lo_ < 1 || t.hi_ < t.lo_)
        throw PreconditionError("ArithTable::read_binary: bad range");
    const std::uint64_t n = t.hi_ - t.lo_ + 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        t.mu_.push_back(get_le<std::int8_t>(is));
        t.phi_.push_back(get_le<std::uint64_t>(is));
        t.sigma_.push_back(get_le<std::uint64_t>(is));
        t.omega_.push_back(get_le<std::uint8_t>(is));
    }
    return t;
}

namespace {

// Calls fn(base, flags) for consecutive windows of [1, hi]; flags[i] = 1 iff base + i is squarefree.
template <class Fn>
void for_each_squarefree_window(std::uint64_t hi, Fn&& fn)
{
    constexpr std::uint64_t kWindow = 1ULL << 22;
    const auto primes = primes_up_to(static_cast<std::uint32_t>(isqrt(hi)));
    std::vector<std::uint8_t> flags;
    for (std::uint64_t base = 1; base <= hi; base += kWindow) {
        const std::uint64_t last = std::min(hi, base + kWindow - 1);
        flags.assign(last - base + 1, 1);
        for (const std::uint32_t p32 : primes) {
            const std::uint64_t q = static_cast<std::uint64_t>(p32) * p32;
            if (q > last)
                break;
            for (std::uint64_t n = (base + q - 1) / q * q; n <= last; n += q)
                flags[n - base] = 0;
        }
        fn(base, std::span<const std::uint8_t>(flags));
    }
}

} // namespace

std::vector<std::uint64_t> squarefree_counts(std::span<const std::uint64_t> zs)
{
    std::vector<std::uint64_t> out(zs.size(), 0);
    if (zs.empty())
        return out;
    std::vector<std::size_t> order(zs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return zs[a] < zs[b]; });
    const std::uint64_t zmax = zs[order.back()];
    std::size_t next = 0;
    while (next < order.size() && zs[order[next]] == 0)
        out[order[next++]] = 0;
    if (zmax == 0)
        return out;

    std::uint64_t count = 0;
    for_each_squarefree_window(zmax, [&](std::uint64_t base, std::span<const std::uint8_t> flags) {
        const std::uint64_t last = base + flags.size() - 1;
        std::uint64_t pos = base; // count covers [1, pos)
        while (next < order.size() && zs[order[next]] <= last) {
            const std::uint64_t z = zs[order[next]];
            for (; pos <= z; ++pos)
                count += flags[pos - base];
            out[order[next++]] = count;
        }
        for (; pos <= last; ++pos)
            count += flags[pos - base];
    });
    return out;
}

std::uint64_t squarefree_count(std::uint64_t z)
{
    detail::require<PreconditionError>(z >= 1, "squarefree_count: z must be >= 1");
    const std::uint64_t zs[1] = {z};
    return squarefree_counts(zs)[0];
}

BoundReport q_error_sweep(std::uint64_t z_max)
{
    detail::require<PreconditionError>(z_max >= 1, "q_error_sweep: z_max must be >= 1");
    constexpr double kDensity = 6.0 / (std::numbers::pi * std::numbers::pi);
    constexpr double kConstant = 0.68;

    double worst = -1.0;
    std::uint64_t witness = 1;
    std::uint64_t witness_q = 1;
    bool witness_left = false;
    std::uint64_t q = 0;
    for_each_squarefree_window(z_max, [&](std::uint64_t base, std::span<const std::uint8_t> flags) {
        for (std::size_t i = 0; i < flags.size(); ++i) {
            const std::uint64_t n = base + i;
            const double root = std::sqrt(static_cast<double>(n));
            const double main = kDensity * static_cast<double>(n);
            if (n >= 2) {
                // left limit at n: Q still equals Q(n-1)
                const double left = std::fabs(static_cast<double>(q) - main) / root;
                if (left > worst) {
                    worst = left;
                    witness = n;
                    witness_q = q;
                    witness_left = true;
                }
            }
            q += flags[i];
            const double at = std::fabs(static_cast<double>(q) - main) / root;
            if (at > worst) {
                worst = at;
                witness = n;
                witness_q = q;
                witness_left = false;
            }
        }
    });

    Json params;
    params["z_max"] = z_max;
    params["witness_z"] = witness;
    params["witness_side"] = witness_left ? "left_limit" : "at";
    params["witness_Q"] = witness_q;
    params["Q_z_max"] = q;
    return make_bound_report("Q(z) error ratio |Q(z) - 6z/pi^2| / sqrt(z) over [1, z_max]", worst, kConstant,
                             Relation::less_equal, 0.0, std::move(params));
}

} // namespace wbt
