#ifndef SYMCIRC_INTERVAL_HPP
#define SYMCIRC_INTERVAL_HPP

#include "poly.hpp"

#include <optional>

namespace symcirc {

// Closed rational interval [lo, hi]; the basic certification currency.
struct RatIv {
    Rat lo{0}, hi{0};

    RatIv() = default;
    RatIv(Rat v) : lo(v), hi(std::move(v)) {}
    RatIv(int v) : lo(v), hi(v) {}
    RatIv(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }

    // certified sign: nullopt when the interval straddles zero
    std::optional<int> sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        if (is_point()) return 0;
        return std::nullopt;
    }

    RatIv operator-() const { return {-hi, -lo}; }
    friend RatIv operator+(const RatIv& a, const RatIv& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend RatIv operator-(const RatIv& a, const RatIv& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend RatIv operator*(const RatIv& a, const RatIv& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min(std::min(p1, p2), std::min(p3, p4)),
                std::max(std::max(p1, p2), std::max(p3, p4))};
    }
    friend RatIv operator/(const RatIv& a, const RatIv& b) {
        if (b.contains_zero()) throw std::domain_error("interval division by zero-straddling interval");
        RatIv inv(Rat(1) / b.hi, Rat(1) / b.lo);
        return a * inv;
    }
    RatIv& operator+=(const RatIv& b) { return *this = *this + b; }
    RatIv& operator-=(const RatIv& b) { return *this = *this - b; }
    RatIv& operator*=(const RatIv& b) { return *this = *this * b; }

    static RatIv hull(const RatIv& a, const RatIv& b) {
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }
};

inline int sgn(const RatIv& x) {
    // structural zero test for Poly<RatIv> bookkeeping: only exact [0,0] is zero
    if (x.is_point()) return sgn(x.lo);
    return 2; // "nonzero-ish"
}

// Interval evaluation of a multivariate polynomial over a boxed point.
template <class C>
RatIv eval_interval(const Poly<C>& p, const std::map<Symbol, RatIv>& box);

inline RatIv coeff_interval(const Rat& c) { return RatIv(c); }

template <>
inline RatIv eval_interval<Rat>(const Poly<Rat>& p, const std::map<Symbol, RatIv>& box) {
    RatIv acc(Rat(0));
    for (const auto& [m, c] : p.terms()) {
        RatIv t = coeff_interval(c);
        for (const auto& [s, e] : m.entries()) {
            auto it = box.find(s);
            if (it == box.end())
                throw std::invalid_argument("eval_interval: unbound symbol " + sym_name(s));
            for (unsigned k = 0; k < e; ++k) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

// Enclosure of pi good to ~50 digits; tight enough for any bode sample.
inline RatIv pi_enclosure() {
    static const Rat lo("31415926535897932384626433832795028841971693993751/"
                        "10000000000000000000000000000000000000000000000000");
    static const Rat hi("31415926535897932384626433832795028841971693993752/"
                        "10000000000000000000000000000000000000000000000000");
    return {lo, hi};
}

// Enclosure of sqrt(d) to the requested width by bisection.
inline RatIv sqrt_enclosure(long d, const Rat& eps) {
    Rat lo(0), hi(d < 1 ? 1 : d);
    while (hi - lo > eps) {
        Rat m = (lo + hi) / 2;
        if (m * m <= Rat(d)) lo = m; else hi = m;
    }
    return {lo, hi};
}

} // namespace symcirc

#endif
