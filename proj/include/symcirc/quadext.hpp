#ifndef SYMCIRC_QUADEXT_HPP
#define SYMCIRC_QUADEXT_HPP

#include "rational.hpp"

#include <stdexcept>

namespace symcirc {

// Element a + b*sqrt(d) of the real quadratic extension Q(sqrt(d)),
// d a positive square-free integer (the toolkit only ever needs d = 2).
// Arithmetic is closed and exact; division goes through the conjugate.
struct QuadExt {
    Rat a{0};
    Rat b{0};
    long d{2};

    QuadExt() = default;
    QuadExt(Rat a_, Rat b_ = 0, long d_ = 2) : a(std::move(a_)), b(std::move(b_)), d(d_) {}
    QuadExt(int v) : a(v) {}
    QuadExt(long v) : a(v) {}

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    QuadExt conj() const { return {a, -b, d}; }
    Rat norm() const { return a * a - Rat(d) * b * b; }

    QuadExt operator-() const { return {-a, -b, d}; }

    friend void check_same_field(const QuadExt& x, const QuadExt& y) {
        // pure rationals are compatible with every extension
        if (!x.is_rational() && !y.is_rational() && x.d != y.d)
            throw std::invalid_argument("mixing distinct quadratic extensions");
    }
    static long merged_d(const QuadExt& x, const QuadExt& y) {
        return x.is_rational() ? y.d : x.d;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        return {x.a + y.a, x.b + y.b, merged_d(x, y)};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        return {x.a - y.a, x.b - y.b, merged_d(x, y)};
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        long d = merged_d(x, y);
        return {x.a * y.a + Rat(d) * x.b * y.b, x.a * y.b + x.b * y.a, d};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        if (y.is_zero()) throw std::domain_error("QuadExt division by zero");
        long d = merged_d(x, y);
        Rat n = y.norm();
        QuadExt num = x * QuadExt(y.a, -y.b, d);
        return {num.a / n, num.b / n, d};
    }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && (x.is_rational() || y.is_rational() || x.d == y.d);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

// Exact sign of a + b*sqrt(d): compare a^2 against d*b^2 when signs differ.
inline int sgn(const QuadExt& x) {
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b|sqrt(d)
    int cmp = ::symcirc::sgn(Rat(x.a * x.a - Rat(x.d) * x.b * x.b));
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

inline double to_double(const QuadExt& x) {
    return rat_to_double(x.a) + rat_to_double(x.b) * std::sqrt(static_cast<double>(x.d));
}

} // namespace symcirc

#endif
