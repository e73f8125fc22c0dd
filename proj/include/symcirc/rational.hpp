#ifndef SYMCIRC_RATIONAL_HPP
#define SYMCIRC_RATIONAL_HPP

#include <gmpxx.h>
#include <cmath>
#include <stdexcept>
#include <string>

namespace symcirc {

// Exact arbitrary-precision integers and rationals. mpq_class keeps the
// canonical reduced form (positive denominator, coprime) for us.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not reduce; route fraction construction here.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// 10^k as an exact rational, k may be negative.
inline Rat pow10_rat(long k) {
    Int p = int_pow(Int(10), static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rat(1, p) : Rat(p);
}

// Parse a decimal literal ("3", "0.25", "1.5e-3") into an exact rational.
inline Rat rat_from_decimal(const std::string& s) {
    std::string mant = s;
    long exp10 = 0;
    auto epos = mant.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(mant.substr(epos + 1));
        mant = mant.substr(0, epos);
    }
    auto dot = mant.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    if (mant.empty() || mant == "-" || mant == "+")
        throw std::invalid_argument("bad decimal literal: " + s);
    Rat r(mant, 10); // explicit base: no octal surprises from leading zeros
    r.canonicalize();
    return r * pow10_rat(exp10);
}

// Decimal string of x with `digits` fractional digits, truncated toward zero.
inline std::string rat_to_decimal(const Rat& x, unsigned digits) {
    bool neg = sgn(x) < 0;
    Rat a = rat_abs(x);
    Int scale = int_pow(Int(10), digits);
    Int scaled = Int(a.get_num() * scale / a.get_den());
    std::string digits_str = scaled.get_str();
    if (digits_str.size() <= digits)
        digits_str.insert(0, digits + 1 - digits_str.size(), '0');
    std::string out = digits_str.substr(0, digits_str.size() - digits);
    if (digits > 0) out += "." + digits_str.substr(digits_str.size() - digits);
    if (neg && scaled != 0) out.insert(0, "-");
    return out;
}

inline double rat_to_double(const Rat& x) { return x.get_d(); }

// Number of bits in the larger of numerator/denominator; used for budget caps.
inline size_t rat_bits(const Rat& x) {
    size_t n = mpz_sizeinbase(x.get_num().get_mpz_t(), 2);
    size_t d = mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
    return n > d ? n : d;
}

} // namespace symcirc

#endif
