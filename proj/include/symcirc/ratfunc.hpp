#ifndef SYMCIRC_RATFUNC_HPP
#define SYMCIRC_RATFUNC_HPP

#include "divide.hpp"
#include "poly_io.hpp"
#include "upoly.hpp"

namespace symcirc {

// Quotient of two multivariate polynomials, kept in a canonical form:
// shared monomial factors and scalar content are stripped, the denominator's
// order-minimal term is positive, and (when both parts are univariate in the
// same symbol or constant) common univariate factors are cancelled.
struct RationalFunction {
    QPoly num{};  // zero
    QPoly den{1};

    RationalFunction() = default;
    RationalFunction(int v) : num(v) {}
    RationalFunction(const Rat& v) : num(v) {}
    explicit RationalFunction(QPoly n) : num(std::move(n)) {}
    RationalFunction(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    bool is_zero() const { return num.is_zero(); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("RationalFunction with zero denominator");
        if (num.is_zero()) {
            den = QPoly(1);
            return;
        }
        Monomial mc = Monomial::gcd(num.monomial_content(), den.monomial_content());
        num = num.div_monomial(mc);
        den = den.div_monomial(mc);
        cancel_univariate();
        MonomialOrder ord = lex_order({});
        auto [cn, pn] = content_primitive(num, ord);
        auto [cd, pd] = content_primitive(den, ord);
        Rat scale = cn / cd;
        num = pn * QPoly(rat_abs(scale));
        den = pd;
        if (sgn(scale) < 0) num = -num;
        auto terms = den.sorted_terms(ord);
        if (!terms.empty() && sgn(terms.back().second) < 0) {
            num = -num;
            den = -den;
        }
    }

    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
        return {x.num * y.den + y.num * x.den, x.den * y.den};
    }
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
        return {x.num * y.den - y.num * x.den, x.den * y.den};
    }
    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
        return {x.num * y.num, x.den * y.den};
    }
    friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
        if (y.num.is_zero()) throw std::domain_error("RationalFunction division by zero");
        return {x.num * y.den, x.den * y.num};
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num = -r.num;
        return r;
    }
    RationalFunction reciprocal() const {
        if (num.is_zero()) throw std::domain_error("RationalFunction reciprocal of zero");
        return {den, num};
    }
    RationalFunction& operator+=(const RationalFunction& y) { return *this = *this + y; }
    RationalFunction& operator-=(const RationalFunction& y) { return *this = *this - y; }
    RationalFunction& operator*=(const RationalFunction& y) { return *this = *this * y; }
    RationalFunction& operator/=(const RationalFunction& y) { return *this = *this / y; }

    // Equality of the represented functions (independent of representation).
    bool equals(const RationalFunction& o) const {
        return (num * o.den - o.num * den).is_zero();
    }
    friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
        return x.equals(y);
    }

    std::string str() const { return poly_to_string(num) + " / " + poly_to_string(den); }

private:
    // Cancel gcds when both parts live in (at most) one shared variable.
    void cancel_univariate() {
        auto sn = num.symbols();
        auto sd = den.symbols();
        sn.insert(sd.begin(), sd.end());
        if (sn.size() != 1) return;
        Symbol v = *sn.begin();
        UPoly<Rat> un = to_upoly(num, v), ud = to_upoly(den, v);
        UPoly<Rat> g = upoly_gcd(un, ud);
        if (g.degree() < 1) return;
        num = from_upoly(UPoly<Rat>::divmod(un, g).first, v);
        den = from_upoly(UPoly<Rat>::divmod(ud, g).first, v);
    }
};

} // namespace symcirc

#endif
