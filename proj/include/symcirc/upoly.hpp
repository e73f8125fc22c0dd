#ifndef SYMCIRC_UPOLY_HPP
#define SYMCIRC_UPOLY_HPP

#include "poly.hpp"

namespace symcirc {

// Dense univariate polynomial over an exactly-signed field (Rat or QuadExt),
// coefficients ascending. The workhorse of real-root isolation.
template <class F>
struct UPoly {
    std::vector<F> c;

    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const F& lead() const { return c.back(); }

    F eval(const F& x) const {
        F acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    UPoly derivative() const {
        UPoly d;
        for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * F(static_cast<int>(i)));
        d.normalize();
        return d;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), F(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.normalize();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, F(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.normalize();
        return r;
    }
    friend UPoly operator*(const UPoly& a, const F& k) {
        UPoly r = a;
        for (auto& x : r.c) x *= k;
        r.normalize();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }

    // Euclidean division over the field.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("UPoly division by zero");
        UPoly rem = a, quot;
        long db = b.degree();
        if (a.degree() >= db) quot.c.assign(a.degree() - db + 1, F(0));
        while (!rem.is_zero() && rem.degree() >= db) {
            long k = rem.degree() - db;
            F q = rem.lead() / b.lead();
            quot.c[k] = q;
            for (long i = 0; i <= db; ++i) rem.c[k + i] -= q * b.c[i];
            rem.normalize();
        }
        quot.normalize();
        return {quot, rem};
    }

    UPoly monic() const {
        if (is_zero()) return {};
        return *this * (F(1) / lead());
    }
};

template <class F>
UPoly<F> upoly_gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = UPoly<F>::divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
    if (p.degree() <= 1) return p;
    UPoly<F> g = upoly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return UPoly<F>::divmod(p, g).first;
}

// Extract a univariate view of a multivariate polynomial.
template <class C>
UPoly<C> to_upoly(const Poly<C>& p, Symbol var) {
    if (!p.is_univariate_in(var))
        throw std::invalid_argument("to_upoly: polynomial is not univariate in " + sym_name(var));
    UPoly<C> u;
    for (const auto& coeff : p.collect(var)) u.c.push_back(coeff.constant_value());
    u.normalize();
    return u;
}

template <class C>
Poly<C> from_upoly(const UPoly<C>& u, Symbol var) {
    Poly<C> p;
    for (size_t i = 0; i < u.c.size(); ++i)
        p.add_term(Monomial::var(var, static_cast<unsigned>(i)), u.c[i]);
    return p;
}

} // namespace symcirc

#endif
