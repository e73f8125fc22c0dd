#ifndef SYMCIRC_DIVIDE_HPP
#define SYMCIRC_DIVIDE_HPP

#include "poly.hpp"

#include <optional>

namespace symcirc {

template <class C>
struct DivisionResult {
    std::vector<Poly<C>> quotients;
    Poly<C> remainder;
};

// Multivariate division with remainder: p = sum q_i d_i + r, where no
// monomial of r is divisible by any divisor's leading monomial under ord.
template <class C>
DivisionResult<C> multivariate_divide(const Poly<C>& p, const std::vector<Poly<C>>& divisors,
                                      const MonomialOrder& ord) {
    for (const auto& d : divisors)
        if (d.is_zero()) throw std::domain_error("multivariate_divide: zero divisor");
    DivisionResult<C> res;
    res.quotients.assign(divisors.size(), Poly<C>{});

    std::vector<Monomial> lm(divisors.size());
    std::vector<C> lc(divisors.size());
    for (size_t i = 0; i < divisors.size(); ++i) {
        lm[i] = divisors[i].leading_monomial(ord);
        lc[i] = divisors[i].leading_coeff(ord);
    }

    Poly<C> work = p;
    while (!work.is_zero()) {
        Monomial m = work.leading_monomial(ord);
        C c = work.terms().at(m);
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (lm[i].divides(m)) {
                Monomial q = m / lm[i];
                C qc = c / lc[i];
                res.quotients[i].add_term(q, qc);
                work -= Poly<C>::term(qc, q) * divisors[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            res.remainder.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return res;
}

// Exact quotient p / q; throws if q does not divide p.
template <class C>
Poly<C> exact_divide(const Poly<C>& p, const Poly<C>& q) {
    if (q.is_zero()) throw std::domain_error("exact_divide by zero");
    if (p.is_zero()) return {};
    // any monomial order gives a valid division algorithm; pick lex on the ids
    MonomialOrder ord;
    Poly<C> quot;
    Poly<C> work = p;
    Monomial qm = q.leading_monomial(ord);
    C qc = q.leading_coeff(ord);
    while (!work.is_zero()) {
        Monomial m = work.leading_monomial(ord);
        if (!qm.divides(m)) throw std::domain_error("exact_divide: not divisible");
        C c = work.terms().at(m) / qc;
        Monomial t = m / qm;
        quot.add_term(t, c);
        work -= Poly<C>::term(c, t) * q;
    }
    return quot;
}

template <class C>
bool divides_exactly(const Poly<C>& q, const Poly<C>& p) {
    try {
        exact_divide(p, q);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// p = content * primitive with coprime integer coefficients in the primitive
// part and positive leading coefficient under ord. content(0) = 0.
inline std::pair<Rat, QPoly> content_primitive(const QPoly& p, const MonomialOrder& ord = {}) {
    if (p.is_zero()) return {Rat(0), QPoly{}};
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(p.leading_coeff(ord)) < 0) content = -content;
    return {content, p.div_coeff(content)};
}

inline QPoly primitive_part(const QPoly& p, const MonomialOrder& ord = {}) {
    return content_primitive(p, ord).second;
}

} // namespace symcirc

#endif
