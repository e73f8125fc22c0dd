#ifndef SYMCIRC_POLY_HPP
#define SYMCIRC_POLY_HPP

#include "monomial.hpp"
#include "ordering.hpp"
#include "quadext.hpp"
#include "rational.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace symcirc {

// Multivariate polynomial with exact coefficients (Rat or QuadExt).
// Stored in a canonical, order-agnostic map keyed by monomial; iteration
// under a particular MonomialOrder sorts on demand.
template <class C>
class Poly {
public:
    using Coeff = C;
    using Terms = std::map<Monomial, C>;

    Poly() = default;
    Poly(int v) { if (v != 0) terms_[Monomial{}] = C(v); }
    Poly(const C& c) { if (sgn(c) != 0) terms_[Monomial{}] = c; }
    static Poly variable(Symbol v, unsigned exp = 1) {
        Poly p;
        p.terms_[Monomial::var(v, exp)] = C(1);
        return p;
    }
    static Poly term(const C& c, const Monomial& m) {
        Poly p;
        if (sgn(c) != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    C constant_value() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? C(0) : it->second;
    }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    std::set<Symbol> symbols() const {
        std::set<Symbol> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [s, e] : m.entries()) out.insert(s);
        return out;
    }

    long degree(Symbol v) const {
        long d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, static_cast<long>(m.degree(v)));
        return d; // -1 for the zero polynomial
    }
    long total_degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, static_cast<long>(m.total_degree()));
        return d;
    }

    void add_term(const Monomial& m, const C& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator+(const Poly& x, const Poly& y) {
        Poly r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& x, const Poly& y) {
        Poly r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_)
                r.add_term(mx * my, cx * cy);
        return r;
    }
    friend Poly operator*(const Poly& x, const C& c) { return x * Poly(c); }
    friend Poly operator*(const C& c, const Poly& x) { return x * Poly(c); }
    Poly& operator+=(const Poly& y) { return *this = *this + y; }
    Poly& operator-=(const Poly& y) { return *this = *this - y; }
    Poly& operator*=(const Poly& y) { return *this = *this * y; }

    Poly pow(long e) const {
        if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
        Poly r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Exact division by a coefficient.
    Poly div_coeff(const C& c) const {
        if (sgn(c) == 0) throw std::domain_error("Poly::div_coeff by zero");
        Poly r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k / c;
        return r;
    }

    // Division by a monomial; caller guarantees every term is divisible.
    Poly div_monomial(const Monomial& d) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (!d.divides(m)) throw std::domain_error("Poly::div_monomial: not divisible");
            r.terms_[m / d] = c;
        }
        return r;
    }

    // gcd of all monomials (for shared s^k style cancellation)
    Monomial monomial_content() const {
        if (terms_.empty()) return {};
        auto it = terms_.begin();
        Monomial g = it->first;
        for (++it; it != terms_.end() && !g.is_one(); ++it)
            g = Monomial::gcd(g, it->first);
        return g;
    }

    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x.terms_ == y.terms_); }

    // --- order-dependent views -------------------------------------------

    const Monomial& leading_monomial(const MonomialOrder& ord) const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return best->first;
    }
    const C& leading_coeff(const MonomialOrder& ord) const {
        return terms_.at(leading_monomial(ord));
    }
    // terms sorted descending under ord
    std::vector<std::pair<Monomial, C>> sorted_terms(const MonomialOrder& ord) const {
        std::vector<std::pair<Monomial, C>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
            return ord.less(b.first, a.first);
        });
        return v;
    }

    // --- substitution / collection ---------------------------------------

    // Simultaneous substitution; unbound symbols pass through.
    Poly substitute(const std::map<Symbol, Poly>& bindings) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly t(c);
            for (const auto& [s, e] : m.entries()) {
                auto it = bindings.find(s);
                if (it == bindings.end())
                    t *= Poly::variable(s, e);
                else
                    t *= it->second.pow(e);
            }
            r += t;
        }
        return r;
    }
    Poly substitute(Symbol s, const Poly& value) const {
        return substitute(std::map<Symbol, Poly>{{s, value}});
    }

    // Coefficients by ascending power of var; result[i] is free of var.
    // collect(0) = [0] by convention.
    std::vector<Poly> collect(Symbol var) const {
        long d = degree(var);
        std::vector<Poly> out(static_cast<size_t>(std::max<long>(d, 0)) + 1);
        for (const auto& [m, c] : terms_) {
            unsigned e = m.degree(var);
            out[e].add_term(m / Monomial::var(var, e), c);
        }
        return out;
    }

    bool is_univariate_in(Symbol var) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [s, e] : m.entries())
                if (s != var) return false;
        return true;
    }

    // Full evaluation; throws if a symbol is unbound.
    template <class V>
    V eval(const std::map<Symbol, V>& point) const {
        V acc(0);
        for (const auto& [m, c] : terms_) {
            V t = coeff_as<V>(c);
            for (const auto& [s, e] : m.entries()) {
                auto it = point.find(s);
                if (it == point.end())
                    throw std::invalid_argument("eval: unbound symbol " + sym_name(s));
                V p = it->second;
                for (unsigned k = 0; k < e; ++k) t = t * p;
            }
            acc = acc + t;
        }
        return acc;
    }

private:
    template <class V>
    static V coeff_as(const C& c) { return V(c); }

    Terms terms_;
};

using QPoly = Poly<Rat>;        // rational coefficients
using EPoly = Poly<QuadExt>;    // Q(sqrt d) coefficients

inline EPoly to_quadext(const QPoly& p, long d = 2) {
    EPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, QuadExt(c, 0, d));
    return r;
}

} // namespace symcirc

#endif
