#ifndef SYMCIRC_STURM_HPP
#define SYMCIRC_STURM_HPP

#include "interval.hpp"
#include "upoly.hpp"

namespace symcirc {

inline Rat upper_abs(const Rat& x) { return rat_abs(x); }
inline Rat upper_abs(const QuadExt& x) { return rat_abs(x.a) + rat_abs(x.b) * x.d; }

inline Rat lower_abs(const Rat& x) { return rat_abs(x); }
// |a + b sqrt d| >= |a^2 - d b^2| / (|a| + |b| d)
inline Rat lower_abs(const QuadExt& x) {
    if (sgn(x.b) == 0) return rat_abs(x.a);
    Rat denom = rat_abs(x.a) + rat_abs(x.b) * x.d;
    return rat_abs(x.a * x.a - Rat(x.d) * x.b * x.b) / denom;
}

namespace detail {

// Scale a polynomial by a positive rational so its coefficients become
// primitive integers (integer combinations for QuadExt). Sign-preserving, so
// it is safe inside sign-variation chains, and it keeps remainder sequences
// at subresultant-sized coefficients instead of letting fractions pile up.
inline void fold_content(Int& num_gcd, Int& den_lcm, const Rat& c) {
    if (sgn(c) == 0) return;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
}

inline void scale_primitive(UPoly<Rat>& p) {
    Int g(0), l(1);
    for (const auto& c : p.c) fold_content(g, l, c);
    if (sgn(g) == 0) return;
    Rat scale = make_rat(l, g);
    for (auto& c : p.c) c *= scale;
}

inline void scale_primitive(UPoly<QuadExt>& p) {
    Int g(0), l(1);
    for (const auto& c : p.c) {
        fold_content(g, l, c.a);
        fold_content(g, l, c.b);
    }
    if (sgn(g) == 0) return;
    Rat scale = make_rat(l, g);
    for (auto& c : p.c) c = c * QuadExt(scale, Rat(0), p.c.front().d);
}

} // namespace detail

// Sturm chain: p, p', then negated Euclidean remainders (each scaled to a
// primitive representative; positive scaling preserves the sign variations).
template <class F>
struct SturmChain {
    std::vector<UPoly<F>> chain;

    explicit SturmChain(const UPoly<F>& p) {
        chain.push_back(p);
        if (p.degree() >= 1) chain.push_back(p.derivative());
        while (chain.size() >= 2 && !chain.back().is_zero() && chain.back().degree() >= 0) {
            auto [q, r] = UPoly<F>::divmod(chain[chain.size() - 2], chain.back());
            if (r.is_zero()) break;
            UPoly<F> nr = -r;
            detail::scale_primitive(nr);
            chain.push_back(std::move(nr));
        }
    }

    int variations_at(const F& x) const {
        int v = 0, last = 0;
        for (const auto& p : chain) {
            int s = sgn(p.eval(x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    // number of distinct real roots in (lo, hi]; standard Sturm count
    int count(const F& lo, const F& hi) const { return variations_at(lo) - variations_at(hi); }
};

// Isolating interval for one distinct real root of a square-free polynomial.
// `exact` marks roots hit exactly at a rational (or field) point; then
// lo == hi == value. Otherwise lo < hi and sign(p(lo)) != sign(p(hi)).
template <class F>
struct RealRoot {
    UPoly<F> poly; // square-free
    F lo, hi;
    bool exact = false;
    int multiplicity = 1; // w.r.t. the original input polynomial

    bool contains(const F& x) const { return sgn(x - lo) >= 0 && sgn(hi - x) >= 0; }
    F width() const { return hi - lo; }
    F mid() const { return (lo + hi) / F(2); }

    // Bisect until width < eps; never loses the root.
    void refine(const Rat& eps) {
        if (exact) return;
        int slo = sgn(poly.eval(lo));
        while (sgn(F(eps) - (hi - lo)) <= 0) {
            F m = mid();
            int sm = sgn(poly.eval(m));
            if (sm == 0) {
                lo = hi = m;
                exact = true;
                return;
            }
            if (sm == slo) lo = m; else hi = m;
        }
    }
};

// Cauchy root bound: 1 + max |c_i / c_n|.
template <class F>
Rat cauchy_bound(const UPoly<F>& p) {
    Rat m(0);
    for (size_t i = 0; i + 1 < p.c.size(); ++i) m = std::max(m, upper_abs(p.c[i]));
    // a lower bound on |lead| gives a safe upper bound on the quotient
    return Rat(1) + m / lower_abs(p.lead());
}

// All real roots of p (any multiplicities), certified by Sturm counts.
// Exact field-point roots come back with exact = true.
template <class F>
std::vector<RealRoot<F>> isolate_real_roots(const UPoly<F>& p_in) {
    if (p_in.is_zero()) throw std::domain_error("isolate_real_roots of zero polynomial");
    if (p_in.degree() == 0) return {};
    UPoly<F> p = squarefree_part(p_in).monic();
    if (p.degree() == 1) {
        F r = -p.c[0] / p.c[1];
        long mult = p_in.degree(); // p_in = lc * (x - r)^mult
        return {RealRoot<F>{p, r, r, true, static_cast<int>(mult)}};
    }
    SturmChain<F> sturm(p);
    Rat b = cauchy_bound(p);
    F lo = F(-b), hi = F(b);
    // make sure the bound endpoints are not roots (they cannot be, by Cauchy)
    std::vector<RealRoot<F>> out;
    struct Seg { F lo, hi; int n; };
    std::vector<Seg> stack{{lo, hi, sturm.count(lo, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1 && sgn(p.eval(s.lo)) != 0 && sgn(p.eval(s.hi)) != 0 &&
            sgn(p.eval(s.lo)) != sgn(p.eval(s.hi))) {
            out.push_back({p, s.lo, s.hi, false, 1});
            continue;
        }
        F m = (s.lo + s.hi) / F(2);
        if (sgn(p.eval(m)) == 0) {
            out.push_back({p, m, m, true, 1});
            // exclude the exact root by a shrinking margin on both sides
            F eps = (s.hi - s.lo) / F(4);
            while (sturm.count(m - eps, m + eps) != 1 ||
                   sgn(p.eval(m - eps)) == 0 || sgn(p.eval(m + eps)) == 0)
                eps = eps / F(2);
            stack.push_back({s.lo, m - eps, sturm.count(s.lo, m - eps)});
            stack.push_back({m + eps, s.hi, sturm.count(m + eps, s.hi)});
        } else {
            stack.push_back({s.lo, m, sturm.count(s.lo, m)});
            stack.push_back({m, s.hi, sturm.count(m, s.hi)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RealRoot<F>& a, const RealRoot<F>& b) { return sgn(b.lo - a.lo) > 0; });

    // Multiplicities from the gcd chain g_0 = p_in, g_{k+1} = gcd(g_k, g_k'):
    // a root of multiplicity m appears in exactly the first m links. Every
    // distinct root of any link is a root of p, so each isolating interval
    // meets a link in at most the one isolated root.
    if (p_in.degree() != p.degree()) {
        std::vector<SturmChain<F>> chains;
        UPoly<F> q = p_in;
        while (q.degree() >= 1) {
            UPoly<F> g = upoly_gcd(q, q.derivative());
            chains.emplace_back(squarefree_part(q));
            if (g.degree() == 0) break;
            q = g;
        }
        for (auto& r : out) {
            int mult = 0;
            for (const auto& ch : chains) {
                bool has = r.exact ? sgn(ch.chain.front().eval(r.lo)) == 0
                                   : ch.count(r.lo, r.hi) >= 1;
                if (has) ++mult;
                else break;
            }
            r.multiplicity = std::max(mult, 1);
        }
    }
    return out;
}

// Count real roots in [lo, hi] of a square-free polynomial.
template <class F>
int count_real_roots(const UPoly<F>& p, const F& lo, const F& hi) {
    SturmChain<F> sturm(squarefree_part(p));
    return sturm.count(lo, hi);
}

template <class F>
using SturmSequence = SturmChain<F>;
template <class F>
using IsolatingInterval = RealRoot<F>;

// Univariate view: p must involve at most one symbol.
template <class C>
std::vector<RealRoot<C>> isolate_real_roots(const Poly<C>& p) {
    auto syms = p.symbols();
    if (syms.size() > 1)
        throw std::invalid_argument("isolate_real_roots: polynomial is not univariate");
    if (syms.empty()) {
        if (p.is_zero()) throw std::domain_error("isolate_real_roots of zero polynomial");
        return {};
    }
    return isolate_real_roots(to_upoly(p, *syms.begin()));
}

} // namespace symcirc

#endif
