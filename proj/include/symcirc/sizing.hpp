#ifndef SYMCIRC_SIZING_HPP
#define SYMCIRC_SIZING_HPP

#include "mna.hpp"
#include "solution.hpp"
#include "stability.hpp"

#include <chrono>

namespace symcirc {

// ---------------------------------------------------------------------------
// Filter characteristic machinery
// ---------------------------------------------------------------------------

// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x,
// T_{n+1} = 2x T_n - T_{n-1}.
inline QPoly chebyshev_poly(int n, Symbol var = sym("x")) {
    if (n < 0) throw std::invalid_argument("chebyshev_poly: negative order");
    QPoly t0(1), t1 = QPoly::variable(var);
    if (n == 0) return t0;
    QPoly two_x = QPoly(Rat(2)) * t1;
    for (int k = 1; k < n; ++k) {
        QPoly t2 = two_x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

enum class FilterFamily { Butterworth, Chebyshev };

namespace detail {

inline std::optional<Rat> rat_sqrt_exact(const Rat& x) {
    if (sgn(x) < 0) return std::nullopt;
    const mpz_class &num = x.get_num(), &den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return make_rat(sn, sd);
}

} // namespace detail

// Equations forcing D(s) = 1 + a_1 s + ... + a_n s^n to satisfy the family's
// Feldtkeller identity |D(jw)|^2 = 1 + |A(jw)|^2 written as a polynomial
// identity in s: D(s) D(-s) = 1 + (-1)^n s^{2n} (Butterworth) or
// D(s) D(-s) = (1 + T_n(is) T_n(-is)) / (1 + T_n(0)^2) (Chebyshev; the
// division normalizes the constant term to match D(0) = 1, and
// T(is) T(-is) = E(-s^2)^2 + s^2 O(-s^2)^2 for T(x) = E(x^2) + x O(x^2) is
// rational). One equation per even power of s. When the top equation reads
// a_n^2 = c with c a rational square (even n), it is replaced by the linear
// positive-root form a_n - sqrt(c).
//
// ripple_sq is the squared ripple factor eps^2 multiplying the Chebyshev
// characteristic (|D|^2 = 1 + eps^2 |T_n|^2); the default 1 matches the plain
// 1 + T_n T_n convention. It is ignored for Butterworth.
inline std::vector<QPoly> feldtkeller_system(const std::vector<Symbol>& a, FilterFamily family,
                                             const Rat& ripple_sq = Rat(1)) {
    const int n = static_cast<int>(a.size());
    if (n < 1) throw std::invalid_argument("feldtkeller_system: need at least one coefficient");
    Symbol s = sym("s");
    QPoly D(1);
    for (int i = 1; i <= n; ++i)
        D += QPoly::variable(a[i - 1]) * QPoly::term(Rat(1), Monomial::var(s, i));
    QPoly minus_s = QPoly(Rat(-1)) * QPoly::variable(s);
    QPoly prod = D * D.substitute(s, minus_s);

    QPoly rhs(1);
    if (family == FilterFamily::Butterworth) {
        rhs += QPoly::term(Rat(n % 2 == 0 ? 1 : -1), Monomial::var(s, 2 * n));
    } else {
        // split T_n into even/odd parts, substitute x^2 -> -s^2
        QPoly even, odd; // E(-s^2) and O(-s^2)
        for (const auto& [coeff, k] :
             [&] {
                 std::vector<std::pair<Rat, unsigned>> cs;
                 auto parts = chebyshev_poly(n, s).collect(s);
                 for (unsigned k = 0; k < parts.size(); ++k)
                     if (!parts[k].is_zero()) cs.emplace_back(parts[k].constant_value(), k);
                 return cs;
             }()) {
            Rat c = (k / 2) % 2 == 0 ? coeff : -coeff; // (-1)^{floor(k/2)}
            QPoly term = QPoly::term(c, Monomial::var(s, k - k % 2));
            (k % 2 == 0 ? even : odd) += term;
        }
        if (sgn(ripple_sq) <= 0)
            throw std::invalid_argument("feldtkeller_system: ripple factor must be positive");
        QPoly prod_t = even * even + QPoly::term(Rat(1), Monomial::var(s, 2)) * odd * odd;
        rhs += QPoly(ripple_sq) * prod_t;
        Rat c0 = rhs.collect(s)[0].constant_value();
        rhs = rhs * QPoly(Rat(1) / c0);
    }

    std::vector<QPoly> eqs;
    for (const QPoly& c : (prod - rhs).collect(s))
        if (!c.is_zero()) eqs.push_back(c);

    // a_n^2 = c with square c: take the positive root (the family's leading
    // coefficient is positive for a stable D)
    if (!eqs.empty()) {
        QPoly& top = eqs.back();
        Symbol an = a[n - 1];
        if (top.degree(an) == 2) {
            auto cs = top.collect(an);
            if (cs.size() == 3 && cs[1].is_zero() && cs[2].is_constant() && cs[0].is_constant()) {
                Rat c = -cs[0].constant_value() / cs[2].constant_value();
                if (auto r = detail::rat_sqrt_exact(c))
                    top = QPoly::variable(an) - QPoly(*r);
            }
        }
    }
    return eqs;
}

// ---------------------------------------------------------------------------
// Design systems
// ---------------------------------------------------------------------------

enum class DesignMode { TargetRational, Butterworth, Chebyshev, PolePlacement };

struct DesignSpec {
    DesignMode mode = DesignMode::TargetRational;
    int order = 0;                     // filter order for the family modes
    std::vector<Rat> target_num;       // ascending in s, TargetRational mode
    std::vector<Rat> target_den;
    bool scale_unknown = false;        // introduce a free scale symbol k
};

struct DesignSystem {
    std::vector<QPoly> equations;         // = 0 implied
    std::vector<Symbol> unknowns;         // elimination priority: first = eliminated
                                          // first; last = eliminant variable
    std::vector<Symbol> parameters;       // symbolic parameters, lowest priority
    std::map<Symbol, Rat> frozen;         // pre-assigned values
    std::vector<Symbol> derived;          // unknowns defined linearly by one equation
                                          // (pre-substituted before the Groebner stage)
    std::vector<Symbol> positive;         // admissibility: certified > 0
    std::vector<Symbol> nonnegative;      // admissibility: certified >= 0
    std::vector<QPoly> hurwitz_coeffs;    // ascending denominator coefficients to
                                          // stability-test per solution (empty = skip)
};

// Coefficient matching of a symbolic transfer function against a design
// specification. For the filter families, abstract denominator coefficients
// a_1..a_n are introduced as further unknowns together with their Feldtkeller
// equations; the tf coefficients are tied to them by cross-multiplication
// (a_i * B_0 - B_i = 0 with B = denominator coefficients of the tf).
inline DesignSystem coefficient_match(const TransferFunction& tf, const DesignSpec& spec) {
    Symbol s = sym("s");
    DesignSystem sys;

    std::set<Symbol> elems;
    for (Symbol v : tf.num.symbols()) elems.insert(v);
    for (Symbol v : tf.den.symbols()) elems.insert(v);
    elems.erase(s);

    if (spec.mode == DesignMode::TargetRational) {
        QPoly tn, td;
        for (size_t i = 0; i < spec.target_num.size(); ++i)
            tn += QPoly::term(spec.target_num[i], Monomial::var(s, static_cast<unsigned>(i)));
        for (size_t i = 0; i < spec.target_den.size(); ++i)
            td += QPoly::term(spec.target_den[i], Monomial::var(s, static_cast<unsigned>(i)));
        if (static_cast<long>(spec.target_num.size()) - 1 > tf.num.degree(s) ||
            static_cast<long>(spec.target_den.size()) - 1 > tf.den.degree(s))
            throw std::invalid_argument("coefficient_match: target degree exceeds tf degree");
        for (const QPoly& c : (tf.num * td - tn * tf.den).collect(s))
            if (!c.is_zero()) sys.equations.push_back(primitive_part(c));
        sys.unknowns.assign(elems.begin(), elems.end());
        sys.positive = sys.unknowns;
        return sys;
    }
    if (spec.mode == DesignMode::PolePlacement)
        throw std::invalid_argument("coefficient_match: use pole_placement_system for pole placement");

    const int n = spec.order;
    if (n < 1) throw std::invalid_argument("coefficient_match: filter order must be >= 1");
    auto B = tf.den.collect(s);
    if (static_cast<int>(B.size()) - 1 != n)
        throw std::invalid_argument("coefficient_match: tf denominator degree != filter order");
    if (B[0].is_zero())
        throw std::invalid_argument("coefficient_match: tf denominator has zero constant term");

    std::vector<Symbol> a;
    sys.hurwitz_coeffs.push_back(QPoly(1));
    for (int i = 1; i <= n; ++i) {
        a.push_back(sym("a" + std::to_string(i)));
        sys.hurwitz_coeffs.push_back(QPoly::variable(a.back()));
        sys.equations.push_back(primitive_part(QPoly::variable(a.back()) * B[0] - B[i]));
    }
    for (QPoly& e : feldtkeller_system(
             a, spec.mode == DesignMode::Butterworth ? FilterFamily::Butterworth
                                                     : FilterFamily::Chebyshev))
        sys.equations.push_back(std::move(e));

    sys.unknowns = a;
    for (Symbol v : elems) sys.unknowns.push_back(v);
    sys.derived = a;
    sys.positive.assign(elems.begin(), elems.end());
    return sys;
}

// Pole placement with a fixed numerator zero structure. With N = Q * Z (Z the
// fixed zero polynomial in s, exactness of the division checked) and target
// poles p_j, the identity k * D(s) - Q * prod_j (s - p_j) = 0 is expanded and
// split into one equation per power of s.
inline DesignSystem pole_placement_system(const TransferFunction& tf,
                                          const std::vector<QPoly>& poles,
                                          const QPoly& zero_structure, Symbol scale,
                                          const std::vector<Symbol>& unknowns,
                                          const std::vector<Symbol>& parameters = {}) {
    if (poles.empty()) throw std::invalid_argument("pole_placement_system: no poles given");
    Symbol s = sym("s");
    QPoly quotient;
    try {
        quotient = exact_divide(tf.num, zero_structure);
    } catch (const std::domain_error&) {
        throw std::invalid_argument(
            "pole_placement_system: numerator inconsistent with the zero structure");
    }
    QPoly target(1);
    for (const QPoly& p : poles) target *= QPoly::variable(s) - p;

    DesignSystem sys;
    QPoly identity = QPoly::variable(scale) * tf.den - quotient * target;
    for (const QPoly& c : identity.collect(s))
        if (!c.is_zero()) sys.equations.push_back(c);
    sys.unknowns = unknowns;
    sys.parameters = parameters;
    return sys;
}

// ---------------------------------------------------------------------------
// Full solve pipeline
// ---------------------------------------------------------------------------

struct SolveDesignOptions {
    SolveOptions solve{};
    ResourceBudget budget{};
    Rat residual_eps = pow10_rat(-26); // box refinement before residual certification
    int hurwitz_rounds = 64;
};

struct DesignSolution {
    SolutionBox box;
    std::map<Symbol, RatIv> derived_values; // pre-substituted unknowns, recovered
    std::optional<bool> hurwitz_ok;         // nullopt: not tested or undecided
    std::optional<bool> positive_ok;
    bool residual_ok = false;
    Rat residual_bound{0};
    std::vector<std::string> reasons;       // rejection reasons; empty = admissible

    bool admissible() const { return reasons.empty(); }
    bool undetermined() const {
        for (const auto& r : reasons)
            if (r.rfind("undetermined", 0) == 0) return true;
        return false;
    }
};

struct DesignReport {
    std::vector<DesignSolution> solutions;  // one per certified solution box
    QPoly eliminant;                        // univariate generator (when present)
    Symbol eliminant_var{};
    GroebnerBasis basis;                    // full lex basis
    std::vector<QPoly> frozen_equations;    // post-freeze, pre-substitution system
    std::map<Symbol, QPoly> derived_recipes;
    std::vector<std::string> warnings;
    double seconds = 0;

    size_t admissible_count() const {
        size_t n = 0;
        for (const auto& s : solutions) n += s.admissible();
        return n;
    }
    size_t rejected_count() const { return solutions.size() - admissible_count(); }
};

inline DesignReport solve_design(const DesignSystem& sys, const SolveDesignOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    DesignReport rep;

    // 1. freeze
    std::map<Symbol, QPoly> freeze;
    for (const auto& [v, val] : sys.frozen) freeze[v] = QPoly(val);
    std::vector<QPoly> eqs;
    for (const auto& e : sys.equations) {
        QPoly f = freeze.empty() ? e : e.substitute(freeze);
        if (!f.is_zero()) eqs.push_back(primitive_part(f));
    }
    std::vector<Symbol> unknowns;
    for (Symbol v : sys.unknowns)
        if (!sys.frozen.count(v)) unknowns.push_back(v);
    if (unknowns.empty()) throw std::invalid_argument("solve_design: no unknowns left");
    rep.frozen_equations = eqs;

    // 2. pre-substitute linearly defined unknowns (exact Gaussian elimination
    //    on the ideal; the values are recovered per solution afterwards)
    std::map<Symbol, QPoly> recipes;
    for (Symbol u : sys.derived) {
        if (sys.frozen.count(u)) continue;
        size_t pick = eqs.size();
        QPoly expr;
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (eqs[i].degree(u) != 1) continue;
            auto cs = eqs[i].collect(u);
            if (!cs[1].is_constant()) continue;
            expr = cs[0] * QPoly(Rat(-1) / cs[1].constant_value());
            pick = i;
            break;
        }
        if (pick == eqs.size()) continue; // no usable defining equation; keep as unknown
        eqs.erase(eqs.begin() + pick);
        for (auto& e : eqs) e = e.substitute(u, expr);
        for (auto& [v, r] : recipes) r = r.substitute(u, expr);
        recipes[u] = expr;
        unknowns.erase(std::find(unknowns.begin(), unknowns.end(), u));
    }
    {
        std::vector<QPoly> live;
        for (auto& e : eqs)
            if (!e.is_zero()) live.push_back(primitive_part(e));
        eqs = std::move(live);
    }
    rep.derived_recipes = recipes;
    if (eqs.empty()) throw std::invalid_argument("solve_design: system is trivial after substitution");
    if (unknowns.empty()) throw std::invalid_argument("solve_design: no unknowns left after substitution");

    // 3. lex Groebner basis (grevlex + FGLM when zero-dimensional)
    PolySystem ps{eqs, unknowns, sys.parameters};
    eliminate(ps, {}, opt.budget, &rep.basis);
    if (!is_zero_dimensional(rep.basis, unknowns))
        rep.warnings.push_back("system is not zero-dimensional over the unknowns; "
                               "individual solutions may carry free variables");

    // 4. eliminant + triangular real solve
    Symbol evar = unknowns.back();
    rep.eliminant_var = evar;
    for (const auto& p : rep.basis.polys) {
        if (!p.is_univariate_in(evar) || p.degree(evar) < 1) continue;
        if (rep.eliminant.is_zero() || p.degree(evar) < rep.eliminant.degree(evar))
            rep.eliminant = p;
    }
    std::vector<SolutionBox> boxes;
    try {
        boxes = solve_triangular(rep.basis, evar, opt.solve);
    } catch (const std::runtime_error& e) {
        std::string what = e.what();
        if (what.find("no univariate eliminant") != std::string::npos)
            throw std::runtime_error(what + "; the system appears positive-dimensional - "
                                            "freeze more values and retry");
        throw;
    }

    // 5. classify
    for (auto& b : boxes) {
        DesignSolution sol;
        sol.box = std::move(b);
        sol.box.refine(opt.residual_eps);

        // evaluation environment: solved vars, free vars pinned to 1, then the
        // recovered derived values
        auto build_env = [&]() {
            std::map<Symbol, RatIv> env = sol.box.assignments;
            for (Symbol v : sol.box.free_vars)
                if (!env.count(v)) env[v] = RatIv(Rat(1));
            sol.derived_values.clear();
            for (const auto& [u, r] : recipes) {
                sol.derived_values[u] = eval_interval(r, env);
                env[u] = sol.derived_values[u];
            }
            return env;
        };
        auto env = build_env();

        // residual certificate over the pre-substitution system
        sol.residual_ok = true;
        for (const auto& e : rep.frozen_equations) {
            auto full = env;
            for (Symbol v : e.symbols())
                if (!full.count(v)) full[v] = RatIv(Rat(1));
            RatIv r = eval_interval(e, full);
            if (!r.contains_zero()) sol.residual_ok = false;
            sol.residual_bound =
                std::max(sol.residual_bound, std::max(rat_abs(r.lo), rat_abs(r.hi)));
        }
        if (!sol.residual_ok) sol.reasons.push_back("residual");

        // Hurwitz filter on the denominator coefficient enclosures
        if (!sys.hurwitz_coeffs.empty()) {
            auto coeff_fn = [&](int round) {
                if (round > 0) {
                    Rat w = sol.box.max_width();
                    if (sgn(w) > 0) {
                        sol.box.refine(w / 256);
                        env = build_env();
                    }
                }
                std::vector<RatIv> cs;
                for (const auto& c : sys.hurwitz_coeffs) {
                    auto full = env;
                    for (Symbol v : c.symbols())
                        if (!full.count(v)) full[v] = RatIv(Rat(1));
                    cs.push_back(eval_interval(c, full));
                }
                return cs;
            };
            try {
                sol.hurwitz_ok = hurwitz_stable(coeff_fn, opt.hurwitz_rounds);
                if (!*sol.hurwitz_ok) sol.reasons.push_back("non_hurwitz");
            } catch (const std::runtime_error&) {
                sol.reasons.push_back("undetermined:hurwitz");
            }
        }

        // sign admissibility
        auto sign_of = [&](Symbol v) -> std::optional<int> {
            for (int round = 0; round < 64; ++round) {
                auto it = env.find(v);
                if (it == env.end()) return std::nullopt;
                if (auto sg = it->second.sign()) return sg;
                Rat w = sol.box.max_width();
                if (sgn(w) == 0) return std::nullopt;
                sol.box.refine(w / 16);
                env = build_env();
            }
            return std::nullopt;
        };
        bool pos_ok = true;
        for (Symbol v : sys.positive) {
            if (sys.frozen.count(v) || sol.box.free_vars.count(v)) continue;
            auto sg = sign_of(v);
            if (!sg) {
                sol.reasons.push_back("undetermined:sign(" + sym_name(v) + ")");
                pos_ok = false;
            } else if (*sg == 0) {
                sol.reasons.push_back("trivial_zero(" + sym_name(v) + ")");
                pos_ok = false;
            } else if (*sg < 0) {
                sol.reasons.push_back("negative_element(" + sym_name(v) + ")");
                pos_ok = false;
            }
        }
        for (Symbol v : sys.nonnegative) {
            if (sys.frozen.count(v) || sol.box.free_vars.count(v)) continue;
            bool decided = false;
            for (int round = 0; round < 16 && !decided; ++round) {
                auto it = env.find(v);
                if (it == env.end()) break;
                if (auto sg = it->second.sign()) {
                    if (*sg < 0) {
                        sol.reasons.push_back("negative_element(" + sym_name(v) + ")");
                        pos_ok = false;
                    }
                    decided = true;
                    break;
                }
                // enclosure straddles zero: once it is certifiably tiny, treat
                // the value as zero, which is admissible for this class
                if (std::max(rat_abs(it->second.lo), rat_abs(it->second.hi)) < opt.residual_eps) {
                    decided = true;
                    break;
                }
                Rat w = sol.box.max_width();
                if (sgn(w) == 0) break;
                sol.box.refine(w / 16);
                env = build_env();
            }
            if (!decided) {
                sol.reasons.push_back("undetermined:sign(" + sym_name(v) + ")");
                pos_ok = false;
            }
        }
        sol.positive_ok = pos_ok;

        rep.solutions.push_back(std::move(sol));
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace symcirc

#endif
