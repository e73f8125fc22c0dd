#ifndef SYMCIRC_SOLUTION_HPP
#define SYMCIRC_SOLUTION_HPP

#include "groebner.hpp"
#include "sturm.hpp"

namespace symcirc {

struct SolveOptions {
    Rat eps = pow10_rat(-32);   // target enclosure width per variable
    int max_refine = 4000;      // bisection steps before declaring defeat
    int fallback_depth = 48;    // bracket search depth for nonlinear steps
};

// One real solution of a triangular system: certified enclosures per variable,
// plus the recipe (eliminant root + chosen basis elements) needed to refine
// them further on demand.
class SolutionBox {
public:
    Symbol elim_var{};
    RealRoot<Rat> elim_root;
    std::map<Symbol, RatIv> assignments;
    std::set<Symbol> exact_vars; // enclosed as a point, value known exactly
    std::set<Symbol> free_vars;  // underdetermined at this root
    std::vector<std::string> warnings;

    struct Step {
        Symbol var;
        QPoly poly;   // basis element defining var over previously solved vars
        long deg;     // degree in var
        RatIv bracket; // for deg > 1: certified sign-change bracket in var
    };
    std::vector<Step> steps;
    SolveOptions opts;

    const RatIv& at(Symbol v) const {
        auto it = assignments.find(v);
        if (it == assignments.end())
            throw std::invalid_argument("SolutionBox: no assignment for " + sym_name(v));
        return it->second;
    }

    Rat max_width() const {
        Rat w(0);
        for (const auto& [v, iv] : assignments) w = std::max(w, iv.width());
        return w;
    }

    // Shrink every assignment below eps by refining the eliminant root (and
    // nonlinear brackets) and re-running the back-substitution.
    void refine(const Rat& eps) {
        int rounds = 0;
        while (max_width() >= eps) {
            if (++rounds > opts.max_refine)
                throw std::runtime_error("SolutionBox::refine: refinement budget exhausted");
            elim_root.refine(elim_root.exact ? eps : elim_root.width() / 16);
            recompute(eps);
        }
    }

    // Re-derive assignments from the current eliminant enclosure.
    void recompute(const Rat& eps) {
        assignments.clear();
        exact_vars.clear();
        if (elim_root.exact) exact_vars.insert(elim_var);
        assignments[elim_var] = RatIv(elim_root.lo, elim_root.hi);
        for (auto& st : steps) apply_step(st, eps);
    }

private:
    friend std::vector<SolutionBox> solve_triangular(const GroebnerBasis&, Symbol,
                                                     const SolveOptions&);

    // certified interval sign of a polynomial over the current box, refining
    // the eliminant enclosure while ambiguous; nullopt when refinement is
    // exhausted without a decision
    std::optional<int> certified_sign(const QPoly& p) {
        for (int i = 0; i < opts.max_refine; ++i) {
            auto s = eval_interval(p, assignments).sign();
            if (s) return s;
            if (elim_root.exact) return std::nullopt;
            elim_root.refine(elim_root.width() / 16);
            partial_recompute();
        }
        return std::nullopt;
    }

    // refresh assignments of already-applied steps after tightening the root
    void partial_recompute() {
        std::vector<Step> applied;
        for (auto& st : steps)
            if (assignments.count(st.var)) applied.push_back(st);
        assignments.clear();
        exact_vars.erase(elim_var);
        if (elim_root.exact) exact_vars.insert(elim_var);
        assignments[elim_var] = RatIv(elim_root.lo, elim_root.hi);
        Rat eps = pow10_rat(-2);
        for (auto& st : applied) apply_step(st, eps);
    }

    void apply_step(Step& st, const Rat& eps) {
        std::vector<QPoly> coeffs = st.poly.collect(st.var);
        if (st.deg == 1) {
            RatIv a = eval_interval(coeffs[1], assignments);
            int guard = 0;
            while (!a.sign() || *a.sign() == 0) {
                if (elim_root.exact || ++guard > opts.max_refine)
                    throw std::runtime_error("solve_triangular: denominator for " +
                                             sym_name(st.var) +
                                             " not certified nonzero");
                elim_root.refine(elim_root.width() / 16);
                partial_recompute();
                a = eval_interval(coeffs[1], assignments);
            }
            RatIv b = eval_interval(coeffs[0], assignments);
            RatIv y = (-b) / a;
            if (a.is_point() && b.is_point()) exact_vars.insert(st.var);
            assignments[st.var] = y;
            return;
        }
        // nonlinear step: tighten the stored bracket by bisection with
        // certified interval signs
        auto sign_at = [&](const Rat& y0) -> std::optional<int> {
            auto box = assignments;
            box[st.var] = RatIv(y0);
            QPoly p = st.poly;
            return certified_sign_with(p, box);
        };
        RatIv br = st.bracket;
        auto slo = sign_at(br.lo), shi = sign_at(br.hi);
        int guard = 0;
        while ((!slo || !shi || *slo == 0 || *shi == 0 || *slo == *shi) &&
               !elim_root.exact && guard++ < 60) {
            elim_root.refine(elim_root.width() / 16);
            partial_recompute();
            slo = sign_at(br.lo);
            shi = sign_at(br.hi);
        }
        if (!slo || !shi || *slo == *shi)
            throw std::runtime_error("solve_triangular: lost bracket for " + sym_name(st.var));
        while (br.width() >= eps && guard++ < opts.max_refine) {
            Rat m = br.mid();
            auto sm = sign_at(m);
            if (!sm) {
                if (elim_root.exact) break;
                elim_root.refine(elim_root.width() / 16);
                partial_recompute();
                continue;
            }
            if (*sm == 0) { br = RatIv(m); exact_vars.insert(st.var); break; }
            if (*sm == *slo) br = RatIv(m, br.hi);
            else br = RatIv(br.lo, m);
        }
        st.bracket = br;
        assignments[st.var] = br;
    }

    std::optional<int> certified_sign_with(const QPoly& p, const std::map<Symbol, RatIv>& box) {
        return eval_interval(p, box).sign();
    }
};

namespace detail {

// does `q` (univariate in the eliminant variable) vanish at the isolated root?
// exact test via gcd with the square-free eliminant
inline bool vanishes_at_root(const UPoly<Rat>& q, const RealRoot<Rat>& root) {
    if (q.is_zero()) return true;
    if (root.exact) return sgn(q.eval(root.lo)) == 0;
    UPoly<Rat> g = upoly_gcd(root.poly, q);
    if (g.degree() < 1) return false;
    return SturmChain<Rat>(g).count(root.lo, root.hi) >= 1;
}

} // namespace detail

// Back-substitution through a lex Gröbner basis: isolate the real roots of the
// eliminant in `elim_var`, then solve the remaining variables in ascending lex
// rank. Linear basis elements give one value per root; nonlinear ones branch
// into one box per certified sign-change bracket. Variables with no usable
// defining polynomial at a given root are reported free with a warning.
inline std::vector<SolutionBox> solve_triangular(const GroebnerBasis& gb, Symbol elim_var,
                                                 const SolveOptions& opts = {}) {
    // eliminant: minimal-degree basis element univariate in elim_var
    const QPoly* elim = nullptr;
    for (const auto& p : gb.polys) {
        if (!p.is_univariate_in(elim_var) || p.degree(elim_var) < 1) continue;
        if (!elim || p.degree(elim_var) < elim->degree(elim_var)) elim = &p;
    }
    if (!elim)
        throw std::runtime_error("solve_triangular: no univariate eliminant in " +
                                 sym_name(elim_var));

    // remaining variables, ascending by the basis order (elim_var is lowest)
    std::set<Symbol> vars;
    for (const auto& p : gb.polys)
        for (Symbol v : p.symbols()) vars.insert(v);
    vars.erase(elim_var);
    std::vector<Symbol> order(vars.begin(), vars.end());
    std::sort(order.begin(), order.end(), [&](Symbol a, Symbol b) {
        return gb.order.less(Monomial::var(a, 1), Monomial::var(b, 1));
    });

    std::vector<SolutionBox> out;
    for (auto& root : isolate_real_roots(to_upoly(*elim, elim_var))) {
        SolutionBox seed;
        seed.elim_var = elim_var;
        seed.elim_root = root;
        seed.elim_root.refine(pow10_rat(-8)); // tighten before back-substitution
        seed.opts = opts;
        if (root.exact) seed.exact_vars.insert(elim_var);
        seed.assignments[elim_var] = RatIv(root.lo, root.hi);

        std::vector<SolutionBox> partial{std::move(seed)};
        for (Symbol y : order) {
            std::vector<SolutionBox> next;
            for (auto& box : partial) {
                std::set<Symbol> solved;
                for (const auto& [v, iv] : box.assignments) solved.insert(v);

                // candidates: basis elements in y over already-solved variables
                std::vector<const QPoly*> cands;
                for (const auto& p : gb.polys) {
                    if (p.degree(y) < 1) continue;
                    bool ok = true;
                    for (Symbol v : p.symbols())
                        if (v != y && !solved.count(v)) { ok = false; break; }
                    if (ok) cands.push_back(&p);
                }
                std::sort(cands.begin(), cands.end(), [&](const QPoly* a, const QPoly* b) {
                    return a->degree(y) < b->degree(y);
                });

                const QPoly* use = nullptr;
                for (const QPoly* p : cands) {
                    // the coefficient of the highest power of y must not vanish
                    QPoly lead = p->collect(y).back();
                    bool vanishes;
                    if (lead.is_univariate_in(elim_var) && solved.size() == 1) {
                        vanishes = detail::vanishes_at_root(to_upoly(lead, elim_var),
                                                            box.elim_root);
                    } else {
                        auto s = box.certified_sign(lead);
                        vanishes = !s || *s == 0;
                    }
                    if (!vanishes) { use = p; break; }
                }
                if (!use) {
                    if (cands.empty())
                        box.warnings.push_back("variable " + sym_name(y) +
                                               " has no defining polynomial at this root; "
                                               "treated as free");
                    else
                        box.warnings.push_back("all defining polynomials for " + sym_name(y) +
                                               " vanish at this root; treated as free");
                    box.free_vars.insert(y);
                    next.push_back(std::move(box));
                    continue;
                }

                long dy = use->degree(y);
                if (dy == 1) {
                    SolutionBox nb = box;
                    nb.steps.push_back({y, *use, 1, RatIv(0)});
                    nb.apply_step(nb.steps.back(), opts.eps);
                    next.push_back(std::move(nb));
                    continue;
                }

                // nonlinear: search certified sign-change brackets of use(y),
                // tightening the eliminant enclosure when the scan finds nothing
                std::vector<RatIv> brackets;
                for (int attempt = 0; attempt < 10; ++attempt) {
                std::vector<QPoly> cs = use->collect(y);
                std::vector<RatIv> civ;
                for (auto& c : cs) civ.push_back(eval_interval(c, box.assignments));
                Rat mx(0);
                for (size_t i = 0; i + 1 < civ.size(); ++i)
                    mx = std::max(mx, std::max(rat_abs(civ[i].lo), rat_abs(civ[i].hi)));
                Rat lead_lo = std::min(rat_abs(civ.back().lo), rat_abs(civ.back().hi));
                if (sgn(lead_lo) == 0) lead_lo = Rat(1); // lead certified nonzero above
                Rat bound = Rat(1) + mx / lead_lo;

                auto sign_at = [&](const Rat& y0) -> std::optional<int> {
                    auto bx = box.assignments;
                    bx[y] = RatIv(y0);
                    return eval_interval(*use, bx).sign();
                };
                struct Span { Rat lo, hi; int slo, shi; int depth; };
                const int explore_depth = 12; // blind split depth for no-sign-change spans
                std::vector<Span> work;
                auto s_lo = sign_at(-bound), s_hi = sign_at(bound);
                if (s_lo && s_hi) work.push_back({-bound, bound, *s_lo, *s_hi, 0});
                while (!work.empty()) {
                    Span sp = work.back();
                    work.pop_back();
                    bool change = sp.slo * sp.shi < 0;
                    if (change && sp.depth >= opts.fallback_depth) {
                        brackets.push_back(RatIv(sp.lo, sp.hi));
                        continue;
                    }
                    if (!change && sp.depth >= explore_depth) continue;
                    Rat m = (sp.lo + sp.hi) / 2;
                    auto sm = sign_at(m);
                    if (!sm) {
                        // coefficient intervals too wide to separate further;
                        // a certified sign change is still a valid bracket
                        if (change) brackets.push_back(RatIv(sp.lo, sp.hi));
                        continue;
                    }
                    if (*sm == 0) {
                        brackets.push_back(RatIv(m));
                        // keep hunting for roots on either side of the exact hit
                        Rat d = (sp.hi - sp.lo) / 16;
                        for (int t = 0; t < 32 && sgn(d) > 0; ++t, d /= 2) {
                            auto sl = sign_at(m - d), sr = sign_at(m + d);
                            if (!sl || !sr || *sl == 0 || *sr == 0) continue;
                            work.push_back({sp.lo, m - d, sp.slo, *sl, sp.depth + 1});
                            work.push_back({m + d, sp.hi, *sr, sp.shi, sp.depth + 1});
                            break;
                        }
                        continue;
                    }
                    work.push_back({sp.lo, m, sp.slo, *sm, sp.depth + 1});
                    work.push_back({m, sp.hi, *sm, sp.shi, sp.depth + 1});
                }
                if (!brackets.empty() || box.elim_root.exact) break;
                box.elim_root.refine(box.elim_root.width() / 256);
                box.partial_recompute();
                }
                if (brackets.empty()) {
                    box.warnings.push_back("no certified real value found for " + sym_name(y) +
                                           "; nonlinear back-substitution failed");
                    box.free_vars.insert(y);
                    next.push_back(std::move(box));
                    continue;
                }
                for (const auto& br : brackets) {
                    SolutionBox nb = box;
                    nb.steps.push_back({y, *use, dy, br});
                    if (br.is_point()) {
                        nb.exact_vars.insert(y);
                        nb.assignments[y] = br;
                        nb.steps.back().bracket = br;
                    } else {
                        nb.apply_step(nb.steps.back(), opts.eps);
                    }
                    next.push_back(std::move(nb));
                }
            }
            partial = std::move(next);
        }
        for (auto& b : partial) {
            b.refine(opts.eps);
            out.push_back(std::move(b));
        }
    }
    return out;
}

// End-to-end residual certificate: every equation, evaluated over the box,
// must yield an interval containing zero. Free variables are pinned to an
// arbitrary sample value (1) since any value solves the system along them.
inline bool certify_residuals(SolutionBox& box, const std::vector<QPoly>& equations,
                              const Rat& eps = pow10_rat(-20)) {
    box.refine(eps);
    auto bx = box.assignments;
    for (Symbol v : box.free_vars)
        if (!bx.count(v)) bx[v] = RatIv(Rat(1));
    for (const auto& eq : equations) {
        for (Symbol v : eq.symbols())
            if (!bx.count(v)) bx[v] = RatIv(Rat(1));
        if (!eval_interval(eq, bx).contains_zero()) return false;
    }
    return true;
}

} // namespace symcirc

#endif
