#ifndef SYMCIRC_GROEBNER_HPP
#define SYMCIRC_GROEBNER_HPP

#include "divide.hpp"

#include <chrono>
#include <optional>
#include <set>

namespace symcirc {

struct PolySystem {
    std::vector<QPoly> generators;
    std::vector<Symbol> unknowns;   // elimination priority: first = eliminated first
    std::vector<Symbol> parameters; // ride along as lowest-priority variables

    std::vector<Symbol> order_high_to_low() const {
        std::vector<Symbol> v = unknowns;
        v.insert(v.end(), parameters.begin(), parameters.end());
        return v;
    }
    MonomialOrder lex() const { return lex_order(order_high_to_low()); }
};

struct GroebnerBasis {
    std::vector<QPoly> polys;
    MonomialOrder order;
    bool reduced = false;
};

struct ResourceBudget {
    size_t max_pairs = 1'000'000;
    size_t max_coeff_bits = 100'000;
    double max_seconds = 0; // 0 = unlimited
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline QPoly s_polynomial(const QPoly& f, const QPoly& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("s_polynomial of zero polynomial");
    const Monomial& mf = f.leading_monomial(ord);
    const Monomial& mg = g.leading_monomial(ord);
    Monomial l = Monomial::lcm(mf, mg);
    QPoly a = QPoly::term(Rat(1) / f.leading_coeff(ord), l / mf) * f;
    QPoly b = QPoly::term(Rat(1) / g.leading_coeff(ord), l / mg) * g;
    return a - b;
}

namespace detail {

// Reduction workspace keyed by the active order so the leading term is rbegin().
struct OrderCmp {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};
using OrderedTerms = std::map<Monomial, Rat, OrderCmp>;

inline void add_into(OrderedTerms& acc, const Monomial& m, const Rat& c) {
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) acc.erase(it);
    }
}

struct Reducer {
    const MonomialOrder& ord;
    std::vector<const QPoly*> basis;
    std::vector<Monomial> lm;
    std::vector<Rat> lc;
    std::vector<std::vector<std::pair<Monomial, Rat>>> sorted; // descending

    explicit Reducer(const MonomialOrder& o) : ord(o) {}

    void push(const QPoly& p) {
        basis.push_back(&p);
        lm.push_back(p.leading_monomial(ord));
        lc.push_back(p.leading_coeff(ord));
        sorted.push_back(p.sorted_terms(ord));
    }

    // Full normal form of p modulo the tracked basis.
    QPoly reduce(const QPoly& p) const {
        OrderedTerms work{OrderCmp{&ord}};
        for (const auto& [m, c] : p.terms()) work.emplace(m, c);
        QPoly out;
        while (!work.empty()) {
            auto lead = std::prev(work.end());
            Monomial m = lead->first;
            Rat c = lead->second;
            bool hit = false;
            for (size_t i = 0; i < lm.size(); ++i) {
                if (lm[i].divides(m)) {
                    Monomial q = m / lm[i];
                    Rat qc = c / lc[i];
                    for (const auto& [tm, tc] : sorted[i]) add_into(work, tm * q, -(tc * qc));
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                out.add_term(m, c);
                work.erase(std::prev(work.end()));
            }
        }
        return out;
    }
};

inline size_t poly_bits(const QPoly& p) {
    size_t b = 0;
    for (const auto& [m, c] : p.terms()) b = std::max(b, rat_bits(c));
    return b;
}

} // namespace detail

inline QPoly normal_form(const QPoly& p, const std::vector<QPoly>& basis,
                         const MonomialOrder& ord) {
    detail::Reducer red(ord);
    for (const auto& b : basis)
        if (!b.is_zero()) red.push(b);
    return red.reduce(p);
}

// Buchberger with normal (minimal lcm degree) pair selection, product and
// chain criteria, and primitive-integer normalization of every intermediate
// polynomial. Deterministic for fixed input and order; throws BudgetExceeded
// rather than silently truncating.
inline GroebnerBasis buchberger(const PolySystem& system, const MonomialOrder& ord,
                                const ResourceBudget& budget = {}) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto check_time = [&] {
        if (budget.max_seconds > 0) {
            double dt = std::chrono::duration<double>(clock::now() - t0).count();
            if (dt > budget.max_seconds)
                throw BudgetExceeded("buchberger: wall-clock budget exceeded");
        }
    };

    std::vector<QPoly> g;
    for (const auto& p : system.generators) {
        if (p.is_zero()) continue;
        g.push_back(primitive_part(p, ord));
    }
    if (g.empty()) return {{}, ord, true};

    std::vector<Monomial> lm;
    for (const auto& p : g) lm.push_back(p.leading_monomial(ord));

    struct Pair {
        unsigned deg;
        size_t i, j; // i < j
        Monomial lcm;
    };
    // normal strategy: order-minimal lcm first
    auto pair_less = [&](const Pair& a, const Pair& b) {
        int c = ord.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<Pair> queue;
    auto add_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(lm[i], lm[j]);
            queue.push_back({l.total_degree(), i, j, l});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (size_t j = 1; j < g.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(lm[i], lm[j]);
            queue.push_back({l.total_degree(), i, j, l});
        }
    std::sort(queue.begin(), queue.end(), pair_less);

    std::set<std::pair<size_t, size_t>> done;
    size_t pairs_processed = 0;

    detail::Reducer red(ord);
    for (const auto& p : g) red.push(p);

    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        done.insert({pr.i, pr.j});

        if (++pairs_processed > budget.max_pairs)
            throw BudgetExceeded("buchberger: S-pair budget exceeded");
        check_time();

        // product criterion
        if (lm[pr.i].coprime(lm[pr.j])) continue;
        // chain criterion: some k with lm_k | lcm and both chained pairs done
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lm[k].divides(pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (done.count({key_ik.first, key_ik.second}) &&
                done.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        QPoly s = s_polynomial(g[pr.i], g[pr.j], ord);
        QPoly r = red.reduce(s);
        if (r.is_zero()) continue;
        r = primitive_part(r, ord);
        if (detail::poly_bits(r) > budget.max_coeff_bits)
            throw BudgetExceeded("buchberger: coefficient bit-size budget exceeded");

        g.push_back(r);
        lm.push_back(r.leading_monomial(ord));
        red.push(g.back());
        add_pairs_for(g.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<bool> keep(g.size(), true);
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size() && keep[i]; ++j)
            if (i != j && keep[j] && lm[j].divides(lm[i]) &&
                !(lm[i] == lm[j] && j > i))
                keep[i] = false;

    // interreduce survivors
    std::vector<QPoly> minimal;
    for (size_t i = 0; i < g.size(); ++i)
        if (keep[i]) minimal.push_back(g[i]);
    std::vector<QPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<QPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        QPoly r = normal_form(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(primitive_part(r, ord));
    }
    // deterministic output order: descending leading monomial
    std::sort(reduced.begin(), reduced.end(), [&](const QPoly& a, const QPoly& b) {
        return ord.less(b.leading_monomial(ord), a.leading_monomial(ord));
    });
    return {reduced, ord, true};
}

class NotZeroDimensional : public std::runtime_error {
public:
    explicit NotZeroDimensional(const std::string& what) : std::runtime_error(what) {}
};

// FGLM order conversion for zero-dimensional ideals: walk the monomials of the
// target order from below, expressing each as a vector over the source
// staircase; linear dependencies are exactly the new leading terms. Far
// cheaper than running Buchberger in a lex order directly.
inline GroebnerBasis fglm(const GroebnerBasis& src, const MonomialOrder& target,
                          size_t max_quotient_dim = 200000) {
    std::set<Symbol> varset;
    for (const auto& p : src.polys)
        for (Symbol v : p.symbols()) varset.insert(v);
    std::vector<Symbol> vars(varset.begin(), varset.end());
    std::vector<Monomial> leads;
    for (const auto& p : src.polys) leads.push_back(p.leading_monomial(src.order));
    for (const auto& l : leads)
        if (l.entries().empty()) return {{QPoly(1)}, target, true}; // unit ideal

    // staircase: monomials below every source leading term
    std::map<Monomial, size_t> stair;
    std::vector<Monomial> stair_list;
    std::vector<Monomial> bfs{Monomial()};
    std::set<Monomial> seen{Monomial()};
    while (!bfs.empty()) {
        Monomial m = bfs.back();
        bfs.pop_back();
        bool reducible = false;
        for (const auto& l : leads)
            if (l.divides(m)) { reducible = true; break; }
        if (reducible) continue;
        stair.emplace(m, stair_list.size());
        stair_list.push_back(m);
        if (stair_list.size() > max_quotient_dim)
            throw NotZeroDimensional("fglm: staircase exceeds quotient-dimension cap");
        for (Symbol v : vars) {
            Monomial m2 = m * Monomial::var(v, 1);
            if (seen.insert(m2).second) bfs.push_back(m2);
        }
    }
    // finiteness check: every variable needs a pure-power leading term
    for (Symbol v : vars) {
        bool found = false;
        for (const auto& l : leads) {
            bool pure = l.degree(v) > 0;
            for (const auto& [s, e] : l.entries())
                if (s != v) { pure = false; break; }
            if (pure) { found = true; break; }
        }
        if (!found)
            throw NotZeroDimensional("fglm: ideal is not zero-dimensional (variable " +
                                     sym_name(v) + ")");
    }

    detail::Reducer red(src.order);
    for (const auto& p : src.polys) red.push(p);
    auto nf_vec = [&](const Monomial& m) {
        QPoly r = red.reduce(QPoly::term(Rat(1), m));
        std::vector<Rat> v(stair_list.size(), Rat(0));
        for (const auto& [mm, c] : r.terms()) v[stair.at(mm)] = c;
        return v;
    };

    struct TgtCmp {
        const MonomialOrder* o;
        bool operator()(const Monomial& a, const Monomial& b) const { return o->less(a, b); }
    };
    std::set<Monomial, TgtCmp> queue{TgtCmp{&target}};
    queue.insert(Monomial());

    // reduced row echelon over the staircase coordinates; comb expresses each
    // row as a combination of the accepted target-order monomials
    struct Row {
        std::vector<Rat> r, comb;
        size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Monomial> accepted, new_leads;
    std::vector<QPoly> out;

    while (!queue.empty()) {
        Monomial m = *queue.begin();
        queue.erase(queue.begin());
        bool skip = false;
        for (const auto& l : new_leads)
            if (l.divides(m)) { skip = true; break; }
        if (skip) continue;

        std::vector<Rat> v = nf_vec(m);
        std::vector<Rat> c(accepted.size(), Rat(0));
        for (const auto& row : rows) {
            if (sgn(v[row.pivot]) == 0) continue;
            Rat f = v[row.pivot]; // rows are normalized: r[pivot] == 1
            for (size_t i = 0; i < v.size(); ++i) v[i] -= f * row.r[i];
            for (size_t i = 0; i < row.comb.size(); ++i) c[i] -= f * row.comb[i];
        }
        size_t pivot = v.size();
        for (size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i]) != 0) { pivot = i; break; }

        if (pivot == v.size()) {
            // dependent: m + sum c_j * accepted_j lies in the ideal
            QPoly p = QPoly::term(Rat(1), m);
            for (size_t j = 0; j < c.size(); ++j)
                if (sgn(c[j]) != 0) p.add_term(accepted[j], c[j]);
            out.push_back(primitive_part(p, target));
            new_leads.push_back(m);
            continue;
        }
        // independent: normalize, install, and keep the echelon reduced
        Rat inv = Rat(1) / v[pivot];
        for (auto& x : v) x *= inv;
        for (auto& x : c) x *= inv;
        accepted.push_back(m);
        c.push_back(inv);
        for (auto& row : rows) {
            if (sgn(row.r[pivot]) == 0) continue;
            Rat f = row.r[pivot];
            for (size_t i = 0; i < row.r.size(); ++i) row.r[i] -= f * v[i];
            row.comb.resize(c.size(), Rat(0));
            for (size_t i = 0; i < c.size(); ++i) row.comb[i] -= f * c[i];
        }
        rows.push_back({std::move(v), std::move(c), pivot});
        for (Symbol var : vars) queue.insert(m * Monomial::var(var, 1));
    }

    std::sort(out.begin(), out.end(), [&](const QPoly& a, const QPoly& b) {
        return target.less(b.leading_monomial(target), a.leading_monomial(target));
    });
    return {out, target, true};
}

// Generators of the elimination ideal: subset of a lex basis whose symbols
// lie inside `keep`. Variables not kept are ordered first (eliminated).
inline std::vector<QPoly> eliminate(const PolySystem& system, const std::vector<Symbol>& keep,
                                    const ResourceBudget& budget = {},
                                    GroebnerBasis* full_basis_out = nullptr) {
    std::set<Symbol> keep_set(keep.begin(), keep.end());
    std::vector<Symbol> prio;
    for (Symbol v : system.order_high_to_low())
        if (!keep_set.count(v)) prio.push_back(v);
    for (Symbol v : system.order_high_to_low())
        if (keep_set.count(v)) prio.push_back(v);
    MonomialOrder ord = lex_order(prio);
    // Cheap route first: grevlex basis, then FGLM conversion to the lex order.
    // Falls back to a direct lex Buchberger run for positive-dimensional ideals.
    GroebnerBasis gb;
    bool converted = false;
    try {
        GroebnerBasis grev = buchberger(system, grevlex_order(prio), budget);
        gb = fglm(grev, ord);
        converted = true;
    } catch (const NotZeroDimensional&) {
    }
    if (!converted) gb = buchberger(system, ord, budget);
    std::vector<QPoly> out;
    for (const auto& p : gb.polys) {
        bool ok = true;
        for (Symbol v : p.symbols())
            if (!keep_set.count(v)) { ok = false; break; }
        if (ok) out.push_back(p);
    }
    if (full_basis_out) *full_basis_out = std::move(gb);
    return out;
}

// A lex basis whose unknowns are all ordered above the parameters is also a
// Groebner basis of the same system over the rational-function field in the
// parameters. Minimalizing by the unknown-part of the leading monomials gives
// the element count (and leading structure) of the basis over that field.
inline std::vector<QPoly> minimalize_over_parameters(const GroebnerBasis& gb,
                                                     const std::vector<Symbol>& unknowns) {
    std::set<Symbol> unk(unknowns.begin(), unknowns.end());
    auto lead_unknown_part = [&](const QPoly& p) {
        Monomial m = p.leading_monomial(gb.order);
        Monomial r;
        for (const auto& [v, e] : m.entries())
            if (unk.count(v)) r = r * Monomial::var(v, static_cast<unsigned>(e));
        return r;
    };
    std::vector<Monomial> lts;
    for (const auto& p : gb.polys) lts.push_back(lead_unknown_part(p));
    std::vector<QPoly> out;
    for (size_t i = 0; i < gb.polys.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gb.polys.size() && !redundant; ++j) {
            if (i == j || !lts[j].divides(lts[i])) continue;
            // equal leading parts: keep the first occurrence only
            redundant = !(lts[i] == lts[j]) || j < i;
        }
        if (!redundant) out.push_back(gb.polys[i]);
    }
    return out;
}

// Pure-power leading-term test. Parameters are ignored: only the named
// unknowns must carry pure-power leading monomials.
inline bool is_zero_dimensional(const GroebnerBasis& gb, const std::vector<Symbol>& unknowns) {
    std::set<Symbol> unk(unknowns.begin(), unknowns.end());
    for (Symbol v : unknowns) {
        bool found = false;
        for (const auto& p : gb.polys) {
            const Monomial& m = p.leading_monomial(gb.order);
            if (m.degree(v) == 0) continue;
            bool pure = true;
            for (const auto& [s, e] : m.entries())
                if (s != v && unk.count(s)) { pure = false; break; }
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace symcirc

#endif
