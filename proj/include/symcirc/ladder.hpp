#ifndef SYMCIRC_LADDER_HPP
#define SYMCIRC_LADDER_HPP

#include "ratfunc.hpp"

#include <optional>

namespace symcirc {

// LC ladder in Cauer canonical form: alternating series inductor / shunt
// capacitor stages, starting with a series L. Values may be symbolic
// polynomials or plain rationals.
struct LadderStage {
    QPoly L, C;
};

struct Ladder {
    std::vector<LadderStage> stages;

    bool valid() const {
        if (stages.empty()) return false;
        for (const auto& st : stages) {
            if (st.L.is_zero() || st.C.is_zero()) return false;
            if (st.L.is_constant() && sgn(st.L.constant_value()) <= 0) return false;
            if (st.C.is_constant() && sgn(st.C.constant_value()) <= 0) return false;
        }
        return true;
    }
};

class LadderError : public std::runtime_error {
public:
    explicit LadderError(const std::string& what) : std::runtime_error(what) {}
};

// Continued-fraction impedance of the ladder, evaluated bottom-up:
// Z = L_1 s + 1/(C_1 s + 1/(L_2 s + ... + 1/(C_n s))).
inline RationalFunction ladder_impedance(const Ladder& ladder,
                                         const std::string& s_name = "s") {
    if (!ladder.valid()) throw LadderError("ladder_impedance: invalid ladder");
    QPoly s = QPoly::variable(sym(s_name));
    const auto& st = ladder.stages;
    size_t n = st.size();
    RationalFunction z = RationalFunction(1) / RationalFunction(st[n - 1].C * s);
    for (size_t i = n; i-- > 0;) {
        z = RationalFunction(st[i].L * s) + z;
        if (i > 0)
            z = (RationalFunction(st[i - 1].C * s) + z.reciprocal()).reciprocal();
    }
    return z;
}

namespace detail {

// One Cauer-I extraction: z = q + rest with q the s-linear quotient of
// num/den. Returns the (constant, positive) element value and replaces z by
// the remainder fraction. `admittance_view` only labels error messages.
inline Rat cauer_step(RationalFunction& z, Symbol s, bool admittance_view) {
    const char* what = admittance_view ? "shunt capacitor" : "series inductor";
    for (const QPoly* p : {&z.num, &z.den})
        if (!p->is_univariate_in(s))
            throw LadderError("cauer_expand: impedance is not numeric in s");
    UPoly<Rat> n = to_upoly(z.num, s), d = to_upoly(z.den, s);
    if (n.degree() != d.degree() + 1)
        throw LadderError(std::string("cauer_expand: degree step mismatch before ") + what);
    auto [q, r] = UPoly<Rat>::divmod(n, d);
    if (q.degree() != 1 || sgn(q.c[0]) != 0)
        throw LadderError(std::string("cauer_expand: quotient is not a multiple of s at ") +
                          what);
    if (sgn(q.c[1]) <= 0)
        throw LadderError(std::string("cauer_expand: non-positive ") + what + " value");
    z = RationalFunction(from_upoly(r, s), z.den);
    return q.c[1];
}

} // namespace detail

// Classic Cauer-I synthesis: expand an LC impedance into a ladder by
// alternating polynomial division on the impedance and its reciprocal.
inline Ladder cauer_expand(const RationalFunction& z_in, const std::string& s_name = "s") {
    Symbol s = sym(s_name);
    RationalFunction z = z_in;
    z.normalize();
    Ladder out;
    while (true) {
        Rat L = detail::cauer_step(z, s, false);
        if (z.num.is_zero())
            throw LadderError("cauer_expand: impedance terminates on a series inductor "
                              "(not the Fig. 5 ladder form)");
        z = z.reciprocal();
        Rat C = detail::cauer_step(z, s, true);
        out.stages.push_back({QPoly(L), QPoly(C)});
        if (z.num.is_zero()) return out;
        z = z.reciprocal();
    }
}

// ---------------------------------------------------------------------------
// Ladder sizing: the "reversed sequence of equations"
// ---------------------------------------------------------------------------

// Small solver for the stage coefficient systems, over the parameter field:
// 1. greedily pick equations linear in exactly one unsolved unknown (after
//    dividing out any common unknown-monomial factor — a recorded nonzero
//    side condition such as a5 != 0),
// 2. once the remaining equations are jointly linear in the open unknowns,
//    finish by Gaussian elimination over rational functions.
inline std::map<Symbol, RationalFunction> solve_rational_triangular(
    std::vector<QPoly> equations, const std::vector<Symbol>& unknowns,
    std::vector<std::string>* side_conditions = nullptr) {
    std::map<Symbol, RationalFunction> solved;
    std::set<Symbol> open(unknowns.begin(), unknowns.end());

    auto substitute = [&](const QPoly& p) -> RationalFunction {
        // replace solved unknowns term by term, clearing denominators as we go
        RationalFunction acc(0);
        for (const auto& [m, c] : p.terms()) {
            RationalFunction t{QPoly::term(c, Monomial{})};
            for (const auto& [v, e] : m.entries()) {
                auto it = solved.find(v);
                RationalFunction base =
                    it != solved.end() ? it->second : RationalFunction(QPoly::variable(v));
                for (unsigned k = 0; k < e; ++k) t *= base;
            }
            acc += t;
        }
        return acc;
    };

    // strip a common monomial factor in the open unknowns, recording it as a
    // nonzero side condition (the degenerate branch is discarded)
    auto saturate = [&](QPoly p) -> QPoly {
        Monomial mc = p.monomial_content();
        Monomial keep;
        for (const auto& [v, e] : mc.entries())
            if (open.count(v)) keep = keep * Monomial::var(v, e);
        if (!keep.is_one()) {
            p = p.div_monomial(keep);
            if (side_conditions) {
                std::string s;
                for (const auto& [v, e] : keep.entries()) s += sym_name(v) + " != 0; ";
                side_conditions->push_back(s);
            }
        }
        return p;
    };

    bool progress = true;
    while (!open.empty() && progress) {
        progress = false;
        for (const QPoly& eq : equations) {
            QPoly cur = saturate(substitute(eq).num);
            if (cur.is_zero()) continue;
            for (Symbol u : open) {
                if (cur.degree(u) != 1) continue;
                auto cs = cur.collect(u);
                bool clean = true;
                for (const QPoly& c : cs)
                    for (Symbol v : c.symbols())
                        if (open.count(v)) clean = false;
                if (!clean || cs[1].is_zero()) continue;
                solved[u] = RationalFunction(-cs[0], cs[1]);
                open.erase(u);
                progress = true;
                break;
            }
            if (progress) break;
        }

        if (progress || open.empty()) continue;

        // linear tail: every remaining substituted equation must have total
        // degree <= 1 in the open unknowns
        std::vector<Symbol> vars(open.begin(), open.end());
        std::vector<std::vector<RationalFunction>> rows; // coefficients | rhs
        for (const QPoly& eq : equations) {
            QPoly cur = saturate(substitute(eq).num);
            if (cur.is_zero()) continue;
            std::vector<RationalFunction> row(vars.size() + 1);
            for (const auto& [m, c] : cur.terms()) {
                long open_deg = 0;
                Symbol hit{};
                for (const auto& [v, e] : m.entries())
                    if (open.count(v)) {
                        open_deg += e;
                        hit = v;
                    }
                if (open_deg > 1)
                    throw LadderError(
                        "solve_rational_triangular: nonlinear residue in the unknowns");
                Monomial param = m;
                size_t col = vars.size(); // rhs (negated)
                if (open_deg == 1) {
                    param = m / Monomial::var(hit, 1);
                    col = static_cast<size_t>(
                        std::find(vars.begin(), vars.end(), hit) - vars.begin());
                }
                RationalFunction t{QPoly::term(open_deg == 1 ? c : -c, param)};
                row[col] += t;
            }
            rows.push_back(std::move(row));
        }
        // Gaussian elimination over the fraction field
        size_t rank = 0;
        for (size_t col = 0; col < vars.size() && rank < rows.size(); ++col) {
            size_t piv = rows.size();
            for (size_t i = rank; i < rows.size(); ++i)
                if (!rows[i][col].is_zero()) { piv = i; break; }
            if (piv == rows.size()) continue;
            std::swap(rows[rank], rows[piv]);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == rank || rows[i][col].is_zero()) continue;
                RationalFunction f = rows[i][col] / rows[rank][col];
                for (size_t j = col; j <= vars.size(); ++j)
                    rows[i][j] -= f * rows[rank][j];
            }
            ++rank;
        }
        for (auto& row : rows) {
            size_t lead = vars.size();
            for (size_t j = 0; j < vars.size(); ++j)
                if (!row[j].is_zero()) { lead = j; break; }
            if (lead == vars.size()) {
                if (!row[vars.size()].is_zero())
                    throw LadderError("solve_rational_triangular: inconsistent linear tail");
                continue;
            }
            bool unique = true;
            for (size_t j = lead + 1; j < vars.size(); ++j)
                if (!row[j].is_zero()) unique = false;
            if (!unique) continue;
            solved[vars[lead]] = row[vars.size()] / row[lead];
            open.erase(vars[lead]);
            progress = true;
        }
    }
    if (!open.empty())
        throw LadderError("solve_rational_triangular: system is not triangular in the unknowns");
    return solved;
}

// First sizing stage, fully symbolic: match
//   Z(s) = L1 s + (a4 s^4 + a2 s^2 + 1)/(a5 s^5 + a3 s^3 + a1 s)
// against the design target
//   Z_des(s) = k (A6 s^6 + A4 s^4 + A2 s^2 + 1)/(A5 s^5 + A3 s^3 + A1 s)
// and solve the cross-multiplied coefficient equations for {a1..a5, L1}.
struct LadderSizingStep {
    std::map<Symbol, RationalFunction> values; // keys a1,a2,a3,a4,a5,L1
    std::vector<QPoly> equations;              // the matched coefficient system
};

inline LadderSizingStep ladder_sizing_step(const std::string& s_name = "s") {
    Symbol s = sym(s_name), k = sym("k"), L1 = sym("L1");
    auto S = [&](unsigned e) { return Monomial::var(s, e); };
    auto A = [&](int i) { return QPoly::variable(sym("A" + std::to_string(i))); };
    auto a = [&](int i) { return QPoly::variable(sym("a" + std::to_string(i))); };

    QPoly num_tail = a(4) * QPoly::term(Rat(1), S(4)) + a(2) * QPoly::term(Rat(1), S(2)) +
                     QPoly(1);
    QPoly den = a(5) * QPoly::term(Rat(1), S(5)) + a(3) * QPoly::term(Rat(1), S(3)) +
                a(1) * QPoly::term(Rat(1), S(1));
    QPoly num = QPoly::variable(L1) * QPoly::term(Rat(1), S(1)) * den + num_tail;

    QPoly des_num = QPoly::variable(k) * (A(6) * QPoly::term(Rat(1), S(6)) +
                                          A(4) * QPoly::term(Rat(1), S(4)) +
                                          A(2) * QPoly::term(Rat(1), S(2)) + QPoly(1));
    QPoly des_den = A(5) * QPoly::term(Rat(1), S(5)) + A(3) * QPoly::term(Rat(1), S(3)) +
                    A(1) * QPoly::term(Rat(1), S(1));

    LadderSizingStep out;
    for (const QPoly& c : (num * des_den - des_num * den).collect(s))
        if (!c.is_zero()) out.equations.push_back(c);
    std::vector<Symbol> unknowns{sym("a1"), sym("a2"), sym("a3"), sym("a4"), sym("a5"), L1};
    out.values = solve_rational_triangular(out.equations, unknowns);
    return out;
}

// Full numeric sizing of a Cauer ladder from a target impedance, element by
// element via the stage formulas (subtract the series/shunt term, renormalize
// the constant coefficient, recurse on the reciprocal). Independent of
// cauer_expand's divmod route.
struct LadderSizing {
    Ladder ladder;
    bool complete = false;
    std::string issue; // empty when complete
};

inline LadderSizing ladder_size(const RationalFunction& target, int max_stages = 64,
                                const std::string& s_name = "s") {
    Symbol s = sym(s_name);
    LadderSizing out;
    RationalFunction z = target;
    z.normalize();

    // extract the leading s-multiple from z (impedance: series L; admittance:
    // shunt C) using the A6 k / A5 pattern of the first-stage formulas
    auto extract = [&](RationalFunction& f, const char* what) -> std::optional<Rat> {
        for (const QPoly* p : {&f.num, &f.den})
            if (!p->is_univariate_in(s)) {
                out.issue = "target impedance is not numeric in s";
                return std::nullopt;
            }
        long dn = f.num.degree(s), dd = f.den.degree(s);
        if (dn != dd + 1) {
            out.issue = std::string("degree mismatch at ") + what;
            return std::nullopt;
        }
        auto nc = f.num.collect(s), dc = f.den.collect(s);
        Rat value = nc[dn].constant_value() / dc[dd].constant_value();
        if (sgn(value) <= 0) {
            out.issue = std::string("non-positive ") + what + " value";
            return std::nullopt;
        }
        // f := f - value * s  (numerator drops two degrees for an LC function)
        QPoly rem = f.num - QPoly::term(value, Monomial::var(s, 1)) * f.den;
        if (rem.degree(s) > dd - 1) {
            out.issue = std::string("remainder parity broken at ") + what;
            return std::nullopt;
        }
        f = RationalFunction(rem, f.den);
        return value;
    };

    for (int stage = 0; stage < max_stages; ++stage) {
        auto L = extract(z, "series inductor");
        if (!L) return out;
        if (z.num.is_zero()) {
            out.issue = "target terminates on a series inductor (not the Fig. 5 form)";
            return out;
        }
        RationalFunction y = z.reciprocal();
        auto C = extract(y, "shunt capacitor");
        if (!C) return out;
        out.ladder.stages.push_back({QPoly(*L), QPoly(*C)});
        if (y.num.is_zero()) {
            out.complete = true;
            return out;
        }
        z = y.reciprocal();
    }
    out.issue = "stage limit exceeded";
    return out;
}

} // namespace symcirc

#endif
