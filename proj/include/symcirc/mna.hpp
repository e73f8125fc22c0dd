#ifndef SYMCIRC_MNA_HPP
#define SYMCIRC_MNA_HPP

#include "divide.hpp"
#include "interval.hpp"
#include "netlist.hpp"
#include "sturm.hpp"

#include <iomanip>
#include <limits>

namespace symcirc {

struct TransferFunction {
    QPoly num, den; // polynomials in s and the element symbols
    std::string input, output;

    bool equals_cross(const TransferFunction& o) const {
        return (num * o.den - o.num * den).is_zero();
    }
};

// Fraction-free Bareiss determinant of a polynomial matrix. All divisions are
// exact in the polynomial ring; pivots are chosen by fewest terms.
inline QPoly det_bareiss(std::vector<std::vector<QPoly>> m) {
    size_t n = m.size();
    if (n == 0) return QPoly(1);
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_bareiss: matrix not square");
    QPoly prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        // pivot: nonzero entry with the fewest terms in column k at/below row k
        size_t piv = n;
        for (size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            if (piv == n || m[i][k].term_count() < m[piv][k].term_count()) piv = i;
        }
        if (piv == n) return QPoly(); // singular
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                QPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(t, prev);
            }
            m[i][k] = QPoly();
        }
        prev = m[k][k];
    }
    QPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

namespace detail {

// Linear system M x = b with polynomial entries, built from branch equations
// and KCL. Unknowns: node voltages (ground excluded) then branch currents.
struct Tableau {
    std::vector<std::vector<QPoly>> M;
    std::vector<QPoly> b;
    std::map<std::string, size_t> node_ix; // non-ground nodes
    size_t n = 0;

    void resize(size_t dim) {
        n = dim;
        M.assign(dim, std::vector<QPoly>(dim));
        b.assign(dim, QPoly());
    }
    // node-voltage polynomial accessors (ground = 0)
    bool has(const std::string& node) const { return node_ix.count(node) > 0; }
    void add(size_t row, size_t col, const QPoly& v) { M[row][col] += v; }
};

} // namespace detail

// Cramer solve for one unknown: x_k = det(M with column k replaced by b)/det(M).
inline std::pair<QPoly, QPoly> cramer_ratio(const std::vector<std::vector<QPoly>>& M,
                                            const std::vector<QPoly>& b, size_t k) {
    QPoly d = det_bareiss(M);
    if (d.is_zero()) throw std::runtime_error("singular system matrix (ill-posed circuit)");
    auto Mk = M;
    for (size_t i = 0; i < M.size(); ++i) Mk[i][k] = b[i];
    return {det_bareiss(Mk), d};
}

namespace detail {

inline Tableau build_tableau(const Netlist& net, Symbol s_var) {
    Tableau t;
    size_t nv = 0;
    for (const auto& n : net.nodes)
        if (n != net.ground) t.node_ix[n] = nv++;
    size_t branches = 0;
    for (const auto& e : net.elements)
        branches += e.kind == Element::Kind::HTwoPort ? 2 : 1;
    t.resize(nv + branches);

    QPoly s = QPoly::variable(s_var);
    auto vcol = [&](const std::string& node) -> long {
        if (node == net.ground) return -1;
        return static_cast<long>(t.node_ix.at(node));
    };
    // rows 0..nv-1: KCL at each non-ground node; rows nv..: branch equations
    size_t brow = nv, bcur = nv; // branch-equation row and branch-current column
    for (const auto& e : net.elements) {
        if (e.kind == Element::Kind::HTwoPort) {
            // common-emitter h two-port: input branch base->emitter carries i1,
            // output branch collector->emitter carries i2
            long vb = vcol(e.nodes[0]), vc = vcol(e.nodes[1]), ve = vcol(e.nodes[2]);
            size_t i1 = bcur, i2 = bcur + 1;
            // v_b - v_e = h11 i1 + h12 (v_c - v_e)
            if (vb >= 0) t.add(brow, vb, QPoly(1));
            if (ve >= 0) t.add(brow, ve, QPoly(-1));
            t.add(brow, i1, -e.h11.poly());
            if (vc >= 0) t.add(brow, vc, -e.h12.poly());
            if (ve >= 0) t.add(brow, ve, e.h12.poly());
            // i2 = h21 i1 + h22 (v_c - v_e)
            t.add(brow + 1, i2, QPoly(1));
            t.add(brow + 1, i1, -e.h21.poly());
            if (vc >= 0) t.add(brow + 1, vc, -e.h22.poly());
            if (ve >= 0) t.add(brow + 1, ve, e.h22.poly());
            // KCL: i1 out of base into emitter; i2 out of collector into emitter
            if (vb >= 0) t.add(vb, i1, QPoly(1));
            if (ve >= 0) t.add(ve, i1, QPoly(-1));
            if (vc >= 0) t.add(vc, i2, QPoly(1));
            if (ve >= 0) t.add(ve, i2, QPoly(-1));
            brow += 2;
            bcur += 2;
            continue;
        }

        long vp = vcol(e.nodes[0]), vm = vcol(e.nodes[1]);
        size_t i = bcur;
        // KCL: current i flows + -> -
        if (vp >= 0) t.add(vp, i, QPoly(1));
        if (vm >= 0) t.add(vm, i, QPoly(-1));
        auto vdiff = [&](size_t row, const QPoly& coeff) {
            if (vp >= 0) t.add(row, vp, coeff);
            if (vm >= 0) t.add(row, vm, -coeff);
        };
        switch (e.kind) {
            case Element::Kind::R: // v+ - v- - R i = 0
                vdiff(brow, QPoly(1));
                t.add(brow, i, -e.value.poly());
                break;
            case Element::Kind::L: // v+ - v- - L s i = 0
                vdiff(brow, QPoly(1));
                t.add(brow, i, -(e.value.poly() * s));
                break;
            case Element::Kind::C: // i - C s (v+ - v-) = 0
                t.add(brow, i, QPoly(1));
                vdiff(brow, -(e.value.poly() * s));
                break;
            case Element::Kind::SourceV: // v+ - v- = (input ? 1 : value)
                vdiff(brow, QPoly(1));
                t.b[brow] = e.is_input ? QPoly(1) : e.value.poly();
                break;
            case Element::Kind::VCVS: { // vo+ - vo- - K (vc+ - vc-) = 0
                vdiff(brow, QPoly(1));
                long cp = vcol(e.nodes[2]), cm = vcol(e.nodes[3]);
                if (cp >= 0) t.add(brow, cp, -e.value.poly());
                if (cm >= 0) t.add(brow, cm, e.value.poly());
                break;
            }
            default:
                break;
        }
        ++brow;
        ++bcur;
    }
    return t;
}

} // namespace detail

// Canonical cleanup: strip scalar content and shared monomial factors, then
// normalize so the sign of the denominator's order-minimal term is positive.
inline void normalize_tf(TransferFunction& tf) {
    if (tf.den.is_zero()) throw std::runtime_error("transfer function with zero denominator");
    if (tf.num.is_zero()) {
        tf.den = QPoly(1);
        return;
    }
    Monomial mc = Monomial::gcd(tf.num.monomial_content(), tf.den.monomial_content());
    tf.num = tf.num.div_monomial(mc);
    tf.den = tf.den.div_monomial(mc);
    MonomialOrder ord = lex_order({});
    auto [cn, pn] = content_primitive(tf.num, ord);
    auto [cd, pd] = content_primitive(tf.den, ord);
    Rat scale = cn / cd;
    tf.num = pn * QPoly(rat_abs(scale));
    tf.den = pd;
    if (sgn(scale) < 0) tf.num = -tf.num;
    // make the constant (or lowest) coefficient of the denominator positive
    auto terms = tf.den.sorted_terms(lex_order({}));
    if (!terms.empty() && sgn(terms.back().second) < 0) {
        tf.num = -tf.num;
        tf.den = -tf.den;
    }
}

inline TransferFunction derive_transfer_function(const Netlist& net,
                                                 const std::string& s_name = "s") {
    const Element* src = net.input_source();
    if (!src) throw std::runtime_error("no input source in netlist");
    Symbol s = sym(s_name);
    detail::Tableau t = detail::build_tableau(net, s);
    if (net.output == net.ground)
        throw std::runtime_error("output node is ground");
    size_t k = t.node_ix.at(net.output);
    auto [n, d] = cramer_ratio(t.M, t.b, k);
    TransferFunction tf{n, d, src->name, net.output};
    normalize_tf(tf);
    return tf;
}

// Driving-point impedance seen from the input source: Z = V / I(source).
inline TransferFunction driving_point_impedance(const Netlist& net,
                                                const std::string& s_name = "s") {
    const Element* src = net.input_source();
    if (!src) throw std::runtime_error("no input source in netlist");
    Symbol s = sym(s_name);
    detail::Tableau t = detail::build_tableau(net, s);
    // branch currents follow the node block, in element order (2 per h two-port)
    size_t col = t.node_ix.size();
    for (const auto& e : net.elements) {
        if (&e == src) break;
        col += e.kind == Element::Kind::HTwoPort ? 2 : 1;
    }
    auto [iq, d] = cramer_ratio(t.M, t.b, col);
    // the source branch current flows + -> - inside the element, so the
    // current delivered to the circuit is -i; Z = V/(-i) = -d/iq with V = 1
    TransferFunction tf{-d, iq, src->name, "Zin"};
    normalize_tf(tf);
    return tf;
}

inline TransferFunction substitute_values(const TransferFunction& tf,
                                          const std::map<Symbol, QPoly>& bindings) {
    TransferFunction out{tf.num.substitute(bindings), tf.den.substitute(bindings), tf.input,
                         tf.output};
    normalize_tf(out);
    return out;
}

struct PoleZeroReport {
    std::vector<RealRoot<Rat>> poles, zeros; // real roots only
    long complex_poles = 0, complex_zeros = 0; // counted in conjugate pairs
};

inline PoleZeroReport poles_zeros(const TransferFunction& tf, const std::string& s_name = "s") {
    Symbol s = sym(s_name);
    for (const QPoly* p : {&tf.num, &tf.den})
        if (!p->is_univariate_in(s))
            throw std::invalid_argument("poles_zeros: transfer function is not numeric");
    PoleZeroReport rep;
    auto analyze = [&](const QPoly& p, std::vector<RealRoot<Rat>>& out, long& complex_count) {
        if (p.is_zero() || p.degree(s) == 0) return;
        UPoly<Rat> u = to_upoly(p, s);
        out = isolate_real_roots(u);
        long distinct = static_cast<long>(squarefree_part(u).degree());
        complex_count = (distinct - static_cast<long>(out.size())) / 2;
    };
    analyze(tf.num, rep.zeros, rep.complex_zeros);
    analyze(tf.den, rep.poles, rep.complex_poles);
    return rep;
}

struct BodeSample {
    Rat frequency_hz;
    double magnitude_db;
    double phase_deg;
    bool at_pole = false;
};

// |H(j w)|^2 = (Re^2 + Im^2)(num) / (Re^2 + Im^2)(den) with
// Re(p(jw)) and Im(p(jw)) polynomials in w^2 — all rational, evaluated with
// interval arithmetic over an enclosure of w = 2*pi*f.
inline std::vector<BodeSample> bode_samples(const TransferFunction& tf, const Rat& f_lo,
                                            const Rat& f_hi, int points_per_decade,
                                            const std::string& s_name = "s") {
    Symbol s = sym(s_name);
    for (const QPoly* p : {&tf.num, &tf.den})
        if (!p->is_univariate_in(s))
            throw std::invalid_argument("bode_samples: transfer function is not numeric");
    auto coeffs = [&](const QPoly& p) {
        std::vector<Rat> c;
        for (const auto& q : p.collect(s)) c.push_back(q.constant_value());
        return c;
    };
    std::vector<Rat> nc = coeffs(tf.num), dc = coeffs(tf.den);

    auto mag2 = [&](const std::vector<Rat>& c, const RatIv& w) {
        RatIv re(Rat(0)), im(Rat(0)), wp(Rat(1)); // wp = w^k
        for (size_t k = 0; k < c.size(); ++k) {
            RatIv term = RatIv(c[k]) * wp;
            switch (k % 4) { // j^k cycle
                case 0: re += term; break;
                case 1: im += term; break;
                case 2: re -= term; break;
                case 3: im -= term; break;
            }
            wp *= w;
        }
        return std::pair<RatIv, RatIv>{re, im};
    };

    std::vector<BodeSample> out;
    if (points_per_decade < 1 || f_hi <= f_lo) return out;
    // logarithmic grid: f = f_lo * 10^(i / ppd) until past f_hi
    double lo = rat_to_double(f_lo), hi = rat_to_double(f_hi);
    int steps = static_cast<int>(std::ceil(std::log10(hi / lo) * points_per_decade));
    RatIv two_pi = pi_enclosure() * RatIv(Rat(2));
    for (int i = 0; i <= steps; ++i) {
        double fd = lo * std::pow(10.0, double(i) / points_per_decade);
        std::ostringstream fs;
        fs << std::setprecision(17) << fd;
        Rat f = rat_from_decimal(fs.str());
        if (f > f_hi) f = f_hi;
        // tighten the pi enclosure far beyond double precision
        RatIv w = two_pi * RatIv(f);
        auto [nre, nim] = mag2(nc, w);
        auto [dre, dim_] = mag2(dc, w);
        RatIv n2 = nre * nre + nim * nim;
        RatIv d2 = dre * dre + dim_ * dim_;
        BodeSample smp;
        smp.frequency_hz = f;
        if (d2.contains_zero()) {
            smp.at_pole = true;
            smp.magnitude_db = std::numeric_limits<double>::infinity();
            smp.phase_deg = 0;
        } else {
            RatIv h2 = n2 / d2;
            smp.magnitude_db = 10.0 * std::log10(rat_to_double(h2.mid()));
            double nr = rat_to_double(nre.mid()), ni = rat_to_double(nim.mid());
            double dr = rat_to_double(dre.mid()), di = rat_to_double(dim_.mid());
            smp.phase_deg = (std::atan2(ni, nr) - std::atan2(di, dr)) * 180.0 / M_PI;
            if (smp.phase_deg > 180.0) smp.phase_deg -= 360.0;
            if (smp.phase_deg < -180.0) smp.phase_deg += 360.0;
        }
        out.push_back(std::move(smp));
        if (f == f_hi) break;
    }
    return out;
}

} // namespace symcirc

#endif
