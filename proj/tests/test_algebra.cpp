#include <catch2/catch_amalgamated.hpp>

#include <symcirc/divide.hpp>
#include <symcirc/poly_io.hpp>

#include <random>

using namespace symcirc;

TEST_CASE("rational arithmetic is exact") {
    Rat a(1, 3), b(7, 11);
    CHECK((a + b) - b == a);
    CHECK(rat_from_decimal("0.25") == Rat(1, 4));
    CHECK(rat_from_decimal("1.5e-3") == Rat(3, 2000));
    CHECK(rat_from_decimal("1623139843750000000") == Rat("1623139843750000000"));
    CHECK(rat_to_decimal(Rat(1, 8), 4) == "0.1250");
    CHECK(rat_to_decimal(Rat(-1, 8), 3) == "-0.125");
}

TEST_CASE("quadext closure and conjugate product") {
    QuadExt x(Rat(3), Rat(-2));          // 3 - 2*sqrt2
    QuadExt y(Rat(1, 2), Rat(5));        // 1/2 + 5*sqrt2
    QuadExt p = x * y;
    QuadExt q = p / y;
    CHECK(q == x);
    CHECK((x * x.conj()).is_rational());
    CHECK((x * x.conj()).a == Rat(3) * 3 - Rat(2) * (Rat(2) * 2));
    CHECK(sgn(QuadExt(Rat(-10), Rat(7))) < 0);   // -10 + 7*sqrt2 < 0
    CHECK(sgn(QuadExt(Rat(-9), Rat(7))) > 0);    // -9 + 7*sqrt2 > 0
    CHECK(sgn(QuadExt(Rat(0), Rat(-1))) < 0);
}

TEST_CASE("poly_arith basics") {
    QPoly x = QPoly::variable(sym("x")), y = QPoly::variable(sym("y"));
    CHECK((x + y) * (x - y) == x * x - y * y);
    QPoly p = parse_qpoly("3*x^2*y - 1/2");
    CHECK(p + QPoly(0) == p);
    CHECK_THROWS(p.pow(-1));
}

TEST_CASE("feldtkeller s^2 coefficient of D(s)D(-s)") {
    // coefficient of s^2 in (1+a1 s+a2 s^2+a3 s^3+a4 s^4)(s -> -s image) is 2a2 - a1^2
    QPoly D = parse_qpoly("1 + a1*s + a2*s^2 + a3*s^3 + a4*s^4");
    Symbol s_ = sym("s");
    QPoly Dneg = D.substitute(s_, -QPoly::variable(s_));
    QPoly prod = D * Dneg;
    auto coeffs = prod.collect(s_);
    CHECK(coeffs[2] == parse_qpoly("2*a2 - a1^2"));
    CHECK(coeffs[4] == parse_qpoly("a2^2 - 2*a1*a3 + 2*a4"));
    CHECK(coeffs[6] == parse_qpoly("2*a2*a4 - a3^2"));
    CHECK(coeffs[8] == parse_qpoly("a4^2"));
}

TEST_CASE("substitute") {
    Symbol s_ = sym("s");
    QPoly D = parse_qpoly("1 + a1*s + a2*s^2");
    CHECK(D.substitute(s_, QPoly(0)) == QPoly(1));
    CHECK(parse_qpoly("1 + a1*s").substitute(s_, -QPoly::variable(s_)) ==
          parse_qpoly("1 - a1*s"));
    // Eq-style: a4 with all C -> 1
    QPoly a4 = parse_qpoly("C4*C3*C2*C1*R1*R2*R3*R4");
    std::map<Symbol, QPoly> ones;
    for (auto n : {"C1", "C2", "C3", "C4"}) ones[sym(n)] = QPoly(1);
    CHECK(a4.substitute(ones) == parse_qpoly("R1*R2*R3*R4"));
    // fresh symbol swap is an involution
    QPoly p = parse_qpoly("x^2*y - 3*x + y^3");
    std::map<Symbol, QPoly> swap{{sym("x"), QPoly::variable(sym("y"))},
                                 {sym("y"), QPoly::variable(sym("x"))}};
    CHECK(p.substitute(swap).substitute(swap) == p);
}

TEST_CASE("collect") {
    Symbol s_ = sym("s");
    auto c = parse_qpoly("x*s + y*s + 1").collect(s_);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == QPoly(1));
    CHECK(c[1] == parse_qpoly("x + y"));
    auto z = QPoly{}.collect(s_);
    REQUIRE(z.size() == 1);
    CHECK(z[0].is_zero());
}

TEST_CASE("multivariate division") {
    MonomialOrder ord = lex_order({sym("x"), sym("y")});
    QPoly x = QPoly::variable(sym("x")), y = QPoly::variable(sym("y"));
    SECTION("x^2 by x-y") {
        auto r = multivariate_divide(x * x, {x - y}, ord);
        CHECK(r.quotients[0] == x + y);
        CHECK(r.remainder == y * y);
    }
    SECTION("p by p") {
        QPoly p = parse_qpoly("x^2*y - 3*x + 1/2");
        auto r = multivariate_divide(p, {p}, ord);
        CHECK(r.quotients[0] == QPoly(1));
        CHECK(r.remainder.is_zero());
    }
    SECTION("postcondition identity on random polys") {
        std::mt19937 rng(42);
        auto rand_poly = [&](int nterms) {
            QPoly p;
            std::vector<Symbol> vars{sym("x"), sym("y"), sym("z")};
            for (int t = 0; t < nterms; ++t) {
                Monomial m = Monomial::var(vars[rng() % 3], rng() % 4) *
                             Monomial::var(vars[rng() % 3], rng() % 3);
                p.add_term(m, Rat(static_cast<long>(rng() % 11) - 5));
            }
            return p;
        };
        MonomialOrder o3 = lex_order({sym("x"), sym("y"), sym("z")});
        for (int i = 0; i < 50; ++i) {
            QPoly p = rand_poly(5), d1 = rand_poly(3), d2 = rand_poly(3);
            std::vector<QPoly> ds;
            if (!d1.is_zero()) ds.push_back(d1);
            if (!d2.is_zero()) ds.push_back(d2);
            if (ds.empty()) continue;
            auto r = multivariate_divide(p, ds, o3);
            QPoly acc = r.remainder;
            for (size_t k = 0; k < ds.size(); ++k) acc += r.quotients[k] * ds[k];
            CHECK(acc == p);
        }
    }
}

TEST_CASE("content and primitive part") {
    MonomialOrder ord = lex_order({sym("x"), sym("y")});
    auto [c1, p1] = content_primitive(parse_qpoly("4*x + 6*y"), ord);
    CHECK(c1 == Rat(2));
    CHECK(p1 == parse_qpoly("2*x + 3*y"));
    auto [c2, p2] = content_primitive(parse_qpoly("1/2*x"), ord);
    CHECK(c2 == Rat(1, 2));
    CHECK(p2 == parse_qpoly("x"));
    // sign convention: positive leading coefficient under the active order
    auto [c3, p3] = content_primitive(parse_qpoly("-3*x^2"), ord);
    CHECK(c3 == Rat(-3));
    CHECK(p3 == parse_qpoly("x^2"));
    auto [c0, p0] = content_primitive(QPoly{}, ord);
    CHECK(c0 == Rat(0));
    CHECK(p0.is_zero());
}

TEST_CASE("ring axioms on random multipolys") {
    std::mt19937 rng(7);
    std::vector<Symbol> vars{sym("x"), sym("y"), sym("z"), sym("w")};
    auto rand_poly = [&]() {
        QPoly p;
        int nterms = 1 + rng() % 5;
        for (int t = 0; t < nterms; ++t) {
            Monomial m = Monomial::var(vars[rng() % 4], rng() % 3) *
                         Monomial::var(vars[rng() % 4], rng() % 3);
            long num = static_cast<long>(rng() % 21) - 10;
            p.add_term(m, make_rat(num, 1 + rng() % 4));
        }
        return p;
    };
    for (int i = 0; i < 200; ++i) {
        QPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("quadext polynomial conjugate identity") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        Rat a = make_rat(static_cast<long>(rng() % 19) - 9, 1 + rng() % 5);
        Rat b = make_rat(static_cast<long>(rng() % 19) - 9, 1 + rng() % 5);
        QuadExt x(a, b);
        QuadExt prod = x * x.conj();
        CHECK(prod.is_rational());
        CHECK(prod.a == a * a - Rat(2) * b * b);
    }
}

TEST_CASE("parser/printer round trip") {
    MonomialOrder ord = lex_order({sym("R1"), sym("C1"), sym("s")});
    for (const char* src : {"3*R1*C1*s^2 - 1/2", "x^2 - 2", "0",
                            "-7*x*y + y^3 - 1", "1/3*x - 5"}) {
        QPoly p = parse_qpoly(src);
        CHECK(parse_qpoly(poly_to_string(p, ord)) == p);
    }
    EPoly e = parse_epoly("(-10 + 7*sqrt2) + (-12 + 8*sqrt2)*R4^2 + 10368*R4^18");
    CHECK(parse_epoly(poly_to_string(e)) == e);
    CHECK(parse_epoly("sqrt2*sqrt2") == EPoly(QuadExt(Rat(2))));
    CHECK_THROWS(parse_qpoly("x +"));
    CHECK_THROWS(parse_qpoly("sqrt2 * x").is_zero());
}

TEST_CASE("monomial order properties") {
    Symbol x = sym("x"), y = sym("y"), z = sym("z");
    for (auto ord : {lex_order({x, y, z}), grevlex_order({x, y, z})}) {
        Monomial one;
        Monomial mx = Monomial::var(x), my = Monomial::var(y);
        Monomial m2 = Monomial::var(x, 2);
        CHECK(ord.less(one, mx));
        CHECK(ord.less(my, mx));
        CHECK(ord.less(mx, m2));
        // multiplicative: u < v => u*w < v*w
        Monomial w = Monomial::var(z, 2) * Monomial::var(x);
        CHECK(ord.less(my * w, mx * w));
    }
    // grevlex: degree dominates
    auto g = grevlex_order({x, y, z});
    CHECK(g.less(Monomial::var(x, 2), Monomial::var(y) * Monomial::var(z) * Monomial::var(x)));
    // lex: x > y^5
    auto l = lex_order({x, y, z});
    CHECK(l.less(Monomial::var(y, 5), Monomial::var(x)));
}
