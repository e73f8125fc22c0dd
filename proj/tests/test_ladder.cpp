#include <catch2/catch_amalgamated.hpp>

#include <symcirc/ladder.hpp>

#include <random>

using namespace symcirc;

namespace {

RationalFunction rf(const std::string& num, const std::string& den) {
    return {parse_qpoly(num), parse_qpoly(den)};
}

Ladder random_ladder(std::mt19937& rng, int max_stages = 4) {
    Ladder l;
    int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_stages));
    for (int i = 0; i < n; ++i) {
        auto v = [&] { return Rat(1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 4)); };
        l.stages.push_back({QPoly(v()), QPoly(v())});
    }
    return l;
}

bool same_values(const Ladder& a, const Ladder& b) {
    if (a.stages.size() != b.stages.size()) return false;
    for (size_t i = 0; i < a.stages.size(); ++i)
        if (!(a.stages[i].L - b.stages[i].L).is_zero() ||
            !(a.stages[i].C - b.stages[i].C).is_zero())
            return false;
    return true;
}

} // namespace

TEST_CASE("ladder impedance continued fraction", "[ladder]") {
    SECTION("single stage") {
        Ladder l{{{parse_qpoly("L1"), parse_qpoly("C1")}}};
        CHECK(ladder_impedance(l) == rf("L1*C1*s^2+1", "C1*s"));
    }
    SECTION("all-ones three-stage ladder") {
        Ladder ones{{{QPoly(1), QPoly(1)}, {QPoly(1), QPoly(1)}, {QPoly(1), QPoly(1)}}};
        CHECK(ladder_impedance(ones) == rf("s^6+5*s^4+6*s^2+1", "s^5+4*s^3+3*s"));
    }
    SECTION("symbolic three-stage ladder has the displayed parity shape") {
        Ladder l{{{parse_qpoly("L1"), parse_qpoly("C1")},
                  {parse_qpoly("L2"), parse_qpoly("C2")},
                  {parse_qpoly("L3"), parse_qpoly("C3")}}};
        RationalFunction z = ladder_impedance(l);
        Symbol s = sym("s");
        CHECK(z.num.degree(s) == 6);
        CHECK(z.den.degree(s) == 5);
        auto nc = z.num.collect(s), dc = z.den.collect(s);
        for (size_t i = 0; i < nc.size(); ++i)
            if (i % 2 == 1) CHECK(nc[i].is_zero()); // numerator: even powers only
        CHECK_FALSE(nc[0].is_zero());               // with a constant term
        for (size_t i = 0; i < dc.size(); ++i)
            if (i % 2 == 0) CHECK(dc[i].is_zero()); // denominator: odd powers only
    }
    SECTION("invalid ladders are rejected") {
        CHECK_THROWS_AS(ladder_impedance(Ladder{}), LadderError);
        Ladder neg{{{QPoly(-1), QPoly(1)}}};
        CHECK_THROWS_AS(ladder_impedance(neg), LadderError);
    }
}

TEST_CASE("cauer expansion", "[ladder]") {
    SECTION("one full cycle") {
        Ladder l = cauer_expand(rf("s^2+1", "s"));
        REQUIRE(l.stages.size() == 1);
        CHECK((l.stages[0].L - QPoly(1)).is_zero());
        CHECK((l.stages[0].C - QPoly(1)).is_zero());
    }
    SECTION("single division") {
        Ladder l = cauer_expand(rf("2*s^2+1", "s"));
        REQUIRE(l.stages.size() == 1);
        CHECK((l.stages[0].L - QPoly(2)).is_zero());
        CHECK((l.stages[0].C - QPoly(1)).is_zero());
    }
    SECTION("all-ones round trip") {
        Ladder ones{{{QPoly(1), QPoly(1)}, {QPoly(1), QPoly(1)}, {QPoly(1), QPoly(1)}}};
        CHECK(same_values(cauer_expand(ladder_impedance(ones)), ones));
    }
    SECTION("malformed functions are rejected") {
        // non-monomial quotient
        CHECK_THROWS_AS(cauer_expand(rf("s^2+s+1", "s")), LadderError);
        // wrong degree step
        CHECK_THROWS_AS(cauer_expand(rf("s^3+1", "s")), LadderError);
        // negative element
        CHECK_THROWS_AS(cauer_expand(rf("-s^2-1", "s")), LadderError);
    }
}

TEST_CASE("ladder round-trip property suites", "[ladder][property]") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 100; ++trial) {
        Ladder l = random_ladder(rng);
        RationalFunction z = ladder_impedance(l);

        // parity/degree structure for an n-stage ladder
        Symbol s = sym("s");
        long n = static_cast<long>(l.stages.size());
        REQUIRE(z.num.degree(s) == 2 * n);
        REQUIRE(z.den.degree(s) == 2 * n - 1);
        auto nc = z.num.collect(s), dc = z.den.collect(s);
        for (size_t i = 0; i < nc.size(); ++i)
            if (i % 2 == 1) REQUIRE(nc[i].is_zero());
        for (size_t i = 0; i < dc.size(); ++i)
            if (i % 2 == 0) REQUIRE(dc[i].is_zero());
        REQUIRE_FALSE(nc[0].is_zero());

        // cauer_expand o ladder_impedance = identity (exact values)
        Ladder back = cauer_expand(z);
        REQUIRE(same_values(back, l));

        // ladder_impedance o cauer_expand = identity on the impedance
        REQUIRE(ladder_impedance(back) == z);

        // the independent sizing route agrees
        LadderSizing sized = ladder_size(z);
        REQUIRE(sized.complete);
        REQUIRE(same_values(sized.ladder, l));
    }
}

TEST_CASE("first-stage sizing formulas", "[ladder][sizing]") {
    LadderSizingStep step = ladder_sizing_step();

    SECTION("the six closed forms, by cross-multiplied identity") {
        CHECK(step.values.at(sym("a5")) == rf("A5", "k"));
        CHECK(step.values.at(sym("a1")) == rf("A1", "k"));
        CHECK(step.values.at(sym("a3")) == rf("A3", "k"));
        CHECK(step.values.at(sym("a2")) == rf("A2*A5-A1*A6", "A5"));
        CHECK(step.values.at(sym("a4")) == rf("A4*A5-A3*A6", "A5"));
        CHECK(step.values.at(sym("L1")) == rf("A6*k", "A5"));
    }

    SECTION("consistency with the all-ones ladder") {
        // k=1, A = coefficients of the all-ones Z; expect L1 = 1 and the a_i
        // equal to the coefficients of Z1 = Z - L1 s
        std::map<Symbol, QPoly> bind{{sym("k"), QPoly(1)},  {sym("A6"), QPoly(1)},
                                     {sym("A4"), QPoly(5)}, {sym("A2"), QPoly(6)},
                                     {sym("A5"), QPoly(1)}, {sym("A3"), QPoly(4)},
                                     {sym("A1"), QPoly(3)}};
        auto value = [&](const char* name) {
            const RationalFunction& v = step.values.at(sym(name));
            return RationalFunction(v.num.substitute(bind), v.den.substitute(bind));
        };
        CHECK(value("L1") == RationalFunction(1));
        Ladder ones{{{QPoly(1), QPoly(1)}, {QPoly(1), QPoly(1)}, {QPoly(1), QPoly(1)}}};
        RationalFunction z1 =
            ladder_impedance(ones) - RationalFunction(parse_qpoly("s"));
        Symbol s = sym("s");
        auto nc = z1.num.collect(s), dc = z1.den.collect(s);
        CHECK(value("a1") == RationalFunction(dc[1]));
        CHECK(value("a3") == RationalFunction(dc[3]));
        CHECK(value("a5") == RationalFunction(dc[5]));
        CHECK(value("a2") == RationalFunction(nc[2]));
        CHECK(value("a4") == RationalFunction(nc[4]));
    }

    SECTION("A6 = 0 degenerates to L1 = 0") {
        std::map<Symbol, QPoly> bind{{sym("A6"), QPoly()}};
        CHECK(step.values.at(sym("L1")).num.substitute(bind).is_zero());
    }
}

TEST_CASE("full ladder sizing", "[ladder][sizing]") {
    SECTION("unit ladder recovered") {
        Ladder ones{{{QPoly(1), QPoly(1)}, {QPoly(1), QPoly(1)}, {QPoly(1), QPoly(1)}}};
        LadderSizing sized = ladder_size(ladder_impedance(ones));
        REQUIRE(sized.complete);
        CHECK(same_values(sized.ladder, ones));
    }
    SECTION("L=(1,2,3), C=(1,1,2) recovered exactly") {
        Ladder mix{{{QPoly(1), QPoly(1)}, {QPoly(2), QPoly(1)}, {QPoly(3), QPoly(2)}}};
        RationalFunction z = ladder_impedance(mix);
        LadderSizing sized = ladder_size(z);
        REQUIRE(sized.complete);
        CHECK(same_values(sized.ladder, mix));
        CHECK(same_values(sized.ladder, cauer_expand(z))); // two independent paths
    }
    SECTION("non-realizable targets reported with the issue") {
        LadderSizing bad = ladder_size(rf("s^2+s+1", "s"));
        CHECK_FALSE(bad.complete);
        CHECK_FALSE(bad.issue.empty());
        LadderSizing neg = ladder_size(rf("-s^2-1", "s"));
        CHECK_FALSE(neg.complete);
        CHECK(neg.issue.find("non-positive") != std::string::npos);
    }
}
