#include <catch2/catch_amalgamated.hpp>

#include <symcirc/poly_io.hpp>
#include <symcirc/solution.hpp>
#include <symcirc/stability.hpp>

#include <random>

using namespace symcirc;

namespace {

GroebnerBasis make_gb(std::vector<std::string> polys, std::vector<std::string> vars_high_to_low) {
    GroebnerBasis gb;
    for (auto& s : polys) gb.polys.push_back(parse_qpoly(s));
    std::vector<Symbol> prio;
    for (auto& v : vars_high_to_low) prio.push_back(sym(v));
    gb.order = lex_order(prio);
    gb.reduced = true;
    return gb;
}

} // namespace

TEST_CASE("triangular solve of {x^2-2, y-x}", "[solution]") {
    auto gb = make_gb({"y - x", "x^2 - 2"}, {"y", "x"});
    auto boxes = solve_triangular(gb, sym("x"));
    REQUIRE(boxes.size() == 2);
    for (auto& b : boxes) {
        b.refine(pow10_rat(-32));
        RatIv x = b.at(sym("x")), y = b.at(sym("y"));
        // y = x at both roots
        CHECK(RatIv::hull(x, y).width() < pow10_rat(-30));
        CHECK(x.width() < pow10_rat(-32));
    }
    CHECK(rat_to_decimal(boxes[1].at(sym("x")).mid(), 20) == "1.41421356237309504880");
    CHECK(sgn(boxes[0].at(sym("x")).hi) <= 0);
}

TEST_CASE("exact roots back-substitute exactly", "[solution]") {
    auto gb = make_gb({"y - 3*x", "x - 2"}, {"y", "x"});
    auto boxes = solve_triangular(gb, sym("x"));
    REQUIRE(boxes.size() == 1);
    CHECK(boxes[0].exact_vars.count(sym("x")));
    CHECK(boxes[0].exact_vars.count(sym("y")));
    CHECK(boxes[0].at(sym("x")).is_point());
    CHECK(boxes[0].at(sym("y")).lo == Rat(6));
}

TEST_CASE("nonlinear back-substitution branches per real value", "[solution]") {
    // x in {1, 2}; y^2 = x gives +-1 and +-sqrt(2): four boxes
    auto gb = make_gb({"y^2 - x", "x^2 - 3*x + 2"}, {"y", "x"});
    auto boxes = solve_triangular(gb, sym("x"));
    REQUIRE(boxes.size() == 4);
    std::vector<double> ys;
    for (auto& b : boxes) {
        b.refine(pow10_rat(-20));
        ys.push_back(rat_to_double(b.at(sym("y")).mid()));
    }
    std::sort(ys.begin(), ys.end());
    CHECK(ys[0] == Catch::Approx(-std::sqrt(2.0)).margin(1e-12));
    CHECK(ys[1] == Catch::Approx(-1.0).margin(1e-12));
    CHECK(ys[2] == Catch::Approx(1.0).margin(1e-12));
    CHECK(ys[3] == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("vanishing leading coefficient marks the variable free", "[solution]") {
    // at x = 1 the only defining polynomial for y degenerates to 0*y - 1
    auto gb = make_gb({"x*y - y - 1", "x^2 - 1"}, {"y", "x"});
    auto boxes = solve_triangular(gb, sym("x"));
    REQUIRE(boxes.size() == 2);
    auto& degenerate = sgn(boxes[1].at(sym("x")).lo) > 0 ? boxes[1] : boxes[0];
    auto& fine = sgn(boxes[1].at(sym("x")).lo) > 0 ? boxes[0] : boxes[1];
    CHECK(degenerate.free_vars.count(sym("y")) == 1);
    CHECK_FALSE(degenerate.warnings.empty());
    CHECK(fine.free_vars.empty());
    fine.refine(pow10_rat(-10));
    // x = -1: y = 1/(x-1) = -1/2
    CHECK(rat_abs(fine.at(sym("y")).mid() + make_rat(1, 2)) < pow10_rat(-9));

    // the degenerate branch is not actually a solution; residuals catch it
    CHECK_FALSE(certify_residuals(degenerate, gb.polys));
    CHECK(certify_residuals(fine, gb.polys));
}

TEST_CASE("residual certificates accept true solutions", "[solution]") {
    auto gb = make_gb({"y - x", "x^2 - 2"}, {"y", "x"});
    auto boxes = solve_triangular(gb, sym("x"));
    std::vector<QPoly> original = {parse_qpoly("x*y - 2"), parse_qpoly("y - x")};
    for (auto& b : boxes) CHECK(certify_residuals(b, original));
    std::vector<QPoly> wrong = {parse_qpoly("x*y - 3")};
    for (auto& b : boxes) CHECK_FALSE(certify_residuals(b, wrong));
}

TEST_CASE("hurwitz examples", "[stability]") {
    CHECK(hurwitz_stable(std::vector<Rat>{2, 3, 1}));        // (s+1)(s+2)
    CHECK_FALSE(hurwitz_stable(std::vector<Rat>{2, -1, 1})); // s^2 - s + 2
    CHECK(hurwitz_stable(std::vector<Rat>{1, 1}));           // s + 1
    CHECK_FALSE(hurwitz_stable(std::vector<Rat>{-1, 1}));    // s - 1
    CHECK_FALSE(hurwitz_stable(std::vector<Rat>{1, 0, 1}));  // s^2 + 1, marginal
    // fourth-order Butterworth denominator (approximate rational coefficients)
    std::vector<Rat> bw{Rat(1), rat_from_decimal("2.613125929752753"),
                        rat_from_decimal("3.414213562373095"),
                        rat_from_decimal("2.613125929752753"), Rat(1)};
    CHECK(hurwitz_stable(bw));
}

TEST_CASE("hurwitz agrees with constructed quartics", "[stability]") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(1, 9), den(1, 3), coin(0, 1);
    for (int iter = 0; iter < 100; ++iter) {
        // (s + a)(s + b)(s^2 + c s + d): stable iff a, b, c > 0 (d > 0 always)
        Rat a = make_rat(num(rng), den(rng)), b = make_rat(num(rng), den(rng));
        Rat c = make_rat(num(rng), den(rng)), d = make_rat(num(rng), den(rng));
        bool stable = true;
        if (coin(rng)) { a = -a; stable = false; }
        if (coin(rng)) { c = -c; stable = false; }
        // multiply out ascending: (s^2 + (a+b)s + ab)(s^2 + cs + d)
        Rat s0 = a * b * d;
        Rat s1 = a * b * c + (a + b) * d;
        Rat s2 = a * b + (a + b) * c + d;
        Rat s3 = a + b + c;
        std::vector<Rat> coeffs{s0, s1, s2, s3, Rat(1)};
        INFO("iter " << iter);
        CHECK(hurwitz_stable(coeffs) == stable);
    }
}

TEST_CASE("interval hurwitz refines via callback", "[stability]") {
    // coefficients of (s+1)(s+2) known only through shrinking enclosures
    auto coeffs = [](int k) {
        Rat w = pow10_rat(-k) * 10; // wide at k=0, tightening after
        return std::vector<RatIv>{RatIv(Rat(2) - w, Rat(2) + w), RatIv(Rat(3) - w, Rat(3) + w),
                                  RatIv(Rat(1))};
    };
    CHECK(hurwitz_stable(coeffs));
    CHECK(routh_hurwitz(coeffs(0)) == Decision::Undecided);
    CHECK(routh_hurwitz(coeffs(3)) == Decision::Stable);
}

TEST_CASE("positivity filter keeps certified-positive boxes", "[stability]") {
    auto gb = make_gb({"y + x", "x^2 - 2"}, {"y", "x"});
    auto boxes = solve_triangular(gb, sym("x"));
    REQUIRE(boxes.size() == 2);
    std::vector<SolutionBox> rejected;
    auto kept = positivity_filter(std::move(boxes), {sym("x")}, &rejected);
    REQUIRE(kept.size() == 1);
    REQUIRE(rejected.size() == 1);
    CHECK(sgn(kept[0].at(sym("x")).lo) >= 0);
    // filtering on both variables kills everything (y = -x)
    auto boxes2 = solve_triangular(gb, sym("x"));
    CHECK(positivity_filter(std::move(boxes2), {sym("x"), sym("y")}).empty());
    // exact zero counts as boundary, not positive
    auto gb0 = make_gb({"x^2 - x"}, {"x"});
    auto boxes0 = solve_triangular(gb0, sym("x"));
    REQUIRE(boxes0.size() == 2);
    CHECK(positivity_filter(std::move(boxes0), {sym("x")}).size() == 1);
}
