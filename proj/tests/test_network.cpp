#include <catch2/catch_amalgamated.hpp>

#include <symcirc/mna.hpp>
#include <symcirc/network.hpp>

#include <functional>
#include <random>

using namespace symcirc;

namespace {

struct Elem {
    char kind; // R, L, or C
    Rat value;
    int n1, n2;
};

RationalFunction elem_impedance(const Elem& e) {
    QPoly s = QPoly::variable(sym("s"));
    switch (e.kind) {
        case 'R': return RationalFunction(QPoly(e.value));
        case 'L': return RationalFunction(QPoly(e.value) * s);
        default: return {QPoly(1), QPoly(e.value) * s}; // C
    }
}

// Build both views of the same element list: a TwoTerminalNetwork and a
// netlist driven by a unit source across the terminals (for the MNA oracle).
struct Views {
    TwoTerminalNetwork net;
    std::string netlist;
};

Views make_views(const std::vector<Elem>& elems, int t1, int t2) {
    Views v;
    v.net.t1 = t1;
    v.net.t2 = t2;
    auto node = [&](int n) {
        if (n == t1) return std::string("in");
        if (n == t2) return std::string("0");
        return "n" + std::to_string(n);
    };
    for (size_t i = 0; i < elems.size(); ++i) {
        const Elem& e = elems[i];
        v.net.add("Z" + std::to_string(i), e.n1, e.n2, elem_impedance(e));
        v.netlist += std::string(1, e.kind) + std::to_string(i) + " " + node(e.n1) + " " +
                     node(e.n2) + " " + e.value.get_num().get_str() + "\n";
    }
    v.netlist += "Vin in 0 input\n.gnd 0\n.out in\n";
    return v;
}

bool matches_mna(const Views& v) {
    ReductionTrace tr = reduce_network(v.net);
    if (!tr.complete) return false;
    TransferFunction zin = driving_point_impedance(parse_netlist(v.netlist));
    return (tr.impedance.num * zin.den - zin.num * tr.impedance.den).is_zero();
}

} // namespace

TEST_CASE("basic reduction steps", "[network]") {
    Symbol s = sym("s");

    SECTION("two impedances in series") {
        TwoTerminalNetwork net;
        net.add("Z1", 0, 2, RationalFunction(parse_qpoly("R1")));
        net.add("Z2", 2, 1, RationalFunction(parse_qpoly("R2")));
        ReductionTrace tr = reduce_network(net);
        REQUIRE(tr.complete);
        CHECK(tr.impedance == RationalFunction(parse_qpoly("R1+R2")));
        REQUIRE(tr.steps.size() == 1);
        CHECK(tr.steps[0].kind == StepKind::Series);
        CHECK(tr.steps[0].equation == "Z#1 = Z1 + Z2");
    }

    SECTION("two impedances in parallel") {
        TwoTerminalNetwork net;
        net.add("Z1", 0, 1, RationalFunction(parse_qpoly("R1")));
        net.add("Z2", 0, 1, RationalFunction(parse_qpoly("R2")));
        ReductionTrace tr = reduce_network(net);
        REQUIRE(tr.complete);
        CHECK(tr.impedance == RationalFunction(parse_qpoly("R1*R2"), parse_qpoly("R1+R2")));
        REQUIRE(tr.steps.size() == 1);
        CHECK(tr.steps[0].kind == StepKind::Parallel);
    }

    SECTION("loops and pendants disappear") {
        TwoTerminalNetwork net;
        net.add("Z1", 0, 1, RationalFunction(parse_qpoly("R1")));
        net.add("Zloop", 2, 2, RationalFunction(parse_qpoly("R2")));
        net.add("Zpend", 1, 2, RationalFunction(parse_qpoly("R3")));
        ReductionTrace tr = reduce_network(net);
        REQUIRE(tr.complete);
        CHECK(tr.impedance == RationalFunction(parse_qpoly("R1")));
        REQUIRE(tr.steps.size() == 2);
        CHECK(tr.steps[0].kind == StepKind::RemoveLoop);
        CHECK(tr.steps[1].kind == StepKind::RemovePendant);
    }

    SECTION("symmetric delta gives wye arms Z/3") {
        RationalFunction z{QPoly::variable(sym("Z"))};
        auto arms = delta_wye_arms(z, z, z);
        RationalFunction third = z / RationalFunction(3);
        for (const auto& a : arms) CHECK(a == third);
    }

    SECTION("all-equal bridge reduces to Z") {
        RationalFunction z{QPoly::variable(sym("Z"))};
        TwoTerminalNetwork net;
        net.t1 = 0;
        net.t2 = 1;
        net.add("Zab", 0, 2, z);
        net.add("Zac", 0, 3, z);
        net.add("Zbc", 2, 3, z);
        net.add("Zb1", 2, 1, z);
        net.add("Zc1", 3, 1, z);
        ReductionTrace tr = reduce_network(net);
        REQUIRE(tr.complete);
        CHECK(tr.impedance == z);
        bool used_delta = false;
        for (const auto& st : tr.steps)
            if (st.kind == StepKind::DeltaWye) used_delta = true;
        CHECK(used_delta);
    }

    SECTION("delta-wye disabled leaves an irreducible remainder") {
        TwoTerminalNetwork net;
        net.t1 = 0;
        net.t2 = 1;
        net.add("Z1", 0, 2, RationalFunction(2));
        net.add("Z2", 0, 3, RationalFunction(3));
        net.add("Z3", 2, 3, RationalFunction(5));
        net.add("Z4", 2, 1, RationalFunction(7));
        net.add("Z5", 3, 1, RationalFunction(11));
        ReduceOptions opt;
        opt.allow_delta_wye = false;
        ReductionTrace tr = reduce_network(net, opt);
        CHECK_FALSE(tr.complete);
        CHECK(tr.remainder.edges.size() == 5);
    }

    (void)s;
}

TEST_CASE("every step preserves the terminal impedance", "[network]") {
    // the impedance of the remainder after k steps is independent of k
    std::vector<Elem> elems{{'R', Rat(2), 0, 2}, {'L', Rat(3), 0, 3}, {'C', Rat(5), 2, 3},
                            {'R', Rat(7), 2, 1}, {'L', Rat(11), 3, 1}};
    Views v = make_views(elems, 0, 1);
    ReductionTrace full = reduce_network(v.net);
    REQUIRE(full.complete);
    for (size_t k = 1; k < full.steps.size(); ++k) {
        ReduceOptions cut;
        cut.max_steps = k;
        ReductionTrace part = reduce_network(v.net, cut);
        ReductionTrace rest = reduce_network(part.remainder);
        REQUIRE(rest.complete);
        CHECK(rest.impedance == full.impedance);
    }
}

TEST_CASE("reduction agrees with the MNA driving-point oracle", "[network][property]") {
    std::mt19937 rng(777);
    auto rnd_val = [&] { return Rat(1 + static_cast<int>(rng() % 9)); };

    SECTION("random series-parallel networks") {
        int next_node = 0;
        std::vector<Elem> elems;
        std::function<void(int, int, int)> build = [&](int a, int b, int budget) {
            if (budget <= 1) {
                const char kinds[] = {'R', 'L', 'C'};
                elems.push_back({kinds[rng() % 3], rnd_val(), a, b});
                return;
            }
            int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(budget - 1));
            if (rng() % 2) { // series split through a fresh middle node
                int m = next_node++;
                build(a, m, left);
                build(m, b, budget - left);
            } else { // parallel split
                build(a, b, left);
                build(a, b, budget - left);
            }
        };
        for (int trial = 0; trial < 50; ++trial) {
            elems.clear();
            next_node = 2;
            build(0, 1, 2 + static_cast<int>(rng() % 9)); // up to 10 edges
            INFO("series-parallel trial " << trial);
            REQUIRE(matches_mna(make_views(elems, 0, 1)));
        }
    }

    SECTION("bridge networks that require delta-wye") {
        for (int trial = 0; trial < 5; ++trial) {
            const char kinds[] = {'R', 'L', 'C'};
            std::vector<Elem> elems;
            auto E = [&](int a, int b) { elems.push_back({kinds[rng() % 3], rnd_val(), a, b}); };
            E(0, 2);
            E(0, 3);
            E(2, 3);
            E(2, 1);
            E(3, 1);
            if (trial >= 3) E(0, 2); // extra parallel arm on two of them
            Views v = make_views(elems, 0, 1);
            // confirm it is not series-parallel reducible
            ReduceOptions sp_only;
            sp_only.allow_delta_wye = false;
            CHECK_FALSE(reduce_network(v.net, sp_only).complete);
            INFO("bridge trial " << trial);
            REQUIRE(matches_mna(v));
        }
    }
}
