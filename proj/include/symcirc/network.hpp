#ifndef SYMCIRC_NETWORK_HPP
#define SYMCIRC_NETWORK_HPP

#include "ratfunc.hpp"

#include <algorithm>
#include <array>

namespace symcirc {

// Two-terminal multigraph with impedance-labelled edges.
struct NetworkEdge {
    std::string name;
    int n1 = 0, n2 = 0;
    RationalFunction z;
};

struct TwoTerminalNetwork {
    std::vector<NetworkEdge> edges;
    int t1 = 0, t2 = 1; // distinguished terminals

    void add(const std::string& name, int a, int b, RationalFunction z) {
        edges.push_back({name, a, b, std::move(z)});
    }
};

enum class StepKind { Series, Parallel, DeltaWye, WyeDelta, RemoveLoop, RemovePendant };

inline const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Series: return "series";
        case StepKind::Parallel: return "parallel";
        case StepKind::DeltaWye: return "delta_wye";
        case StepKind::WyeDelta: return "wye_delta";
        case StepKind::RemoveLoop: return "remove_loop";
        case StepKind::RemovePendant: return "remove_pendant";
    }
    return "?";
}

struct ReductionStep {
    StepKind kind;
    std::vector<std::string> removed; // edge names consumed
    std::vector<std::string> created; // edge names produced
    std::string equation;             // new labels in terms of the old ones
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    bool complete = false;            // reduced to a single terminal-to-terminal edge
    RationalFunction impedance;       // valid when complete
    TwoTerminalNetwork remainder;     // irreducible remainder when not complete
};

// Delta-to-star conversion for one triangle a-b-c: returns the star arms
// {z_a, z_b, z_c} with z_a = z_ab z_ca / (z_ab + z_bc + z_ca), etc.
inline std::array<RationalFunction, 3> delta_wye_arms(const RationalFunction& z_ab,
                                                      const RationalFunction& z_bc,
                                                      const RationalFunction& z_ca) {
    RationalFunction sum = z_ab + z_bc + z_ca;
    return {(z_ab * z_ca) / sum, (z_ab * z_bc) / sum, (z_bc * z_ca) / sum};
}

struct ReduceOptions {
    bool allow_delta_wye = true;
    size_t max_steps = 10'000;
};

namespace detail {

struct NetReducer {
    TwoTerminalNetwork net;
    ReductionTrace trace;
    size_t fresh = 0;
    int next_node = 0;

    explicit NetReducer(TwoTerminalNetwork n) : net(std::move(n)) {
        for (const auto& e : net.edges) next_node = std::max({next_node, e.n1 + 1, e.n2 + 1});
        next_node = std::max({next_node, net.t1 + 1, net.t2 + 1});
    }

    std::string fresh_name() { return "Z#" + std::to_string(++fresh); }

    bool is_terminal(int v) const { return v == net.t1 || v == net.t2; }

    std::map<int, std::vector<size_t>> incidence() const {
        std::map<int, std::vector<size_t>> inc;
        for (size_t i = 0; i < net.edges.size(); ++i) {
            inc[net.edges[i].n1].push_back(i);
            if (net.edges[i].n2 != net.edges[i].n1) inc[net.edges[i].n2].push_back(i);
        }
        return inc;
    }

    void erase_edges(std::vector<size_t> ix) {
        std::sort(ix.rbegin(), ix.rend());
        for (size_t i : ix) net.edges.erase(net.edges.begin() + static_cast<long>(i));
    }

    // one greedy pass of the four basic moves; returns false at fixpoint
    bool basic_step() {
        // loops
        for (size_t i = 0; i < net.edges.size(); ++i)
            if (net.edges[i].n1 == net.edges[i].n2) {
                trace.steps.push_back({StepKind::RemoveLoop,
                                       {net.edges[i].name},
                                       {},
                                       net.edges[i].name + " removed (loop)"});
                erase_edges({i});
                return true;
            }
        auto inc = incidence();
        // pendants
        for (const auto& [v, ix] : inc)
            if (!is_terminal(v) && ix.size() == 1) {
                const auto& e = net.edges[ix[0]];
                trace.steps.push_back({StepKind::RemovePendant,
                                       {e.name},
                                       {},
                                       e.name + " removed (pendant at node " +
                                           std::to_string(v) + ")"});
                erase_edges({ix[0]});
                return true;
            }
        // series: internal node of degree exactly 2 with two distinct edges
        for (const auto& [v, ix] : inc)
            if (!is_terminal(v) && ix.size() == 2 && ix[0] != ix[1]) {
                const NetworkEdge e1 = net.edges[ix[0]], e2 = net.edges[ix[1]];
                int a = e1.n1 == v ? e1.n2 : e1.n1;
                int b = e2.n1 == v ? e2.n2 : e2.n1;
                NetworkEdge merged{fresh_name(), a, b, e1.z + e2.z};
                trace.steps.push_back({StepKind::Series,
                                       {e1.name, e2.name},
                                       {merged.name},
                                       merged.name + " = " + e1.name + " + " + e2.name});
                erase_edges({ix[0], ix[1]});
                net.edges.push_back(std::move(merged));
                return true;
            }
        // parallel: two edges on the same node pair
        for (size_t i = 0; i < net.edges.size(); ++i)
            for (size_t j = i + 1; j < net.edges.size(); ++j) {
                const NetworkEdge &a = net.edges[i], &b = net.edges[j];
                bool same = (a.n1 == b.n1 && a.n2 == b.n2) || (a.n1 == b.n2 && a.n2 == b.n1);
                if (!same) continue;
                NetworkEdge merged{fresh_name(), a.n1, a.n2, (a.z * b.z) / (a.z + b.z)};
                trace.steps.push_back(
                    {StepKind::Parallel,
                     {a.name, b.name},
                     {merged.name},
                     merged.name + " = " + a.name + " * " + b.name + " / (" + a.name +
                         " + " + b.name + ")"});
                erase_edges({i, j});
                net.edges.push_back(std::move(merged));
                return true;
            }
        return false;
    }

    bool done() const {
        return net.edges.size() == 1 &&
               ((net.edges[0].n1 == net.t1 && net.edges[0].n2 == net.t2) ||
                (net.edges[0].n1 == net.t2 && net.edges[0].n2 == net.t1));
    }

    // triangles of three distinct edges over three distinct nodes
    struct Triangle {
        size_t ab, bc, ca;
        int a, b, c;
    };
    std::vector<Triangle> triangles() const {
        std::vector<Triangle> out;
        size_t n = net.edges.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (size_t k = j + 1; k < n; ++k) {
                    std::set<int> nodes{net.edges[i].n1, net.edges[i].n2, net.edges[j].n1,
                                        net.edges[j].n2, net.edges[k].n1, net.edges[k].n2};
                    if (nodes.size() != 3) continue;
                    // each node must meet exactly two of the three edges
                    int a = net.edges[i].n1, b = net.edges[i].n2;
                    int c = 0;
                    for (int v : nodes)
                        if (v != a && v != b) c = v;
                    auto joins = [&](size_t e, int x, int y) {
                        return (net.edges[e].n1 == x && net.edges[e].n2 == y) ||
                               (net.edges[e].n1 == y && net.edges[e].n2 == x);
                    };
                    if (joins(j, b, c) && joins(k, c, a)) out.push_back({i, j, k, a, b, c});
                    else if (joins(k, b, c) && joins(j, c, a)) out.push_back({i, k, j, a, b, c});
                }
        return out;
    }

    void apply_delta_wye(const Triangle& t) {
        const NetworkEdge zab = net.edges[t.ab], zbc = net.edges[t.bc], zca = net.edges[t.ca];
        auto arms = delta_wye_arms(zab.z, zbc.z, zca.z);
        int star = next_node++;
        NetworkEdge ea{fresh_name(), t.a, star, arms[0]};
        NetworkEdge eb{fresh_name(), t.b, star, arms[1]};
        NetworkEdge ec{fresh_name(), t.c, star, arms[2]};
        std::string S = "(" + zab.name + " + " + zbc.name + " + " + zca.name + ")";
        trace.steps.push_back(
            {StepKind::DeltaWye,
             {zab.name, zbc.name, zca.name},
             {ea.name, eb.name, ec.name},
             ea.name + " = " + zab.name + " * " + zca.name + " / " + S + "; " + eb.name +
                 " = " + zab.name + " * " + zbc.name + " / " + S + "; " + ec.name + " = " +
                 zbc.name + " * " + zca.name + " / " + S});
        erase_edges({t.ab, t.bc, t.ca});
        net.edges.push_back(std::move(ea));
        net.edges.push_back(std::move(eb));
        net.edges.push_back(std::move(ec));
    }

    // count of immediately available basic moves (lookahead score)
    static size_t basic_moves(const NetReducer& r) {
        size_t score = 0;
        std::map<int, std::vector<size_t>> inc = r.incidence();
        for (const auto& e : r.net.edges)
            if (e.n1 == e.n2) ++score;
        for (const auto& [v, ix] : inc) {
            if (r.is_terminal(v)) continue;
            if (ix.size() == 1) ++score;
            if (ix.size() == 2 && ix[0] != ix[1]) ++score;
        }
        for (size_t i = 0; i < r.net.edges.size(); ++i)
            for (size_t j = i + 1; j < r.net.edges.size(); ++j) {
                const NetworkEdge &a = r.net.edges[i], &b = r.net.edges[j];
                if ((a.n1 == b.n1 && a.n2 == b.n2) || (a.n1 == b.n2 && a.n2 == b.n1)) ++score;
            }
        return score;
    }

    // pick the triangle whose Delta-Y conversion enables the most basic moves;
    // ties broken by the lowest (a, b, c) node triple
    bool delta_wye_step() {
        auto tris = triangles();
        if (tris.empty()) return false;
        size_t best = 0;
        long best_score = -1;
        std::array<int, 3> best_key{};
        for (size_t i = 0; i < tris.size(); ++i) {
            NetReducer probe(*this);
            probe.trace = {};
            probe.apply_delta_wye(tris[i]);
            long score = static_cast<long>(basic_moves(probe));
            std::array<int, 3> key{tris[i].a, tris[i].b, tris[i].c};
            std::sort(key.begin(), key.end());
            if (score > best_score || (score == best_score && key < best_key)) {
                best = i;
                best_score = score;
                best_key = key;
            }
        }
        apply_delta_wye(tris[best]);
        return true;
    }

    ReductionTrace run(const ReduceOptions& opt) {
        while (trace.steps.size() < opt.max_steps) {
            if (done()) {
                trace.complete = true;
                trace.impedance = net.edges[0].z;
                trace.remainder = net;
                return trace;
            }
            if (basic_step()) continue;
            if (opt.allow_delta_wye && delta_wye_step()) continue;
            break; // irreducible under the enabled moves
        }
        trace.complete = false;
        trace.remainder = net;
        return trace;
    }
};

} // namespace detail

// Reduce a two-terminal network to a single edge by loop/pendant removal,
// series/parallel merging, and (optionally) Delta-Y conversion at a
// lookahead-chosen triangle. Deterministic; returns a replayable trace. A
// non-series-parallel network that stays stuck under the enabled moves comes
// back with complete = false and the irreducible remainder attached.
inline ReductionTrace reduce_network(const TwoTerminalNetwork& net,
                                     const ReduceOptions& opt = {}) {
    if (net.t1 == net.t2) throw std::invalid_argument("reduce_network: identical terminals");
    if (net.edges.empty()) throw std::invalid_argument("reduce_network: empty network");
    detail::NetReducer r(net);
    return r.run(opt);
}

} // namespace symcirc

#endif
