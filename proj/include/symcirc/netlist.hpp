#ifndef SYMCIRC_NETLIST_HPP
#define SYMCIRC_NETLIST_HPP

#include "poly_io.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace symcirc {

// Element value: either a fresh symbol (named after the element or as written)
// or an exact rational from a decimal-with-SI-suffix literal.
struct ElementValue {
    bool symbolic = true;
    Symbol symbol{};
    Rat number{0};

    QPoly poly() const { return symbolic ? QPoly::variable(symbol) : QPoly(number); }
};

struct Element {
    enum class Kind { R, L, C, VCVS, SourceV, HTwoPort };
    Kind kind{};
    std::string name;
    std::vector<std::string> nodes; // R/L/C/V: {+,-}; VCVS: {out+,out-,ctl+,ctl-};
                                    // HTwoPort: {base, collector, emitter}
    ElementValue value;             // unused for SourceV (input) and HTwoPort
    bool is_input = false;          // SourceV marked `input`
    // h-parameters for HTwoPort
    ElementValue h11, h12, h21, h22;
};

struct Netlist {
    std::vector<Element> elements;
    std::string ground;
    std::string output; // node measured against ground
    std::vector<std::string> nodes; // all node names, ground included

    const Element* input_source() const {
        for (const auto& e : elements)
            if (e.kind == Element::Kind::SourceV && e.is_input) return &e;
        return nullptr;
    }
};

class NetlistError : public std::runtime_error {
public:
    NetlistError(size_t line, const std::string& what)
        : std::runtime_error("netlist line " + std::to_string(line) + ": " + what) {}
    explicit NetlistError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline bool parse_si_number(const std::string& tok, Rat& out) {
    if (tok.empty()) return false;
    std::string body = tok;
    long exp10 = 0;
    char suffix = body.back();
    switch (suffix) {
        case 'k': exp10 = 3; break;
        case 'M': exp10 = 6; break;
        case 'm': exp10 = -3; break;
        case 'u': exp10 = -6; break;
        case 'n': exp10 = -9; break;
        case 'p': exp10 = -12; break;
        default: suffix = 0; break;
    }
    if (suffix) body.pop_back();
    if (body.empty()) return false;
    for (size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
              c == 'e' || c == 'E'))
            return false;
    }
    if (!std::isdigit(static_cast<unsigned char>(body[0])) && body[0] != '-' && body[0] != '+' &&
        body[0] != '.')
        return false;
    try {
        out = rat_from_decimal(body) * pow10_rat(exp10);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

inline ElementValue parse_value(const std::string& tok) {
    ElementValue v;
    Rat num;
    if (parse_si_number(tok, num)) {
        v.symbolic = false;
        v.number = num;
    } else {
        v.symbolic = true;
        v.symbol = sym(tok);
    }
    return v;
}

} // namespace detail

inline Netlist parse_netlist(const std::string& text) {
    Netlist net;
    std::set<std::string> names;
    std::set<std::string> nodes;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    int inputs = 0;
    bool have_gnd = false, have_out = false;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;

        if (tok[0] == ".gnd") {
            if (tok.size() != 2) throw NetlistError(lineno, ".gnd expects one node");
            net.ground = tok[1];
            nodes.insert(tok[1]);
            have_gnd = true;
            continue;
        }
        if (tok[0] == ".out") {
            if (tok.size() != 2) throw NetlistError(lineno, ".out expects one node");
            net.output = tok[1];
            nodes.insert(tok[1]);
            have_out = true;
            continue;
        }

        char k = tok[0].empty() ? 0 : tok[0][0];
        Element e;
        e.name = tok[0];
        if (!names.insert(e.name).second)
            throw NetlistError(lineno, "duplicate element name " + e.name);
        switch (k) {
            case 'R':
            case 'L':
            case 'C': {
                if (tok.size() != 4)
                    throw NetlistError(lineno, e.name + ": expected `<name> n+ n- value`");
                e.kind = k == 'R'   ? Element::Kind::R
                         : k == 'L' ? Element::Kind::L
                                    : Element::Kind::C;
                e.nodes = {tok[1], tok[2]};
                e.value = detail::parse_value(tok[3]);
                break;
            }
            case 'V': {
                if (tok.size() != 4)
                    throw NetlistError(lineno, e.name + ": expected `<name> n+ n- input|value`");
                e.kind = Element::Kind::SourceV;
                e.nodes = {tok[1], tok[2]};
                if (tok[3] == "input") {
                    e.is_input = true;
                    ++inputs;
                } else {
                    e.value = detail::parse_value(tok[3]);
                }
                break;
            }
            case 'E': {
                if (tok.size() != 6)
                    throw NetlistError(lineno,
                                       e.name + ": expected `<name> out+ out- ctl+ ctl- gain`");
                e.kind = Element::Kind::VCVS;
                e.nodes = {tok[1], tok[2], tok[3], tok[4]};
                e.value = detail::parse_value(tok[5]);
                break;
            }
            case 'Q': {
                if (tok.size() != 8)
                    throw NetlistError(lineno, e.name +
                                                   ": expected `<name> base collector emitter "
                                                   "h11=<v> h12=<v> h21=<v> h22=<v>`");
                e.kind = Element::Kind::HTwoPort;
                e.nodes = {tok[1], tok[2], tok[3]};
                ElementValue* slots[4] = {&e.h11, &e.h12, &e.h21, &e.h22};
                const char* keys[4] = {"h11=", "h12=", "h21=", "h22="};
                for (int i = 0; i < 4; ++i) {
                    const std::string& a = tok[4 + i];
                    if (a.rfind(keys[i], 0) != 0)
                        throw NetlistError(lineno, e.name + ": expected " + keys[i] + "...");
                    *slots[i] = detail::parse_value(a.substr(4));
                }
                break;
            }
            default:
                throw NetlistError(lineno, "unknown element kind in `" + tok[0] + "`");
        }
        for (const auto& n : e.nodes) nodes.insert(n);
        net.elements.push_back(std::move(e));
    }

    if (!have_gnd) throw NetlistError("missing .gnd directive");
    if (!have_out) throw NetlistError("missing .out directive");
    if (inputs != 1)
        throw NetlistError("expected exactly one source marked `input`, found " +
                           std::to_string(inputs));
    if (!nodes.count(net.ground)) throw NetlistError("ground node unused");

    // connectivity: every node reachable from ground through element terminals
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : net.elements)
        for (size_t i = 0; i < e.nodes.size(); ++i)
            for (size_t j = i + 1; j < e.nodes.size(); ++j) {
                adj[e.nodes[i]].push_back(e.nodes[j]);
                adj[e.nodes[j]].push_back(e.nodes[i]);
            }
    std::set<std::string> reach{net.ground};
    std::vector<std::string> stack{net.ground};
    while (!stack.empty()) {
        std::string n = stack.back();
        stack.pop_back();
        for (const auto& m : adj[n])
            if (reach.insert(m).second) stack.push_back(m);
    }
    for (const auto& n : nodes)
        if (!reach.count(n)) throw NetlistError("node " + n + " not connected to ground");

    net.nodes.assign(nodes.begin(), nodes.end());
    return net;
}

} // namespace symcirc

#endif
