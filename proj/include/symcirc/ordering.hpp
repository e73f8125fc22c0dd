#ifndef SYMCIRC_ORDERING_HPP
#define SYMCIRC_ORDERING_HPP

#include "monomial.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace symcirc {

// Total, multiplicative monomial order with 1 minimal. The priority list
// names variables from highest to lowest; symbols not listed rank below all
// listed ones (ordered among themselves by id) so the same polynomial can be
// iterated under different orders.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex };

    MonomialOrder() : kind_(Kind::Lex) {}
    MonomialOrder(Kind kind, std::vector<Symbol> priority_high_to_low)
        : kind_(kind), vars_(std::move(priority_high_to_low)) {
        for (size_t i = 0; i < vars_.size(); ++i) rank_[vars_[i]] = i;
    }

    Kind kind() const { return kind_; }
    const std::vector<Symbol>& variables() const { return vars_; }

    // rank 0 = highest priority
    size_t rank(Symbol s) const {
        auto it = rank_.find(s);
        if (it != rank_.end()) return it->second;
        return vars_.size() + s;
    }

    // negative if a < b, 0 if equal, positive if a > b
    int cmp(const Monomial& a, const Monomial& b) const {
        if (a == b) return 0;
        std::vector<std::pair<size_t, int>> diff; // rank -> exp(a)-exp(b)
        collect_diff(a, b, diff);
        if (diff.empty()) return 0;
        if (kind_ == Kind::Lex) {
            // highest-priority differing variable decides
            size_t best = diff[0].first;
            int d = diff[0].second;
            for (const auto& [r, e] : diff)
                if (r < best) { best = r; d = e; }
            return d;
        }
        // grevlex: total degree first, then the lowest-priority differing
        // variable decides with reversed sign
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        size_t best = diff[0].first;
        int d = diff[0].second;
        for (const auto& [r, e] : diff)
            if (r > best) { best = r; d = e; }
        return -d;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

private:
    void collect_diff(const Monomial& a, const Monomial& b,
                      std::vector<std::pair<size_t, int>>& out) const {
        auto ia = a.entries().begin(), ea = a.entries().end();
        auto ib = b.entries().begin(), eb = b.entries().end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->first < ib->first)) {
                out.push_back({rank(ia->first), static_cast<int>(ia->second)});
                ++ia;
            } else if (ia == ea || ib->first < ia->first) {
                out.push_back({rank(ib->first), -static_cast<int>(ib->second)});
                ++ib;
            } else {
                if (ia->second != ib->second)
                    out.push_back({rank(ia->first),
                                   static_cast<int>(ia->second) - static_cast<int>(ib->second)});
                ++ia; ++ib;
            }
        }
    }

    Kind kind_;
    std::vector<Symbol> vars_;
    std::unordered_map<Symbol, size_t> rank_;
};

inline MonomialOrder lex_order(const std::vector<Symbol>& high_to_low) {
    return {MonomialOrder::Kind::Lex, high_to_low};
}
inline MonomialOrder grevlex_order(const std::vector<Symbol>& high_to_low) {
    return {MonomialOrder::Kind::GrevLex, high_to_low};
}

} // namespace symcirc

#endif
