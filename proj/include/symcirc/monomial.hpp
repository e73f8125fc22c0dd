#ifndef SYMCIRC_MONOMIAL_HPP
#define SYMCIRC_MONOMIAL_HPP

#include "symbol.hpp"

#include <algorithm>
#include <vector>

namespace symcirc {

// Power product over interned symbols. Zero exponents are never stored, so
// structural equality is mathematical equality.
class Monomial {
public:
    using Entry = std::pair<Symbol, unsigned>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> e) : e_(std::move(e)) {
        std::sort(e_.begin(), e_.end());
        e_.erase(std::remove_if(e_.begin(), e_.end(),
                                [](const Entry& p) { return p.second == 0; }),
                 e_.end());
    }
    static Monomial var(Symbol v, unsigned exp = 1) {
        Monomial m;
        if (exp) m.e_.push_back({v, exp});
        return m;
    }

    bool is_one() const { return e_.empty(); }
    const std::vector<Entry>& entries() const { return e_; }

    unsigned degree(Symbol v) const {
        for (const auto& [s, e] : e_)
            if (s == v) return e;
        return 0;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [s, e] : e_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.e_.reserve(e_.size() + o.e_.size());
        auto a = e_.begin(), b = o.e_.begin();
        while (a != e_.end() || b != o.e_.end()) {
            if (b == o.e_.end() || (a != e_.end() && a->first < b->first))
                r.e_.push_back(*a++);
            else if (a == e_.end() || b->first < a->first)
                r.e_.push_back(*b++);
            else {
                r.e_.push_back({a->first, a->second + b->second});
                ++a; ++b;
            }
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        auto b = o.e_.begin();
        for (const auto& [s, e] : e_) {
            while (b != o.e_.end() && b->first < s) ++b;
            if (b == o.e_.end() || b->first != s || b->second < e) return false;
        }
        return true;
    }

    // this / o; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        auto b = o.e_.begin();
        for (const auto& [s, e] : e_) {
            unsigned sub = 0;
            while (b != o.e_.end() && b->first < s) ++b;
            if (b != o.e_.end() && b->first == s) sub = b->second;
            if (e > sub) r.e_.push_back({s, e - sub});
        }
        return r;
    }

    static Monomial lcm(const Monomial& x, const Monomial& y) {
        Monomial r;
        auto a = x.e_.begin(), b = y.e_.begin();
        while (a != x.e_.end() || b != y.e_.end()) {
            if (b == y.e_.end() || (a != x.e_.end() && a->first < b->first))
                r.e_.push_back(*a++);
            else if (a == x.e_.end() || b->first < a->first)
                r.e_.push_back(*b++);
            else {
                r.e_.push_back({a->first, std::max(a->second, b->second)});
                ++a; ++b;
            }
        }
        return r;
    }

    static Monomial gcd(const Monomial& x, const Monomial& y) {
        Monomial r;
        auto b = y.e_.begin();
        for (const auto& [s, e] : x.e_) {
            while (b != y.e_.end() && b->first < s) ++b;
            if (b != y.e_.end() && b->first == s)
                r.e_.push_back({s, std::min(e, b->second)});
        }
        return r;
    }

    bool coprime(const Monomial& o) const { return gcd(*this, o).is_one(); }

    // storage-order comparison, independent of any monomial order
    friend bool operator==(const Monomial& x, const Monomial& y) { return x.e_ == y.e_; }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x.e_ == y.e_); }
    friend bool operator<(const Monomial& x, const Monomial& y) { return x.e_ < y.e_; }

private:
    std::vector<Entry> e_; // sorted by symbol id
};

} // namespace symcirc

#endif
