#ifndef SYMCIRC_STABILITY_HPP
#define SYMCIRC_STABILITY_HPP

#include "solution.hpp"

namespace symcirc {

enum class Decision { Unstable = -1, Undecided = 0, Stable = 1 };

// Routh-Hurwitz over intervals: Stable iff every first-column entry is
// certified to share the sign of the leading coefficient; Undecided when an
// entry's sign cannot be certified at the current precision.
inline Decision routh_hurwitz(const std::vector<RatIv>& ascending) {
    std::vector<RatIv> c(ascending.rbegin(), ascending.rend()); // descending
    while (!c.empty() && c.front().is_point() && sgn(c.front().lo) == 0) c.erase(c.begin());
    if (c.size() <= 1) return Decision::Stable; // constants have no roots
    auto lead_sign = c.front().sign();
    if (!lead_sign) return Decision::Undecided;
    if (*lead_sign == 0) return Decision::Undecided;

    // rows of the Routh array, seeded with alternating coefficients
    std::vector<RatIv> r0, r1;
    for (size_t i = 0; i < c.size(); i += 2) r0.push_back(c[i]);
    for (size_t i = 1; i < c.size(); i += 2) r1.push_back(c[i]);
    long n = static_cast<long>(c.size()) - 1; // polynomial degree

    for (long row = 1; row <= n; ++row) {
        if (r1.empty()) return Decision::Unstable; // premature zero row
        auto s = r1.front().sign();
        if (!s) return Decision::Undecided;
        if (*s == 0) return Decision::Unstable; // zero pivot: roots on/over the axis
        if (*s != *lead_sign) return Decision::Unstable;
        if (row == n) break;
        std::vector<RatIv> next;
        for (size_t i = 0; i + 1 < r0.size() || i + 1 < r1.size(); ++i) {
            RatIv a = i + 1 < r0.size() ? r0[i + 1] : RatIv(0);
            RatIv b = i + 1 < r1.size() ? r1[i + 1] : RatIv(0);
            next.push_back(a - (r0.front() * b) / r1.front());
        }
        if (next.empty()) next.push_back(RatIv(0));
        r0 = std::move(r1);
        r1 = std::move(next);
    }
    return Decision::Stable;
}

// Exact coefficients: always decidable.
inline bool hurwitz_stable(const std::vector<Rat>& ascending) {
    std::vector<RatIv> iv;
    for (const auto& x : ascending) iv.push_back(RatIv(x));
    Decision d = routh_hurwitz(iv);
    // exact arithmetic cannot be undecided
    return d == Decision::Stable;
}

// Interval coefficients with a refinement callback: `coeffs(k)` must return
// ever-tighter enclosures as k grows. Throws when still undecided after
// max_rounds refinements.
template <class CoeffFn>
bool hurwitz_stable(CoeffFn coeffs, int max_rounds = 64) {
    for (int k = 0; k < max_rounds; ++k) {
        Decision d = routh_hurwitz(coeffs(k));
        if (d == Decision::Stable) return true;
        if (d == Decision::Unstable) return false;
    }
    throw std::runtime_error("hurwitz_stable: undecidable after max refinement");
}

// Strict positivity filter: keep boxes in which every named variable is
// certified > 0, refining on demand. Boxes with a variable exactly zero are
// dropped (boundary case) with a note appended to `boundary` when provided.
inline std::vector<SolutionBox> positivity_filter(std::vector<SolutionBox> boxes,
                                                  const std::vector<Symbol>& vars,
                                                  std::vector<SolutionBox>* rejected = nullptr) {
    std::vector<SolutionBox> kept;
    for (auto& box : boxes) {
        bool ok = true;
        std::string why;
        for (Symbol v : vars) {
            if (box.free_vars.count(v)) continue; // free directions carry no sign
            auto it = box.assignments.find(v);
            if (it == box.assignments.end())
                throw std::invalid_argument("positivity_filter: no assignment for " +
                                            sym_name(v));
            auto s = it->second.sign();
            int rounds = 0;
            while (!s) {
                if (++rounds > 64)
                    throw std::runtime_error("positivity_filter: sign of " + sym_name(v) +
                                             " undecidable after max refinement");
                box.refine(box.max_width() / 16);
                s = box.at(v).sign();
            }
            if (*s <= 0) {
                ok = false;
                why = sym_name(v) + (*s == 0 ? " is exactly zero (boundary)" : " is negative");
                break;
            }
        }
        if (ok) {
            kept.push_back(std::move(box));
        } else if (rejected) {
            box.warnings.push_back("rejected by positivity filter: " + why);
            rejected->push_back(std::move(box));
        }
    }
    return kept;
}

} // namespace symcirc

#endif
