#pragma once

// Exhaustive enumeration oracle. Every statistic is measured directly on the
// permutation, with no reference to the recurrences in tables.hpp.

#include "runbound/count.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace runbound::brute {

inline constexpr unsigned default_enumeration_cap = 10;

/// A sequence holding each of 1..n exactly once.
class Permutation {
public:
    explicit Permutation(std::vector<unsigned> elems) : elems_(std::move(elems)) {
        std::vector<unsigned> sorted = elems_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i + 1) throw usage_error("not a permutation of 1..n");
        if (elems_.empty()) throw usage_error("permutation must be non-empty");
    }

    static Permutation identity(unsigned n) {
        std::vector<unsigned> e(n);
        std::iota(e.begin(), e.end(), 1u);
        return Permutation(std::move(e));
    }

    std::size_t size() const noexcept { return elems_.size(); }
    std::span<const unsigned> elems() const noexcept { return elems_; }

    Permutation reversed() const {
        return Permutation(std::vector<unsigned>(elems_.rbegin(), elems_.rend()));
    }

    /// Lexicographic successor; false after the last permutation.
    bool next() { return std::next_permutation(elems_.begin(), elems_.end()); }

private:
    std::vector<unsigned> elems_;
};

inline unsigned longest_increasing_run(std::span<const unsigned> p) {
    unsigned best = 1, cur = 1;
    for (std::size_t t = 1; t < p.size(); ++t) {
        cur = p[t] > p[t - 1] ? cur + 1 : 1;
        best = std::max(best, cur);
    }
    return best;
}

/// Measured as the longest increasing run of the reversal.
inline unsigned longest_decreasing_run(std::span<const unsigned> p) {
    const std::vector<unsigned> r(p.rbegin(), p.rend());
    return longest_increasing_run(r);
}

inline unsigned longest_monotonic_run(std::span<const unsigned> p) {
    unsigned best = 1, up = 1, down = 1;
    for (std::size_t t = 1; t < p.size(); ++t) {
        if (p[t] > p[t - 1]) {
            up += 1;
            down = 1;
        } else {
            down += 1;
            up = 1;
        }
        best = std::max({best, up, down});
    }
    return best;
}

/// Length of the maximal increasing suffix; 1 when the permutation ends in a
/// descent.
inline unsigned final_increasing_run(std::span<const unsigned> p) {
    unsigned len = 1;
    for (std::size_t t = p.size() - 1; t > 0 && p[t - 1] < p[t]; --t) ++len;
    return len;
}

/// Length of the maximal decreasing prefix; 1 when the permutation starts
/// with an ascent.
inline unsigned initial_decreasing_run(std::span<const unsigned> p) {
    unsigned len = 1;
    for (std::size_t t = 1; t < p.size() && p[t - 1] > p[t]; ++t) ++len;
    return len;
}

inline unsigned longest_increasing_run(const Permutation& p) { return longest_increasing_run(p.elems()); }
inline unsigned longest_monotonic_run(const Permutation& p) { return longest_monotonic_run(p.elems()); }

/// Distribution of a run statistic over all n! permutations; counts[k] for
/// k = 1..n (counts[0] unused).
struct RunDistribution {
    unsigned n = 0;
    std::vector<Count> counts;

    Count at(unsigned k) const { return k < counts.size() ? counts[k] : Count(0); }

    Count total() const { return std::accumulate(counts.begin(), counts.end(), Count(0)); }

    /// Sum over m <= k.
    Count cumulative(unsigned k) const {
        Count s = 0;
        for (unsigned m = 1; m <= k && m < counts.size(); ++m) s += counts[m];
        return s;
    }

    std::map<unsigned, Count> nonzero() const {
        std::map<unsigned, Count> m;
        for (unsigned k = 1; k < counts.size(); ++k)
            if (counts[k] != 0) m.emplace(k, counts[k]);
        return m;
    }
};

/// Everything measured in one enumeration pass over order-n permutations.
struct Census {
    unsigned n = 0;
    RunDistribution increasing;  // longest increasing run
    RunDistribution monotonic;   // longest monotonic run
    // u_cond[k][j]: longest increasing run <= k, final increasing run <= j.
    // b_cond[k][i][j]: longest monotonic run <= k, initial decreasing <= i,
    // final increasing <= j. Indices run 1..n; index 0 unused.
    std::vector<std::vector<Count>> u_cond;
    std::vector<std::vector<std::vector<Count>>> b_cond;

    /// Conditioned U^k_j(n); k, j beyond n behave as n.
    Count u_conditioned(unsigned k, unsigned j) const {
        if (k < 1 || j < 1) return 0;
        return u_cond[std::min(k, n)][std::min(j, n)];
    }
    Count b_conditioned(unsigned k, unsigned i, unsigned j) const {
        if (k < 1 || i < 1 || j < 1) return 0;
        return b_cond[std::min(k, n)][std::min(i, n)][std::min(j, n)];
    }
};

inline void check_cap(unsigned n, unsigned cap) {
    if (n < 1) throw usage_error("n must be >= 1");
    if (n > cap)
        throw resource_error("enumeration of order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
}

inline Census enumerate_census(unsigned n, unsigned cap = default_enumeration_cap) {
    check_cap(n, cap);
    Census c;
    c.n = n;
    c.increasing = {n, std::vector<Count>(n + 1)};
    c.monotonic = {n, std::vector<Count>(n + 1)};

    // Raw tallies by exact statistic, folded into cumulative form afterwards.
    // inc[L][F]: longest increasing L, final increasing F.
    // mono[L][D][F]: longest monotonic L, initial decreasing D, final increasing F.
    std::vector<std::vector<unsigned long long>> inc(n + 1, std::vector<unsigned long long>(n + 1));
    std::vector<std::vector<std::vector<unsigned long long>>> mono(
        n + 1, std::vector<std::vector<unsigned long long>>(n + 1, std::vector<unsigned long long>(n + 1)));

    Permutation p = Permutation::identity(n);
    do {
        const auto e = p.elems();
        const unsigned li = longest_increasing_run(e);
        const unsigned lm = longest_monotonic_run(e);
        const unsigned fi = final_increasing_run(e);
        const unsigned id = initial_decreasing_run(e);
        ++inc[li][fi];
        ++mono[lm][id][fi];
    } while (p.next());

    c.u_cond.assign(n + 1, std::vector<Count>(n + 1));
    c.b_cond.assign(n + 1, std::vector<std::vector<Count>>(n + 1, std::vector<Count>(n + 1)));
    for (unsigned L = 1; L <= n; ++L)
        for (unsigned F = 1; F <= n; ++F) {
            c.increasing.counts[L] += inc[L][F];
            for (unsigned D = 1; D <= n; ++D) c.monotonic.counts[L] += mono[L][D][F];
        }
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned L = 1; L <= k; ++L)
                for (unsigned F = 1; F <= j; ++F) c.u_cond[k][j] += inc[L][F];
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                for (unsigned L = 1; L <= k; ++L)
                    for (unsigned D = 1; D <= i; ++D)
                        for (unsigned F = 1; F <= j; ++F) c.b_cond[k][i][j] += mono[L][D][F];
    return c;
}

struct Distributions {
    RunDistribution increasing;
    RunDistribution monotonic;
};

inline Distributions enumerate_distributions(unsigned n, unsigned cap = default_enumeration_cap) {
    Census c = enumerate_census(n, cap);
    return {std::move(c.increasing), std::move(c.monotonic)};
}

inline Count oracle_u(unsigned k, unsigned n, unsigned cap = default_enumeration_cap) {
    return enumerate_distributions(n, cap).increasing.cumulative(k);
}

inline Count oracle_b(unsigned k, unsigned n, unsigned cap = default_enumeration_cap) {
    return enumerate_distributions(n, cap).monotonic.cumulative(k);
}

}  // namespace runbound::brute
