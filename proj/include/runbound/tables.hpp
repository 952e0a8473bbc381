#pragma once

// Dynamic-programming tables for permutations with bounded run lengths.
//
//   U^k_j(n)    order-n permutations whose increasing runs have length <= k
//               and whose final increasing run has length <= j.
//   B^k_{i,j}(n) order-n permutations whose monotonic runs have length <= k,
//               initial decreasing run <= i, final increasing run <= j.
//
// Both follow from removing the maximum element n: it sits at the front of
// a descent, at the end of an ascent, or at an interior peak that splits the
// permutation into two independently relabelled halves.

#include "runbound/count.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <vector>

namespace runbound {

namespace detail {

inline void require_positive(unsigned v, const char* name) {
    if (v < 1) throw usage_error(std::string(name) + " must be >= 1");
}

}  // namespace detail

/// U^k_j(n) for 1 <= j <= k, 1 <= n <= nmax.
class UTable {
public:
    UTable(unsigned k, unsigned nmax) : k_(k), nmax_(nmax), cells_(std::size_t(k) * nmax) {
        detail::require_positive(k, "k");
        detail::require_positive(nmax, "nmax");
    }

    unsigned k() const noexcept { return k_; }
    unsigned nmax() const noexcept { return nmax_; }

    const Count& at(unsigned j, unsigned n) const {
        check(j, n);
        return cells_[index(j, n)];
    }
    Count& at(unsigned j, unsigned n) {
        check(j, n);
        return cells_[index(j, n)];
    }

    /// Zero for j < 1, matching the recurrence's boundary convention.
    Count get(unsigned j, unsigned n) const { return j < 1 ? Count(0) : at(j, n); }

    /// Row j as counts for n = 1..nmax.
    std::vector<Count> row(unsigned j) const {
        check(j, 1);
        auto first = cells_.begin() + std::ptrdiff_t(index(j, 1));
        return {first, first + nmax_};
    }

    bool operator==(const UTable&) const = default;

private:
    std::size_t index(unsigned j, unsigned n) const { return std::size_t(j - 1) * nmax_ + (n - 1); }

    void check(unsigned j, unsigned n) const {
        if (j < 1 || j > k_ || n < 1 || n > nmax_)
            throw usage_error("UTable(k=" + std::to_string(k_) + ", nmax=" + std::to_string(nmax_) +
                              ") has no cell (j=" + std::to_string(j) + ", n=" + std::to_string(n) + ")");
    }

    unsigned k_;
    unsigned nmax_;
    std::vector<Count> cells_;
};

/// B^k_{i,j}(n) for 1 <= i, j <= k, 1 <= n <= nmax. The full (i, j) grid is
/// stored; reversal symmetry is checked, not exploited.
class BTable {
public:
    BTable(unsigned k, unsigned nmax) : k_(k), nmax_(nmax), cells_(std::size_t(k) * k * nmax) {
        detail::require_positive(k, "k");
        detail::require_positive(nmax, "nmax");
    }

    unsigned k() const noexcept { return k_; }
    unsigned nmax() const noexcept { return nmax_; }

    const Count& at(unsigned i, unsigned j, unsigned n) const {
        check(i, j, n);
        return cells_[index(i, j, n)];
    }
    Count& at(unsigned i, unsigned j, unsigned n) {
        check(i, j, n);
        return cells_[index(i, j, n)];
    }

    Count get(unsigned i, unsigned j, unsigned n) const {
        return (i < 1 || j < 1) ? Count(0) : at(i, j, n);
    }

    std::vector<Count> row(unsigned i, unsigned j) const {
        check(i, j, 1);
        auto first = cells_.begin() + std::ptrdiff_t(index(i, j, 1));
        return {first, first + nmax_};
    }

    bool operator==(const BTable&) const = default;

private:
    std::size_t index(unsigned i, unsigned j, unsigned n) const {
        return (std::size_t(i - 1) * k_ + (j - 1)) * nmax_ + (n - 1);
    }

    void check(unsigned i, unsigned j, unsigned n) const {
        if (i < 1 || i > k_ || j < 1 || j > k_ || n < 1 || n > nmax_)
            throw usage_error("BTable(k=" + std::to_string(k_) + ", nmax=" + std::to_string(nmax_) +
                              ") has no cell (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                              ", n=" + std::to_string(n) + ")");
    }

    unsigned k_;
    unsigned nmax_;
    std::vector<Count> cells_;
};

inline UTable compute_u_table(unsigned k, unsigned nmax) {
    UTable u(k, nmax);
    for (unsigned j = 1; j <= k; ++j) u.at(j, 1) = 1;
    if (nmax < 2) return u;

    const BinomialCache binom(nmax - 1);
    for (unsigned n = 2; n <= nmax; ++n) {
        for (unsigned j = 1; j <= k; ++j) {
            Count v = u.at(j, n - 1) + u.get(j - 1, n - 1);
            if (n > 2 && k > 1) {
                // Interior peak at position t: prefix of length t-1 must end
                // in an increasing run of length <= k-1.
                for (unsigned t = 2; t <= n - 1; ++t)
                    v += binom(n - 1, t - 1) * u.at(k - 1, t - 1) * u.at(j, n - t);
            }
            u.at(j, n) = std::move(v);
        }
    }
    return u;
}

inline BTable compute_b_table(unsigned k, unsigned nmax) {
    BTable b(k, nmax);
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j) b.at(i, j, 1) = 1;
    if (nmax < 2) return b;

    const BinomialCache binom(nmax - 1);
    for (unsigned n = 2; n <= nmax; ++n) {
        for (unsigned i = 1; i <= k; ++i) {
            for (unsigned j = 1; j <= k; ++j) {
                Count v = b.get(i - 1, j, n - 1) + b.get(i, j - 1, n - 1);
                if (n > 2 && k > 1) {
                    for (unsigned t = 2; t <= n - 1; ++t)
                        v += binom(n - 1, t - 1) * b.at(i, k - 1, t - 1) * b.at(k - 1, j, n - t);
                }
                b.at(i, j, n) = std::move(v);
            }
        }
    }
    return b;
}

enum class Family { U, I, B, A };

inline char family_letter(Family f) {
    switch (f) {
        case Family::U: return 'U';
        case Family::I: return 'I';
        case Family::B: return 'B';
        case Family::A: return 'A';
    }
    return '?';
}

inline Family parse_family(std::string_view s) {
    if (s.size() == 1) {
        switch (s.front()) {
            case 'U': case 'u': return Family::U;
            case 'I': case 'i': return Family::I;
            case 'B': case 'b': return Family::B;
            case 'A': case 'a': return Family::A;
            default: break;
        }
    }
    throw usage_error("unknown family '" + std::string(s) + "' (expected U, I, B or A)");
}

/// U^k(n); U^0(n) = 0. The constraint is vacuous for k >= n, so the table is
/// built with k clamped to n.
inline Count u_count(unsigned k, unsigned n) {
    detail::require_positive(n, "n");
    if (k == 0) return 0;
    const unsigned kk = std::min(k, n);
    return compute_u_table(kk, n).at(kk, n);
}

inline Count b_count(unsigned k, unsigned n) {
    detail::require_positive(n, "n");
    if (k == 0) return 0;
    const unsigned kk = std::min(k, n);
    return compute_b_table(kk, n).at(kk, kk, n);
}

/// Longest increasing run exactly k.
inline Count i_count(unsigned k, unsigned n) {
    detail::require_positive(k, "k");
    return u_count(k, n) - u_count(k - 1, n);
}

/// Longest monotonic run exactly k.
inline Count a_count(unsigned k, unsigned n) {
    detail::require_positive(k, "k");
    return b_count(k, n) - b_count(k - 1, n);
}

enum class Execution { serial, parallel };

/// All four families for 1 <= k <= kmax, 1 <= n <= nmax, built once.
/// Immutable after construction; lookups beyond the built range throw.
class RunCounts {
public:
    RunCounts(unsigned kmax, unsigned nmax, Execution exec = Execution::serial)
        : kmax_(kmax), nmax_(nmax) {
        detail::require_positive(kmax, "kmax");
        detail::require_positive(nmax, "nmax");
        u_.resize(std::size_t(kmax + 1) * nmax);
        b_.resize(std::size_t(kmax + 1) * nmax);

        auto fill = [&](unsigned k) {
            // Row k only depends on tables for this k; rows are disjoint.
            const UTable ut = compute_u_table(k, nmax);
            const BTable bt = compute_b_table(k, nmax);
            for (unsigned n = 1; n <= nmax; ++n) {
                u_[index(k, n)] = ut.at(k, n);
                b_[index(k, n)] = bt.at(k, k, n);
            }
        };
        if (exec == Execution::parallel) {
            std::vector<std::future<void>> jobs;
            jobs.reserve(kmax);
            for (unsigned k = 1; k <= kmax; ++k) jobs.push_back(std::async(std::launch::async, fill, k));
            for (auto& j : jobs) j.get();
        } else {
            for (unsigned k = 1; k <= kmax; ++k) fill(k);
        }
    }

    unsigned kmax() const noexcept { return kmax_; }
    unsigned nmax() const noexcept { return nmax_; }

    const Count& u(unsigned k, unsigned n) const { return u_[checked(k, n, true)]; }
    const Count& b(unsigned k, unsigned n) const { return b_[checked(k, n, true)]; }
    Count i(unsigned k, unsigned n) const {
        checked(k, n, false);
        return u(k, n) - u(k - 1, n);
    }
    Count a(unsigned k, unsigned n) const {
        checked(k, n, false);
        return b(k, n) - b(k - 1, n);
    }

    Count get(Family f, unsigned k, unsigned n) const {
        switch (f) {
            case Family::U: return u(k, n);
            case Family::I: return i(k, n);
            case Family::B: return b(k, n);
            case Family::A: return a(k, n);
        }
        return 0;
    }

    bool operator==(const RunCounts&) const = default;

private:
    std::size_t index(unsigned k, unsigned n) const { return std::size_t(k) * nmax_ + (n - 1); }

    // k = 0 is the zero row, reachable only from the difference families.
    std::size_t checked(unsigned k, unsigned n, bool allow_zero_k) const {
        if ((k < 1 && !allow_zero_k) || k > kmax_ || n < 1 || n > nmax_)
            throw usage_error("count (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                              ") outside built range kmax=" + std::to_string(kmax_) +
                              ", nmax=" + std::to_string(nmax_));
        return index(k, n);
    }

    unsigned kmax_;
    unsigned nmax_;
    std::vector<Count> u_;  // index k = 0 stays zero
    std::vector<Count> b_;
};

}  // namespace runbound
