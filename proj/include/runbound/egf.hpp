#pragma once

// Truncated exponential generating functions with exact integer
// coefficients: a series of order N stands for
//     sum_{n=0}^{N} c_n x^n / n!  +  O(x^{N+1}).
//
// Products are binomial convolutions, derivatives are left shifts, and the
// reciprocal of a series with c_0 = 1 stays integral. Operations that consume
// m derivatives lose m orders; nothing pads or truncates silently.

#include "runbound/count.hpp"
#include "runbound/tables.hpp"

#include <span>
#include <string>
#include <vector>

namespace runbound::egf {

class Series {
public:
    /// Zero series of the given order.
    explicit Series(unsigned order = 0) : coeffs_(std::size_t(order) + 1) {}

    explicit Series(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw usage_error("series needs at least one coefficient");
    }

    Series(std::initializer_list<long long> cs) {
        if (cs.size() == 0) throw usage_error("series needs at least one coefficient");
        for (long long c : cs) coeffs_.emplace_back(c);
    }

    unsigned order() const noexcept { return unsigned(coeffs_.size() - 1); }
    std::span<const Count> coeffs() const noexcept { return coeffs_; }

    const Count& operator[](unsigned n) const {
        if (n > order()) throw usage_error("coefficient " + std::to_string(n) + " beyond order " + std::to_string(order()));
        return coeffs_[n];
    }
    Count& operator[](unsigned n) {
        if (n > order()) throw usage_error("coefficient " + std::to_string(n) + " beyond order " + std::to_string(order()));
        return coeffs_[n];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// Drop coefficients above `order`.
    Series truncated(unsigned order) const {
        if (order > this->order())
            throw usage_error("cannot extend series of order " + std::to_string(this->order()) + " to " +
                              std::to_string(order));
        return Series(std::vector<Count>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    bool operator==(const Series&) const = default;

private:
    std::vector<Count> coeffs_;
};

inline Series constant(const Count& c, unsigned order) {
    Series s(order);
    s[0] = c;
    return s;
}

inline Series one(unsigned order) { return constant(1, order); }

/// The identity function x.
inline Series identity(unsigned order) {
    Series s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

/// e^x: all coefficients 1.
inline Series exp_series(unsigned order) { return Series(std::vector<Count>(std::size_t(order) + 1, Count(1))); }

/// Count sequence for n = 1..N as a series with c_0 = 0.
inline Series from_counts(std::span<const Count> values) {
    std::vector<Count> c;
    c.reserve(values.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), values.begin(), values.end());
    return Series(std::move(c));
}

namespace detail {

inline void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order())
        throw usage_error(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()) + ")");
}

}  // namespace detail

inline Series add(const Series& a, const Series& b) {
    detail::require_same_order(a, b, "add");
    Series r(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

inline Series sub(const Series& a, const Series& b) {
    detail::require_same_order(a, b, "sub");
    Series r(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

inline Series scale(const Series& a, const Count& s) {
    Series r(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) r[n] = a[n] * s;
    return r;
}

/// c_n = sum_t C(n, t) a_t b_{n-t}.
inline Series mul(const Series& a, const Series& b) {
    detail::require_same_order(a, b, "mul");
    const unsigned N = a.order();
    const BinomialCache binom(N);
    Series r(N);
    for (unsigned n = 0; n <= N; ++n) {
        Count s = 0;
        for (unsigned t = 0; t <= n; ++t)
            if (a[t] != 0 && b[n - t] != 0) s += binom(n, t) * a[t] * b[n - t];
        r[n] = std::move(s);
    }
    return r;
}

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Count& s, const Series& a) { return scale(a, s); }
inline Series operator-(const Series& a) { return scale(a, -1); }

/// Multiplicative inverse; requires c_0 = 1.
inline Series recip(const Series& a) {
    if (a[0] != 1) throw usage_error("recip: constant coefficient must be 1");
    const unsigned N = a.order();
    const BinomialCache binom(N);
    Series r(N);
    r[0] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        Count s = 0;
        for (unsigned t = 1; t <= n; ++t)
            if (a[t] != 0) s += binom(n, t) * a[t] * r[n - t];
        r[n] = -s;
    }
    return r;
}

/// d/dx; the result has order N - 1.
inline Series derivative(const Series& a) {
    if (a.order() < 1) throw usage_error("derivative needs order >= 1");
    return Series(std::vector<Count>(a.coeffs().begin() + 1, a.coeffs().end()));
}

/// m-th derivative; order N - m.
inline Series derivative(const Series& a, unsigned m) {
    if (m > a.order())
        throw usage_error("cannot take " + std::to_string(m) + " derivatives of order " + std::to_string(a.order()));
    return Series(std::vector<Count>(a.coeffs().begin() + m, a.coeffs().end()));
}

/// q_n = 1 for n = 0 mod (k+1), -1 for n = 1 mod (k+1), 0 otherwise.
/// Its reciprocal is 1 + EGF of U^k(n).
inline Series q_series(unsigned k, unsigned order) {
    ::runbound::detail::require_positive(k, "k");
    Series s(order);
    for (unsigned n = 0; n <= order; ++n) {
        const unsigned r = n % (k + 1);
        if (r == 0) s[n] = 1;
        else if (r == 1) s[n] = -1;
    }
    return s;
}

/// EGF of U^k(n): 1/q - 1.
inline Series u_closed_form(unsigned k, unsigned order) {
    Series r = recip(q_series(k, order));
    r[0] -= 1;
    return r;
}

/// EGF of U^k_j(n) for 1 <= j <= k-1, as -(1/y) * sum_{m=0}^{k-j} y^(m),
/// where y = q_series(k, .). y must carry k - j orders of guard beyond
/// `order`.
inline Series u_j_from_y(unsigned k, unsigned j, const Series& y, unsigned order) {
    if (k < 2) throw usage_error("u_j_from_y needs k >= 2");
    if (j < 1 || j >= k) throw usage_error("u_j_from_y needs 1 <= j <= k-1");
    const unsigned guard = k - j;
    if (y.order() < order + guard)
        throw usage_error("u_j_from_y: y has order " + std::to_string(y.order()) + ", needs " +
                          std::to_string(order + guard));
    Series sum(order);
    for (unsigned m = 0; m <= guard; ++m) sum = sum + derivative(y, m).truncated(order);
    return -(recip(y.truncated(order)) * sum);
}

inline Series u_j_from_y(unsigned k, unsigned j, unsigned order) {
    if (k < 2 || j < 1 || j >= k) throw usage_error("u_j_from_y needs k >= 2 and 1 <= j <= k-1");
    return u_j_from_y(k, j, q_series(k, order + (k - j)), order);
}

inline Series sin_series(unsigned order) {
    Series s(order);
    for (unsigned n = 1; n <= order; n += 2) s[n] = (n / 2) % 2 == 0 ? 1 : -1;
    return s;
}

inline Series cos_series(unsigned order) {
    Series s(order);
    for (unsigned n = 0; n <= order; n += 2) s[n] = (n / 2) % 2 == 0 ? 1 : -1;
    return s;
}

struct TanSec {
    Series tan;
    Series sec;
};

/// tan = sin * sec, sec = 1/cos; sin and cos are written down directly.
inline TanSec tan_sec_series(unsigned order) {
    Series sec = recip(cos_series(order));
    Series tan = sin_series(order) * sec;
    return {std::move(tan), std::move(sec)};
}

/// Residuals of U_j' = 1 + U_j + U_{j-1} + U_{k-1} U_j for j = 1..k.
/// `series[0]` must be the zero series. Result index j holds residual j
/// (order N - 1); index 0 is an empty zero series of order N - 1.
inline std::vector<Series> ode_residual_u(unsigned k, std::span<const Series> series) {
    ::runbound::detail::require_positive(k, "k");
    if (series.size() != k + 1) throw usage_error("ode_residual_u expects k+1 series (j = 0..k)");
    const unsigned N = series[0].order();
    for (const auto& s : series)
        if (s.order() != N) throw usage_error("ode_residual_u: order mismatch");
    if (!series[0].is_zero()) throw usage_error("ode_residual_u: series[0] must be zero");
    if (N < 1) throw usage_error("ode_residual_u needs order >= 1");

    const unsigned M = N - 1;
    std::vector<Series> res(k + 1, Series(M));
    for (unsigned j = 1; j <= k; ++j) {
        const Series rhs = one(N) + series[j] + series[j - 1] + series[k - 1] * series[j];
        res[j] = derivative(series[j]) - rhs.truncated(M);
    }
    return res;
}

/// Grid of series indexed [i][j], 0 <= i, j <= k.
using SeriesGrid = std::vector<std::vector<Series>>;

/// Residuals of B_{ij}' = 1 + B_{i-1,j} + B_{i,j-1} + B_{i,k-1} B_{k-1,j}
/// for 1 <= i, j <= k. Row and column 0 must be zero series.
inline SeriesGrid ode_residual_b(unsigned k, const SeriesGrid& grid) {
    ::runbound::detail::require_positive(k, "k");
    if (grid.size() != k + 1) throw usage_error("ode_residual_b expects a (k+1)x(k+1) grid");
    for (const auto& row : grid)
        if (row.size() != k + 1) throw usage_error("ode_residual_b expects a (k+1)x(k+1) grid");
    const unsigned N = grid[0][0].order();
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned j = 0; j <= k; ++j) {
            if (grid[i][j].order() != N) throw usage_error("ode_residual_b: order mismatch");
            if ((i == 0 || j == 0) && !grid[i][j].is_zero())
                throw usage_error("ode_residual_b: row/column 0 must be zero");
        }
    if (N < 1) throw usage_error("ode_residual_b needs order >= 1");

    const unsigned M = N - 1;
    SeriesGrid res(k + 1, std::vector<Series>(k + 1, Series(M)));
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j) {
            const Series rhs = one(N) + grid[i - 1][j] + grid[i][j - 1] + grid[i][k - 1] * grid[k - 1][j];
            res[i][j] = derivative(grid[i][j]) - rhs.truncated(M);
        }
    return res;
}

/// 2y''' - 6yy'' - 7y'^2 + 8y^2y' + 4y' - y^4 - 2y^2 - 5, order N - 3.
/// Vanishes for y = EGF of B^3_{2,2}.
inline Series k3_autonomous_residual(const Series& y) {
    if (y.order() < 3) throw usage_error("k3_autonomous_residual needs order >= 3");
    const unsigned M = y.order() - 3;
    const Series y0 = y.truncated(M);
    const Series y1 = derivative(y, 1).truncated(M);
    const Series y2 = derivative(y, 2).truncated(M);
    const Series y3 = derivative(y, 3);
    const Series ysq = y0 * y0;
    return Count(2) * y3 - Count(6) * (y0 * y2) - Count(7) * (y1 * y1) + Count(8) * (ysq * y1) +
           Count(4) * y1 - ysq * ysq - Count(2) * ysq - constant(5, M);
}

/// sum_{m=0}^{k} y^(m) at order N - k; zero for y = q_series(k, .).
inline Series linear_ode_residual(unsigned k, const Series& y) {
    if (y.order() < k) throw usage_error("linear_ode_residual needs order >= k");
    const unsigned M = y.order() - k;
    Series s(M);
    for (unsigned m = 0; m <= k; ++m) s = s + derivative(y, m).truncated(M);
    return s;
}

/// EGFs of U^k_j for j = 0..k from a DP table (index 0 is zero).
inline std::vector<Series> u_series(const UTable& t) {
    std::vector<Series> s;
    s.reserve(t.k() + 1);
    s.emplace_back(t.nmax());
    for (unsigned j = 1; j <= t.k(); ++j) {
        const auto row = t.row(j);
        s.push_back(from_counts(row));
    }
    return s;
}

/// EGFs of B^k_{i,j} on the (k+1)x(k+1) grid (row/column 0 zero).
inline SeriesGrid b_series(const BTable& t) {
    SeriesGrid g(t.k() + 1, std::vector<Series>(t.k() + 1, Series(t.nmax())));
    for (unsigned i = 1; i <= t.k(); ++i)
        for (unsigned j = 1; j <= t.k(); ++j) {
            const auto row = t.row(i, j);
            g[i][j] = from_counts(row);
        }
    return g;
}

}  // namespace runbound::egf
