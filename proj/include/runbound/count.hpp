#pragma once

// Exact integer types and the Pascal-triangle cache used by the run-length
// recurrences.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace runbound {

/// Arbitrary-precision integer. Permutation counts are always nonnegative;
/// series coefficients (q-series, residuals) may be negative.
using Count = boost::multiprecision::cpp_int;

/// Thrown when a caller violates a documented precondition (bad index,
/// mismatched series orders, out-of-range table query).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a request would exceed a configured resource guard.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed input text. `line()` is 1-based, 0 when unknown.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline Count factorial(unsigned n) {
    Count f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::string to_decimal(const Count& c) { return c.str(); }

/// Strict decimal parse: optional leading '-', then digits only.
inline Count parse_decimal(std::string_view s) {
    std::size_t pos = (!s.empty() && s.front() == '-') ? 1 : 0;
    if (pos == s.size()) throw parse_error("empty integer");
    for (std::size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw parse_error("not a decimal integer: '" + std::string(s) + "'");
    Count v = 0;
    for (std::size_t i = pos; i < s.size(); ++i) v = v * 10 + (s[i] - '0');
    return pos ? Count(-v) : v;
}

/// Rows 0..nmax of Pascal's triangle in exact integers.
class BinomialCache {
public:
    explicit BinomialCache(unsigned nmax) : nmax_(nmax) {
        rows_.reserve(nmax + 1);
        for (unsigned n = 0; n <= nmax; ++n) {
            std::vector<Count> row(n + 1, Count(1));
            for (unsigned t = 1; t < n; ++t) row[t] = rows_[n - 1][t - 1] + rows_[n - 1][t];
            rows_.push_back(std::move(row));
        }
    }

    unsigned nmax() const noexcept { return nmax_; }

    const Count& operator()(unsigned n, unsigned t) const {
        if (n > nmax_ || t > n)
            throw usage_error("binomial(" + std::to_string(n) + ", " + std::to_string(t) +
                              ") outside cache of order " + std::to_string(nmax_));
        return rows_[n][t];
    }

    const std::vector<Count>& row(unsigned n) const {
        if (n > nmax_) throw usage_error("binomial row " + std::to_string(n) + " not cached");
        return rows_[n];
    }

private:
    unsigned nmax_;
    std::vector<std::vector<Count>> rows_;
};

/// C(n, t) via a fresh cache; use BinomialCache directly in loops.
inline Count binomial(unsigned n, unsigned t) {
    if (t > n) throw usage_error("binomial: t > n");
    return BinomialCache(n)(n, t);
}

}  // namespace runbound
