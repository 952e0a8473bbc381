#pragma once

// Verification suites tying the DP tables, the enumeration oracle, the EGF
// identities and the reference fixtures together. Failures are report
// entries; nothing here throws on a mismatch.

#include "runbound/brute.hpp"
#include "runbound/egf.hpp"
#include "runbound/fixtures.hpp"
#include "runbound/report.hpp"
#include "runbound/tables.hpp"

#include <functional>
#include <string>
#include <vector>

namespace runbound {

namespace detail {

inline std::string join(std::span<const Count> cs) {
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ',';
        s += cs[i].str();
    }
    return s;
}

inline std::string k_id(const char* what, unsigned k) { return std::string(what) + "/k=" + std::to_string(k); }

inline void expect_series(VerificationReport& r, std::string id, const egf::Series& expected,
                          const egf::Series& actual) {
    r.add(std::move(id), join(expected.coeffs()), join(actual.coeffs()));
}

inline void expect_zero(VerificationReport& r, std::string id, const egf::Series& s) {
    r.add(std::move(id), join(egf::Series(s.order()).coeffs()), join(s.coeffs()));
}

}  // namespace detail

/// Recompute all four 18x18 tables and compare with the fixture cell by cell.
inline VerificationReport verify_fixtures(const TableFixture& fx, Execution exec = Execution::serial) {
    VerificationReport r("fixtures");
    r.add("complete", "true", fx.complete() ? "true" : "false");

    const std::set<CellKey> highlighted{
        {Family::I, 3, 16}, {Family::I, 3, 17}, {Family::I, 3, 18}, {Family::I, 4, 16}, {Family::I, 4, 17},
        {Family::I, 4, 18}, {Family::A, 3, 13}, {Family::A, 3, 14}, {Family::A, 4, 13}, {Family::A, 4, 14},
        {Family::A, 5, 13}, {Family::A, 5, 14}, {Family::A, 6, 14}};
    std::string marked;
    for (const auto& c : fx.corrected_cells) marked += (marked.empty() ? "" : " ") + to_string(c);
    std::string want;
    for (const auto& c : highlighted) want += (want.empty() ? "" : " ") + to_string(c);
    r.add("corrected_cells", want, marked);

    const RunCounts counts(fixture_size, fixture_size, exec);
    for (Family f : {Family::U, Family::I, Family::B, Family::A})
        for (unsigned k = 1; k <= fixture_size; ++k)
            for (unsigned n = 1; n <= fixture_size; ++n) {
                const CellKey key{f, k, n};
                auto it = fx.entries.find(key);
                r.add(to_string(key), it == fx.entries.end() ? "<missing>" : it->second,
                      counts.get(f, k, n).str());
            }
    return r;
}

using UBuilder = std::function<UTable(unsigned, unsigned)>;
using BBuilder = std::function<BTable(unsigned, unsigned)>;

/// DP against exhaustive enumeration for 1 <= k <= n <= nmax, corner cells
/// and every conditioned inner cell. The builders are injectable so that a
/// deliberately broken recurrence can be shown to fail.
inline VerificationReport verify_bruteforce(unsigned nmax, unsigned cap = brute::default_enumeration_cap,
                                            const UBuilder& build_u = compute_u_table,
                                            const BBuilder& build_b = compute_b_table) {
    brute::check_cap(nmax, cap);
    VerificationReport r("bruteforce");

    std::vector<UTable> ut;
    std::vector<BTable> bt;
    for (unsigned k = 1; k <= nmax; ++k) {
        ut.push_back(build_u(k, nmax));
        bt.push_back(build_b(k, nmax));
    }
    auto U = [&](unsigned k, unsigned n) { return k == 0 ? Count(0) : ut[k - 1].at(k, n); };
    auto B = [&](unsigned k, unsigned n) { return k == 0 ? Count(0) : bt[k - 1].at(k, k, n); };

    for (unsigned n = 1; n <= nmax; ++n) {
        const brute::Census c = brute::enumerate_census(n, cap);
        const std::string sn = "n=" + std::to_string(n);
        for (unsigned k = 1; k <= n; ++k) {
            const std::string sk = "/k=" + std::to_string(k) + "/" + sn;
            r.add("U" + sk, c.increasing.cumulative(k).str(), U(k, n).str());
            r.add("B" + sk, c.monotonic.cumulative(k).str(), B(k, n).str());
            r.add("I" + sk, c.increasing.at(k).str(), Count(U(k, n) - U(k - 1, n)).str());
            r.add("A" + sk, c.monotonic.at(k).str(), Count(B(k, n) - B(k - 1, n)).str());
            for (unsigned j = 1; j <= k; ++j) {
                r.add("U" + sk + "/j=" + std::to_string(j), c.u_conditioned(k, j).str(),
                      ut[k - 1].at(j, n).str());
                for (unsigned i = 1; i <= k; ++i)
                    r.add("B" + sk + "/i=" + std::to_string(i) + "/j=" + std::to_string(j),
                          c.b_conditioned(k, i, j).str(), bt[k - 1].at(i, j, n).str());
            }
        }
    }
    return r;
}

/// Generating-function identities against the DP tables.
inline VerificationReport verify_egf(unsigned kmax, unsigned order) {
    using namespace egf;
    ::runbound::detail::require_positive(kmax, "kmax");
    ::runbound::detail::require_positive(order, "order");
    VerificationReport r("egf");

    for (unsigned k = 1; k <= kmax; ++k) {
        const UTable u = compute_u_table(k, order);
        const auto us = u_series(u);
        ::runbound::detail::expect_series(r, ::runbound::detail::k_id("closed_form", k), us[k], u_closed_form(k, order));

        for (unsigned j = 1; j < k; ++j)
            ::runbound::detail::expect_series(r, ::runbound::detail::k_id("u_j_from_y", k) + "/j=" + std::to_string(j), us[j],
                                  u_j_from_y(k, j, order));

        const auto res = ode_residual_u(k, us);
        for (unsigned j = 1; j <= k; ++j)
            ::runbound::detail::expect_zero(r, ::runbound::detail::k_id("ode_u", k) + "/j=" + std::to_string(j), res[j]);

        const auto bres = ode_residual_b(k, b_series(compute_b_table(k, order)));
        for (unsigned i = 1; i <= k; ++i)
            for (unsigned j = 1; j <= k; ++j)
                ::runbound::detail::expect_zero(r, ::runbound::detail::k_id("ode_b", k) + "/i=" + std::to_string(i) + "/j=" + std::to_string(j),
                                    bres[i][j]);

        if (order >= k)
            ::runbound::detail::expect_zero(r, ::runbound::detail::k_id("linear_ode_q", k), linear_ode_residual(k, q_series(k, order)));
    }

    // k = 2: tan and sec solve the monotonic system.
    const auto b2 = b_series(compute_b_table(2, order));
    const auto [tan, sec] = tan_sec_series(order);
    const Series tsm1 = tan + sec - one(order);
    ::runbound::detail::expect_series(r, "tan_sec/B11", tan, b2[1][1]);
    ::runbound::detail::expect_series(r, "tan_sec/B12", tsm1, b2[1][2]);
    ::runbound::detail::expect_series(r, "tan_sec/B22", Count(2) * tsm1 - identity(order), b2[2][2]);

    if (order >= 3) {
        const auto b3 = b_series(compute_b_table(3, order));
        ::runbound::detail::expect_zero(r, "k3_autonomous/B3_22", k3_autonomous_residual(b3[2][2]));
        const Series control = k3_autonomous_residual(b2[2][2]);
        r.add("k3_autonomous/negative_control_B2_22", "nonzero", control.is_zero() ? "zero" : "nonzero");
    }
    return r;
}

/// Partition of n! by longest run, symmetry and monotonicity of the tables.
inline VerificationReport verify_sums(unsigned nmax, Execution exec = Execution::serial) {
    ::runbound::detail::require_positive(nmax, "nmax");
    VerificationReport r("sums");
    const RunCounts counts(nmax, nmax, exec);
    for (unsigned n = 1; n <= nmax; ++n) {
        Count si = 0, sa = 0;
        bool b_le_u = true;
        for (unsigned k = 1; k <= n; ++k) {
            si += counts.i(k, n);
            sa += counts.a(k, n);
            b_le_u = b_le_u && counts.b(k, n) <= counts.u(k, n);
        }
        const std::string f = factorial(n).str();
        const std::string sn = "/n=" + std::to_string(n);
        r.add("sum_I" + sn, f, si.str());
        r.add("sum_A" + sn, f, sa.str());
        r.add("B_le_U" + sn, "true", b_le_u ? "true" : "false");
    }

    for (unsigned k = 1; k <= nmax; ++k) {
        const UTable u = compute_u_table(k, nmax);
        const BTable b = compute_b_table(k, nmax);
        bool mono_u = true, mono_b = true, sym = true, base = true;
        for (unsigned n = 1; n <= nmax; ++n) {
            for (unsigned j = 1; j < k; ++j) mono_u = mono_u && u.at(j, n) <= u.at(j + 1, n);
            for (unsigned i = 1; i <= k; ++i)
                for (unsigned j = 1; j <= k; ++j) {
                    sym = sym && b.at(i, j, n) == b.at(j, i, n);
                    if (i < k) mono_b = mono_b && b.at(i, j, n) <= b.at(i + 1, j, n);
                    if (j < k) mono_b = mono_b && b.at(i, j, n) <= b.at(i, j + 1, n);
                    if (n == 1) base = base && b.at(i, j, 1) == 1;
                }
            if (n == 1)
                for (unsigned j = 1; j <= k; ++j) base = base && u.at(j, 1) == 1;
        }
        r.add(::runbound::detail::k_id("U_monotone_in_j", k), "true", mono_u ? "true" : "false");
        r.add(::runbound::detail::k_id("B_monotone_in_ij", k), "true", mono_b ? "true" : "false");
        r.add(::runbound::detail::k_id("B_symmetric", k), "true", sym ? "true" : "false");
        r.add(::runbound::detail::k_id("base_row", k), "true", base ? "true" : "false");
    }
    return r;
}

struct VerifyOptions {
    std::string fixture_path;
    unsigned brute_nmax = 8;
    unsigned enumeration_cap = brute::default_enumeration_cap;
    unsigned egf_kmax = 6;
    unsigned egf_order = 18;
    unsigned sums_nmax = 18;
    Execution exec = Execution::serial;
};

/// Every suite, in a fixed order.
inline std::vector<VerificationReport> verify_all(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    out.push_back(verify_fixtures(load_fixture(opt.fixture_path), opt.exec));
    out.push_back(verify_bruteforce(opt.brute_nmax, opt.enumeration_cap));
    out.push_back(verify_egf(opt.egf_kmax, opt.egf_order));
    out.push_back(verify_sums(opt.sums_nmax, opt.exec));
    return out;
}

}  // namespace runbound
