// runbound: exact counts of permutations with bounded run lengths.
//
// Exit codes: 0 success, 1 verification or comparison failure, 2 usage error.

#include "runbound/oeis_fetch.hpp"
#include "runbound/runbound.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#ifndef RUNBOUND_DATA_DIR
#define RUNBOUND_DATA_DIR "data"
#endif

namespace {

using namespace runbound;
namespace fs = std::filesystem;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Common {
    std::string data_dir = RUNBOUND_DATA_DIR;
    unsigned limit = 64;
};

void check_limits(unsigned kmax, unsigned nmax, unsigned limit) {
    if (kmax < 1 || nmax < 1) throw usage_error("kmax and nmax must be >= 1");
    if (kmax > limit || nmax > limit)
        throw usage_error("kmax/nmax above limit " + std::to_string(limit) + " (raise with --limit)");
}

int cmd_value(const std::string& family, unsigned k, unsigned n, const Common& c) {
    const Family f = parse_family(family);
    if (k < 1 || n < 1) throw usage_error("k and n must be >= 1");
    if (n > c.limit) throw usage_error("n above limit " + std::to_string(c.limit) + " (raise with --limit)");
    Count v;
    switch (f) {
        case Family::U: v = u_count(k, n); break;
        case Family::B: v = b_count(k, n); break;
        case Family::I: v = i_count(k, n); break;
        case Family::A: v = a_count(k, n); break;
    }
    std::cout << v << '\n';
    return exit_ok;
}

int cmd_table(const std::string& family, unsigned kmax, unsigned nmax, const std::string& format, bool parallel,
              const Common& c) {
    const Family f = parse_family(family);
    const TableFormat fmt = parse_format(format);
    check_limits(kmax, nmax, c.limit);
    const RunCounts counts(kmax, nmax, parallel ? Execution::parallel : Execution::serial);
    write_table(std::cout, fmt, counts, f, kmax, nmax);
    return exit_ok;
}

struct VerifyArgs {
    std::string suite;
    std::optional<unsigned> nmax;
    unsigned kmax = 6;
    unsigned order = 18;
    unsigned cap = brute::default_enumeration_cap;
    std::string fixtures;
    std::string format = "text";
    std::string output;
    bool parallel = false;
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
    VerifyOptions opt;
    opt.fixture_path = a.fixtures.empty() ? (fs::path(c.data_dir) / "tables.txt").string() : a.fixtures;
    opt.enumeration_cap = a.cap;
    opt.egf_kmax = a.kmax;
    opt.egf_order = a.order;
    opt.exec = a.parallel ? Execution::parallel : Execution::serial;
    if (a.nmax) {
        opt.brute_nmax = *a.nmax;
        opt.sums_nmax = *a.nmax;
    }
    if (a.format != "text" && a.format != "json") throw usage_error("--format must be text or json");

    std::vector<VerificationReport> reports;
    try {
        if (a.suite == "fixtures") reports.push_back(verify_fixtures(load_fixture(opt.fixture_path), opt.exec));
        else if (a.suite == "bruteforce") reports.push_back(verify_bruteforce(opt.brute_nmax, opt.enumeration_cap));
        else if (a.suite == "egf") reports.push_back(verify_egf(opt.egf_kmax, opt.egf_order));
        else if (a.suite == "sums") reports.push_back(verify_sums(opt.sums_nmax, opt.exec));
        else if (a.suite == "all") reports = verify_all(opt);
        else throw usage_error("unknown suite '" + a.suite + "'");
    } catch (const parse_error& e) {
        std::cerr << "runbound verify: " << e.what() << '\n';
        return exit_fail;
    } catch (const resource_error& e) {
        throw usage_error(e.what());
    }

    std::ofstream file;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file) throw usage_error("cannot write " + a.output);
    }
    std::ostream& os = a.output.empty() ? std::cout : file;

    bool ok = true;
    if (a.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        os << arr.dump(1) << '\n';
    } else {
        for (const auto& r : reports) r.write_text(os);
    }
    for (const auto& r : reports) {
        ok = ok && r.pass();
        if (!r.pass())
            for (const auto& ch : r.checks())
                if (!ch.pass) std::cerr << "FAIL " << r.suite() << '/' << ch.id << '\n';
    }
    return ok ? exit_ok : exit_fail;
}

struct OeisArgs {
    std::string id;
    std::optional<std::string> family;
    std::optional<unsigned> k;
    std::optional<long long> offset;
    std::optional<unsigned> first_n;
    std::string bfile;
    std::string manifest;
    bool fetch = false;
    unsigned min_overlap = 5;
    bool verbose = false;
};

int cmd_oeis_check(const OeisArgs& a, const Common& c) {
    const fs::path dir = fs::path(c.data_dir) / "oeis";
    oeis::ManifestEntry e;
    e.id = a.id;
    const std::string manifest = a.manifest.empty() ? (dir / "manifest.txt").string() : a.manifest;
    bool from_manifest = false;
    if (fs::exists(manifest)) {
        const auto m = oeis::load_manifest(manifest);
        if (auto it = m.find(a.id); it != m.end()) {
            e = it->second;
            from_manifest = true;
        }
    }
    if (a.family) e.family = parse_family(*a.family);
    if (a.k) {
        e.k = *a.k;
        e.layout = oeis::Layout::row;
    }
    if (a.offset) e.offset = *a.offset;
    if (a.first_n) e.first_n = *a.first_n;
    if (!from_manifest && (!a.family || !a.k))
        throw usage_error(a.id + " is not in the manifest; pass --family and --k");
    if (e.layout == oeis::Layout::row && e.k < 1) throw usage_error("--k must be >= 1");

    oeis::BFile b;
    try {
        if (a.fetch) b = oeis::fetch_bfile(a.id);
        else b = oeis::load_bfile(a.bfile.empty() ? (dir / oeis::bfile_name(a.id)).string() : a.bfile, a.id);
    } catch (const parse_error& ex) {
        std::cerr << "runbound oeis-check: " << ex.what() << '\n';
        return exit_fail;
    }

    const auto res = oeis::check_bfile(b, e, c.limit, a.min_overlap);
    if (a.verbose) res.report.write_text(std::cout);
    if (!res.enough_overlap) {
        std::cerr << "runbound oeis-check: " << a.id << ": insufficient overlap (" << res.overlap << " terms, need "
                  << a.min_overlap << ")\n";
        return exit_fail;
    }
    if (res.first_mismatch) {
        std::cerr << "runbound oeis-check: " << a.id << ": mismatch at index " << *res.first_mismatch << '\n';
        return exit_fail;
    }
    std::cout << a.id << ": " << res.overlap << " terms match\n";
    return exit_ok;
}

int cmd_cache_save(const std::string& path, const std::string& family, unsigned kmax, unsigned nmax, const Common& c) {
    check_limits(kmax, nmax, c.limit);
    TableStore store;
    if (family == "all") {
        for (Family f : {Family::U, Family::I, Family::B, Family::A}) store.fill(f, kmax, nmax);
    } else {
        store.fill(parse_family(family), kmax, nmax);
    }
    store.save(path);
    std::cerr << "wrote " << store.size() << " cells to " << path << '\n';
    return exit_ok;
}

int cmd_cache_load(const std::string& path, const std::optional<std::string>& family, unsigned kmax, unsigned nmax,
                   const std::string& format, bool update, const Common& c) {
    TableStore store;
    try {
        store = TableStore::load(path);
    } catch (const parse_error& e) {
        std::cerr << "runbound cache-load: " << path << ": " << e.what() << '\n';
        return exit_fail;
    }
    std::cerr << "loaded " << store.size() << " cells from " << path << '\n';
    if (!family) return exit_ok;

    const Family f = parse_family(*family);
    const TableFormat fmt = parse_format(format);
    check_limits(kmax, nmax, c.limit);
    const std::size_t added = store.fill(f, kmax, nmax);
    std::cerr << "computed " << added << " missing cells\n";
    if (update && added) store.save(path);

    write_table(std::cout, fmt, [&](unsigned k, unsigned n) { return store.at(f, k, n); }, f, kmax, nmax);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of permutations with bounded increasing or monotonic runs"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--data-dir", common.data_dir, "Directory holding tables.txt and oeis/")->capture_default_str();
    app.add_option("--limit", common.limit, "Largest kmax/nmax accepted")->capture_default_str();

    std::string family;
    unsigned k = 0, n = 0;
    auto* value = app.add_subcommand("value", "Print one exact count");
    value->add_option("family", family, "U, I, B or A")->required();
    value->add_option("k", k, "Run-length bound")->required();
    value->add_option("n", n, "Permutation order")->required();

    std::string tfamily = "U", tformat = "csv";
    unsigned tkmax = 18, tnmax = 18;
    bool tparallel = false;
    auto* table = app.add_subcommand("table", "Print a k x n table");
    table->add_option("--family", tfamily, "U, I, B or A")->capture_default_str();
    table->add_option("--kmax", tkmax)->capture_default_str();
    table->add_option("--nmax", tnmax)->capture_default_str();
    table->add_option("--format", tformat, "csv, markdown or latex")->capture_default_str();
    table->add_flag("--parallel", tparallel, "Build rows concurrently");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", va.suite, "fixtures, bruteforce, egf, sums or all")->required();
    verify->add_option("--nmax", va.nmax, "Largest n for bruteforce/sums");
    verify->add_option("--kmax", va.kmax, "Largest k for egf")->capture_default_str();
    verify->add_option("--order", va.order, "Series order for egf")->capture_default_str();
    verify->add_option("--cap", va.cap, "Enumeration cap")->capture_default_str();
    verify->add_option("--fixtures", va.fixtures, "Fixture file (default <data-dir>/tables.txt)");
    verify->add_option("--format", va.format, "text or json")->capture_default_str();
    verify->add_option("--output", va.output, "Write the report here instead of stdout");
    verify->add_flag("--parallel", va.parallel, "Build tables concurrently");

    OeisArgs oa;
    auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare a computed row with an OEIS b-file");
    oeis_cmd->add_option("id", oa.id, "Sequence id, e.g. A001250")->required();
    oeis_cmd->add_option("--family", oa.family);
    oeis_cmd->add_option("--k", oa.k);
    oeis_cmd->add_option("--offset", oa.offset, "b-file index i holds n = i - offset");
    oeis_cmd->add_option("--first-n", oa.first_n, "skip terms with smaller n")->check(CLI::PositiveNumber);
    oeis_cmd->add_option("--bfile", oa.bfile, "Local b-file (default: bundled)");
    oeis_cmd->add_option("--manifest", oa.manifest);
    oeis_cmd->add_flag("--fetch", oa.fetch, std::string("Download from $") + oeis::base_url_env + " (default " +
                                                oeis::default_base_url + ")");
    oeis_cmd->add_option("--min-overlap", oa.min_overlap)->capture_default_str();
    oeis_cmd->add_flag("--verbose", oa.verbose);

    std::string cpath, cfamily = "all", cformat = "csv";
    std::optional<std::string> lfamily;
    unsigned ckmax = 18, cnmax = 18;
    bool cupdate = false;
    auto* csave = app.add_subcommand("cache-save", "Compute tables and write a cache file");
    csave->add_option("path", cpath)->required();
    csave->add_option("--family", cfamily, "U, I, B, A or all")->capture_default_str();
    csave->add_option("--kmax", ckmax)->capture_default_str();
    csave->add_option("--nmax", cnmax)->capture_default_str();
    auto* cload = app.add_subcommand("cache-load", "Load a cache file, filling in missing cells");
    cload->add_option("path", cpath)->required();
    cload->add_option("--family", lfamily);
    cload->add_option("--kmax", ckmax)->capture_default_str();
    cload->add_option("--nmax", cnmax)->capture_default_str();
    cload->add_option("--format", cformat)->capture_default_str();
    cload->add_flag("--update", cupdate, "Write computed cells back to the cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*value) return cmd_value(family, k, n, common);
        if (*table) return cmd_table(tfamily, tkmax, tnmax, tformat, tparallel, common);
        if (*verify) return cmd_verify(va, common);
        if (*oeis_cmd) return cmd_oeis_check(oa, common);
        if (*csave) return cmd_cache_save(cpath, cfamily, ckmax, cnmax, common);
        if (*cload) return cmd_cache_load(cpath, lfamily, ckmax, cnmax, cformat, cupdate, common);
    } catch (const usage_error& e) {
        std::cerr << "runbound: " << e.what() << '\n';
        return exit_usage;
    } catch (const resource_error& e) {
        std::cerr << "runbound: " << e.what() << '\n';
        return exit_usage;
    } catch (const parse_error& e) {
        std::cerr << "runbound: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_usage;
}
