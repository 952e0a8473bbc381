#pragma once

// OEIS b-files: plain text, one "index value" pair per line separated by
// whitespace, '#' comment lines. Comparison against computed rows uses an
// explicit per-sequence offset from a manifest; nothing is auto-aligned.

#include "runbound/count.hpp"
#include "runbound/report.hpp"
#include "runbound/tables.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace runbound::oeis {

struct BFile {
    std::string id;
    std::vector<std::pair<long long, std::string>> pairs;
};

inline BFile parse_bfile(std::istream& in, std::string id = {}) {
    BFile b{std::move(id), {}};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string idx, value, extra;
        if (!(ss >> idx >> value) || (ss >> extra))
            throw parse_error("expected 'index value', got '" + line + "'", lineno);
        long long i = 0;
        try {
            std::size_t used = 0;
            i = std::stoll(idx, &used);
            if (used != idx.size()) throw std::invalid_argument(idx);
            parse_decimal(value);
        } catch (const std::exception&) {
            throw parse_error("non-integer field in '" + line + "'", lineno);
        }
        if (!b.pairs.empty() && i <= b.pairs.back().first)
            throw parse_error("indices must be strictly increasing", lineno);
        b.pairs.emplace_back(i, value);
    }
    return b;
}

inline BFile load_bfile(const std::string& path, std::string id = {}) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open b-file " + path);
    return parse_bfile(in, std::move(id));
}

inline std::string bfile_name(const std::string& id) {
    if (id.size() < 2 || (id[0] != 'A' && id[0] != 'a'))
        throw usage_error("sequence id must look like A001250, got '" + id + "'");
    return "b" + id.substr(1) + ".txt";
}

enum class Layout { row, triangle };

struct ManifestEntry {
    std::string id;
    Family family = Family::U;
    unsigned k = 0;  // unused for triangles
    Layout layout = Layout::row;
    long long offset = 0;
    unsigned first_n = 1;  // cells with smaller n follow another convention and are skipped
};

inline std::map<std::string, ManifestEntry> parse_manifest(std::istream& in) {
    std::map<std::string, ManifestEntry> m;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        std::istringstream ss(line);
        std::string id, fam, k, layout;
        long long offset = 0;
        if (!(ss >> id >> fam >> k >> layout >> offset))
            throw parse_error("malformed manifest record '" + line + "'", lineno);
        ManifestEntry e;
        e.id = id;
        e.offset = offset;
        if (long long first; ss >> first) {
            if (first < 1) throw parse_error("first n must be >= 1", lineno);
            e.first_n = unsigned(first);
        } else if (!ss.eof()) {
            throw parse_error("malformed manifest record '" + line + "'", lineno);
        }
        try {
            e.family = parse_family(fam);
        } catch (const usage_error& ex) {
            throw parse_error(ex.what(), lineno);
        }
        if (layout == "row") {
            e.layout = Layout::row;
            try {
                e.k = unsigned(std::stoul(k));
            } catch (const std::exception&) {
                throw parse_error("row entry needs numeric k", lineno);
            }
            if (e.k < 1) throw parse_error("k must be >= 1", lineno);
        } else if (layout == "triangle") {
            e.layout = Layout::triangle;
        } else {
            throw parse_error("unknown layout '" + layout + "'", lineno);
        }
        m[id] = e;
    }
    return m;
}

inline std::map<std::string, ManifestEntry> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open manifest " + path);
    return parse_manifest(in);
}

/// The (k, n) cell a b-file index refers to, if any.
inline std::optional<std::pair<unsigned, unsigned>> cell_for_index(const ManifestEntry& e, long long index) {
    const long long pos = index - e.offset;
    if (e.layout == Layout::row) {
        if (pos < 1) return std::nullopt;
        return std::pair{e.k, unsigned(pos)};
    }
    // Triangle read by rows: position 1 is T(1,1), then T(2,1), T(2,2), ...
    if (pos < 1) return std::nullopt;
    unsigned n = 1;
    long long before = 0;
    while (before + n < pos) before += n++;
    return std::pair{unsigned(pos - before), n};
}

struct CheckResult {
    std::size_t overlap = 0;
    std::optional<long long> first_mismatch;
    bool enough_overlap = false;
    VerificationReport report{"oeis"};

    bool pass() const { return enough_overlap && !first_mismatch && report.pass(); }
};

/// Compare b-file terms whose cell has n <= nmax against freshly computed
/// counts. Terms beyond nmax are ignored; at least `min_overlap` terms must
/// be compared.
inline CheckResult check_bfile(const BFile& b, const ManifestEntry& e, unsigned nmax, std::size_t min_overlap = 5) {
    CheckResult res;
    res.report = VerificationReport("oeis/" + (b.id.empty() ? e.id : b.id));

    std::vector<std::tuple<long long, unsigned, unsigned, std::string>> cells;
    unsigned need_n = 0, need_k = 0;
    for (const auto& [idx, value] : b.pairs) {
        const auto cell = cell_for_index(e, idx);
        if (!cell || cell->second > nmax || cell->second < e.first_n) continue;
        cells.emplace_back(idx, cell->first, cell->second, value);
        need_n = std::max(need_n, cell->second);
        need_k = std::max(need_k, cell->first);
    }
    if (!cells.empty()) {
        // k beyond n is the unconstrained case; clamp the build to n.
        const RunCounts counts(std::max(1u, std::min(need_k, need_n)), need_n);
        for (const auto& [idx, k, n, value] : cells) {
            Count ours;
            if (k > counts.kmax()) {
                const bool diff = e.family == Family::I || e.family == Family::A;
                ours = diff ? Count(0) : factorial(n);
            } else {
                ours = counts.get(e.family, k, n);
            }
            const std::string id = "index=" + std::to_string(idx) + "/" + family_letter(e.family) + "(" +
                                   std::to_string(k) + "," + std::to_string(n) + ")";
            res.report.add(id, value, ours.str());
            if (!res.first_mismatch && value != ours.str()) res.first_mismatch = idx;
            ++res.overlap;
        }
    }
    res.enough_overlap = res.overlap >= min_overlap;
    res.report.add("overlap", ">=" + std::to_string(min_overlap), std::to_string(res.overlap), res.enough_overlap);
    return res;
}

}  // namespace runbound::oeis
