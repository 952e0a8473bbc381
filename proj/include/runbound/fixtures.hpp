#pragma once

// Reference tables for 1 <= k, n <= 18, stored as decimal strings.
//
// File format, one record per line ('#' starts a comment line):
//     <family> <k> <n> <value> <highlighted>
// highlighted is 1 for cells that disagree with the 1966 hand-computed
// tables, 0 otherwise.

#include "runbound/count.hpp"
#include "runbound/tables.hpp"

#include <boost/crc.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

namespace runbound {

inline constexpr unsigned fixture_size = 18;

struct CellKey {
    Family family;
    unsigned k;
    unsigned n;

    auto operator<=>(const CellKey&) const = default;
};

inline std::string to_string(const CellKey& c) {
    return std::string(1, family_letter(c.family)) + "(" + std::to_string(c.k) + "," + std::to_string(c.n) + ")";
}

struct TableFixture {
    std::map<CellKey, std::string> entries;
    std::set<CellKey> corrected_cells;

    const std::string& at(Family f, unsigned k, unsigned n) const {
        auto it = entries.find({f, k, n});
        if (it == entries.end()) throw usage_error("fixture has no cell " + to_string(CellKey{f, k, n}));
        return it->second;
    }

    /// Every (family, k, n) with 1 <= k, n <= 18 present.
    bool complete() const {
        for (Family f : {Family::U, Family::I, Family::B, Family::A})
            for (unsigned k = 1; k <= fixture_size; ++k)
                for (unsigned n = 1; n <= fixture_size; ++n)
                    if (!entries.contains({f, k, n})) return false;
        return true;
    }
};

inline TableFixture parse_fixture(std::istream& in) {
    TableFixture fx;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        std::istringstream ss(line);
        std::string fam, value, extra;
        unsigned k = 0, n = 0;
        int flag = -1;
        if (!(ss >> fam >> k >> n >> value >> flag) || (ss >> extra) || (flag != 0 && flag != 1))
            throw parse_error("malformed fixture record '" + line + "'", lineno);
        Family f;
        try {
            f = parse_family(fam);
            parse_decimal(value);
        } catch (const std::exception& e) {
            throw parse_error(e.what(), lineno);
        }
        if (k < 1 || n < 1) throw parse_error("k and n must be >= 1", lineno);
        const CellKey key{f, k, n};
        if (!fx.entries.emplace(key, value).second)
            throw parse_error("duplicate fixture cell " + to_string(key), lineno);
        if (flag == 1) fx.corrected_cells.insert(key);
    }
    return fx;
}

inline TableFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open fixture file " + path);
    return parse_fixture(in);
}

inline std::uint32_t file_crc32(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    boost::crc_32_type crc;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) crc.process_bytes(buf, std::size_t(in.gcount()));
    return crc.checksum();
}

}  // namespace runbound
