#pragma once

// Persistent cell cache. One record per line, four whitespace-separated
// fields: family k n value. Lines starting with '#' are comments.

#include "runbound/fixtures.hpp"
#include "runbound/tables.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace runbound {

class TableStore {
public:
    bool contains(Family f, unsigned k, unsigned n) const { return cells_.contains({f, k, n}); }

    const Count& at(Family f, unsigned k, unsigned n) const {
        auto it = cells_.find({f, k, n});
        if (it == cells_.end()) throw usage_error("no cached cell " + to_string(CellKey{f, k, n}));
        return it->second;
    }

    void set(Family f, unsigned k, unsigned n, Count v) { cells_[{f, k, n}] = std::move(v); }

    std::size_t size() const noexcept { return cells_.size(); }
    const std::map<CellKey, Count>& cells() const noexcept { return cells_; }

    /// Compute the cells of `f` with k <= kmax, n <= nmax that are not
    /// already present. Returns how many cells were added.
    std::size_t fill(Family f, unsigned kmax, unsigned nmax, Execution exec = Execution::serial) {
        std::size_t missing = 0;
        unsigned need_k = 0, need_n = 0;
        for (unsigned k = 1; k <= kmax; ++k)
            for (unsigned n = 1; n <= nmax; ++n)
                if (!contains(f, k, n)) {
                    ++missing;
                    need_k = std::max(need_k, k);
                    need_n = std::max(need_n, n);
                }
        if (missing == 0) return 0;
        const RunCounts counts(need_k, need_n, exec);
        for (unsigned k = 1; k <= need_k; ++k)
            for (unsigned n = 1; n <= need_n; ++n)
                if (!contains(f, k, n)) set(f, k, n, counts.get(f, k, n));
        return missing;
    }

    void save(std::ostream& os) const {
        for (const auto& [key, v] : cells_) os << family_letter(key.family) << ' ' << key.k << ' ' << key.n << ' ' << v << '\n';
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw parse_error("cannot write cache " + path);
        save(out);
    }

    static TableStore load(std::istream& in) {
        TableStore s;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line.front() == '#') continue;
            std::istringstream ss(line);
            std::string fam, k, n, value, extra;
            if (!(ss >> fam >> k >> n >> value) || (ss >> extra))
                throw parse_error("cache record needs 4 fields: '" + line + "'", lineno);
            try {
                const Family f = parse_family(fam);
                const Count kk = parse_decimal(k), nn = parse_decimal(n), v = parse_decimal(value);
                if (kk < 1 || nn < 1 || kk > 1000000 || nn > 1000000) throw parse_error("k and n must be >= 1");
                if (v < 0) throw parse_error("negative count");
                s.set(f, kk.convert_to<unsigned>(), nn.convert_to<unsigned>(), v);
            } catch (const std::exception& e) {
                throw parse_error(std::string("corrupt cache record '") + line + "': " + e.what(), lineno);
            }
        }
        return s;
    }

    static TableStore load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open cache " + path);
        return load(in);
    }

    bool operator==(const TableStore&) const = default;

private:
    std::map<CellKey, Count> cells_;
};

}  // namespace runbound
