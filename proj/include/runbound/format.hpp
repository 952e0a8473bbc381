#pragma once

// Table emitters: rows indexed by k, columns by n, exact decimal cells.
// CSV has a header row "k,n=1,n=2,..." and no locale separators.

#include "runbound/tables.hpp"

#include <ostream>
#include <string>

namespace runbound {

enum class TableFormat { csv, markdown, latex };

inline TableFormat parse_format(std::string_view s) {
    if (s == "csv") return TableFormat::csv;
    if (s == "markdown" || s == "md") return TableFormat::markdown;
    if (s == "latex" || s == "tex") return TableFormat::latex;
    throw usage_error("unknown format '" + std::string(s) + "' (expected csv, markdown or latex)");
}

template <class CellSource>
void write_csv(std::ostream& os, const CellSource& cell, Family, unsigned kmax, unsigned nmax) {
    os << 'k';
    for (unsigned n = 1; n <= nmax; ++n) os << ",n=" << n;
    os << '\n';
    for (unsigned k = 1; k <= kmax; ++k) {
        os << k;
        for (unsigned n = 1; n <= nmax; ++n) os << ',' << cell(k, n);
        os << '\n';
    }
}

template <class CellSource>
void write_markdown(std::ostream& os, const CellSource& cell, Family f, unsigned kmax, unsigned nmax) {
    os << "| k |";
    for (unsigned n = 1; n <= nmax; ++n) os << " n=" << n << " |";
    os << "\n|---|";
    for (unsigned n = 1; n <= nmax; ++n) os << "---:|";
    os << '\n';
    for (unsigned k = 1; k <= kmax; ++k) {
        os << "| " << family_letter(f) << '^' << k << " |";
        for (unsigned n = 1; n <= nmax; ++n) os << ' ' << cell(k, n) << " |";
        os << '\n';
    }
}

template <class CellSource>
void write_latex(std::ostream& os, const CellSource& cell, Family f, unsigned kmax, unsigned nmax) {
    os << "\\begin{tabular}{|r|" << std::string(nmax, 'r') << "|}\n\\hline\n$n$";
    for (unsigned n = 1; n <= nmax; ++n) os << " & " << n;
    os << " \\\\\n\\hline\\hline\n";
    for (unsigned k = 1; k <= kmax; ++k) {
        os << '$' << family_letter(f) << "^{" << k << "}(n)$";
        for (unsigned n = 1; n <= nmax; ++n) os << " & " << cell(k, n);
        os << " \\\\\n\\hline\n";
    }
    os << "\\end{tabular}\n";
}

/// `cell(k, n)` yields the count to print; `f` only labels the rows.
template <class CellSource>
void write_table(std::ostream& os, TableFormat fmt, const CellSource& cell, Family f, unsigned kmax, unsigned nmax) {
    switch (fmt) {
        case TableFormat::csv: write_csv(os, cell, f, kmax, nmax); break;
        case TableFormat::markdown: write_markdown(os, cell, f, kmax, nmax); break;
        case TableFormat::latex: write_latex(os, cell, f, kmax, nmax); break;
    }
}

inline void write_table(std::ostream& os, TableFormat fmt, const RunCounts& c, Family f, unsigned kmax,
                        unsigned nmax) {
    write_table(os, fmt, [&](unsigned k, unsigned n) { return c.get(f, k, n); }, f, kmax, nmax);
}

}  // namespace runbound
