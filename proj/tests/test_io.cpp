#include "runbound/bfile.hpp"
#include "runbound/cache.hpp"
#include "runbound/format.hpp"
#include "runbound/fixtures.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace runbound;
using namespace runbound::oeis;

namespace {

const std::string data_dir = RUNBOUND_DATA_DIR;

std::string table_text(TableFormat fmt, Family f, unsigned kmax, unsigned nmax) {
    std::ostringstream os;
    write_table(os, fmt, RunCounts(kmax, nmax), f, kmax, nmax);
    return os.str();
}

}  // namespace

TEST(BFile, ParsesCommentsAndWhitespace) {
    std::istringstream in("# comment\n\n1 1\n2\t2\r\n  3   4\n");
    const BFile b = parse_bfile(in, "A001250");
    ASSERT_EQ(b.pairs.size(), 3u);
    EXPECT_EQ(b.pairs[2], (std::pair<long long, std::string>{3, "4"}));
}

TEST(BFile, RejectsMalformedInput) {
    std::istringstream dec("1 1\n1 2\n");
    EXPECT_THROW(parse_bfile(dec), parse_error);
    std::istringstream word("1 abc\n");
    EXPECT_THROW(parse_bfile(word), parse_error);
    std::istringstream three("1 2 3\n");
    EXPECT_THROW(parse_bfile(three), parse_error);
    std::istringstream idx("x1 2\n");
    EXPECT_THROW(parse_bfile(idx), parse_error);
}

TEST(BFile, NameFromId) {
    EXPECT_EQ(bfile_name("A001250"), "b001250.txt");
    EXPECT_THROW(bfile_name("001250"), usage_error);
}

TEST(BFile, TriangleIndexing) {
    ManifestEntry tri{"A008304", Family::I, 0, Layout::triangle, 0};
    EXPECT_EQ(cell_for_index(tri, 1), (std::pair<unsigned, unsigned>{1, 1}));
    EXPECT_EQ(cell_for_index(tri, 2), (std::pair<unsigned, unsigned>{1, 2}));
    EXPECT_EQ(cell_for_index(tri, 3), (std::pair<unsigned, unsigned>{2, 2}));
    EXPECT_EQ(cell_for_index(tri, 7), (std::pair<unsigned, unsigned>{1, 4}));
    EXPECT_FALSE(cell_for_index(tri, 0));
    ManifestEntry row{"A001250", Family::A, 2, Layout::row, 1};
    EXPECT_EQ(cell_for_index(row, 3), (std::pair<unsigned, unsigned>{2, 2}));
    EXPECT_FALSE(cell_for_index(row, 1));
}

TEST(BFile, BundledSequencesMatch) {
    const auto manifest = load_manifest(data_dir + "/oeis/manifest.txt");
    EXPECT_EQ(manifest.size(), 11u);
    for (const auto& [id, entry] : manifest) {
        const BFile b = load_bfile(data_dir + "/oeis/" + bfile_name(id), id);
        const auto res = check_bfile(b, entry, 64);
        EXPECT_TRUE(res.pass()) << id << "\n" << res.report.text();
        EXPECT_GE(res.overlap, 15u) << id;
    }
}

TEST(BFile, A001250AlignsWithMonotonicRowTwo) {
    const auto m = load_manifest(data_dir + "/oeis/manifest.txt");
    const BFile b = load_bfile(data_dir + "/oeis/b001250.txt", "A001250");
    const auto res = check_bfile(b, m.at("A001250"), 18);
    EXPECT_TRUE(res.pass());
    // n = 2..18 carry 2, 4, 10, 32, ...; the listed a(1) = 1 is skipped.
    EXPECT_EQ(res.overlap, 17u);
    EXPECT_EQ(m.at("A001250").first_n, 2u);
    auto all = m.at("A001250");
    all.first_n = 1;
    EXPECT_EQ(check_bfile(b, all, 18).first_mismatch, 1);
}

TEST(BFile, MismatchAndOverlapFailures) {
    ManifestEntry e{"A001250", Family::A, 2, Layout::row, 0, 2};
    std::istringstream wrong("1 1\n2 2\n3 4\n4 11\n5 32\n6 122\n");
    const auto r1 = check_bfile(parse_bfile(wrong), e, 64);
    EXPECT_FALSE(r1.pass());
    EXPECT_EQ(r1.first_mismatch, 4);

    std::istringstream empty("# nothing\n");
    const auto r2 = check_bfile(parse_bfile(empty), e, 64);
    EXPECT_FALSE(r2.enough_overlap);
    EXPECT_FALSE(r2.pass());

    // A shifted offset turns a good file into a mismatch.
    const BFile b = load_bfile(data_dir + "/oeis/b001250.txt");
    e.offset = 1;
    EXPECT_TRUE(check_bfile(b, e, 64).first_mismatch.has_value());
}

TEST(Manifest, RejectsMalformedRecords) {
    std::istringstream layout("A1 U 2 diagonal 0\n");
    EXPECT_THROW(parse_manifest(layout), parse_error);
    std::istringstream fam("A1 Q 2 row 0\n");
    EXPECT_THROW(parse_manifest(fam), parse_error);
    std::istringstream k("A1 U - row 0\n");
    EXPECT_THROW(parse_manifest(k), parse_error);
    std::istringstream first("A1 U 2 row 0 0\n");
    EXPECT_THROW(parse_manifest(first), parse_error);
    std::istringstream trailing("A1 U 2 row 0 x\n");
    EXPECT_THROW(parse_manifest(trailing), parse_error);
}

TEST(Cache, RoundTrip) {
    TableStore s;
    EXPECT_EQ(s.fill(Family::U, 18, 18), 324u);
    std::stringstream buf;
    s.save(buf);
    const TableStore t = TableStore::load(buf);
    EXPECT_EQ(s, t);
    EXPECT_EQ(t.at(Family::U, 2, 18).str(), "317288088082405");
}

TEST(Cache, FillsOnlyMissingCells) {
    TableStore s;
    s.fill(Family::B, 18, 10);
    std::stringstream buf;
    s.save(buf);
    TableStore t = TableStore::load(buf);
    // A planted value survives: existing cells are never recomputed.
    t.set(Family::B, 3, 5, 999);
    EXPECT_EQ(t.fill(Family::B, 18, 18), 18u * 8);
    EXPECT_EQ(t.at(Family::B, 3, 5), 999);
    EXPECT_EQ(t.at(Family::B, 3, 18).str(), "1944883690208684");
    EXPECT_EQ(t.fill(Family::B, 18, 18), 0u);
}

TEST(Cache, MalformedLineNamed) {
    std::istringstream in("U 1 1 1\nU 1 2\n");
    try {
        TableStore::load(in);
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    std::istringstream neg("U 1 1 -1\n");
    EXPECT_THROW(TableStore::load(neg), parse_error);
    std::istringstream zero("U 0 1 1\n");
    EXPECT_THROW(TableStore::load(zero), parse_error);
}

TEST(Format, CsvExample) {
    EXPECT_EQ(table_text(TableFormat::csv, Family::A, 3, 4), "k,n=1,n=2,n=3,n=4\n1,1,0,0,0\n2,0,2,4,10\n3,0,0,2,12\n");
    EXPECT_EQ(table_text(TableFormat::csv, Family::U, 1, 1), "k,n=1\n1,1\n");
}

TEST(Format, LatexReproducesReferenceTable) {
    const std::string tex = table_text(TableFormat::latex, Family::I, 18, 18);
    const TableFixture fx = load_fixture(data_dir + "/tables.txt");
    std::istringstream lines(tex);
    std::string line;
    unsigned k = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("$I^{", 0) != 0) continue;
        ++k;
        std::string expect = "$I^{" + std::to_string(k) + "}(n)$";
        for (unsigned n = 1; n <= 18; ++n) expect += " & " + fx.at(Family::I, k, n);
        EXPECT_EQ(line, expect + " \\\\");
    }
    EXPECT_EQ(k, 18u);
    EXPECT_NE(tex.find("\\begin{tabular}{|r|rrrrrrrrrrrrrrrrrr|}"), std::string::npos);
}

TEST(Format, MarkdownCellsAgreeWithCounts) {
    const std::string md = table_text(TableFormat::markdown, Family::B, 3, 6);
    EXPECT_NE(md.find("| B^3 | 1 | 2 | 6 | 22 | 102 | 564 |"), std::string::npos) << md;
    EXPECT_THROW(parse_format("xml"), usage_error);
}
