#include <gtest/gtest.h>

#include <random>

#include "cliffrep/error.hpp"
#include "cliffrep/expr.hpp"
#include "cliffrep/matrep.hpp"
#include "oracles.hpp"

using namespace cliffrep;

TEST(FormatMultivector, Plain) {
  const Signature sig(2, 0);
  EXPECT_EQ(format_multivector(Multivector(sig, {1, 2, 0, -1})), "1 + 2*e1 - e1*e2");
  EXPECT_EQ(format_multivector(Multivector(sig)), "0");
  EXPECT_EQ(format_multivector(Multivector(sig, {0, Rational(3, 2), 0, 0})), "3/2*e1");
  EXPECT_EQ(format_multivector(Multivector(sig, {-1, 0, -1, 0})), "-1 - e2");
  EXPECT_EQ(format_multivector(Multivector::blade(Signature(10, 0), IndexSet::of({2, 10}))), "e2*e[10]");
}

TEST(FormatMultivector, Latex) {
  const Signature sig(2, 0);
  EXPECT_EQ(format_multivector(Multivector(sig, {1, 2, 0, -1}), MvStyle::latex),
            "1 + 2\\,e_{1} - \\left(e_{1} e_{2}\\right)");
  EXPECT_EQ(format_multivector(Multivector(sig, {Rational(-1, 2), 0, 0, 0}), MvStyle::latex), "-\\frac{1}{2}");
}

TEST(BladeName, Styles) {
  EXPECT_EQ(blade_name(IndexSet(), MvStyle::plain), "1");
  EXPECT_EQ(blade_name(IndexSet::of({1, 2}), MvStyle::plain), "e1*e2");
  EXPECT_EQ(blade_name(IndexSet::of({1, 2}), MvStyle::latex), "{e_1} {e_2}");
  EXPECT_EQ(blade_name(IndexSet::of({11}), MvStyle::latex), "{e_{11}}");
}

TEST(FormatMatrix, IdentityCsv) {
  EXPECT_EQ(format_matrix(RationalMatrix::identity(2), MatrixFormat::csv), "1,0\n0,1\n");
}

TEST(FormatMatrix, TextAlignedAndParsesBack) {
  RationalMatrix m = RationalMatrix::identity(2);
  m(0, 1) = Rational(-3, 4);
  const std::string text = format_matrix(m, MatrixFormat::text);
  EXPECT_EQ(text, "   1 -3/4\n   0    1\n");
  EXPECT_EQ(parse_matrix_text(text), m);
}

TEST(FormatMatrix, LatexMatrix) {
  RationalMatrix m = RationalMatrix::identity(2);
  m(1, 0) = Rational(-1, 2);
  EXPECT_EQ(format_matrix(m, MatrixFormat::latex),
            "\\begin{pmatrix}\n1 & 0\\\\\n-\\frac{1}{2} & 1\n\\end{pmatrix}\n");
}

TEST(FormatMatrix, JsonRoundTrip) {
  std::mt19937_64 rng(47);
  for (const auto& sig : {Signature(2, 0), Signature(1, 2), Signature(2, 2)}) {
    const RationalMatrix m = rep_multivector(oracle::random_mv(sig, rng, 50, true));
    EXPECT_EQ(parse_matrix_json(format_matrix(m, MatrixFormat::json)), m);
    EXPECT_EQ(parse_matrix_text(format_matrix(m, MatrixFormat::text)), m);
  }
  RationalMatrix big(1);
  big(0, 0) = Rational(mpz_class("123456789012345678901234567890"));
  EXPECT_EQ(parse_matrix_json(format_matrix(big, MatrixFormat::json)), big);
}

TEST(FormatMatrix, MultTableLatexLayout) {
  const std::string expected =
      "\\left( \\begin{array}{c|cccc}\n"
      "1 & {e_1} & {e_2} & {e_1} {e_2}\\\\\n"
      "\\hline\n"
      "{e_1} & 1 & {e_1} {e_2} & {e_2}\\\\\n"
      "{e_2} & -{e_1} {e_2} & 1 & -{e_1}\\\\\n"
      "{e_1} {e_2} & -{e_2} & {e_1} & -1\n"
      "\\end{array}\\right)\n";
  EXPECT_EQ(format_matrix(build_mult_table(Signature(2, 0)), MatrixFormat::latex), expected);
}

TEST(FormatMatrix, MultTableCsvAndJson) {
  const MultTable m = build_mult_table(Signature(1, 0, 1));
  const std::string csv = format_matrix(m, MatrixFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "1,2,3,4");
  EXPECT_NE(csv.find("3,-4,0,0"), std::string::npos);
  const auto cells = parse_table_json(format_matrix(m, MatrixFormat::json));
  ASSERT_EQ(cells.size(), m.dim());
  for (Ordinal mu = 1; mu <= m.dim(); ++mu) {
    for (Ordinal nu = 1; nu <= m.dim(); ++nu) EXPECT_EQ(cells[mu - 1][nu - 1], m.at(mu, nu));
  }
}

TEST(FormatMatrix, MultTableText) {
  EXPECT_EQ(format_matrix(build_mult_table(Signature(0, 1)), MatrixFormat::text), " 1 e1\ne1 -1\n");
}

TEST(FormatScalarTable, Formats) {
  const ScalarTable g = build_scalar_table(Signature(2, 0));
  EXPECT_EQ(format_scalar_table(g, MatrixFormat::text), "1 1 1 -1\n");
  EXPECT_EQ(format_scalar_table(g, MatrixFormat::csv), "1,1,1,-1\n");
  EXPECT_EQ(format_scalar_table(g, MatrixFormat::json), "[1, 1, 1, -1]\n");
}

TEST(ParseMatrix, Errors) {
  EXPECT_THROW(parse_matrix_text("1 2\n3\n"), DimensionMismatch);
  EXPECT_THROW(parse_matrix_text("1 x\n3 4\n"), std::invalid_argument);
  EXPECT_THROW(parse_matrix_json("{}"), std::invalid_argument);
  EXPECT_THROW(parse_matrix_json("[[1, true]]"), std::invalid_argument);
  EXPECT_THROW(parse_table_json("[[1]]"), std::invalid_argument);
  EXPECT_EQ(parse_matrix_format("csv"), MatrixFormat::csv);
  EXPECT_THROW(parse_matrix_format("xml"), std::invalid_argument);
}
