#include <gtest/gtest.h>

#include "cliffrep/matrep.hpp"
#include "golden_matrices.hpp"
#include "oracles.hpp"

using namespace cliffrep;

namespace {

Multivector primes_element(const Signature& sig) {
  const auto pr = oracle::primes(std::size_t{1} << sig.n());
  return Multivector(sig, std::vector<Rational>(pr.begin(), pr.end()));
}

RationalMatrix evaluate(const golden::Listing& l, const std::vector<long>& values) {
  const std::size_t dim = values.size();
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const int c = l.cells[i * dim + j];
      m(i, j) = (c < 0 ? -1 : 1) * values[std::abs(c) - 1];
    }
  }
  return m;
}

const golden::Listing& listing(unsigned p, unsigned q) {
  for (const auto& l : golden::listings()) {
    if (l.p == p && l.q == q) return l;
  }
  throw std::out_of_range("no listing");
}

}  // namespace

class GoldenListing : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(GoldenListing, PrimesInstanceMatches) {
  const auto [p, q] = GetParam();
  const Signature sig(p, q);
  const Multivector u = primes_element(sig);
  const RationalMatrix expected = evaluate(listing(p, q), oracle::primes(u.size()));
  EXPECT_EQ(rep_multivector(u), expected);
  EXPECT_EQ(oracle::rep(u), expected);
}

INSTANTIATE_TEST_SUITE_P(Listings, GoldenListing,
                         ::testing::Values(std::pair{2u, 0u}, std::pair{1u, 1u}, std::pair{0u, 2u}, std::pair{3u, 0u},
                                           std::pair{2u, 1u}, std::pair{1u, 2u}, std::pair{0u, 3u}, std::pair{4u, 0u},
                                           std::pair{2u, 2u}, std::pair{1u, 3u}, std::pair{0u, 4u}),
                         [](const auto& info) {
                           return "Cl" + std::to_string(info.param.first) + std::to_string(info.param.second);
                         });

TEST(GoldenListings, TwelveSignatures) { EXPECT_EQ(golden::listings().size(), 12u); }

// The Cl(3,1) reference listing repeats the Cl(4,0) one verbatim, so it cannot describe a
// representation in which e4 squares to -1.
TEST(GoldenListings, Cl31ListingDuplicatesCl40) {
  EXPECT_EQ(listing(3, 1).cells, listing(4, 0).cells);
  const Signature sig(3, 1);
  const Multivector u = primes_element(sig);
  const RationalMatrix printed = evaluate(listing(3, 1), oracle::primes(16));
  const RationalMatrix ours = rep_multivector(u);
  EXPECT_NE(ours, printed);
  EXPECT_EQ(ours, oracle::rep(u));
  const RepMatrix e4 = rep_blade(sig, 5);
  RationalMatrix minus_i = RationalMatrix::identity(16);
  minus_i *= -1;
  EXPECT_EQ(e4 * e4, minus_i);
}
