#include <doctest.h>

#include <numeric>
#include <random>

#include "mersexp/orderings.hpp"
#include "oracle.hpp"

using namespace mersexp;

namespace {

BitSequence bits_of(std::uint64_t x, unsigned n) {
  return to_bits(Residue(n, static_cast<std::int64_t>(x)));
}

std::vector<int> as_ints(std::span<const std::uint8_t> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("e is the inverse of r/d modulo n/d") {
  CHECK(e_value(3, 7) == 5);
  CHECK(e_value(1, 9) == 1);
  CHECK(e_value(2, 10) == 1);
  CHECK(e_value(4, 10) == 3);
  for (unsigned n = 2; n <= 40; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      const unsigned d = std::gcd(r, n);
      const unsigned m = n / d;
      if (m == 1) continue;
      const unsigned e = e_value(r, n);
      REQUIRE(e >= 1);
      REQUIRE(e < m);
      REQUIRE((static_cast<unsigned long>(e) * (r / d)) % m == 1 % m);
    }
  }
}

TEST_CASE("r-matrix of the worked example") {
  const RMatrix m = to_r_matrix(bits_of(113, 7), 3);
  CHECK(m.rows() == 1);
  CHECK(m.to_rows() == std::vector<std::vector<int>>{{1, 1, 0, 1, 0, 1, 0}});
  CHECK(to_r_matrix(BitSequence::zeros(6), 2).sum() == 0);
  const RMatrix k2 = to_r_matrix(bits_of(787, 10), 2);
  CHECK(k2.rows() == 2);
  CHECK(k2.cols() == 5);
  CHECK(k2.sum() == 5);
}

TEST_CASE("from_r_matrix reads residues") {
  CHECK(from_r_matrix(RMatrix(4, 1, {{1, 1, 1, 0}})).to_residue().value() == 13);
  CHECK(from_r_matrix(RMatrix(6, 2, {{0, 0, 0}, {0, 0, 0}})).weight() == 0);
  CHECK(from_r_matrix(RMatrix(6, 2, {{0, 0, 1}, {1, 1, 0}})).to_residue().value() == 38);
  CHECK_THROWS_AS(RMatrix(6, 2, {{0, 0, 1}}), ParameterError);
  CHECK_THROWS_AS(from_r_matrix(RMatrix(4, 1, {{1, 2, 0, 0}})), ParameterError);
  CHECK_THROWS_AS(from_r_matrix(RMatrix(4, 1, {{1, 1, 1, 1}})), ParameterError);
}

TEST_CASE("r-ordered sequences") {
  const ROrderedSeq worked(7, 3, {1, 1, 0, 1, 0, 1, 0});
  CHECK(regular_from_r_ordered(worked).to_residue().value() == 113);
  CHECK(regular_from_r_ordered(ROrderedSeq(5, 2, {0, 0, 0, 0, 0})).weight() == 0);
  CHECK(regular_from_r_ordered(ROrderedSeq(5, 2, {0, 1, 0, 0, 1})).to_residue().value() == 12);
  CHECK(regular_from_r_ordered(ROrderedSeq(5, 2, {0, 0, 1, 0, 1})).to_residue().value() == 6);
  CHECK_THROWS_AS(ROrderedSeq(6, 2, {0, 0, 0, 0, 0, 0}), ParameterError);
}

TEST_CASE("r-ordering agrees with direct decimation") {
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      if (std::gcd(r, n) != 1) continue;
      for (std::uint64_t x = 0; x < oracle::modulus(n); x += 1 + n / 3) {
        const auto seq = ROrderedSeq::from_regular(bits_of(x, n), r);
        REQUIRE(as_ints(seq.entries()) == oracle::r_ordered(oracle::bits(x, n), r));
        const RMatrix m = to_r_matrix(bits_of(x, n), r);
        REQUIRE(std::vector<int>(m.row(0).begin(), m.row(0).end()) ==
                oracle::r_ordered(oracle::bits(x, n), r));
        REQUIRE(m.to_sequence() == oracle::bits(x, n));
      }
    }
  }
}

TEST_CASE("r-matrix entries sit at position i - j r") {
  for (unsigned n = 2; n <= 24; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      std::vector<int> seq(n);
      std::iota(seq.begin(), seq.end(), 0);
      const RMatrix m = RMatrix::from_sequence(seq, r);
      REQUIRE(m.rows() == std::gcd(n, r));
      for (unsigned i = 0; i < m.rows(); ++i) {
        for (unsigned j = 0; j < m.cols(); ++j) {
          const long pos = ((static_cast<long>(i) - static_cast<long>(j) * r) % n + n) % n;
          REQUIRE(m.at(i, j) == pos);
          REQUIRE(m.position(i, j) == pos);
        }
      }
    }
  }
}

TEST_CASE("round trips over 2000 seeded random cases") {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 2000) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 47);
    const unsigned r = 1 + static_cast<unsigned>(rng() % (n - 1));
    std::vector<std::uint8_t> raw(n);
    for (auto& b : raw) b = static_cast<std::uint8_t>(rng() & 1);
    if (std::all_of(raw.begin(), raw.end(), [](auto b) { return b == 1; })) continue;
    const BitSequence a(n, raw);

    REQUIRE(from_r_matrix(to_r_matrix(a, r)) == a);
    REQUIRE(from_bits(to_bits(a.to_residue())) == a.to_residue());
    if (std::gcd(r, n) == 1) REQUIRE(regular_from_r_ordered(ROrderedSeq::from_regular(a, r)) == a);

    std::vector<long> carries(n);
    for (auto& c : carries) c = static_cast<long>(rng() % 5) - 2;
    const CarrySequence c(carries);
    REQUIRE(carry_from_r_matrix(to_r_matrix(c, r)) == c);
    REQUIRE(to_r_matrix(c, r).sum() == c.weight());
    ++checked;
  }
  CHECK(checked == 2000);
}
