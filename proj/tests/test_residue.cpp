#include <doctest.h>

#include <random>

#include "mersexp/residue.hpp"
#include "oracle.hpp"

using namespace mersexp;

TEST_CASE("reduction folds the all-ones word to zero") {
  CHECK(mersenne_modulus(5) == 31);
  CHECK(reduce_mod_mersenne(31, 5) == 0);
  CHECK(reduce_mod_mersenne(32, 5) == 1);
  CHECK(reduce_mod_mersenne(-1, 5) == 30);
  mpz_class big = 1;
  big <<= 200;
  CHECK(reduce_mod_mersenne(big, 7) == 16);  // 2^200 = 2^(200 mod 7)
  CHECK_THROWS_AS(Residue(1, 0), ParameterError);
}

TEST_CASE("to_bits reads a_0 upwards and prints MSB first") {
  const BitSequence b = to_bits(Residue(7, 113));
  const std::vector<std::uint8_t> expected{1, 0, 0, 0, 1, 1, 1};
  CHECK(std::vector<std::uint8_t>(b.bits().begin(), b.bits().end()) == expected);
  CHECK(b.to_string() == "0b1110001");
  CHECK(to_bits(Residue(4, 0)).weight() == 0);
  CHECK(to_bits(Residue(5, 21)).to_string() == "0b10101");
}

TEST_CASE("BitSequence rejects malformed words") {
  CHECK_THROWS_AS(BitSequence(3, {1, 0}), ParameterError);
  CHECK_THROWS_AS(BitSequence(3, {1, 2, 0}), ParameterError);
  CHECK_THROWS_AS(BitSequence(3, {1, 1, 1}), ParameterError);
}

TEST_CASE("bits round trip for every residue, n <= 10") {
  for (unsigned n = 2; n <= 10; ++n) {
    for (std::uint64_t x = 0; x < oracle::modulus(n); ++x) {
      const Residue r(n, static_cast<std::int64_t>(x));
      REQUIRE(from_bits(to_bits(r)) == r);
      REQUIRE(binary_weight(r) == oracle::weight(x));
    }
  }
}

TEST_CASE("mul_mod and add_mod") {
  CHECK(mul_mod(Residue(7, 9), Residue(7, 113)).value() == 1);
  CHECK(mul_mod(Residue(5, 13), Residue(5, 12)).value() == 1);
  CHECK(mul_mod(Residue(9, 200), Residue(9, 1)).value() == 200);
  CHECK(add_mod(Residue(5, 30), Residue(5, 2)).value() == 1);
  CHECK_THROWS_AS(mul_mod(Residue(5, 1), Residue(6, 1)), ModulusMismatchError);
}

TEST_CASE("ext_euclid_inverse matches the 128-bit oracle") {
  CHECK(ext_euclid_inverse(13, 5)->value() == 12);
  CHECK(ext_euclid_inverse(1, 9)->value() == 1);
  CHECK(ext_euclid_inverse(2, 4)->value() == 8);
  CHECK_FALSE(ext_euclid_inverse(3, 2).has_value());
  CHECK_FALSE(ext_euclid_inverse(5, 4).has_value());
  CHECK_THROWS_AS(ext_euclid_inverse(0, 4), ParameterError);

  std::mt19937_64 rng(20240917);
  for (unsigned n = 2; n <= 62; ++n) {
    for (int k = 0; k < 200; ++k) {
      const std::uint64_t l = 1 + rng() % oracle::modulus(n);
      const auto got = ext_euclid_inverse(mpz_class(std::to_string(l)), n);
      const auto want = oracle::inverse(l, n);
      REQUIRE(got.has_value() == want.has_value());
      if (want) REQUIRE(oracle::value(*got) == *want);
    }
  }
}

TEST_CASE("cyclotomic shift and canonical representative") {
  CHECK(cyclotomic_shift(Residue(7, 9), 2).value() == 36);
  CHECK(cyclotomic_shift(Residue(7, 9), 0).value() == 9);
  CHECK(cyclotomic_shift(Residue(5, 16), 1).value() == 1);
  CHECK(cyclotomic_shift(Residue(7, 36), -2).value() == 9);
  CHECK(cyclotomic_canonical(Residue(7, 36)).value() == 9);
  CHECK(cyclotomic_canonical(Residue(9, 1)).value() == 1);
  CHECK(cyclotomic_canonical(Residue(5, 12)).value() == 3);
}

TEST_CASE("family exponents") {
  CHECK(family_exponent(Kasami{3}, 7).value() == 57);
  CHECK(family_exponent(Gold{1}, 3).value() == 3);
  CHECK(family_exponent(BrackenLeander{1}, 4).value() == 7);
  CHECK(family_exponent(BrackenLeander{3}, 12).value() == 73);
  CHECK(family_exponent(InverseExp{}, 6).value() == 62);
  CHECK(family_exponent(Welch{3}, 7).value() == 11);
  CHECK(family_exponent(Raw{200}, 7).value() == 73);
  CHECK(family_name(Kasami{3}) == "kasami(3)");
  for (unsigned n = 4; n <= 40; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      REQUIRE(oracle::value(family_exponent(Kasami{r}, n)) == oracle::kasami(r, n));
      REQUIRE(oracle::value(family_exponent(Gold{r}, n)) == oracle::gold(r, n));
    }
  }
}

TEST_CASE("parse_integer accepts decimal, hex and binary") {
  CHECK(parse_integer("113") == 113);
  CHECK(parse_integer("0x1f") == 31);
  CHECK(parse_integer("0b101") == 5);
  CHECK(parse_integer("-7") == -7);
  CHECK_THROWS_AS(parse_integer("12a"), ParameterError);
  CHECK_THROWS_AS(parse_integer(""), ParameterError);
  CHECK_THROWS_AS(parse_integer("0x"), ParameterError);
}
