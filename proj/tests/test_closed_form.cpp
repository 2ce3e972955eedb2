#include <doctest.h>

#include <numeric>

#include "mersexp/carry.hpp"
#include "mersexp/closed_form.hpp"
#include "oracle.hpp"

using namespace mersexp;

namespace {

std::uint64_t v(const Residue& x) { return oracle::value(x); }

bool certificate_holds(const InverseResult& res) {
  const SignedPowerForm form = canonical_form(res.family);
  const auto terms = std::vector<std::pair<unsigned, long>>(form.terms().begin(),
                                                            form.terms().end());
  const auto c = carry_from_r_matrix(res.carry_matrix);
  return oracle::carry_equation_holds(terms, oracle::bits(v(res.inverse), res.n),
                                      oracle::bits(1, res.n),
                                      std::vector<long>(c.carries().begin(), c.carries().end()));
}

}  // namespace

TEST_CASE("Gold inverses") {
  CHECK(gold_invertible(3, 7));
  CHECK_FALSE(gold_invertible(1, 2));
  CHECK(gold_invertible(2, 6));

  const auto g = gold_inverse(3, 7);
  CHECK(v(g.inverse) == 113);
  CHECK(g.weight == 4);
  CHECK(g.case_label == CaseLabel::GoldGcd1);
  CHECK(g.label_string() == "GOLD_GCD1");
  CHECK(g.carry_matrix.to_rows() == std::vector<std::vector<int>>{{1, 1, 1, 1, 1, 1, 1}});

  CHECK(v(gold_inverse(1, 3).inverse) == 5);
  CHECK(gold_inverse(1, 3).weight == 2);
  const auto g26 = gold_inverse(2, 6);
  CHECK(v(g26.inverse) == 38);
  CHECK(g26.weight == 3);
  CHECK(g26.r_matrix.to_rows() == std::vector<std::vector<int>>{{0, 0, 1}, {1, 1, 0}});
  CHECK(g26.label_string() == "GOLD_GCDD");

  CHECK_THROWS_AS(gold_inverse(1, 2), NotInvertibleError);
  CHECK_THROWS_AS(gold_inverse(7, 7), ParameterError);
  const auto wrapped = gold_inverse(10, 7);
  CHECK(wrapped.r == 3);
  CHECK(v(wrapped.inverse) == 113);
  CHECK(wrapped.warnings.size() == 1);
}

TEST_CASE("Kasami inverses from the examples") {
  CHECK(kasami_invertible(2, 8));
  CHECK_FALSE(kasami_invertible(1, 2));
  CHECK(kasami_invertible(3, 7));

  const auto k = kasami_inverse(3, 7);
  CHECK(v(k.inverse) == 78);
  CHECK(k.weight == 4);
  CHECK(k.label_string() == "KASAMI_GCD1_E6K5");
  CHECK(v(kasami_inverse(2, 5).inverse) == 12);
  CHECK(kasami_inverse(2, 5).weight == 2);

  const auto k8 = kasami_inverse(2, 8);
  CHECK(v(k8.inverse) == 157);
  CHECK(k8.weight == 5);
  CHECK(k8.case_label == CaseLabel::KasamiNdEven6k4);

  const auto k10 = kasami_inverse(2, 10);
  CHECK(v(k10.inverse) == 787);
  CHECK(k10.weight == 5);

  CHECK_THROWS_AS(kasami_inverse(1, 3), ParameterError);
  CHECK_THROWS_AS(kasami_inverse(1, 4), NotInvertibleError);
}

TEST_CASE("every Kasami and Gold closed form matches the oracle, n <= 48") {
  for (unsigned n = 2; n <= 48; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      const auto want_g = oracle::inverse(oracle::gold(r, n), n);
      REQUIRE(gold_invertible(r, n) == want_g.has_value());
      if (want_g) {
        const auto g = gold_inverse(r, n);
        REQUIRE(v(g.inverse) == *want_g);
        REQUIRE(g.weight == (n - std::gcd(n, r) + 2) / 2);
        REQUIRE(certificate_holds(g));
      }
      if (n < 4) continue;
      const auto want_k = oracle::inverse(oracle::kasami(r, n), n);
      REQUIRE(kasami_invertible(r, n) == want_k.has_value());
      if (!want_k) continue;
      const auto k = kasami_inverse(r, n);
      REQUIRE(v(k.inverse) == *want_k);
      REQUIRE(k.weight == oracle::weight(*want_k));
      REQUIRE(k.weight == k.formula_weight);
      REQUIRE(certificate_holds(k));
    }
  }
}

TEST_CASE("reflection happens exactly when n/d is odd and e is even") {
  for (unsigned n = 4; n <= 30; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      if (!kasami_invertible(r, n)) continue;
      const unsigned d = std::gcd(r, n);
      const bool expect = (n / d) % 2 == 1 && e_value(r, n) % 2 == 0;
      const auto k = kasami_inverse(r, n);
      REQUIRE(k.reflected == expect);
      if (expect) {
        REQUIRE(k.label_string().ends_with("/REFLECTED"));
        const auto partner = kasami_inverse(n - r, n);
        REQUIRE(k.inverse == mul_mod(power_of_two(-2 * static_cast<long>(r), n), partner.inverse));
      }
    }
  }
}

TEST_CASE("Bracken-Leander inverses") {
  CHECK(v(bl_inverse(1).inverse) == 13);
  CHECK(bl_inverse(1).weight == 3);
  const auto b3 = bl_inverse(3);
  CHECK(v(b3.inverse) == 2917);
  CHECK(b3.weight == 7);
  CHECK(b3.r_matrix.to_rows() ==
        std::vector<std::vector<int>>{{1, 1, 1, 0}, {0, 0, 0, 0}, {1, 1, 1, 1}});
  for (unsigned r = 1; r <= 15; r += 2) {
    const auto b = bl_inverse(r);
    REQUIRE(b.weight == 2 * r + 1);
    REQUIRE(v(b.inverse) == *oracle::inverse(oracle::bracken_leander(r), 4 * r));
    REQUIRE(certificate_holds(b));
  }
  CHECK_THROWS_AS(bl_inverse(2), ParameterError);
  CHECK_THROWS_AS(bl_inverse(0), ParameterError);
}

TEST_CASE("degree bounds") {
  const auto b9 = kasami_degree_bounds(1, 9);
  CHECK(b9.exact);
  CHECK(b9.exact_or_upper == 5);
  const auto b5 = kasami_degree_bounds(2, 5);
  CHECK(b5.lower == 2);
  CHECK(b5.attained_iff_e3);
  const auto b7 = kasami_degree_bounds(3, 7);
  CHECK(b7.lower == 3);
  CHECK_FALSE(b7.attained_iff_e3);
  CHECK(kasami_inverse(3, 7).weight == 4);
  CHECK_THROWS_AS(kasami_degree_bounds(1, 4), NotInvertibleError);

  for (unsigned n = 4; n <= 40; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      if (!kasami_invertible(r, n)) continue;
      const auto bounds = kasami_degree_bounds(r, n);
      const std::size_t w = kasami_inverse(r, n).weight;
      if (bounds.exact) {
        REQUIRE(w == bounds.exact_or_upper);
      } else {
        REQUIRE(w >= bounds.lower);
        REQUIRE(w <= bounds.exact_or_upper);
        REQUIRE((w == bounds.lower) == bounds.attained_iff_e3);
      }
    }
  }
}

TEST_CASE("n = 5d structure") {
  const auto s = kasami_five_d_structure(2, 1);
  CHECK(s.n == 10);
  CHECK(s.shift == 4);
  CHECK(s.kasami_param == 4);
  CHECK(kasami_five_d_structure(1, 1).kasami_param == 2);
  const auto s22 = kasami_five_d_structure(2, 2);
  CHECK(s22.n == 5);
  CHECK(s22.kasami_param == 1);
  CHECK(v(mul_mod(power_of_two(s22.shift, 5), family_exponent(Kasami{1}, 5))) == 12);
  CHECK_THROWS_AS(kasami_five_d_structure(5, 5), ParameterError);
  CHECK_THROWS_AS(kasami_five_d_structure(6, 4), ParameterError);
}

TEST_CASE("weight-2 inverses") {
  const auto w9 = weight_two_classification(9);
  REQUIRE(w9.size() == 2);
  CHECK(w9[0].first == 3);
  CHECK(v(w9[0].second) == 260);
  CHECK(weight_two_classification(10).empty());
  CHECK_THROWS_AS(weight_two_classification(5), ParameterError);
  CHECK(kasami_inverse(2, 5).weight == 2);
}
