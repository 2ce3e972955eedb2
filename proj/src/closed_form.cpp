#include "mersexp/closed_form.hpp"

#include <numeric>

#include "kasami_sequences.hpp"
#include "modular_int.hpp"

namespace mersexp {

std::string_view case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::GoldGcd1: return "GOLD_GCD1";
    case CaseLabel::GoldGcdD: return "GOLD_GCDD";
    case CaseLabel::KasamiGcd1E6k1: return "KASAMI_GCD1_E6K1";
    case CaseLabel::KasamiGcd1E6k5: return "KASAMI_GCD1_E6K5";
    case CaseLabel::KasamiGcd1E6k3T6u1: return "KASAMI_GCD1_E6K3_T6U1";
    case CaseLabel::KasamiGcd1E6k3T6u2: return "KASAMI_GCD1_E6K3_T6U2";
    case CaseLabel::KasamiGcd1E6k3T6u4: return "KASAMI_GCD1_E6K3_T6U4";
    case CaseLabel::KasamiGcd1E6k3T6u5: return "KASAMI_GCD1_E6K3_T6U5";
    case CaseLabel::KasamiNdOddMod3E6k1: return "KASAMI_NDODD_MOD3_E6K1";
    case CaseLabel::KasamiNdOddMod3E6k5: return "KASAMI_NDODD_MOD3_E6K5";
    case CaseLabel::KasamiNdOddCaseA: return "KASAMI_NDODD_CASE_A";
    case CaseLabel::KasamiNdOddCaseB: return "KASAMI_NDODD_CASE_B";
    case CaseLabel::KasamiNdOddCaseC: return "KASAMI_NDODD_CASE_C";
    case CaseLabel::KasamiNdOddCaseD: return "KASAMI_NDODD_CASE_D";
    case CaseLabel::KasamiNdOddCaseE: return "KASAMI_NDODD_CASE_E";
    case CaseLabel::KasamiNdOddCaseF: return "KASAMI_NDODD_CASE_F";
    case CaseLabel::KasamiNdOddCaseG: return "KASAMI_NDODD_CASE_G";
    case CaseLabel::KasamiNdOddCaseH: return "KASAMI_NDODD_CASE_H";
    case CaseLabel::KasamiNdEven6k2: return "KASAMI_NDEVEN_6K2";
    case CaseLabel::KasamiNdEven6k4: return "KASAMI_NDEVEN_6K4";
    case CaseLabel::BrackenLeander: return "BL";
  }
  return "UNKNOWN";
}

std::string InverseResult::label_string() const {
  std::string out(case_label_name(case_label));
  if (reflected) out += "/REFLECTED";
  return out;
}

namespace {

struct Reduced {
  unsigned r;
  std::vector<std::string> warnings;
};

Reduced reduce_parameter(unsigned r, unsigned n, const char* family) {
  if (r == 0) throw ParameterError(std::string(family) + " parameter r must be positive");
  Reduced out{r, {}};
  if (r >= n) {
    out.r = r % n;
    out.warnings.push_back("r=" + std::to_string(r) + " reduced to r=" + std::to_string(out.r) +
                           " modulo n=" + std::to_string(n));
  }
  if (out.r == 0) {
    throw ParameterError(std::string(family) + " parameter r must not be a multiple of n");
  }
  return out;
}

// Reads the inverse off its r-matrix and checks it against the family exponent.
InverseResult finish(ExponentFamily family, unsigned r, unsigned n, CaseLabel label,
                     std::vector<std::vector<int>> inverse_rows,
                     std::vector<std::vector<int>> carry_rows, long formula_weight,
                     std::vector<std::string> warnings) {
  RMatrix inverse_matrix(n, r, std::move(inverse_rows));
  RMatrix carry_matrix(n, r, std::move(carry_rows));
  const Residue inverse = from_r_matrix(inverse_matrix).to_residue();
  const Residue exponent = family_exponent(family, n);
  if (mul_mod(exponent, inverse).value() != 1) {
    throw InternalConsistencyError("closed form for " + family_name(family) + " mod 2^" +
                                   std::to_string(n) + "-1 (" +
                                   std::string(case_label_name(label)) + ") is not an inverse");
  }
  const std::size_t weight = binary_weight(inverse);
  if (formula_weight < 0 || weight != static_cast<std::size_t>(formula_weight)) {
    throw InternalConsistencyError("weight " + std::to_string(weight) + " of " +
                                   family_name(family) + " inverse disagrees with case formula " +
                                   std::to_string(formula_weight));
  }
  return InverseResult{std::move(family),
                       r,
                       n,
                       inverse,
                       weight,
                       static_cast<std::size_t>(formula_weight),
                       label,
                       false,
                       std::move(inverse_matrix),
                       std::move(carry_matrix),
                       std::move(warnings)};
}

InverseResult kasami_unreflected(unsigned r, unsigned n, std::vector<std::string> warnings) {
  auto blocks = detail::kasami_blocks(r, n);
  return finish(Kasami{r}, r, n, blocks.label, std::move(blocks.inverse_rows),
                std::move(blocks.carry_rows), blocks.formula_weight, std::move(warnings));
}

}  // namespace

bool gold_invertible(unsigned r, unsigned n) {
  if (n == 0) return false;
  return (n / std::gcd(n, r)) % 2 == 1;
}

InverseResult gold_inverse(unsigned r, unsigned n) {
  if (n < 2) throw ParameterError("n must be at least 2");
  auto [rr, warnings] = reduce_parameter(r, n, "Gold");
  if (!gold_invertible(rr, n)) {
    throw NotInvertibleError("2^" + std::to_string(rr) + "+1 is not invertible modulo 2^" +
                             std::to_string(n) + "-1 (n/gcd(n,r) is even)");
  }
  const unsigned d = std::gcd(n, rr);
  const unsigned cols = n / d;
  // Upper rows (0,0,1,0,1,...,0,1), last row (1,1,0,1,0,...,1,0); carries
  // (0,1,...,1) above an all-ones last row. For d = 1 only the last rows remain.
  std::vector<int> upper(cols), last(cols), upper_carry(cols, 1), last_carry(cols, 1);
  for (unsigned j = 0; j < cols; ++j) {
    upper[j] = (j > 0 && j % 2 == 0) ? 1 : 0;
    last[j] = (j == 0 || j % 2 == 1) ? 1 : 0;
  }
  upper_carry[0] = 0;
  std::vector<std::vector<int>> rows(d - 1, upper), carries(d - 1, upper_carry);
  rows.push_back(last);
  carries.push_back(last_carry);
  const long formula = (static_cast<long>(n) - d + 2) / 2;
  return finish(Gold{rr}, rr, n, d == 1 ? CaseLabel::GoldGcd1 : CaseLabel::GoldGcdD,
                std::move(rows), std::move(carries), formula, std::move(warnings));
}

bool kasami_invertible(unsigned r, unsigned n) {
  if (n == 0) return false;
  const unsigned d = std::gcd(r, n);
  if ((n / d) % 2 == 1) return true;
  return r % 2 == 0 && std::gcd(3ul * r, static_cast<unsigned long>(n)) == d;
}

InverseResult kasami_inverse(unsigned r, unsigned n) {
  if (n < 4) throw ParameterError("Kasami inverses need n >= 4");
  auto [rr, warnings] = reduce_parameter(r, n, "Kasami");
  if (!kasami_invertible(rr, n)) {
    throw NotInvertibleError("2^" + std::to_string(2 * rr) + "-2^" + std::to_string(rr) +
                             "+1 is not invertible modulo 2^" + std::to_string(n) + "-1");
  }
  const unsigned d = std::gcd(rr, n);
  const unsigned quotient = n / d;
  if (quotient % 2 == 0 || e_value(rr, n) % 2 == 1) {
    return kasami_unreflected(rr, n, std::move(warnings));
  }

  // e even: K_r = 2^{2r} K_{n-r}, so K_r^{-1} = 2^{-2r} K_{n-r}^{-1}. The carry
  // word for s = 1 is the same sequence for both.
  InverseResult partner = kasami_unreflected(n - rr, n, {});
  const Residue inverse =
      mul_mod(power_of_two(-2 * static_cast<long>(rr), n), partner.inverse);
  if (mul_mod(family_exponent(Kasami{rr}, n), inverse).value() != 1) {
    throw InternalConsistencyError("reflected Kasami inverse failed its check");
  }
  const auto carry_sequence = partner.carry_matrix.to_sequence();
  return InverseResult{Kasami{rr},
                       rr,
                       n,
                       inverse,
                       binary_weight(inverse),
                       partner.formula_weight,
                       partner.case_label,
                       true,
                       to_r_matrix(to_bits(inverse), rr),
                       RMatrix::from_sequence(carry_sequence, rr),
                       std::move(warnings)};
}

InverseResult bl_inverse(unsigned r) {
  if (r == 0 || r % 2 == 0) {
    throw ParameterError("Bracken-Leander inverse needs r odd and positive, got r=" +
                         std::to_string(r));
  }
  const unsigned n = 4 * r;
  // Row 0 (1,1,1,0), then alternating zero and all-ones rows; carries alternate 2 and 1.
  std::vector<std::vector<int>> rows, carries;
  for (unsigned i = 0; i < r; ++i) {
    if (i == 0) {
      rows.push_back({1, 1, 1, 0});
    } else {
      rows.push_back(std::vector<int>(4, i % 2 == 0 ? 1 : 0));
    }
    carries.push_back(std::vector<int>(4, i % 2 == 0 ? 2 : 1));
  }
  return finish(BrackenLeander{r}, r, n, CaseLabel::BrackenLeander, std::move(rows),
                std::move(carries), 2 * static_cast<long>(r) + 1, {});
}

DegreeBounds kasami_degree_bounds(unsigned r, unsigned n) {
  if (n < 2 || r == 0) throw ParameterError("degree bounds need n >= 2 and r >= 1");
  if (!kasami_invertible(r, n)) throw NotInvertibleError("Kasami exponent is not invertible");
  const unsigned rr = r % n;
  if (rr == 0) throw ParameterError("r must not be a multiple of n");
  const std::size_t d = std::gcd(rr, n);
  const std::size_t quotient = n / d;
  DegreeBounds out;
  if (quotient % 2 == 0) {
    out.lower = out.exact_or_upper = (n + 2) / 2;
    out.exact = true;
    return out;
  }
  if (quotient % 3 == 0) {
    // d = 1 gives (n + 1) / 2.
    out.lower = out.exact_or_upper = (n - 3 * d + 4) / 2;
    out.exact = true;
    return out;
  }
  out.lower = quotient % 3 == 1 ? (n - d + 3) / 3 : (n - 2 * d + 3) / 3;
  out.exact_or_upper = (n - d + 2) / 2;
  const unsigned e = e_value(rr, n);
  const unsigned odd_e = e % 2 == 1 ? e : static_cast<unsigned>(quotient) - e;
  out.attained_iff_e3 = odd_e == 3;
  return out;
}

FiveDStructure kasami_five_d_structure(unsigned r, unsigned b) {
  if (r == 0 || b == 0) throw ParameterError("r and b must be positive");
  if (r % b != 0) throw ParameterError("b must divide r");
  if (b % 5 == 0) throw ParameterError("b must be prime to 5");
  const unsigned d = r / b;
  const unsigned n = 5 * d;
  const long dl = d;
  const long rl = r;
  long shift = 0;
  unsigned m = 0;
  switch (b % 5) {
    case 1: shift = 2 * dl; m = 2 * d; break;
    case 2: shift = 2 * dl; m = d; break;
    case 3: shift = 2 * (dl - rl); m = d; break;
    default: shift = 2 * (dl - rl); m = 2 * d; break;
  }
  shift = detail::floor_mod(shift, n);
  const Residue claimed = mul_mod(power_of_two(shift, n), family_exponent(Kasami{m}, n));
  if (mul_mod(family_exponent(Kasami{r}, n), claimed).value() != 1) {
    throw InternalConsistencyError("n = 5d structure identity failed for r=" + std::to_string(r) +
                                   ", b=" + std::to_string(b));
  }
  return FiveDStructure{n, d, shift, m};
}

std::vector<std::pair<unsigned, Residue>> weight_two_classification(unsigned n) {
  if (n < 6) throw ParameterError("weight-2 classification needs n >= 6 (sporadic cases below)");
  std::vector<std::pair<unsigned, Residue>> out;
  if (n % 3 != 0) return out;
  // n = 3r/b with b | r, gcd(b, 3) = 1 and r < n leaves b = 1 (r = n/3) and b = 2 (r = 2n/3).
  const Residue top = power_of_two(static_cast<long>(n) - 1, n);
  const unsigned third = n / 3;
  out.emplace_back(third, add_mod(top, power_of_two(static_cast<long>(third) - 1, n)));
  out.emplace_back(2 * third, add_mod(top, power_of_two(2 * static_cast<long>(third) - 1, n)));
  for (const auto& [r, inverse] : out) {
    if (mul_mod(family_exponent(Kasami{r}, n), inverse).value() != 1) {
      throw InternalConsistencyError("weight-2 formula failed for r=" + std::to_string(r));
    }
  }
  return out;
}

}  // namespace mersexp
