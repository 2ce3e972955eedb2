#pragma once

// Explicit inverses of Gold, Kasami and Bracken-Leander exponents modulo 2^n - 1.
//
// Every constructor builds the r-matrix of the inverse from fixed blocks, reads
// the residue off it, and refuses to return unless family * inverse = 1. The
// matching carry r-matrix is attached so callers can re-check the product with
// the carry module independently of the residue arithmetic.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mersexp/orderings.hpp"
#include "mersexp/residue.hpp"

namespace mersexp {

enum class CaseLabel {
  GoldGcd1,
  GoldGcdD,
  KasamiGcd1E6k1,
  KasamiGcd1E6k5,
  KasamiGcd1E6k3T6u1,
  KasamiGcd1E6k3T6u2,
  KasamiGcd1E6k3T6u4,
  KasamiGcd1E6k3T6u5,
  // d > 1, n/d = 6v + 3
  KasamiNdOddMod3E6k1,
  KasamiNdOddMod3E6k5,
  // d > 1, n/d odd and prime to 3
  KasamiNdOddCaseA,
  KasamiNdOddCaseB,
  KasamiNdOddCaseC,
  KasamiNdOddCaseD,
  KasamiNdOddCaseE,
  KasamiNdOddCaseF,
  KasamiNdOddCaseG,
  KasamiNdOddCaseH,
  // n/d even
  KasamiNdEven6k2,
  KasamiNdEven6k4,
  BrackenLeander,
};

/// e.g. "KASAMI_GCD1_E6K5", "KASAMI_NDODD_CASE_F", "BL".
std::string_view case_label_name(CaseLabel label);

struct InverseResult {
  ExponentFamily family;
  unsigned r;  // after reduction mod n
  unsigned n;
  Residue inverse;
  std::size_t weight;          // binary_weight(inverse)
  std::size_t formula_weight;  // weight predicted for the dispatched case
  CaseLabel case_label;
  /// Kasami only: computed as 2^{-2r} * K_{n-r}^{-1}.
  bool reflected = false;
  RMatrix r_matrix;      // of the inverse, for this r
  RMatrix carry_matrix;  // certificate for family * inverse = 1, for this r
  std::vector<std::string> warnings;

  /// Case label plus "/REFLECTED" when applicable.
  std::string label_string() const;
};

/// n / gcd(n, r) odd.
bool gold_invertible(unsigned r, unsigned n);

/// Throws NotInvertibleError or ParameterError (n < 2, r = 0 mod n).
InverseResult gold_inverse(unsigned r, unsigned n);

/// n/d odd, or n/d even with r even and gcd(r, n) = gcd(3r, n).
bool kasami_invertible(unsigned r, unsigned n);

/// Requires n >= 4. Parameters r >= n are reduced mod n with a warning.
InverseResult kasami_inverse(unsigned r, unsigned n);

/// Inverse of 2^{2r} + 2^r + 1 modulo 2^{4r} - 1, r odd.
InverseResult bl_inverse(unsigned r);

struct DegreeBounds {
  std::size_t lower = 0;
  std::size_t exact_or_upper = 0;
  bool exact = false;
  /// For n/d odd and not divisible by 3: whether e (taken odd, i.e. e or n/d - e)
  /// equals 3, which is when the lower bound is attained. False otherwise.
  bool attained_iff_e3 = false;
};

/// Degree (binary weight) bounds for the Kasami inverse. Throws NotInvertibleError.
DegreeBounds kasami_degree_bounds(unsigned r, unsigned n);

struct FiveDStructure {
  unsigned n;
  unsigned d;
  long shift;             // in [0, n)
  unsigned kasami_param;  // m with K_r^{-1} = 2^shift * K_m
};

/// For r = b d, n = 5 d and gcd(b, 5) = 1, K_r^{-1} is a shifted Kasami exponent.
FiveDStructure kasami_five_d_structure(unsigned r, unsigned b);

/// All r < n whose Kasami inverse mod 2^n - 1 has weight 2 (n >= 6), by formula.
std::vector<std::pair<unsigned, Residue>> weight_two_classification(unsigned n);

}  // namespace mersexp
