#pragma once

// Modular add-with-carry for multiplication in Z_{2^n - 1}.
//
// With l = sum_j t_j 2^j (t_j small signed integers), s = l * a (mod 2^n - 1)
// holds exactly when there is a cyclic carry word c with entries in
// [t_-, t_+ - 1] such that for every i in Z_n
//
//     2 c_i - c_{i-1} + s_i = sum_j t_j a_{i-j}.
//
// That carry word is unique, so it serves as a certificate for the product.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mersexp/residue.hpp"

namespace mersexp {

class SignedPowerForm {
 public:
  /// exponent -> nonzero coefficient. Needs at least one term, a positive value
  /// and a positive coefficient somewhere.
  explicit SignedPowerForm(std::map<unsigned, long> terms);

  const std::map<unsigned, long>& terms() const { return terms_; }
  long t_plus() const { return t_plus_; }
  long t_minus() const { return t_minus_; }
  long coefficient_sum() const { return t_plus_ + t_minus_; }

  mpz_class value() const;
  Residue residue(unsigned n) const { return Residue(n, value()); }
  /// e.g. "+2^6 -2^3 +2^0".
  std::string to_string() const;

  friend bool operator==(const SignedPowerForm&, const SignedPowerForm&) = default;

 private:
  std::map<unsigned, long> terms_;
  long t_plus_ = 0;
  long t_minus_ = 0;
};

/// Gold 2^r + 1, Kasami 2^{2r} - 2^r + 1, Bracken-Leander 2^{2r} + 2^r + 1 and
/// the binary expansion of Raw(l). Other families throw ParameterError.
SignedPowerForm canonical_form(const ExponentFamily& family);

class CarrySequence {
 public:
  explicit CarrySequence(std::vector<long> carries);

  unsigned n() const { return static_cast<unsigned>(carries_.size()); }
  long operator[](std::size_t i) const { return carries_[i]; }
  std::span<const long> carries() const { return carries_; }
  /// Sum of entries (may be negative).
  long weight() const;

  friend bool operator==(const CarrySequence&, const CarrySequence&) = default;

 private:
  std::vector<long> carries_;
};

/// Tries every seed c_{n-1} in [t_-, t_+ - 1] and runs
/// c_i = (c_{i-1} - s_i + sum_j t_j a_{i-j}) / 2 around the cycle. Empty when no
/// seed closes, which happens exactly when s != l * a.
std::optional<CarrySequence> solve_carries(const SignedPowerForm& form, const BitSequence& a,
                                           const BitSequence& s);

/// Number of seeds for which the forward recurrence closes. 0 or 1.
std::size_t count_closing_seeds(const SignedPowerForm& form, const BitSequence& a,
                                const BitSequence& s);

/// solve_carries followed by recomputing s from (form, a, c).
std::optional<CarrySequence> verify_congruence(const SignedPowerForm& form, const BitSequence& a,
                                               const BitSequence& s);

/// Direct check of the carry equation at every index plus the carry range.
bool satisfies_carry_equation(const SignedPowerForm& form, const BitSequence& a,
                              const BitSequence& s, const CarrySequence& c);

struct CarryConstraintReport {
  long carry_weight = 0;
  std::size_t a_weight = 0;
  std::size_t s_weight = 0;
  /// c_i + c_{i-r} in {-1, 0, 1} for every i.
  bool pairwise_bound = false;
  /// |wt(c)| <= n / 2.
  bool weight_bound = false;
  /// wt(c) + wt(s) = (sum_j t_j) wt(a); for Kasami forms wt(c) + wt(s) = wt(a).
  bool weight_identity = false;

  bool all_hold() const { return pairwise_bound && weight_bound && weight_identity; }
};

/// Throws ParameterError when c does not solve the carry equation for (form, a, s).
CarryConstraintReport carry_constraints_check(const CarrySequence& c, const SignedPowerForm& form,
                                              unsigned r, const BitSequence& a,
                                              const BitSequence& s);

}  // namespace mersexp
