#pragma once

// Arithmetic in Z_{2^n - 1}.
//
// Values are arbitrary precision (GMP). Reduction uses 2^n = 1: the operand is
// folded in n-bit chunks until it fits, and the all-ones word collapses to 0, so
// every Residue holds the least non-negative representative.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "mersexp/errors.hpp"

namespace mersexp {

/// 2^n - 1.
mpz_class mersenne_modulus(unsigned n);

/// Least non-negative representative of x modulo 2^n - 1. Accepts negative x.
mpz_class reduce_mod_mersenne(const mpz_class& x, unsigned n);

class Residue {
 public:
  /// Reduces `value` into [0, 2^n - 2]. Throws ParameterError for n < 2.
  Residue(unsigned n, const mpz_class& value);
  Residue(unsigned n, std::int64_t value) : Residue(n, mpz_class(static_cast<long>(value))) {}

  unsigned n() const { return n_; }
  const mpz_class& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.n_ == b.n_ && a.value_ == b.value_;
  }

 private:
  unsigned n_;
  mpz_class value_;
};

/// 2^e mod 2^n - 1 for any integer e (negative exponents wrap modulo n).
Residue power_of_two(long exponent, unsigned n);

/// Length-n binary word, index 0 least significant. The all-ones word is not a
/// canonical residue and is rejected on construction.
class BitSequence {
 public:
  BitSequence(unsigned n, std::vector<std::uint8_t> bits);

  static BitSequence zeros(unsigned n);

  unsigned n() const { return static_cast<unsigned>(bits_.size()); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t weight() const;

  Residue to_residue() const;
  /// MSB first with a `0b` prefix.
  std::string to_string() const;

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

BitSequence to_bits(const Residue& x);
Residue from_bits(const BitSequence& bits);

/// Throws ModulusMismatchError when a.n() != b.n().
Residue mul_mod(const Residue& a, const Residue& b);
Residue add_mod(const Residue& a, const Residue& b);

/// Extended Euclid on (l, 2^n - 1). Empty when gcd(l, 2^n - 1) > 1.
std::optional<Residue> ext_euclid_inverse(const mpz_class& l, unsigned n);

/// Number of ones in the binary expansion; the algebraic degree of x -> x^value.
std::size_t binary_weight(const Residue& x);

/// 2^i * l. Negative i is reduced modulo n.
Residue cyclotomic_shift(const Residue& l, long i);

/// Smallest member of {2^i * l : 0 <= i < n}.
Residue cyclotomic_canonical(const Residue& l);

// Exponent families of the known APN / 4-uniform monomials.
struct Gold { unsigned r; };
struct Kasami { unsigned r; };
struct BrackenLeander { unsigned r; };
struct InverseExp {};
struct Dobbertin { unsigned r; };
struct Welch { unsigned t; };
struct Niho { unsigned t; };
struct Raw { mpz_class l; };

using ExponentFamily =
    std::variant<Gold, Kasami, BrackenLeander, InverseExp, Dobbertin, Welch, Niho, Raw>;

/// Defining integer of the family reduced mod 2^n - 1. Table side conditions
/// (gcd, parity, n = 4r, ...) are not checked here.
Residue family_exponent(const ExponentFamily& family, unsigned n);

/// e.g. "kasami(3)", "raw(13)", "inverse".
std::string family_name(const ExponentFamily& family);

/// Parses decimal, 0x-prefixed hex or 0b-prefixed binary. Throws ParameterError.
mpz_class parse_integer(const std::string& text);

}  // namespace mersexp
