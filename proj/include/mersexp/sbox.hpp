#pragma once

// Monomial S-boxes x -> x^l over GF(2^n) and the catalog of known APN and
// 4-differentially uniform exponents.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mersexp/closed_form.hpp"
#include "mersexp/residue.hpp"

namespace mersexp {

inline constexpr unsigned kDefaultMaxFieldN = 24;
inline constexpr unsigned kHardMaxFieldN = 30;

/// Reads MERSEXP_MAX_N, falling back to kDefaultMaxFieldN. Values outside
/// [2, kHardMaxFieldN] are rejected with ParameterError.
unsigned max_field_n_from_env();

/// Polynomials are bit words: bit i is the coefficient of x^i.
bool is_irreducible(std::uint64_t poly);

/// Smallest irreducible polynomial of degree n, read as an integer.
std::uint64_t default_irreducible(unsigned n);

class FieldContext {
 public:
  /// poly = 0 selects default_irreducible(n).
  explicit FieldContext(unsigned n, std::uint64_t poly = 0, unsigned max_n = kDefaultMaxFieldN);

  unsigned n() const { return n_; }
  std::uint64_t polynomial() const { return poly_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  std::uint64_t order() const { return size() - 1; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t primitive_element() const { return generator_; }

  /// table[x] = x^l for every field element x. Requires l >= 1.
  std::vector<std::uint32_t> monomial_table(std::uint64_t l) const;

 private:
  unsigned n_;
  std::uint64_t poly_;
  std::uint32_t generator_ = 0;
};

/// Exponent as a machine word, checked against 1 <= l <= 2^n - 1.
std::uint64_t exponent_word(const mpz_class& l, const FieldContext& ctx);

/// counts[b] = #{x : x^l + (x + a)^l = b}, a != 0.
std::vector<std::uint64_t> difference_counts(std::uint64_t l, std::uint32_t a,
                                             const FieldContext& ctx);

/// max over a != 0 and b of the difference counts. Splits the a range over
/// `threads` workers (0 = hardware concurrency).
std::uint64_t differential_uniformity(std::uint64_t l, const FieldContext& ctx,
                                      unsigned threads = 0);

bool is_apn(std::uint64_t l, const FieldContext& ctx, unsigned threads = 0);

/// (x^l)^{l_inv} = x on the whole field, checked together with l * l_inv = 1
/// mod 2^n - 1. Throws InternalConsistencyError if the two disagree.
bool verify_compositional_inverse(std::uint64_t l, std::uint64_t l_inv, const FieldContext& ctx);

struct CatalogEntry {
  ExponentFamily family;
  int source_table;  // 1: APN, n odd; 2: 4-uniform permutations, n even
  std::string conditions;
  Residue exponent;
  std::size_t claimed_degree;
  unsigned claimed_uniformity;
  bool invertible;
  std::optional<Residue> inverse;  // set when a closed form (or the obvious one) exists
  std::optional<std::string> case_label;
};

/// Table rows instantiated at n. Linear instances (powers of two) are omitted.
std::vector<CatalogEntry> catalog_lookup(unsigned n);

}  // namespace mersexp
