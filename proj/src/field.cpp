#include <array>
#include <bit>
#include <cstdlib>
#include <string>

#include "mersexp/errors.hpp"
#include "mersexp/sbox.hpp"

namespace mersexp {

namespace {

constexpr std::array<std::uint64_t, 25> kSmallestIrreducible = {
    0,        0,        0x7,       0xb,       0x13,      0x25,      0x43,
    0x83,     0x11b,    0x203,     0x409,     0x805,     0x1009,    0x201b,
    0x4021,   0x8003,   0x1002b,   0x20009,   0x40009,   0x80027,   0x100009,
    0x200005, 0x400003, 0x800021,  0x100001b,
};

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    out.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

unsigned max_field_n_from_env() {
  const char* raw = std::getenv("MERSEXP_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxFieldN;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 2 || value > static_cast<long>(kHardMaxFieldN)) {
    throw ParameterError("MERSEXP_MAX_N must be an integer in [2, " +
                         std::to_string(kHardMaxFieldN) + "], got '" + raw + "'");
  }
  return static_cast<unsigned>(value);
}

bool is_irreducible(std::uint64_t poly) {
  const int n = degree(poly);
  if (n < 1) return false;
  if (n == 1) return true;
  if ((poly & 1) == 0) return false;
  for (std::uint64_t q = 2; degree(q) <= n / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

std::uint64_t default_irreducible(unsigned n) {
  if (n < 2 || n > kHardMaxFieldN) {
    throw ParameterError("field degree must be in [2, " + std::to_string(kHardMaxFieldN) + "]");
  }
  if (n < kSmallestIrreducible.size()) return kSmallestIrreducible[n];
  for (std::uint64_t p = (std::uint64_t{1} << n) | 1;; p += 2) {
    if (is_irreducible(p)) return p;
  }
}

FieldContext::FieldContext(unsigned n, std::uint64_t poly, unsigned max_n) : n_(n) {
  if (max_n > kHardMaxFieldN) max_n = kHardMaxFieldN;
  if (n < 2 || n > max_n) {
    throw ParameterError("field degree n=" + std::to_string(n) + " outside [2, " +
                         std::to_string(max_n) + "]");
  }
  poly_ = poly == 0 ? default_irreducible(n) : poly;
  if (degree(poly_) != static_cast<int>(n)) {
    throw ParameterError("reduction polynomial must have degree " + std::to_string(n));
  }
  if (!is_irreducible(poly_)) throw ParameterError("reduction polynomial is reducible");

  const auto factors = prime_factors(order());
  for (std::uint32_t g = 2; g < size(); ++g) {
    bool primitive = true;
    for (std::uint64_t p : factors) {
      if (pow(g, order() / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0) throw InternalConsistencyError("no primitive element found");
}

std::uint32_t FieldContext::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t acc = 0;
  std::uint64_t x = a;
  const std::uint64_t top = std::uint64_t{1} << n_;
  while (b != 0) {
    if (b & 1) acc ^= x;
    b >>= 1;
    x <<= 1;
    if (x & top) x ^= poly_;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t FieldContext::pow(std::uint32_t x, std::uint64_t e) const {
  std::uint32_t result = 1;
  while (e != 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> FieldContext::monomial_table(std::uint64_t l) const {
  if (l == 0) throw ParameterError("monomial exponent must be at least 1");
  const std::uint64_t q = order();
  std::vector<std::uint32_t> antilog(q);
  std::uint32_t power = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    antilog[i] = power;
    power = mul(power, generator_);
  }
  const std::uint64_t step = l % q;
  std::vector<std::uint32_t> table(size(), 0);
  std::uint64_t image = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    table[antilog[i]] = antilog[image];
    image += step;
    if (image >= q) image -= q;
  }
  return table;
}

std::uint64_t exponent_word(const mpz_class& l, const FieldContext& ctx) {
  if (l < 1 || l > mpz_class(std::to_string(ctx.order()))) {
    throw ParameterError("exponent " + l.get_str() + " outside [1, 2^" + std::to_string(ctx.n()) +
                         "-1]");
  }
  return std::stoull(l.get_str());
}

}  // namespace mersexp
