#include "mersexp/residue.hpp"

#include <algorithm>
#include <cctype>

namespace mersexp {

namespace {

void require_ring(unsigned n) {
  if (n < 2) throw ParameterError("ring parameter n must be at least 2, got " + std::to_string(n));
}

mpz_class low_bits(const mpz_class& x, unsigned n) {
  mpz_class out;
  mpz_fdiv_r_2exp(out.get_mpz_t(), x.get_mpz_t(), n);
  return out;
}

mpz_class high_bits(const mpz_class& x, unsigned n) {
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), x.get_mpz_t(), n);
  return out;
}

// x >= 0. Fold n-bit chunks: x = hi * 2^n + lo = hi + lo.
mpz_class fold(mpz_class x, unsigned n, const mpz_class& modulus) {
  while (x > modulus) x = low_bits(x, n) + high_bits(x, n);
  if (x == modulus) x = 0;
  return x;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

mpz_class mersenne_modulus(unsigned n) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, n);
  return m - 1;
}

mpz_class reduce_mod_mersenne(const mpz_class& x, unsigned n) {
  const mpz_class modulus = mersenne_modulus(n);
  if (sgn(x) >= 0) return fold(x, n, modulus);
  mpz_class folded = fold(mpz_class(-x), n, modulus);
  return folded == 0 ? folded : mpz_class(modulus - folded);
}

Residue::Residue(unsigned n, const mpz_class& value) : n_(n) {
  require_ring(n);
  value_ = reduce_mod_mersenne(value, n);
}

Residue power_of_two(long exponent, unsigned n) {
  require_ring(n);
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(floor_mod(exponent, n)));
  return Residue(n, v);
}

BitSequence::BitSequence(unsigned n, std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  require_ring(n);
  if (bits_.size() != n) {
    throw ParameterError("bit sequence has length " + std::to_string(bits_.size()) +
                         ", expected " + std::to_string(n));
  }
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw ParameterError("bit sequence entries must be 0 or 1");
  }
  if (std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 1; })) {
    throw ParameterError("the all-ones word is 2^n - 1 = 0; use the all-zero word");
  }
}

BitSequence BitSequence::zeros(unsigned n) {
  return BitSequence(n, std::vector<std::uint8_t>(n, 0));
}

std::size_t BitSequence::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Residue BitSequence::to_residue() const {
  mpz_class v = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) mpz_setbit(v.get_mpz_t(), i);
  }
  return Residue(n(), v);
}

std::string BitSequence::to_string() const {
  std::string out = "0b";
  out.reserve(bits_.size() + 2);
  for (auto it = bits_.rbegin(); it != bits_.rend(); ++it) out.push_back(*it ? '1' : '0');
  return out;
}

BitSequence to_bits(const Residue& x) {
  std::vector<std::uint8_t> bits(x.n());
  for (unsigned i = 0; i < x.n(); ++i) bits[i] = mpz_tstbit(x.value().get_mpz_t(), i);
  return BitSequence(x.n(), std::move(bits));
}

Residue from_bits(const BitSequence& bits) { return bits.to_residue(); }

Residue mul_mod(const Residue& a, const Residue& b) {
  if (a.n() != b.n()) {
    throw ModulusMismatchError("cannot multiply residues mod 2^" + std::to_string(a.n()) +
                               "-1 and 2^" + std::to_string(b.n()) + "-1");
  }
  return Residue(a.n(), a.value() * b.value());
}

Residue add_mod(const Residue& a, const Residue& b) {
  if (a.n() != b.n()) throw ModulusMismatchError("cannot add residues from different rings");
  return Residue(a.n(), a.value() + b.value());
}

std::optional<Residue> ext_euclid_inverse(const mpz_class& l, unsigned n) {
  require_ring(n);
  if (l < 1) throw ParameterError("exponent must be positive");
  const mpz_class modulus = mersenne_modulus(n);
  // Invariant: old_s * l = old_r, s * l = r (mod modulus).
  mpz_class old_r = l % modulus, r = modulus;
  mpz_class old_s = 1, s = 0;
  while (r != 0) {
    mpz_class q = old_r / r;
    mpz_class tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return Residue(n, old_s);
}

std::size_t binary_weight(const Residue& x) { return mpz_popcount(x.value().get_mpz_t()); }

Residue cyclotomic_shift(const Residue& l, long i) {
  const unsigned shift = static_cast<unsigned>(floor_mod(i, l.n()));
  mpz_class v;
  mpz_mul_2exp(v.get_mpz_t(), l.value().get_mpz_t(), shift);
  return Residue(l.n(), v);
}

Residue cyclotomic_canonical(const Residue& l) {
  Residue best = l;
  Residue current = l;
  for (unsigned i = 1; i < l.n(); ++i) {
    current = cyclotomic_shift(current, 1);
    if (current.value() < best.value()) best = current;
  }
  return best;
}

namespace {

mpz_class pow2(unsigned long e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
  return v;
}

struct ExponentValue {
  unsigned n;
  mpz_class operator()(const Gold& f) const { return pow2(f.r) + 1; }
  mpz_class operator()(const Kasami& f) const { return pow2(2ul * f.r) - pow2(f.r) + 1; }
  mpz_class operator()(const BrackenLeander& f) const {
    return pow2(2ul * f.r) + pow2(f.r) + 1;
  }
  mpz_class operator()(const InverseExp&) const { return pow2(n) - 2; }
  mpz_class operator()(const Dobbertin& f) const {
    return pow2(4ul * f.r) + pow2(3ul * f.r) + pow2(2ul * f.r) + pow2(f.r) - 1;
  }
  mpz_class operator()(const Welch& f) const { return pow2(f.t) + 3; }
  mpz_class operator()(const Niho& f) const {
    if (f.t % 2 == 0) return pow2(f.t) + pow2(f.t / 2) - 1;
    return pow2(f.t) + pow2((3ul * f.t + 1) / 2) - 1;
  }
  mpz_class operator()(const Raw& f) const { return f.l; }
};

struct FamilyName {
  std::string operator()(const Gold& f) const { return "gold(" + std::to_string(f.r) + ")"; }
  std::string operator()(const Kasami& f) const { return "kasami(" + std::to_string(f.r) + ")"; }
  std::string operator()(const BrackenLeander& f) const {
    return "bl(" + std::to_string(f.r) + ")";
  }
  std::string operator()(const InverseExp&) const { return "inverse"; }
  std::string operator()(const Dobbertin& f) const {
    return "dobbertin(" + std::to_string(f.r) + ")";
  }
  std::string operator()(const Welch& f) const { return "welch(" + std::to_string(f.t) + ")"; }
  std::string operator()(const Niho& f) const { return "niho(" + std::to_string(f.t) + ")"; }
  std::string operator()(const Raw& f) const { return "raw(" + f.l.get_str() + ")"; }
};

}  // namespace

Residue family_exponent(const ExponentFamily& family, unsigned n) {
  require_ring(n);
  return Residue(n, std::visit(ExponentValue{n}, family));
}

std::string family_name(const ExponentFamily& family) { return std::visit(FamilyName{}, family); }

mpz_class parse_integer(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  int base = 10;
  if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
    base = 16;
    body.erase(0, 2);
  } else if (body.size() > 2 && body[0] == '0' && (body[1] == 'b' || body[1] == 'B')) {
    base = 2;
    body.erase(0, 2);
  }
  const bool digits_ok = !body.empty() && std::all_of(body.begin(), body.end(), [base](char c) {
    if (base == 2) return c == '0' || c == '1';
    if (base == 16) return std::isxdigit(static_cast<unsigned char>(c)) != 0;
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
  if (!digits_ok) throw ParameterError("not an integer: '" + text + "'");
  mpz_class v(body, base);
  return negative ? mpz_class(-v) : v;
}

}  // namespace mersexp
