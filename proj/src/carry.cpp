#include "mersexp/carry.hpp"

#include <cstdlib>
#include <numeric>

namespace mersexp {

SignedPowerForm::SignedPowerForm(std::map<unsigned, long> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw ParameterError("signed power form needs at least one term");
  for (const auto& [exponent, coefficient] : terms_) {
    if (coefficient == 0) {
      throw ParameterError("zero coefficient at 2^" + std::to_string(exponent));
    }
    (coefficient > 0 ? t_plus_ : t_minus_) += coefficient;
  }
  if (t_plus_ < 1) throw ParameterError("signed power form needs a positive coefficient");
  if (value() <= 0) throw ParameterError("signed power form must denote a positive integer");
}

mpz_class SignedPowerForm::value() const {
  mpz_class total = 0;
  for (const auto& [exponent, coefficient] : terms_) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, exponent);
    total += power * coefficient;
  }
  return total;
}

std::string SignedPowerForm::to_string() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += ' ';
    const long c = it->second;
    out += c > 0 ? '+' : '-';
    if (std::labs(c) != 1) out += std::to_string(std::labs(c)) + '*';
    out += "2^" + std::to_string(it->first);
  }
  return out;
}

namespace {

struct FormOf {
  SignedPowerForm operator()(const Gold& f) const {
    if (f.r == 0) throw ParameterError("Gold parameter must be positive");
    return SignedPowerForm({{f.r, 1}, {0, 1}});
  }
  SignedPowerForm operator()(const Kasami& f) const {
    if (f.r == 0) throw ParameterError("Kasami parameter must be positive");
    return SignedPowerForm({{2 * f.r, 1}, {f.r, -1}, {0, 1}});
  }
  SignedPowerForm operator()(const BrackenLeander& f) const {
    if (f.r == 0) throw ParameterError("Bracken-Leander parameter must be positive");
    return SignedPowerForm({{2 * f.r, 1}, {f.r, 1}, {0, 1}});
  }
  SignedPowerForm operator()(const Raw& f) const {
    if (f.l < 1) throw ParameterError("raw exponent must be positive");
    std::map<unsigned, long> terms;
    const auto bits = mpz_sizeinbase(f.l.get_mpz_t(), 2);
    for (std::size_t j = 0; j < bits; ++j) {
      if (mpz_tstbit(f.l.get_mpz_t(), j)) terms.emplace(static_cast<unsigned>(j), 1);
    }
    return SignedPowerForm(std::move(terms));
  }
  template <typename Other>
  SignedPowerForm operator()(const Other&) const {
    throw ParameterError("no signed power form for this exponent family");
  }
};

void require_same_length(const BitSequence& a, const BitSequence& s) {
  if (a.n() != s.n()) {
    throw ParameterError("a and s have different lengths (" + std::to_string(a.n()) + " vs " +
                         std::to_string(s.n()) + ")");
  }
}

// rhs_i = sum_j t_j a_{i-j}, offsets reduced mod n.
std::vector<long> convolve(const SignedPowerForm& form, const BitSequence& a) {
  const unsigned n = a.n();
  std::vector<long> rhs(n, 0);
  for (const auto& [exponent, coefficient] : form.terms()) {
    const unsigned shift = exponent % n;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned source = (i + n - shift) % n;
      if (a[source]) rhs[i] += coefficient;
    }
  }
  return rhs;
}

std::optional<std::vector<long>> run_from_seed(const SignedPowerForm& form,
                                               const std::vector<long>& rhs,
                                               const BitSequence& s, long seed) {
  const unsigned n = s.n();
  std::vector<long> c(n);
  long previous = seed;
  for (unsigned i = 0; i < n; ++i) {
    const long numerator = previous - static_cast<long>(s[i]) + rhs[i];
    if (numerator % 2 != 0) return std::nullopt;
    const long value = numerator / 2;
    if (value < form.t_minus() || value > form.t_plus() - 1) return std::nullopt;
    c[i] = value;
    previous = value;
  }
  if (c[n - 1] != seed) return std::nullopt;
  return c;
}

}  // namespace

SignedPowerForm canonical_form(const ExponentFamily& family) {
  return std::visit(FormOf{}, family);
}

CarrySequence::CarrySequence(std::vector<long> carries) : carries_(std::move(carries)) {
  if (carries_.size() < 2) throw ParameterError("carry sequence needs length n >= 2");
}

long CarrySequence::weight() const { return std::accumulate(carries_.begin(), carries_.end(), 0L); }

std::optional<CarrySequence> solve_carries(const SignedPowerForm& form, const BitSequence& a,
                                           const BitSequence& s) {
  require_same_length(a, s);
  const auto rhs = convolve(form, a);
  for (long seed = form.t_minus(); seed <= form.t_plus() - 1; ++seed) {
    if (auto c = run_from_seed(form, rhs, s, seed)) return CarrySequence(std::move(*c));
  }
  return std::nullopt;
}

std::size_t count_closing_seeds(const SignedPowerForm& form, const BitSequence& a,
                                const BitSequence& s) {
  require_same_length(a, s);
  const auto rhs = convolve(form, a);
  std::size_t count = 0;
  for (long seed = form.t_minus(); seed <= form.t_plus() - 1; ++seed) {
    if (run_from_seed(form, rhs, s, seed)) ++count;
  }
  return count;
}

std::optional<CarrySequence> verify_congruence(const SignedPowerForm& form, const BitSequence& a,
                                               const BitSequence& s) {
  auto c = solve_carries(form, a, s);
  if (!c) return std::nullopt;
  const unsigned n = a.n();
  const auto rhs = convolve(form, a);
  for (unsigned i = 0; i < n; ++i) {
    const long recomputed = rhs[i] - 2 * (*c)[i] + (*c)[(i + n - 1) % n];
    if (recomputed != static_cast<long>(s[i])) {
      throw InternalConsistencyError("carry recurrence accepted a sequence that does not reproduce s");
    }
  }
  return c;
}

bool satisfies_carry_equation(const SignedPowerForm& form, const BitSequence& a,
                              const BitSequence& s, const CarrySequence& c) {
  require_same_length(a, s);
  const unsigned n = a.n();
  if (c.n() != n) return false;
  const auto rhs = convolve(form, a);
  for (unsigned i = 0; i < n; ++i) {
    if (c[i] < form.t_minus() || c[i] > form.t_plus() - 1) return false;
    if (2 * c[i] - c[(i + n - 1) % n] + static_cast<long>(s[i]) != rhs[i]) return false;
  }
  return true;
}

CarryConstraintReport carry_constraints_check(const CarrySequence& c, const SignedPowerForm& form,
                                              unsigned r, const BitSequence& a,
                                              const BitSequence& s) {
  if (!satisfies_carry_equation(form, a, s, c)) {
    throw ParameterError("carry sequence does not solve the carry equation for these inputs");
  }
  const unsigned n = c.n();
  CarryConstraintReport report;
  report.carry_weight = c.weight();
  report.a_weight = a.weight();
  report.s_weight = s.weight();

  report.pairwise_bound = true;
  for (unsigned i = 0; i < n; ++i) {
    const long pair = c[i] + c[(i + n - (r % n)) % n];
    if (pair < -1 || pair > 1) report.pairwise_bound = false;
  }
  report.weight_bound = 2 * std::labs(report.carry_weight) <= static_cast<long>(n);
  report.weight_identity = report.carry_weight + static_cast<long>(report.s_weight) ==
                           form.coefficient_sum() * static_cast<long>(report.a_weight);
  return report;
}

}  // namespace mersexp
