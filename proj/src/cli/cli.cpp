#include "cli/cli.hpp"

#include <climits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mersexp/carry.hpp"
#include "mersexp/closed_form.hpp"
#include "mersexp/errors.hpp"
#include "mersexp/sbox.hpp"

namespace mersexp::cli {

namespace {

struct Outcome {
  Document doc;
  int code = kOk;
  std::string diagnostic;
};

unsigned to_unsigned(const std::string& text, const char* what, unsigned lo = 0,
                     unsigned hi = UINT_MAX) {
  const mpz_class v = parse_integer(text);
  if (v < lo || v > hi) {
    throw ParameterError(std::string(what) + "=" + text + " outside [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
  }
  return static_cast<unsigned>(v.get_ui());
}

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << "0x" << std::hex << x;
  return os.str();
}

Json integer_json(const mpz_class& x, unsigned n) {
  std::string bits = x.get_str(2);
  if (bits.size() < n) bits.insert(0, n - bits.size(), '0');
  Json out = Json::object();
  out["value"] = x.get_str();
  out["bits"] = "0b" + bits;
  return out;
}

Json inverse_json(const InverseResult& res) {
  Json out = Json::object();
  out["inverse"] = residue_json(res.inverse);
  out["weight"] = res.weight;
  out["formula_weight"] = res.formula_weight;
  out["reflected"] = res.reflected;
  out["r_matrix"] = matrix_json(res.r_matrix);
  out["carry_matrix"] = matrix_json(res.carry_matrix);
  return out;
}

Outcome cmd_inverse(const std::string& family, const std::string& r_text,
                    const std::string& n_text, const std::string& l_text) {
  Outcome o;
  o.doc.command = "inverse";
  o.doc.inputs["family"] = family;

  if (family == "raw") {
    if (l_text.empty() || n_text.empty()) throw ParameterError("raw needs --l and --n");
    const mpz_class l = parse_integer(l_text);
    const unsigned n = to_unsigned(n_text, "n", 2);
    o.doc.inputs["l"] = l.get_str();
    o.doc.inputs["n"] = n;
    const auto inv = ext_euclid_inverse(l, n);
    if (!inv) {
      throw NotInvertibleError(l.get_str() + " is not invertible modulo 2^" + std::to_string(n) +
                               "-1");
    }
    o.doc.result["inverse"] = residue_json(*inv);
    o.doc.result["weight"] = binary_weight(*inv);
    o.doc.result["method"] = "extended_euclid";
    return o;
  }

  if (r_text.empty()) throw ParameterError(family + " needs --r");
  const unsigned r = to_unsigned(r_text, "r", 1);
  o.doc.inputs["r"] = r;
  InverseResult res = [&] {
    if (family == "bl") {
      if (!n_text.empty() && to_unsigned(n_text, "n") != 4 * r) {
        throw ParameterError("Bracken-Leander exponents are inverted modulo 2^{4r}-1, so n=4r");
      }
      return bl_inverse(r);
    }
    if (n_text.empty()) throw ParameterError(family + " needs --n");
    const unsigned n = to_unsigned(n_text, "n", 2);
    return family == "gold" ? gold_inverse(r, n) : kasami_inverse(r, n);
  }();
  o.doc.inputs["n"] = res.n;
  o.doc.result = inverse_json(res);
  o.doc.case_label = res.label_string();
  o.doc.warnings = res.warnings;
  return o;
}

struct LSpec {
  SignedPowerForm form;
  unsigned r;
};

LSpec parse_lspec(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    std::map<unsigned, long> terms;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw ParameterError("term '" + item + "' is not j:t");
      const unsigned j = to_unsigned(item.substr(0, colon), "term exponent");
      const mpz_class t = parse_integer(item.substr(colon + 1));
      if (!t.fits_slong_p()) throw ParameterError("coefficient too large in '" + item + "'");
      if (!terms.emplace(j, t.get_si()).second) {
        throw ParameterError("exponent " + std::to_string(j) + " repeated in term list");
      }
    }
    return {SignedPowerForm(std::move(terms)), 1};
  }
  for (const std::string prefix : {"kasami", "gold", "bl", "raw"}) {
    if (text.rfind(prefix, 0) != 0) continue;
    const std::string rest = text.substr(prefix.size());
    if (rest.empty()) throw ParameterError("l-spec '" + text + "' is missing its parameter");
    if (prefix == "raw") return {canonical_form(Raw{parse_integer(rest)}), 1};
    const unsigned r = to_unsigned(rest, "r", 1);
    if (prefix == "gold") return {canonical_form(Gold{r}), r};
    if (prefix == "kasami") return {canonical_form(Kasami{r}), r};
    return {canonical_form(BrackenLeander{r}), r};
  }
  throw ParameterError("unknown l-spec '" + text +
                       "' (expected goldR, kasamiR, blR, rawL or a list like 6:1,3:-1,0:1)");
}

Outcome cmd_carry(const std::string& lspec, const std::string& a_text, const std::string& s_text,
                  const std::string& n_text, const std::string& r_text) {
  Outcome o;
  o.doc.command = "carry";
  const unsigned n = to_unsigned(n_text, "n", 2);
  LSpec spec = parse_lspec(lspec);
  if (!r_text.empty()) spec.r = to_unsigned(r_text, "r", 1);
  const mpz_class a_in = parse_integer(a_text);
  const mpz_class s_in = parse_integer(s_text);
  const Residue a(n, a_in);
  const Residue s(n, s_in);
  if (a.value() != a_in) o.doc.warnings.push_back("a reduced modulo 2^n-1 to " + a.to_string());
  if (s.value() != s_in) o.doc.warnings.push_back("s reduced modulo 2^n-1 to " + s.to_string());

  o.doc.inputs["l"] = lspec;
  o.doc.inputs["form"] = spec.form.to_string();
  o.doc.inputs["a"] = residue_json(a);
  o.doc.inputs["s"] = residue_json(s);
  o.doc.inputs["n"] = n;
  o.doc.inputs["r"] = spec.r;

  const BitSequence a_bits = to_bits(a);
  const BitSequence s_bits = to_bits(s);
  const auto c = verify_congruence(spec.form, a_bits, s_bits);
  o.doc.result["consistent"] = c.has_value();
  if (!c) {
    o.code = kCarryInconsistent;
    o.diagnostic = "s is not congruent to l*a modulo 2^" + std::to_string(n) +
                   "-1; no carry sequence exists";
    return o;
  }
  o.doc.result["carries"] = std::vector<long>(c->carries().begin(), c->carries().end());
  if (spec.r % n != 0) {
    o.doc.result["r_matrix"] = to_r_matrix(*c, spec.r % n).to_rows();
  } else {
    o.doc.result["r_matrix"] = nullptr;
  }
  o.doc.result["weight"] = c->weight();
  const std::size_t seeds = count_closing_seeds(spec.form, a_bits, s_bits);
  o.doc.result["unique"] = seeds == 1;
  const auto report = carry_constraints_check(*c, spec.form, spec.r, a_bits, s_bits);
  Json checks = Json::object();
  checks["carry_weight"] = report.carry_weight;
  checks["a_weight"] = report.a_weight;
  checks["s_weight"] = report.s_weight;
  checks["pairwise_bound"] = report.pairwise_bound;
  checks["weight_bound"] = report.weight_bound;
  checks["weight_identity"] = report.weight_identity;
  o.doc.result["constraints"] = checks;
  return o;
}

struct AuditTally {
  long gold = 0, kasami = 0, bl = 0;
  Json failures = Json::array();

  void fail(const std::string& family, unsigned r, unsigned n, const std::string& reason) {
    Json f = Json::object();
    f["family"] = family;
    f["r"] = r;
    f["n"] = n;
    f["reason"] = reason;
    failures.push_back(std::move(f));
  }
};

// Compares one closed form with the Euclid oracle and replays its carry certificate.
template <typename Build>
void audit_instance(AuditTally& tally, const std::string& family, const ExponentFamily& exp,
                    unsigned r, unsigned n, bool predicate, Build build) {
  const auto oracle = ext_euclid_inverse(canonical_form(exp).value(), n);
  if (predicate != oracle.has_value()) {
    tally.fail(family, r, n, "invertibility predicate disagrees with the oracle");
    return;
  }
  if (!predicate) return;
  try {
    const InverseResult res = build();
    if (!(res.inverse == *oracle)) {
      tally.fail(family, r, n, "closed form " + res.inverse.to_string() + " != oracle " +
                                   oracle->to_string());
    } else if (res.weight != res.formula_weight) {
      tally.fail(family, r, n, "weight formula mismatch");
    } else if (!satisfies_carry_equation(canonical_form(exp), to_bits(res.inverse),
                                         to_bits(Residue(n, 1)),
                                         carry_from_r_matrix(res.carry_matrix))) {
      tally.fail(family, r, n, "carry certificate does not satisfy the carry equation");
    }
  } catch (const Error& e) {
    tally.fail(family, r, n, e.what());
  }
}

Outcome cmd_audit(const std::string& min_text, const std::string& max_text) {
  Outcome o;
  o.doc.command = "audit";
  const unsigned n_min = to_unsigned(min_text, "n-min", 2);
  const unsigned n_max = to_unsigned(max_text, "n-max", n_min);
  o.doc.inputs["n_min"] = n_min;
  o.doc.inputs["n_max"] = n_max;

  AuditTally tally;
  for (unsigned n = n_min; n <= n_max; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      ++tally.gold;
      audit_instance(tally, "gold", Gold{r}, r, n, gold_invertible(r, n),
                     [&] { return gold_inverse(r, n); });
      if (n >= 4) {
        ++tally.kasami;
        audit_instance(tally, "kasami", Kasami{r}, r, n, kasami_invertible(r, n),
                       [&] { return kasami_inverse(r, n); });
      }
    }
    if (n % 4 == 0 && (n / 4) % 2 == 1) {
      const unsigned r = n / 4;
      ++tally.bl;
      audit_instance(tally, "bl", BrackenLeander{r}, r, n, true, [&] { return bl_inverse(r); });
    }
  }
  Json checked = Json::object();
  checked["gold"] = tally.gold;
  checked["kasami"] = tally.kasami;
  checked["bl"] = tally.bl;
  o.doc.result["checked"] = checked;
  o.doc.result["failed"] = tally.failures.size();
  o.doc.result["failures"] = tally.failures;
  if (!tally.failures.empty()) {
    o.code = kAuditMismatch;
    o.diagnostic = std::to_string(tally.failures.size()) + " audit mismatch(es)";
  }
  return o;
}

Outcome cmd_analyze(const std::string& l_text, const std::string& n_text,
                    const std::string& poly_text, unsigned threads) {
  Outcome o;
  o.doc.command = "analyze";
  const unsigned max_n = max_field_n_from_env();
  const unsigned n = to_unsigned(n_text, "n", 2, max_n);
  const std::uint64_t poly = poly_text.empty() ? 0 : parse_integer(poly_text).get_ui();
  const FieldContext ctx(n, poly, max_n);
  const mpz_class l = parse_integer(l_text);
  const std::uint64_t word = exponent_word(l, ctx);
  o.doc.inputs["l"] = l.get_str();
  o.doc.inputs["n"] = n;
  o.doc.inputs["polynomial"] = hex(ctx.polynomial());

  const std::uint64_t uniformity = differential_uniformity(word, ctx, threads);
  const Residue residue(n, l);
  o.doc.result["exponent"] = integer_json(l, n);
  o.doc.result["uniformity"] = uniformity;
  o.doc.result["apn"] = uniformity == 2;
  o.doc.result["degree"] = mpz_popcount(l.get_mpz_t());
  o.doc.result["canonical"] = residue_json(cyclotomic_canonical(residue));
  const auto inv = ext_euclid_inverse(l, n);
  o.doc.result["invertible"] = inv.has_value();
  o.doc.result["inverse"] = inv ? residue_json(*inv) : Json(nullptr);
  return o;
}

Outcome cmd_catalog(const std::string& n_text) {
  Outcome o;
  o.doc.command = "catalog";
  const unsigned n = to_unsigned(n_text, "n", 2);
  o.doc.inputs["n"] = n;
  Json entries = Json::array();
  for (const auto& e : catalog_lookup(n)) {
    Json j = Json::object();
    j["family"] = family_name(e.family);
    j["table"] = e.source_table;
    j["conditions"] = e.conditions;
    j["exponent"] = residue_json(e.exponent);
    j["degree"] = e.claimed_degree;
    j["uniformity"] = e.claimed_uniformity;
    j["invertible"] = e.invertible;
    j["inverse"] = e.inverse ? residue_json(*e.inverse) : Json(nullptr);
    j["case_label"] = e.case_label ? Json(*e.case_label) : Json(nullptr);
    entries.push_back(std::move(j));
  }
  o.doc.result["entries"] = entries;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverses of Gold, Kasami and Bracken-Leander exponents modulo 2^n-1", "mersexp"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  bool quiet = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", quiet, "Print nothing on stdout; the exit code carries the result");

  std::string family, r_text, n_text, l_text, a_text, s_text, lspec, poly_text, min_text,
      max_text;
  unsigned threads = 0;

  auto* inverse = app.add_subcommand("inverse", "Closed-form inverse of an exponent");
  inverse->add_option("family", family, "gold, kasami, bl or raw")
      ->required()
      ->check(CLI::IsMember({"gold", "kasami", "bl", "raw"}));
  inverse->add_option("--r", r_text, "Family parameter");
  inverse->add_option("--n", n_text, "Modulus exponent");
  inverse->add_option("--l", l_text, "Exponent (raw only)");

  auto* carry = app.add_subcommand("carry", "Carry sequence certifying s = l*a mod 2^n-1");
  carry->add_option("l", lspec, "goldR, kasamiR, blR, rawL or terms j:t,...")->required();
  carry->add_option("--a", a_text)->required();
  carry->add_option("--s", s_text)->required();
  carry->add_option("--n", n_text)->required();
  carry->add_option("--r", r_text, "Decimation for the r-matrix view");

  auto* audit = app.add_subcommand("audit", "Compare every closed form with the Euclid oracle");
  audit->add_option("--n-min", min_text)->required();
  audit->add_option("--n-max", max_text)->required();

  auto* analyze = app.add_subcommand("analyze", "Differential uniformity of x^l over GF(2^n)");
  analyze->add_option("--l", l_text)->required();
  analyze->add_option("--n", n_text)->required();
  analyze->add_option("--poly", poly_text, "Reduction polynomial (default: smallest irreducible)");
  analyze->add_option("--threads", threads, "Worker threads (0: all cores)");

  auto* catalog = app.add_subcommand("catalog", "Known APN and 4-uniform exponents at n");
  catalog->add_option("--n", n_text)->required();

  std::vector<const char*> argv{"mersexp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadParameters;
  }

  const Format format = format_name == "json" ? Format::Json : Format::Text;
  Outcome outcome;
  try {
    if (inverse->parsed()) {
      outcome = cmd_inverse(family, r_text, n_text, l_text);
    } else if (carry->parsed()) {
      outcome = cmd_carry(lspec, a_text, s_text, n_text, r_text);
    } else if (audit->parsed()) {
      outcome = cmd_audit(min_text, max_text);
    } else if (analyze->parsed()) {
      outcome = cmd_analyze(l_text, n_text, poly_text, threads);
    } else {
      outcome = cmd_catalog(n_text);
    }
  } catch (const NotInvertibleError& e) {
    err << "error: " << e.what() << '\n';
    return kNotInvertible;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kAuditMismatch;
  }

  if (!quiet) out << render(outcome.doc, format);
  if (!outcome.diagnostic.empty()) err << "error: " << outcome.diagnostic << '\n';
  return outcome.code;
}

}  // namespace mersexp::cli
