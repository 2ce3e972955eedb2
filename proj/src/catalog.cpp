#include <numeric>

#include "mersexp/closed_form.hpp"
#include "mersexp/errors.hpp"
#include "mersexp/sbox.hpp"

namespace mersexp {

namespace {

bool is_power_of_two(const Residue& x) { return binary_weight(x) == 1; }

struct Builder {
  unsigned n;
  std::vector<CatalogEntry> entries;

  void add(ExponentFamily family, int table, std::string conditions, const mpz_class& exponent,
           std::size_t degree, std::optional<InverseResult> closed = std::nullopt) {
    Residue value(n, exponent);
    if (value.value() == 0 || is_power_of_two(value)) return;
    const bool invertible = ext_euclid_inverse(exponent, n).has_value();
    CatalogEntry entry{std::move(family),
                       table,
                       std::move(conditions),
                       value,
                       degree,
                       table == 1 ? 2u : 4u,
                       invertible,
                       std::nullopt,
                       std::nullopt};
    if (closed) {
      entry.inverse = closed->inverse;
      entry.case_label = closed->label_string();
    }
    entries.push_back(std::move(entry));
  }

  // The table form of the inverse exponent; its inverse is read off by Euclid.
  void add_inverse_row(int table, std::string conditions, const mpz_class& exponent) {
    const std::size_t before = entries.size();
    add(InverseExp{}, table, std::move(conditions), exponent, n - 1);
    if (entries.size() > before) entries.back().inverse = ext_euclid_inverse(exponent, n);
  }
};

mpz_class pow2(unsigned k) {
  mpz_class out = 1;
  out <<= k;
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog_lookup(unsigned n) {
  if (n < 2) throw ParameterError("n must be at least 2");
  Builder b{n, {}};
  if (n % 2 == 1) {
    const unsigned t = (n - 1) / 2;
    for (unsigned r = 1; r <= t; ++r) {
      if (std::gcd(r, n) != 1) continue;
      b.add(Gold{r}, 1, "gcd(r,n)=1, r<n/2", pow2(r) + 1, 2, gold_inverse(r, n));
    }
    for (unsigned r = 2; r <= t; ++r) {
      if (std::gcd(r, n) != 1) continue;
      b.add(Kasami{r}, 1, "gcd(r,n)=1, r<n/2", pow2(2 * r) - pow2(r) + 1, r + 1,
            kasami_inverse(r, n));
    }
    b.add(Welch{t}, 1, "n=2t+1", pow2(t) + 3, 3);
    if (t % 2 == 0) {
      b.add(Niho{t}, 1, "t even", pow2(t) + pow2(t / 2) - 1, (t + 2) / 2);
    } else {
      b.add(Niho{t}, 1, "t odd", pow2(t) + pow2((3 * t + 1) / 2) - 1, t + 1);
    }
    b.add_inverse_row(1, "n=2t+1", pow2(2 * t) - 1);
    if (n % 5 == 0) {
      const unsigned r = n / 5;
      b.add(Dobbertin{r}, 1, "5r=n", pow2(4 * r) + pow2(3 * r) + pow2(2 * r) + pow2(r) - 1,
            r + 3);
    }
  } else {
    const unsigned t = n / 2;
    if (t % 2 == 1) {
      for (unsigned r = 1; 2 * r < n; ++r) {
        if (std::gcd(r, n) != 2) continue;
        b.add(Gold{r}, 2, "t odd, gcd(r,n)=2, r<n/2", pow2(r) + 1, 2, gold_inverse(r, n));
      }
      for (unsigned r = 2; 2 * r < n; ++r) {
        if (std::gcd(r, n) != 2) continue;
        b.add(Kasami{r}, 2, "t odd, gcd(r,n)=2, r<n/2", pow2(2 * r) - pow2(r) + 1, r + 1,
              kasami_inverse(r, n));
      }
    }
    b.add_inverse_row(2, "n=2t", pow2(n) - 2);
    if (n % 4 == 0 && (n / 4) % 2 == 1) {
      const unsigned r = n / 4;
      b.add(BrackenLeander{r}, 2, "4r=n, r odd", pow2(2 * r) + pow2(r) + 1, 3, bl_inverse(r));
    }
  }
  return b.entries;
}

}  // namespace mersexp
