#include "kasami_sequences.hpp"

#include <numeric>
#include <string>

#include "modular_int.hpp"

namespace mersexp::detail {

Word assemble(std::initializer_list<Run> runs) {
  Word out;
  for (const auto& run : runs) {
    if (run.repeat < 0) throw InternalConsistencyError("negative block repeat count in case table");
    for (long i = 0; i < run.repeat; ++i) out.insert(out.end(), run.block.begin(), run.block.end());
  }
  return out;
}

Word alternating(int first, long length) {
  if (length < 0) throw InternalConsistencyError("negative alternating block length");
  Word out(static_cast<std::size_t>(length));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (first + static_cast<int>(i)) % 2;
  return out;
}

namespace {

void expect_length(const Word& w, long length, const char* what) {
  if (static_cast<long>(w.size()) != length) {
    throw InternalConsistencyError(std::string(what) + " has length " + std::to_string(w.size()) +
                                   ", expected " + std::to_string(length));
  }
}

Word rotate_left(const Word& w, std::size_t by) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + by) % w.size()];
  return out;
}

}  // namespace

// gcd(r, m) = 1, e = r^{-1} mod m odd. Sequences are in r-ordering.
Gcd1Sequences kasami_gcd1_sequences(unsigned m, unsigned e) {
  const long n = m;
  const long k = e / 6;
  Gcd1Sequences out{};

  if (e % 6 == 1) {
    out.label = CaseLabel::KasamiGcd1E6k1;
    out.inverse = assemble({{{1}}, {alternating(1, n - e)}, {{1, 1, 1, 0, 0, 0}, k}});
    out.carries = alternating(0, n);
    out.formula_weight = (n + 1) / 2;
  } else if (e % 6 == 5) {
    out.label = CaseLabel::KasamiGcd1E6k5;
    out.inverse =
        assemble({{{0}}, {alternating(0, n - e + 2)}, {{1, 1}}, {{0, 0, 0, 1, 1, 1}, k}});
    out.carries = alternating(0, n);
    for (long i = 0; i < n; ++i) out.carries[i] = (i > 0 && i % 2 == 0) ? 1 : 0;
    out.formula_weight = (n + 1) / 2;
  } else {
    const long s = n / e;
    const long t = n % e;
    const long u = t / 6;
    const Word x1{0, 0, 0, 1, 1, 1};
    const Word x2{0, 1, 1, 1, 0, 0};
    const Word x = assemble({{{0, 1, 1}}, {x1, k}, {{0, 0, 0}}, {x2, k}});
    const Word y = assemble({{{0, 0, 0}}, {x2, k}, {{0, 1, 1}}, {x1, k}});
    const Word s1 = alternating(0, 6 * u);
    const Word s2 = assemble({{{0}}, {alternating(0, e - 1)}});

    switch (t % 6) {
      case 1:
        out.label = CaseLabel::KasamiGcd1E6k3T6u1;
        out.inverse = assemble({{x1, u},
                                {y, (s - 2) / 2},
                                {{0, 0, 0}},
                                {x2, k},
                                {{0, 1, 1}},
                                {x1, u},
                                {alternating(0, e - 3 - 6 * u)},
                                {{0}}});
        out.inverse.at(0) += 1;
        out.carries = assemble({{s1}, {s2, s}, {{0}}});
        out.formula_weight = (n - s + 1) / 2;
        break;
      case 2:
        out.label = CaseLabel::KasamiGcd1E6k3T6u2;
        out.inverse = assemble({{{0, 1}},
                                {x1, u},
                                {y, (s - 1) / 2},
                                {{0, 0}},
                                {alternating(1, 6 * u)},
                                {{1}},
                                {x2, (e - 6 * u - 3) / 6}});
        out.carries = assemble({{{-1, 1}}, {s1}, {s2, s}});
        out.formula_weight = (n - s) / 2;
        break;
      case 4:
        out.label = CaseLabel::KasamiGcd1E6k3T6u4;
        out.inverse = assemble({{{0, 0, 0}},
                                {x2, u},
                                {x, (s - 1) / 2},
                                {{0, 1, 1, 0}},
                                {alternating(1, 6 * u)},
                                {{1, 0, 1, 1, 1}},
                                {x1, (e - 6 * u - 9) / 6},
                                {{0}}});
        out.carries = assemble({{{0, 0, 1}}, {s1}, {s2, s}, {{0}}});
        out.formula_weight = (n - s) / 2;
        break;
      case 5:
        out.label = CaseLabel::KasamiGcd1E6k3T6u5;
        out.inverse = assemble({{{0, 1, 1, 0, 0}},
                                {x2, u},
                                {x, (s - 2) / 2},
                                {{0, 1, 1}},
                                {x1, k},
                                {{0}},
                                {x1, u + 1},
                                {alternating(0, e - 7 - 6 * u)}});
        out.carries = assemble({{{0, 0, 1, 0, 1}}, {s1}, {s2, s}});
        out.formula_weight = (n - s + 1) / 2;
        break;
      default:
        // t = 0 or 3 (mod 6) would make 3 divide both e and n.
        throw InternalConsistencyError("e = 3 (mod 6) with t = " + std::to_string(t) +
                                       " cannot occur for invertible e");
    }
  }
  expect_length(out.inverse, n, "r-ordered inverse");
  expect_length(out.carries, n, "r-ordered carry word");
  return out;
}

namespace {

KasamiBlocks even_quotient_blocks(unsigned d, unsigned quotient) {
  const long cols = quotient;
  const long k = cols / 6;
  KasamiBlocks out{};
  Word first;
  Word odd_rows;
  Word even_rows;
  Word even_carry;
  Word odd_carry;
  if (quotient % 6 == 2) {
    out.label = CaseLabel::KasamiNdEven6k2;
    first = assemble({{{1, 1}}, {{1, 1, 0, 0, 0, 1}, k}});
    odd_rows = alternating(1, cols);
    even_rows = alternating(0, cols);
    even_carry = alternating(0, cols);
    odd_carry = alternating(1, cols);
  } else {
    out.label = CaseLabel::KasamiNdEven6k4;
    first = assemble({{{1, 0, 1, 1}}, {{1, 0, 0, 0, 1, 1}, k}});
    odd_rows = alternating(0, cols);
    even_rows = alternating(1, cols);
    even_carry = alternating(1, cols);
    odd_carry = alternating(0, cols);
  }
  expect_length(first, cols, "first row");
  for (unsigned i = 0; i < d; ++i) {
    out.inverse_rows.push_back(i == 0 ? first : (i % 2 == 1 ? odd_rows : even_rows));
    out.carry_rows.push_back(i % 2 == 0 ? even_carry : odd_carry);
  }
  out.formula_weight = (static_cast<long>(d) * cols + 2) / 2;
  return out;
}

// n/d = 6v + 3, d > 1: d - 1 identical rows, then the gcd = 1 inverse of K_{r/d}.
KasamiBlocks mod3_quotient_blocks(unsigned d, unsigned quotient, unsigned e,
                                  const Gcd1Sequences& base) {
  const long cols = quotient;
  const long k = e / 6;
  KasamiBlocks out{};
  Word top;
  if (e % 6 == 1) {
    out.label = CaseLabel::KasamiNdOddMod3E6k1;
    top = assemble({{{0, 0}},
                    {{0, 0, 1, 1, 1, 0}, (cols - e - 2) / 6},
                    {{0, 0, 0, 1, 1, 1}, k},
                    {{0}}});
  } else {
    out.label = CaseLabel::KasamiNdOddMod3E6k5;
    top = assemble({{{0, 1, 0, 0, 0}},
                    {{1, 1, 1, 0, 0, 0}, (cols - e - 4) / 6},
                    {{1, 1, 0, 0}},
                    {{0, 1, 1, 1, 0, 0}, k}});
  }
  expect_length(top, cols, "repeated row");

  Word top_carry = rotate_left(base.carries, e);
  top_carry[0] -= 1;
  for (unsigned i = 0; i + 1 < d; ++i) {
    out.inverse_rows.push_back(top);
    out.carry_rows.push_back(top_carry);
  }
  out.inverse_rows.push_back(base.inverse);
  out.carry_rows.push_back(base.carries);
  const long n = static_cast<long>(d) * cols;
  out.formula_weight = (n - 3 * static_cast<long>(d) + 4) / 2;
  return out;
}

// n/d odd, prime to 3, d > 1: the gcd = 1 inverse of K_{r/d}, then d - 1 identical rows.
KasamiBlocks general_odd_quotient_blocks(unsigned d, unsigned quotient, unsigned e,
                                         const Gcd1Sequences& base) {
  const long cols = quotient;
  const long k = e / 6;
  const long s = cols / e;
  const long t = cols % e;
  const long u = t / 6;
  const long v = cols / 6;
  const long n = static_cast<long>(d) * cols;
  const long dd = d;
  const Word x1{0, 0, 0, 1, 1, 1};
  const Word x2{1, 1, 0, 0, 0, 1};
  const Word x3{0, 1, 1, 1, 0, 0};
  const Word y = assemble({{{0, 0, 0}}, {x3, k}, {{0, 1, 1}}, {x1, k}});
  const Word z = assemble({{{0, 1, 1}}, {x1, k}, {{0, 0, 0}}, {x3, k}});

  KasamiBlocks out{};
  Word row;
  if (e % 6 != 3) {
    out.formula_weight = (n - dd + 2) / 2;
    if (e % 6 == 1 && cols % 6 == 1) {
      out.label = CaseLabel::KasamiNdOddCaseA;
      row = assemble({{x1, v}, {{0}}});
    } else if (e % 6 == 1) {
      out.label = CaseLabel::KasamiNdOddCaseB;
      row = assemble({{x2, v}, {{1, 1, 0, 0, 0}}});
    } else if (cols % 6 == 1) {
      out.label = CaseLabel::KasamiNdOddCaseC;
      row = assemble({{{0}}, {x1, v}});
    } else {
      out.label = CaseLabel::KasamiNdOddCaseD;
      row = assemble({{{0, 1, 1}}, {x1, v}, {{0, 0}}});
    }
  } else {
    switch (t % 6) {
      case 1:
        out.label = CaseLabel::KasamiNdOddCaseE;
        row = assemble({{x1, u}, {y, s / 2}, {{0}}});
        out.formula_weight = (n - dd * (s + 1) + 2) / 2;
        break;
      case 2:
        out.label = CaseLabel::KasamiNdOddCaseF;
        row = assemble({{{0, 1}}, {x1, u}, {y, (s - 1) / 2}, {{0, 0, 0}}, {x3, k}});
        out.formula_weight = (n - dd * (s + 2) + 2) / 2;
        break;
      case 4:
        out.label = CaseLabel::KasamiNdOddCaseG;
        row = assemble({{{0, 0, 0}}, {x3, u}, {z, (s - 1) / 2}, {{0, 1, 1}}, {x1, k}, {{0}}});
        out.formula_weight = (n - dd * (s + 2) + 2) / 2;
        break;
      case 5:
        out.label = CaseLabel::KasamiNdOddCaseH;
        row = assemble({{{0, 1, 1, 0, 0}}, {x3, u}, {z, s / 2}});
        out.formula_weight = (n - dd * (s + 1) + 2) / 2;
        break;
      default:
        throw InternalConsistencyError("e = 3 (mod 6) with n/d = 0 (mod 3) cannot occur");
    }
  }
  expect_length(row, cols, "repeated row");
  out.inverse_rows.push_back(base.inverse);
  for (unsigned i = 1; i < d; ++i) out.inverse_rows.push_back(row);
  out.carry_rows.assign(d, base.carries);
  return out;
}

}  // namespace

KasamiBlocks kasami_blocks(unsigned r, unsigned n) {
  const unsigned d = std::gcd(r, n);
  const unsigned quotient = n / d;
  if (quotient % 2 == 0) return even_quotient_blocks(d, quotient);

  const unsigned e = inverse_mod(r / d, quotient);
  if (e % 2 == 0) throw InternalConsistencyError("kasami_blocks needs e odd; reflect first");
  const Gcd1Sequences base = kasami_gcd1_sequences(quotient, e);
  if (d == 1) {
    return KasamiBlocks{base.label, {base.inverse}, {base.carries}, base.formula_weight};
  }
  if (quotient % 3 == 0) return mod3_quotient_blocks(d, quotient, e, base);
  return general_odd_quotient_blocks(d, quotient, e, base);
}

}  // namespace mersexp::detail
