#pragma once

// Block tables for the Kasami inverse and its carry word, in r-matrix form.

#include <initializer_list>
#include <vector>

#include "mersexp/closed_form.hpp"

namespace mersexp::detail {

using Word = std::vector<int>;

struct Run {
  Word block;
  long repeat = 1;
};

/// Concatenates runs. A negative repeat count means the case table does not
/// apply and raises InternalConsistencyError.
Word assemble(std::initializer_list<Run> runs);

/// first, 1 - first, first, ... of the given length.
Word alternating(int first, long length);

struct KasamiBlocks {
  CaseLabel label;
  std::vector<Word> inverse_rows;  // r-matrix of K_r^{-1}
  std::vector<Word> carry_rows;    // r-matrix of its carry word for s = 1
  long formula_weight;
};

/// r-ordered inverse of K_r mod 2^m - 1 (gcd(r, m) = 1, m odd) given e odd.
struct Gcd1Sequences {
  CaseLabel label;
  Word inverse;
  Word carries;
  long formula_weight;
};
Gcd1Sequences kasami_gcd1_sequences(unsigned m, unsigned e);

/// Requires K_r invertible, 1 <= r < n, and e odd whenever n/d is odd.
KasamiBlocks kasami_blocks(unsigned r, unsigned n);

}  // namespace mersexp::detail
