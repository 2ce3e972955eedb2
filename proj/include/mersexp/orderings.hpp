#pragma once

// Reindexings of length-n cyclic sequences used to expose the structure of
// inverses and carry words.
//
// r-matrix: d = gcd(n, r) rows, n / d columns, entry (i, j) = seq[(i - j r) mod n].
// Rows and columns are numbered from 0. Every position of the sequence occurs
// exactly once, so the reindexing is a permutation.
//
// r-ordering: the d = 1 case, a single row seq[0], seq[-r], seq[-2r], ...

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mersexp/carry.hpp"
#include "mersexp/residue.hpp"

namespace mersexp {

/// Least positive residue of (r/d)^{-1} mod n/d with d = gcd(n, r). Returns 0
/// when n/d = 1 (r a multiple of n).
unsigned e_value(unsigned r, unsigned n);

class RMatrix {
 public:
  /// Rows must be d x n/d for d = gcd(n, r). Throws ParameterError otherwise.
  RMatrix(unsigned n, unsigned r, std::vector<std::vector<int>> rows);

  /// Reindexes a length-n sequence.
  static RMatrix from_sequence(std::span<const int> sequence, unsigned r);

  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  unsigned rows() const { return d_; }
  unsigned cols() const { return n_ / d_; }

  int at(unsigned row, unsigned col) const { return entries_[row * cols() + col]; }
  std::span<const int> row(unsigned i) const {
    return std::span<const int>(entries_).subspan(std::size_t{i} * cols(), cols());
  }
  /// Sequence position of entry (row, col).
  unsigned position(unsigned row, unsigned col) const;

  /// Inverse of from_sequence.
  std::vector<int> to_sequence() const;
  std::vector<std::vector<int>> to_rows() const;
  long sum() const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  unsigned n_;
  unsigned r_;
  unsigned d_;
  std::vector<int> entries_;  // row-major
};

RMatrix to_r_matrix(const BitSequence& a, unsigned r);
RMatrix to_r_matrix(const CarrySequence& c, unsigned r);

/// Reassembles sum_{i,j} M_{i,j} 2^{(i - j r) mod n}. Entries must be 0/1 and the
/// result must not be the all-ones word.
BitSequence from_r_matrix(const RMatrix& m);

/// Reads the carry word back out of an r-matrix of integers.
CarrySequence carry_from_r_matrix(const RMatrix& m);

/// A binary word in r-ordering: entry k is bit (-k r mod n) of the regular word.
/// Only exists for gcd(r, n) = 1.
class ROrderedSeq {
 public:
  ROrderedSeq(unsigned n, unsigned r, std::vector<std::uint8_t> entries);

  static ROrderedSeq from_regular(const BitSequence& a, unsigned r);

  unsigned n() const { return static_cast<unsigned>(entries_.size()); }
  unsigned r() const { return r_; }
  std::span<const std::uint8_t> entries() const { return entries_; }
  std::uint8_t operator[](std::size_t k) const { return entries_[k]; }

  friend bool operator==(const ROrderedSeq&, const ROrderedSeq&) = default;

 private:
  unsigned r_;
  std::vector<std::uint8_t> entries_;
};

/// Bit i of the result is entry (-i e mod n), e = e_value(r, n).
BitSequence regular_from_r_ordered(const ROrderedSeq& a);

}  // namespace mersexp
