#include "mersexp/orderings.hpp"

#include <algorithm>
#include <numeric>

#include "modular_int.hpp"

namespace mersexp {

unsigned e_value(unsigned r, unsigned n) {
  if (n == 0 || r == 0) throw ParameterError("e_value needs positive r and n");
  const unsigned d = std::gcd(n, r);
  const unsigned modulus = n / d;
  if (modulus == 1) return 0;
  return detail::inverse_mod(r / d % modulus, modulus);
}

RMatrix::RMatrix(unsigned n, unsigned r, std::vector<std::vector<int>> rows)
    : n_(n), r_(r), d_(n == 0 || r == 0 ? 0 : std::gcd(n, r)) {
  if (n < 2 || r == 0) throw ParameterError("r-matrix needs n >= 2 and r >= 1");
  if (rows.size() != d_) {
    throw ParameterError("r-matrix for n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                         " needs " + std::to_string(d_) + " rows, got " +
                         std::to_string(rows.size()));
  }
  entries_.reserve(n);
  for (const auto& row : rows) {
    if (row.size() != cols()) {
      throw ParameterError("r-matrix row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(cols()));
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RMatrix RMatrix::from_sequence(std::span<const int> sequence, unsigned r) {
  const auto n = static_cast<unsigned>(sequence.size());
  if (n < 2 || r == 0) throw ParameterError("r-matrix needs n >= 2 and r >= 1");
  const unsigned d = std::gcd(n, r);
  std::vector<std::vector<int>> rows(d, std::vector<int>(n / d));
  const unsigned step = r % n;
  for (unsigned i = 0; i < d; ++i) {
    unsigned pos = i;
    for (unsigned j = 0; j < n / d; ++j) {
      rows[i][j] = sequence[pos];
      pos = (pos + n - step) % n;
    }
  }
  return RMatrix(n, r, std::move(rows));
}

unsigned RMatrix::position(unsigned row, unsigned col) const {
  const unsigned long long back = (static_cast<unsigned long long>(col) * (r_ % n_)) % n_;
  return static_cast<unsigned>((row + n_ - back) % n_);
}

std::vector<int> RMatrix::to_sequence() const {
  std::vector<int> sequence(n_);
  for (unsigned i = 0; i < rows(); ++i) {
    for (unsigned j = 0; j < cols(); ++j) sequence[position(i, j)] = at(i, j);
  }
  return sequence;
}

std::vector<std::vector<int>> RMatrix::to_rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(rows());
  for (unsigned i = 0; i < rows(); ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

long RMatrix::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

RMatrix to_r_matrix(const BitSequence& a, unsigned r) {
  std::vector<int> sequence(a.bits().begin(), a.bits().end());
  return RMatrix::from_sequence(sequence, r);
}

RMatrix to_r_matrix(const CarrySequence& c, unsigned r) {
  std::vector<int> sequence(c.carries().begin(), c.carries().end());
  return RMatrix::from_sequence(sequence, r);
}

BitSequence from_r_matrix(const RMatrix& m) {
  const auto sequence = m.to_sequence();
  std::vector<std::uint8_t> bits(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] != 0 && sequence[i] != 1) {
      throw ParameterError("r-matrix entries must be 0 or 1 to form a binary word");
    }
    bits[i] = static_cast<std::uint8_t>(sequence[i]);
  }
  return BitSequence(m.n(), std::move(bits));
}

CarrySequence carry_from_r_matrix(const RMatrix& m) {
  const auto sequence = m.to_sequence();
  return CarrySequence(std::vector<long>(sequence.begin(), sequence.end()));
}

ROrderedSeq::ROrderedSeq(unsigned n, unsigned r, std::vector<std::uint8_t> entries)
    : r_(r), entries_(std::move(entries)) {
  if (n < 2 || entries_.size() != n) throw ParameterError("r-ordered sequence must have length n >= 2");
  if (r == 0 || std::gcd(n, r) != 1) {
    throw ParameterError("r-ordering requires gcd(r, n) = 1 (r=" + std::to_string(r) +
                         ", n=" + std::to_string(n) + ")");
  }
  if (std::any_of(entries_.begin(), entries_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw ParameterError("r-ordered entries must be 0 or 1");
  }
}

ROrderedSeq ROrderedSeq::from_regular(const BitSequence& a, unsigned r) {
  const unsigned n = a.n();
  if (r == 0 || std::gcd(n, r) != 1) throw ParameterError("r-ordering requires gcd(r, n) = 1");
  std::vector<std::uint8_t> entries(n);
  const unsigned step = r % n;
  unsigned pos = 0;
  for (unsigned k = 0; k < n; ++k) {
    entries[k] = a[pos];
    pos = (pos + n - step) % n;
  }
  return ROrderedSeq(n, r, std::move(entries));
}

BitSequence regular_from_r_ordered(const ROrderedSeq& a) {
  const unsigned n = a.n();
  const unsigned e = e_value(a.r(), n);
  std::vector<std::uint8_t> bits(n);
  for (unsigned i = 0; i < n; ++i) {
    const unsigned long long k = (static_cast<unsigned long long>(n - i % n) % n * e) % n;
    bits[i] = a[static_cast<std::size_t>(k)];
  }
  return BitSequence(n, std::move(bits));
}

}  // namespace mersexp
