#include <algorithm>
#include <thread>

#include "mersexp/errors.hpp"
#include "mersexp/sbox.hpp"

namespace mersexp {

namespace {

void check_exponent(std::uint64_t l, const FieldContext& ctx) {
  if (l < 1 || l > ctx.order()) {
    throw ParameterError("exponent " + std::to_string(l) + " outside [1, 2^" +
                         std::to_string(ctx.n()) + "-1]");
  }
}

std::uint64_t max_count_for(const std::vector<std::uint32_t>& table, std::uint32_t a,
                            std::vector<std::uint32_t>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  std::uint32_t best = 0;
  const auto size = static_cast<std::uint32_t>(table.size());
  for (std::uint32_t x = 0; x < size; ++x) {
    const std::uint32_t c = ++counts[table[x] ^ table[x ^ a]];
    best = std::max(best, c);
  }
  return best;
}

}  // namespace

std::vector<std::uint64_t> difference_counts(std::uint64_t l, std::uint32_t a,
                                             const FieldContext& ctx) {
  check_exponent(l, ctx);
  if (a == 0 || a >= ctx.size()) throw ParameterError("difference a must be a nonzero element");
  const auto table = ctx.monomial_table(l);
  std::vector<std::uint64_t> counts(ctx.size(), 0);
  for (std::uint32_t x = 0; x < table.size(); ++x) ++counts[table[x] ^ table[x ^ a]];
  return counts;
}

std::uint64_t differential_uniformity(std::uint64_t l, const FieldContext& ctx, unsigned threads) {
  check_exponent(l, ctx);
  const auto table = ctx.monomial_table(l);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, ctx.order()));

  std::vector<std::uint64_t> worker_max(threads, 0);
  auto work = [&](unsigned w) {
    std::vector<std::uint32_t> counts(ctx.size());
    std::uint64_t best = 0;
    for (std::uint64_t a = 1 + w; a < ctx.size(); a += threads) {
      best = std::max(best, max_count_for(table, static_cast<std::uint32_t>(a), counts));
    }
    worker_max[w] = best;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return *std::max_element(worker_max.begin(), worker_max.end());
}

bool is_apn(std::uint64_t l, const FieldContext& ctx, unsigned threads) {
  return differential_uniformity(l, ctx, threads) == 2;
}

bool verify_compositional_inverse(std::uint64_t l, std::uint64_t l_inv, const FieldContext& ctx) {
  check_exponent(l, ctx);
  check_exponent(l_inv, ctx);
  bool composes = true;
  for (std::uint64_t x = 0; x < ctx.size() && composes; ++x) {
    const auto v = static_cast<std::uint32_t>(x);
    composes = ctx.pow(ctx.pow(v, l), l_inv) == v;
  }
  const mpz_class product = mpz_class(std::to_string(l)) * mpz_class(std::to_string(l_inv));
  const bool congruent = reduce_mod_mersenne(product, ctx.n()) == 1;
  if (composes != congruent) {
    throw InternalConsistencyError("compositional check and l*l_inv = 1 disagree for l=" +
                                   std::to_string(l) + ", l_inv=" + std::to_string(l_inv));
  }
  return composes;
}

}  // namespace mersexp
