#pragma once

// Shared test helpers: a parallel loop, a seeded generator and a few
// independent reference computations.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <random>
#include <thread>
#include <vector>

#include "lred/exactlinalg.hpp"
#include "lred/exactnum.hpp"

namespace lred::testing {

template <class F>
void parallel_for(std::size_t count, F&& body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next++) < count;) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  BigInt big(long lo, long hi) { return BigInt(uniform(lo, hi)); }
  IntMatrix matrix(std::size_t n, long k) {
    IntMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = uniform(-k, k);
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

/// Laplace expansion along the first row.
inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    const BigInt term = m(0, c) * cofactor_det(m.minor(0, c));
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

/// Residual norm of {q x} computed by rounding each coordinate directly.
inline Rat naive_residual(std::span<const Rat> x, const BigInt& q, Norm kind) {
  Rat acc = 0;
  for (const Rat& xi : x) {
    const Rat y = q * xi;
    // nearest integer, halves rounding down
    BigInt k = floor_of(Rat(y + Rat(1, 2)));
    if (Rat(y + Rat(1, 2)) == Rat(k)) k -= 1;
    Rat r = y - Rat(k);
    if (r < 0) r = -r;
    if (kind == Norm::L1) acc += r;
    if (kind == Norm::L2) acc += r * r;
    if (kind == Norm::Linf) acc = std::max(acc, r);
  }
  return acc;
}

}  // namespace lred::testing
