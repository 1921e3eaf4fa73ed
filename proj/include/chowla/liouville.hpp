#pragma once

#include <cstdint>
#include <vector>

#include "chowla/integer_core.hpp"

namespace chowla {

// Table of lambda(n) = (-1)^Omega(n) for 1 <= n <= limit, plus running sums
// L(x) = sum_{n<=x} lambda(n). Built with a smallest-prime-factor sieve and the
// propagation lambda(n) = -lambda(n / spf(n)). Memory: 1 byte per sign plus
// 8 bytes per prefix entry (the 4-byte spf table is transient), so a limit of
// 10^8 needs about 0.9 GB; limits must fit in 32 bits.
class LiouvilleSieve {
 public:
  explicit LiouvilleSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  // lambda(n), 1 <= n <= limit.
  int sign(std::uint64_t n) const;

  // L(x), 1 <= x <= limit.
  std::int64_t prefix(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::int8_t> sign_;
  std::vector<std::int64_t> prefix_;
};

// lambda(n) for a single n >= 1, via full factorization (arbitrary precision).
int lambda_point(const Int& n);

// L(x) looked up from a prebuilt sieve; x must not exceed the sieve limit.
std::int64_t summatory(std::uint64_t x, const LiouvilleSieve& sieve);

// Partial Dirichlet sum  sum_{n<=x} lambda(n) / n^s  for s > 1, accumulated in
// ascending n with Kahan compensation. Converges to zeta(2s)/zeta(s); at s = 2
// the limit is pi^2/15 and the tail beyond x is below 1/x.
double dirichlet_partial(double s, std::uint64_t x);
double dirichlet_partial(double s, std::uint64_t x, const LiouvilleSieve& sieve);

// Smallest k >= 1 with lambda(n0 + l*k) != lambda(n0). Always exists: writing
// p = l*m + 1 for the least prime p ≡ 1 (mod l), k = m*n0 flips the sign, so
// the scan is capped there and overrunning the cap is an internal defect.
Int ap_sign_flip(const Int& n0, const Int& l);

}  // namespace chowla
