#include "chowla/liouville.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace chowla {

LiouvilleSieve::LiouvilleSieve(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw std::domain_error("LiouvilleSieve: limit must be positive");
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw std::domain_error("LiouvilleSieve: limit exceeds the 32-bit sieve range");
  }
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > limit) break;
      spf[i * p] = p;
    }
  }
  sign_.assign(limit + 1, 0);
  prefix_.assign(limit + 1, 0);
  if (limit >= 1) sign_[1] = 1;
  prefix_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    sign_[i] = static_cast<std::int8_t>(-sign_[i / spf[i]]);
    prefix_[i] = prefix_[i - 1] + sign_[i];
  }
}

int LiouvilleSieve::sign(std::uint64_t n) const {
  if (n < 1 || n > limit_) throw std::domain_error("LiouvilleSieve::sign: n out of range");
  return sign_[n];
}

std::int64_t LiouvilleSieve::prefix(std::uint64_t x) const {
  if (x < 1 || x > limit_) throw std::domain_error("LiouvilleSieve::prefix: x out of range");
  return prefix_[x];
}

int lambda_point(const Int& n) {
  if (n < 1) throw std::domain_error("lambda_point: argument must be positive");
  return factorize(n).multiplicity() % 2 == 0 ? 1 : -1;
}

std::int64_t summatory(std::uint64_t x, const LiouvilleSieve& sieve) {
  return sieve.prefix(x);
}

double dirichlet_partial(double s, std::uint64_t x, const LiouvilleSieve& sieve) {
  if (!(s > 1.0)) throw std::domain_error("dirichlet_partial: requires s > 1");
  if (x < 1 || x > sieve.limit()) throw std::domain_error("dirichlet_partial: x out of sieve range");
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    double term = sieve.sign(n) * std::pow(static_cast<double>(n), -s);
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double dirichlet_partial(double s, std::uint64_t x) {
  LiouvilleSieve sieve(x);
  return dirichlet_partial(s, x, sieve);
}

Int ap_sign_flip(const Int& n0, const Int& l) {
  if (n0 < 1) throw std::domain_error("ap_sign_flip: n0 must be positive");
  if (l < 1) throw std::domain_error("ap_sign_flip: step must be positive");
  const int start = lambda_point(n0);
  ProgressionPrime pp = find_prime_in_progression(l, 1);
  const Int cap = pp.steps * n0;  // lambda(n0 * p) = -lambda(n0) at k = m * n0
  Int value = n0;
  for (Int k = 1; k <= cap; ++k) {
    value += l;
    if (lambda_point(value) != start) return k;
  }
  throw std::logic_error("ap_sign_flip: guaranteed flip not found within its bound");
}

}  // namespace chowla
