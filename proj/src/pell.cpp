#include "chowla/pell.hpp"

#include <stdexcept>
#include <utility>

namespace chowla {

namespace {

void require_pell_modulus(const Int& n) {
  if (n < 2) throw std::domain_error("pell: modulus must be >= 2");
  if (is_perfect_square(n)) throw PellDegenerate("pell: modulus is a perfect square");
}

}  // namespace

CFExpansion cf_sqrt(const Int& n) {
  require_pell_modulus(n);
  CFExpansion out{n, isqrt(n), {}};
  const Int two_a0 = 2 * out.a0;
  Int m = 0, d = 1, a = out.a0;
  do {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (out.a0 + m) / d;
    out.period.push_back(a);
  } while (a != two_a0);
  return out;
}

PellSolution pell_fundamental(const Int& n) {
  require_pell_modulus(n);
  const Int a0 = isqrt(n);
  // Convergents h/k of sqrt(n); the minimal solution is the first convergent
  // on which the form evaluates to +1, so testing each term as it streams out
  // of the recurrence handles even and odd period lengths uniformly.
  Int h_prev = 1, h = a0, k_prev = 0, k = 1;
  Int m = 0, d = 1, a = a0;
  constexpr unsigned long kTermCap = 10'000'000;
  for (unsigned long i = 0; i < kTermCap; ++i) {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = std::exchange(h, h_next);
    k_prev = std::exchange(k, k_next);
    if (h_prev * h_prev - n * k_prev * k_prev == 1) return {n, h_prev, k_prev};
  }
  throw SearchBudgetExceeded("pell_fundamental: continued fraction term cap reached");
}

PellSolution pell_next(const PellSolution& fundamental, const PellSolution& cur) {
  const Int& n = fundamental.n;
  return {n, fundamental.x * cur.x + n * fundamental.y * cur.y,
          fundamental.x * cur.y + fundamental.y * cur.x};
}

PellSolution pell_iterate(const PellSolution& fundamental, unsigned k) {
  if (k < 1) throw std::domain_error("pell_iterate: k must be >= 1");
  if (fundamental.x * fundamental.x - fundamental.n * fundamental.y * fundamental.y != 1 ||
      fundamental.y < 1) {
    throw std::domain_error("pell_iterate: not a Pell solution");
  }
  PellSolution cur = fundamental;
  for (unsigned i = 1; i < k; ++i) cur = pell_next(fundamental, cur);
  return cur;
}

}  // namespace chowla
