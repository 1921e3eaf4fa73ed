#pragma once

#include <vector>

#include "chowla/integer_core.hpp"

namespace chowla {

// Periodic continued fraction of sqrt(n): [a0; period...], where the period's
// last term is always 2*a0.
struct CFExpansion {
  Int n;
  Int a0;
  std::vector<Int> period;
};

struct PellSolution {
  Int n;  // modulus of x^2 - n*y^2 = 1
  Int x;
  Int y;

  bool operator==(const PellSolution&) const = default;
};

// Continued fraction of sqrt(n) for non-square n >= 2, by the integer
// recurrence m' = d*a - m, d' = (n - m'^2) / d, a' = floor((a0 + m') / d').
CFExpansion cf_sqrt(const Int& n);

// Fundamental (minimal x, y >= 1) solution of x^2 - n*y^2 = 1, read off the
// first convergent of sqrt(n) that satisfies the equation (the period-end
// convergent; the doubled period when the period length is odd).
PellSolution pell_fundamental(const Int& n);

// Next solution after cur in the fundamental's solution stream:
// x' = x1*x + n*y1*y, y' = x1*y + y1*x.
PellSolution pell_next(const PellSolution& fundamental, const PellSolution& cur);

// k-th solution (k >= 1; k = 1 is the fundamental itself).
PellSolution pell_iterate(const PellSolution& fundamental, unsigned k);

}  // namespace chowla
