#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>

#include "chowla/errors.hpp"

namespace chowla {

using Int = mpz_class;

// Exact floor of sqrt(n). Throws std::domain_error for n < 0.
Int isqrt(const Int& n);

// True iff n = k^2 for some integer k >= 0. Negative n is never a square.
bool is_perfect_square(const Int& n);

struct Factorization {
  Int value;
  std::map<Int, unsigned> factors;  // prime -> exponent, primes ascending

  // Omega(value): number of prime factors counted with multiplicity.
  unsigned long multiplicity() const;
};

struct FactorBudget {
  // Total rho iterations across all recursive splits before giving up.
  unsigned long rho_iterations = 20'000'000;
};

// Full prime factorization of n >= 1 (n = 1 gives an empty factor map).
// Small primes are peeled by trial division against a fixed table, the rest by
// Brent's variant of Pollard rho; inputs whose cofactors outlast the budget
// raise FactoringGaveUp rather than returning a partial answer.
Factorization factorize(const Int& n);
Factorization factorize(const Int& n, const FactorBudget& budget);

struct SquarefreeParts {
  Int squarefree;  // l: product of primes with odd exponent
  Int root;        // m: n = l * m^2
};

// Unique decomposition n = l * m^2 with l squarefree, for n >= 1.
SquarefreeParts squarefree_decompose(const Int& n);
SquarefreeParts squarefree_decompose(const Int& n, const FactorBudget& budget);

// Miller-Rabin primality. Deterministic (12-prime witness set) for
// n < 3,317,044,064,679,887,385,961,981; above that, 48 rounds with bases
// derived deterministically from n, error probability < 2^-64.
bool is_prime(const Int& n);

struct ProgressionPrime {
  Int prime;  // smallest prime > 1 congruent to residue mod l
  Int steps;  // (prime - residue) / l
};

// Smallest prime p ≡ residue (mod l) with p > 1, walking the progression
// upward from residue. Requires l >= 1. When gcd(l, residue) > 1 the
// progression contains at most one prime candidate; if even that fails the
// call throws std::domain_error. A step cap guards the gcd = 1 search
// (SearchBudgetExceeded), though Dirichlet guarantees termination.
ProgressionPrime find_prime_in_progression(const Int& l, const Int& residue);

}  // namespace chowla
