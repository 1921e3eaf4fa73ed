#include "chowla/integer_core.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace chowla {

namespace {

constexpr unsigned long kSmallPrimeLimit = 4096;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> table = [] {
    std::vector<bool> composite(kSmallPrimeLimit + 1, false);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i <= kSmallPrimeLimit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (unsigned long j = i * i; j <= kSmallPrimeLimit; j += i) composite[j] = true;
    }
    return primes;
  }();
  return table;
}

// ---- native u64 path -------------------------------------------------------

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  // Deterministic for all 64-bit inputs with this witness set.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

// Brent's cycle variant of Pollard rho. Returns 0 once the shared budget runs dry.
uint64_t rho_brent_u64(uint64_t n, unsigned long& budget) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1; c < 64; ++c) {
    uint64_t y = 2, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
      for (uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        uint64_t lim = std::min(m, r - k);
        if (budget < lim) { budget = 0; return 0; }
        budget -= lim;
        for (uint64_t i = 0; i < lim; ++i) {
          y = (mulmod_u64(y, y, n) + c) % n;
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        if (budget == 0) return 0;
        --budget;
        ys = (mulmod_u64(ys, ys, n) + c) % n;
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
  return 0;
}

void factor_u64_into(uint64_t n, std::map<Int, unsigned>& out, unsigned long& budget) {
  for (unsigned long p : small_primes()) {
    if (p * p > n) break;
    while (n % p == 0) { ++out[Int(static_cast<unsigned long>(p))]; n /= p; }
  }
  if (n == 1) return;
  if (is_prime_u64(n)) { ++out[Int(static_cast<unsigned long>(n))]; return; }
  uint64_t d = rho_brent_u64(n, budget);
  if (d == 0 || d == n) throw FactoringGaveUp("factoring gave up on " + Int(static_cast<unsigned long>(n)).get_str());
  factor_u64_into(d, out, budget);
  factor_u64_into(n / d, out, budget);
}

// ---- arbitrary-precision path ----------------------------------------------

Int rho_brent_mpz(const Int& n, unsigned long& budget) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1; c < 64; ++c) {
    Int y = 2, g = 1, q = 1, x, ys;
    unsigned long m = 128, r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        if (budget < lim) { budget = 0; return 0; }
        budget -= lim;
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        if (budget == 0) return 0;
        --budget;
        ys = (ys * ys + c) % n;
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
  }
  return 0;
}

void factor_mpz_into(Int n, std::map<Int, unsigned>& out, unsigned long& budget) {
  for (unsigned long p : small_primes()) {
    if (Int(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) { ++out[Int(p)]; n /= p; }
  }
  if (n == 1) return;
  if (n.fits_ulong_p()) { factor_u64_into(n.get_ui(), out, budget); return; }
  if (is_prime(n)) { ++out[n]; return; }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    // Rho converges slowly on perfect powers; peel the root directly.
    for (unsigned long k = 2;; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
        std::map<Int, unsigned> base;
        factor_mpz_into(root, base, budget);
        for (const auto& [p, e] : base) out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  Int d = rho_brent_mpz(n, budget);
  if (d == 0 || d == n) throw FactoringGaveUp("factoring gave up on " + n.get_str());
  factor_mpz_into(d, out, budget);
  factor_mpz_into(n / d, out, budget);
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

unsigned long Factorization::multiplicity() const {
  unsigned long total = 0;
  for (const auto& [p, e] : factors) total += e;
  return total;
}

Factorization factorize(const Int& n) { return factorize(n, FactorBudget{}); }

Factorization factorize(const Int& n, const FactorBudget& budget) {
  if (n < 1) throw std::domain_error("factorize: argument must be positive");
  Factorization result{n, {}};
  unsigned long iterations = budget.rho_iterations;
  if (n.fits_ulong_p()) {
    factor_u64_into(n.get_ui(), result.factors, iterations);
  } else {
    factor_mpz_into(n, result.factors, iterations);
  }
  Int check = 1;
  for (const auto& [p, e] : result.factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    check *= pe;
  }
  if (check != n) throw std::logic_error("factorize: product of factors does not recompose the input");
  return result;
}

SquarefreeParts squarefree_decompose(const Int& n) {
  return squarefree_decompose(n, FactorBudget{});
}

SquarefreeParts squarefree_decompose(const Int& n, const FactorBudget& budget) {
  Factorization f = factorize(n, budget);
  SquarefreeParts parts{1, 1};
  for (const auto& [p, e] : f.factors) {
    if (e % 2 == 1) parts.squarefree *= p;
    Int half;
    mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
    parts.root *= half;
  }
  return parts;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  d >>= r;
  auto is_witness = [&](const Int& a) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) return false;
    }
    return true;
  };
  static const Int kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) {
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
      if (is_witness(Int(a))) return false;
    }
    return true;
  }
  // Bases derived from the input itself keep repeated calls order-independent.
  uint64_t state = 0x2545f4914f6cdd1dull ^ mpz_get_ui(n.get_mpz_t());
  for (int round = 0; round < 48; ++round) {
    Int a = 2 + Int(splitmix64(state)) % (n - 3);
    if (is_witness(a)) return false;
  }
  return true;
}

ProgressionPrime find_prime_in_progression(const Int& l, const Int& residue) {
  if (l < 1) throw std::domain_error("find_prime_in_progression: modulus must be positive");
  Int g;
  mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), residue.get_mpz_t());
  if (g > 1) {
    // Every candidate is divisible by g; only residue itself (or l when
    // residue = 0) can still be prime.
    if (residue > 1 && is_prime(residue)) return {residue, 0};
    if (residue == 0 && is_prime(l)) return {l, 1};
    throw std::domain_error("find_prime_in_progression: progression has no primes (gcd > 1)");
  }
  constexpr unsigned long kStepCap = 2'000'000;
  Int candidate = residue;
  for (unsigned long k = 0; k <= kStepCap; ++k, candidate += l) {
    if (candidate > 1 && is_prime(candidate)) return {candidate, Int(k)};
  }
  throw SearchBudgetExceeded("find_prime_in_progression: step cap reached");
}

}  // namespace chowla
