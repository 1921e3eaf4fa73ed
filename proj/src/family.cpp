#include "chowla/family.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chowla {

QuadraticPoly QuadraticPoly::make(Int a, Int b, Int c) {
  if (a < 1) throw std::domain_error("QuadraticPoly: leading coefficient must be >= 1");
  Int disc = b * b - 4 * a * c;
  return {std::move(a), std::move(b), std::move(c), std::move(disc)};
}

Int derive_t0(const QuadraticPoly& poly, const Int& n0) { return 2 * poly.a * n0 + poly.b; }

SeedSolution make_seed(const QuadraticPoly& poly, const Int& l, const Int& n0, const Int& m0) {
  if (l < 1) throw std::domain_error("make_seed: l must be positive");
  if (m0 < 0) throw std::domain_error("make_seed: m0 must be non-negative");
  if (poly.eval(n0) != l * m0 * m0) throw std::domain_error("make_seed: f(n0) != l * m0^2");
  SeedSolution seed{poly, l, n0, m0, derive_t0(poly, n0)};
  if (seed.t0 * seed.t0 != poly.disc + 4 * poly.a * l * m0 * m0) {
    throw std::logic_error("make_seed: t0 identity failed");  // algebraically impossible
  }
  return seed;
}

std::optional<SeedSolution> find_seed(const QuadraticPoly& poly, const Int& l, const Int& n_max) {
  if (l < 1) throw std::domain_error("find_seed: l must be positive");
  if (n_max < 1) throw std::domain_error("find_seed: n_max must be positive");
  for (Int n = 1; n <= n_max; ++n) {
    Int v = poly.eval(n);
    if (v < 0 || v % l != 0) continue;
    Int q = v / l;
    if (!is_perfect_square(q)) continue;
    return make_seed(poly, l, n, isqrt(q));
  }
  return std::nullopt;
}

bool verify_member(const QuadraticPoly& poly, const Int& l, const Int& n, const Int& m) {
  return poly.eval(n) == l * m * m;
}

SolutionFamily generate_family(const SeedSolution& seed, std::size_t count) {
  return generate_family(seed, count, 64);
}

SolutionFamily generate_family(const SeedSolution& seed, std::size_t count,
                               unsigned max_pell_index) {
  const QuadraticPoly& poly = seed.poly;
  const Int& a = poly.a;
  const Int& l = seed.l;
  if (count < 1) throw std::domain_error("generate_family: count must be positive");
  if (poly.disc == 0) throw ExcludedForm("generate_family: discriminant is zero");
  if (is_perfect_square(a * l)) {
    throw PellDegenerate("generate_family: Pell degenerate (a*l is a perfect square)");
  }
  const Int pell_n = 16 * a * a * a * l;  // square exactly when a*l is
  const PellSolution fund = pell_fundamental(pell_n);
  const Int two_a = 2 * a;
  const Int c16a3l = pell_n, c16a2l = 16 * a * a * l, c4a = 4 * a;

  std::map<Int, Int> members;  // n -> m, ascending
  Int r = 1, s = 0;
  // Candidate |t| values only grow with the Pell index once past transient
  // small-k dips, so generation can stop after the latest index produced
  // nothing at or below the cutoff twice in a row.
  unsigned quiet_indices = 0;
  for (unsigned k = 0; k <= max_pell_index; ++k) {
    if (k > 0) {
      Int r_next = fund.x * r + pell_n * fund.y * s;
      Int s_next = fund.x * s + fund.y * r;
      r = std::move(r_next);
      s = std::move(s_next);
    }
    const Int r2 = r * r, s2 = s * s;
    bool produced_small = false;
    Int cutoff = -1;
    if (members.size() >= count) {
      auto nth = members.begin();
      std::advance(nth, count - 1);
      cutoff = two_a * nth->first + poly.b;  // t of the count-th smallest n
    }
    for (int sign_t : {1, -1}) {
      for (int sign_m : {1, -1}) {
        if (sign_t < 0 && seed.t0 == 0) continue;
        if (sign_m < 0 && seed.m0 == 0) continue;
        const Int t0 = sign_t * seed.t0;
        const Int m0 = sign_m * seed.m0;
        const Int m_raw = r2 * m0 + c16a3l * s2 * m0 + c4a * r * s * t0;
        const Int t_raw = r2 * t0 + c16a2l * s * r * m0 + c16a3l * s2 * t0;
        for (int sign : {1, -1}) {
          if (sign < 0 && t_raw == 0) continue;
          const Int t = sign * t_raw;
          const Int num = t - poly.b;
          if (num <= 0 || num % two_a != 0) continue;
          const Int n = num / two_a;
          if (n < 1) continue;
          const Int m = abs(m_raw);
          if (!verify_member(poly, l, n, m)) continue;
          members.emplace(n, m);
          if (cutoff >= 0 && t <= cutoff) produced_small = true;
        }
        if (cutoff >= 0 && abs(t_raw) <= cutoff) produced_small = true;
      }
    }
    if (members.size() >= count) {
      quiet_indices = produced_small ? 0 : quiet_indices + 1;
      if (quiet_indices >= 2) break;
    }
  }
  if (members.size() < count) {
    throw std::logic_error("generate_family: Pell index budget exhausted before count members");
  }
  SolutionFamily family{seed, pell_n, fund, {}};
  family.members.reserve(count);
  for (const auto& [n, m] : members) {
    if (family.members.size() == count) break;
    family.members.push_back({n, m});
  }
  return family;
}

}  // namespace chowla
