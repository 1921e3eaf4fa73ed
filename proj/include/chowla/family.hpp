#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chowla/integer_core.hpp"
#include "chowla/pell.hpp"

namespace chowla {

// f(x) = a*x^2 + b*x + c with a >= 1, plus the cached discriminant b^2 - 4ac.
// Construct through make() (validates); the raw aggregate form exists so that
// parsers and tests can build deliberately broken values.
struct QuadraticPoly {
  Int a;
  Int b;
  Int c;
  Int disc;

  static QuadraticPoly make(Int a, Int b, Int c);

  Int eval(const Int& x) const { return (a * x + b) * x + c; }

  bool operator==(const QuadraticPoly&) const = default;
};

// One representation f(n0) = l * m0^2 together with t0 = 2*a*n0 + b, which
// satisfies t0^2 = disc + 4*a*l*m0^2. The base point every family grows from.
struct SeedSolution {
  QuadraticPoly poly;
  Int l;
  Int n0;
  Int m0;
  Int t0;

  bool operator==(const SeedSolution&) const = default;
};

struct FamilyMember {
  Int n;
  Int m;

  bool operator==(const FamilyMember&) const = default;
};

// A seed plus the Pell machinery that inflates it: modulus 16*a^3*l, the
// fundamental solution (r, s), and the members produced so far (distinct,
// ascending n, every one re-verified against f(n) = l*m^2).
struct SolutionFamily {
  SeedSolution seed;
  Int pell_n;
  PellSolution fundamental;
  std::vector<FamilyMember> members;

  bool operator==(const SolutionFamily&) const = default;
};

Int derive_t0(const QuadraticPoly& poly, const Int& n0);

// Validating constructor: requires l >= 1, m0 >= 0, f(n0) = l * m0^2.
SeedSolution make_seed(const QuadraticPoly& poly, const Int& l, const Int& n0, const Int& m0);

// First n in 1..n_max (skipping n with f(n) < 0) such that f(n) = l * square.
// Plain NotFound comes back as nullopt.
std::optional<SeedSolution> find_seed(const QuadraticPoly& poly, const Int& l, const Int& n_max);

bool verify_member(const QuadraticPoly& poly, const Int& l, const Int& n, const Int& m);

// Grow `count` members from the seed. For each Pell solution (r, s) of
// r^2 - 16*a^3*l*s^2 = 1 (including the trivial (1, 0)) and each sign branch
// (±t0, ±m0), the closed forms
//   m = r^2*m0 + 16*a^3*l*s^2*m0 + 4*a*r*s*t0
//   t = r^2*t0 + 16*a^2*l*s*r*m0 + 16*a^3*l*s^2*t0
// yield a candidate; m is normalized to |m| and t keeps whichever sign makes
// n = (-b + t) / (2a) a positive integer. Candidates failing the exact check
// f(n) = l*m^2 are discarded. Throws ExcludedForm when disc = 0, PellDegenerate
// when 16*a^3*l is a perfect square (equivalently a*l is), and std::logic_error
// if 64 Pell indices cannot fill the requested count.
SolutionFamily generate_family(const SeedSolution& seed, std::size_t count);
SolutionFamily generate_family(const SeedSolution& seed, std::size_t count,
                               unsigned max_pell_index);

}  // namespace chowla
