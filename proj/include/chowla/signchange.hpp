#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chowla/family.hpp"
#include "chowla/liouville.hpp"

namespace chowla {

// Threshold A0 = floor((|b| + (|disc|+1)/2) / (2a)) + 1: beyond it, every
// decomposition f(n) = l*m^2 has a*l non-square, which is what lets a single
// opposite-sign pair of values certify infinitely many sign changes.
Int compute_a0(const QuadraticPoly& poly);

struct ValueDecomposition {
  Int l;       // squarefree part of f(n)
  Int m;       // f(n) = l * m^2
  int lambda;  // lambda(f(n)) = lambda(l)
};

// Squarefree split of f(n); requires f(n) >= 1.
ValueDecomposition decompose_value(const QuadraticPoly& poly, const Int& n);

struct Witness {
  Int n;
  Int value;  // f(n)
  Int l;
  Int m;
  int lambda;

  bool operator==(const Witness&) const = default;
};

struct ScanInfo {
  Int scan_limit;             // highest n scanned
  std::size_t family_count;   // members requested per family
  unsigned long skipped;      // scanned n with f(n) < 1
};

// Two opposite-sign witnesses at n >= A0 plus one verified infinite family per
// witness. scan_info records how the certificate was produced; it does not
// travel in the canonical JSON form and is ignored by equality.
struct SignChangeCertificate {
  QuadraticPoly poly;
  Int a0;
  std::array<Witness, 2> witnesses;
  std::array<SolutionFamily, 2> families;
  ScanInfo scan_info{};

  bool operator==(const SignChangeCertificate& other) const {
    return poly == other.poly && a0 == other.a0 && witnesses == other.witnesses &&
           families == other.families;
  }
};

// Negative-but-valid scan outcome: every usable value in [A0, scan limit] had
// the same lambda (sign = 0 when no usable value exists at all).
struct ConstantSoFar {
  int sign;
  Int scanned_from;
  Int scanned_to;
  unsigned long usable_points;
  unsigned long skipped;
};

using ScanOutcome = std::variant<SignChangeCertificate, ConstantSoFar>;

// Scan n = A0..n_limit (skipping f(n) < 1), decompose each value, and stop at
// the first pair of opposite lambdas; the pair is lexicographically first, so
// reruns are reproducible. Throws ExcludedForm when disc = 0.
ScanOutcome scan_certificate(const QuadraticPoly& poly, const Int& n_limit,
                             std::size_t family_members = 6);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> reasons;

  explicit operator bool() const { return ok; }
};

// Recheck every claim in the certificate from scratch: discriminant, A0,
// witness decompositions and lambdas, opposite signs, a*l non-squareness,
// seed/witness linkage, Pell modulus and fundamental, and the exact member
// equations. Collects all failures rather than stopping at the first.
VerifyReport verify_certificate(const SignChangeCertificate& cert);

struct MonicWitnessResult {
  Int identity_checked_to;     // f(n)f(n+1) = f(f(n)+n) verified on 1..this
  std::optional<Int> witness;  // first n >= A0 with f(n) >= 1, lambda = -1
};

// Monic-only shortcut: the product identity chains any lambda = -1 value to
// infinitely many more, so one witness suffices. Requires a = 1.
MonicWitnessResult monic_witness_conclude(const QuadraticPoly& poly, const Int& n_limit);

// For prime leading coefficient p and positive square discriminant q^2:
// candidates (qX, qY) from solutions of X^2 - 4*p*l*Y^2 = 1 give
// n = (-b ± qX) / (2p) whenever that is a positive integer; members (n, qY)
// are verified exactly. Throws PellDegenerate when 4*p*l is a square and
// NoIntegralSolution when 64 Pell indices produce no integral n.
std::vector<FamilyMember> prime_square_disc_solutions(const QuadraticPoly& poly, const Int& l,
                                                      std::size_t count);

}  // namespace chowla
