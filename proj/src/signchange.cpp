#include "chowla/signchange.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowla {

Int compute_a0(const QuadraticPoly& poly) {
  if (poly.a < 1) throw std::domain_error("compute_a0: leading coefficient must be >= 1");
  if (poly.disc == 0) throw ExcludedForm("compute_a0: discriminant is zero");
  // floor((|b| + (|disc|+1)/2) / (2a)) + 1 == floor((2|b| + |disc| + 1) / (4a)) + 1,
  // computed exactly over the integers.
  Int num = 2 * abs(poly.b) + abs(poly.disc) + 1;
  return num / (4 * poly.a) + 1;
}

ValueDecomposition decompose_value(const QuadraticPoly& poly, const Int& n) {
  Int v = poly.eval(n);
  if (v < 1) throw std::domain_error("decompose_value: f(n) must be positive");
  SquarefreeParts parts = squarefree_decompose(v);
  return {parts.squarefree, parts.root, lambda_point(parts.squarefree)};
}

ScanOutcome scan_certificate(const QuadraticPoly& poly, const Int& n_limit,
                             std::size_t family_members) {
  if (family_members < 1) throw std::domain_error("scan_certificate: family_members must be positive");
  const Int a0 = compute_a0(poly);  // rejects disc = 0
  if (n_limit < a0) throw std::domain_error("scan_certificate: n_limit below A0");

  std::optional<Witness> first;
  std::optional<Witness> opposite;
  unsigned long usable = 0, skipped = 0;
  for (Int n = a0; n <= n_limit; ++n) {
    if (poly.eval(n) < 1) { ++skipped; continue; }
    ++usable;
    ValueDecomposition dec = decompose_value(poly, n);
    Witness w{n, poly.eval(n), dec.l, dec.m, dec.lambda};
    if (!first) {
      first = w;
    } else if (w.lambda != first->lambda) {
      opposite = w;
      break;
    }
  }

  if (!opposite) {
    return ConstantSoFar{first ? first->lambda : 0, a0, n_limit, usable, skipped};
  }

  SignChangeCertificate cert{poly, a0, {*first, *opposite}, {}, {n_limit, family_members, skipped}};
  for (int i = 0; i < 2; ++i) {
    const Witness& w = cert.witnesses[i];
    if (is_perfect_square(poly.a * w.l)) {
      // Unreachable for n >= A0; squareness here means the threshold is wrong.
      throw std::logic_error("scan_certificate: a*l square at a witness beyond A0");
    }
    cert.families[i] = generate_family(make_seed(poly, w.l, w.n, w.m), family_members);
  }
  return cert;
}

VerifyReport verify_certificate(const SignChangeCertificate& cert) {
  VerifyReport report;
  auto fail = [&report](std::string reason) {
    report.ok = false;
    report.reasons.push_back(std::move(reason));
  };

  const QuadraticPoly& poly = cert.poly;
  if (poly.a < 1) fail("leading coefficient not positive");
  if (poly.disc != poly.b * poly.b - 4 * poly.a * poly.c) fail("stored discriminant mismatch");
  if (poly.disc == 0) {
    fail("discriminant is zero (excluded form)");
    return report;
  }
  if (poly.a >= 1 && cert.a0 != compute_a0(poly)) fail("A0 mismatch");

  if (cert.witnesses[0].lambda == cert.witnesses[1].lambda) fail("witness lambdas equal");
  for (int i = 0; i < 2; ++i) {
    const Witness& w = cert.witnesses[i];
    const std::string tag = "witness " + std::to_string(i) + ": ";
    if (w.n < cert.a0) fail(tag + "n below A0");
    if (poly.eval(w.n) != w.value) fail(tag + "stored value != f(n)");
    if (w.value < 1) { fail(tag + "value not positive"); continue; }
    SquarefreeParts parts = squarefree_decompose(w.value);
    if (parts.squarefree != w.l || parts.root != w.m) fail(tag + "squarefree split mismatch");
    if (lambda_point(parts.squarefree) != w.lambda) fail(tag + "lambda mismatch");
    if (is_perfect_square(poly.a * w.l)) fail(tag + "a*l is a perfect square");
  }

  for (int i = 0; i < 2; ++i) {
    const SolutionFamily& fam = cert.families[i];
    const Witness& w = cert.witnesses[i];
    const std::string tag = "family " + std::to_string(i) + ": ";
    if (!(fam.seed.poly == poly)) fail(tag + "seed polynomial differs from certificate");
    if (fam.seed.l != w.l || fam.seed.n0 != w.n || fam.seed.m0 != w.m) {
      fail(tag + "seed does not match its witness");
    }
    if (fam.seed.t0 != derive_t0(poly, fam.seed.n0)) fail(tag + "seed t0 mismatch");
    if (poly.eval(fam.seed.n0) != fam.seed.l * fam.seed.m0 * fam.seed.m0) {
      fail(tag + "seed equation fails");
    }
    if (fam.pell_n != 16 * poly.a * poly.a * poly.a * fam.seed.l) fail(tag + "Pell modulus mismatch");
    if (fam.fundamental.n != fam.pell_n ||
        fam.fundamental.x * fam.fundamental.x -
                fam.pell_n * fam.fundamental.y * fam.fundamental.y != 1 ||
        fam.fundamental.y < 1) {
      fail(tag + "fundamental does not solve the Pell equation");
    } else if (!is_perfect_square(fam.pell_n)) {
      PellSolution expect = pell_fundamental(fam.pell_n);
      if (expect.x != fam.fundamental.x || expect.y != fam.fundamental.y) {
        fail(tag + "fundamental is not minimal");
      }
    }
    if (fam.members.empty()) fail(tag + "no members");
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
      const FamilyMember& mem = fam.members[j];
      if (mem.n < 1 || mem.m < 0) fail(tag + "member out of range");
      if (!verify_member(poly, fam.seed.l, mem.n, mem.m)) {
        fail(tag + "member " + mem.n.get_str() + " fails f(n) = l*m^2");
      }
      if (j > 0 && !(fam.members[j - 1].n < mem.n)) fail(tag + "members not strictly increasing");
    }
  }
  return report;
}

MonicWitnessResult monic_witness_conclude(const QuadraticPoly& poly, const Int& n_limit) {
  if (poly.a != 1) throw std::domain_error("monic_witness_conclude: polynomial must be monic");
  if (n_limit < 1) throw std::domain_error("monic_witness_conclude: n_limit must be positive");
  const Int a0 = compute_a0(poly);  // rejects disc = 0

  MonicWitnessResult result{std::min(Int(1000), n_limit), std::nullopt};
  for (Int n = 1; n <= result.identity_checked_to; ++n) {
    Int fn = poly.eval(n);
    if (poly.eval(n + 1) * fn != poly.eval(fn + n)) {
      throw std::logic_error("monic_witness_conclude: product identity failed");
    }
  }
  for (Int n = a0; n <= n_limit; ++n) {
    if (poly.eval(n) < 1) continue;
    if (lambda_point(poly.eval(n)) == -1) {
      result.witness = n;
      break;
    }
  }
  return result;
}

std::vector<FamilyMember> prime_square_disc_solutions(const QuadraticPoly& poly, const Int& l,
                                                      std::size_t count) {
  if (count < 1) throw std::domain_error("prime_square_disc_solutions: count must be positive");
  if (l < 1) throw std::domain_error("prime_square_disc_solutions: l must be positive");
  if (!is_prime(poly.a)) {
    throw std::domain_error("prime_square_disc_solutions: leading coefficient must be prime");
  }
  if (poly.disc < 1 || !is_perfect_square(poly.disc)) {
    throw std::domain_error("prime_square_disc_solutions: discriminant must be a positive square");
  }
  const Int p = poly.a;
  const Int q = isqrt(poly.disc);
  const Int pell_n = 4 * p * l;
  if (is_perfect_square(pell_n)) {
    throw PellDegenerate("prime_square_disc_solutions: Pell degenerate (4*p*l is a square)");
  }
  const PellSolution fund = pell_fundamental(pell_n);
  const Int two_p = 2 * p;

  std::vector<FamilyMember> out;
  PellSolution cur = fund;
  constexpr unsigned kIndexBudget = 64;
  for (unsigned k = 1; k <= kIndexBudget && out.size() < count; ++k, cur = pell_next(fund, cur)) {
    for (int sign : {1, -1}) {
      Int num = -poly.b + sign * q * cur.x;
      if (num <= 0 || num % two_p != 0) continue;
      Int n = num / two_p;
      Int m = q * cur.y;
      if (!verify_member(poly, l, n, m)) continue;
      out.push_back({n, m});
      if (out.size() == count) break;
    }
  }
  if (out.empty()) {
    throw NoIntegralSolution("prime_square_disc_solutions: no integral n found within the Pell budget");
  }
  std::sort(out.begin(), out.end(), [](const FamilyMember& x, const FamilyMember& y) { return x.n < y.n; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace chowla
