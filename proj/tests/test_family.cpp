#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chowla/family.hpp"
#include "oracles.hpp"

using chowla::Int;
using chowla::QuadraticPoly;

namespace {

QuadraticPoly poly(long a, long b, long c) { return QuadraticPoly::make(Int(a), Int(b), Int(c)); }

}  // namespace

TEST_CASE("polynomial construction and evaluation") {
  QuadraticPoly f = poly(2, 3, 1);
  CHECK(f.disc == 1);
  CHECK(f.eval(Int(4)) == 45);
  CHECK(f.eval(Int(-1)) == 0);
  CHECK_THROWS_AS(QuadraticPoly::make(Int(0), Int(1), Int(1)), std::domain_error);
  CHECK_THROWS_AS(QuadraticPoly::make(Int(-2), Int(1), Int(1)), std::domain_error);
}

TEST_CASE("t0 derivation") {
  CHECK(chowla::derive_t0(poly(1, 1, 0), Int(1)) == 3);
  CHECK(chowla::derive_t0(poly(1, 0, 1), Int(2)) == 4);
  CHECK(chowla::derive_t0(poly(2, 3, 1), Int(4)) == 19);
}

TEST_CASE("seed validation") {
  QuadraticPoly f = poly(1, 1, 0);
  chowla::SeedSolution seed = chowla::make_seed(f, Int(2), Int(1), Int(1));
  CHECK(seed.t0 == 3);
  CHECK(seed.t0 * seed.t0 == f.disc + 4 * f.a * seed.l * seed.m0 * seed.m0);
  CHECK_THROWS_AS(chowla::make_seed(f, Int(2), Int(2), Int(1)), std::domain_error);
  CHECK_THROWS_AS(chowla::make_seed(f, Int(0), Int(1), Int(1)), std::domain_error);
  CHECK_THROWS_AS(chowla::make_seed(f, Int(2), Int(1), Int(-1)), std::domain_error);
  // m0 = 0 seeds are legitimate: f(n0) = 0
  chowla::SeedSolution zero = chowla::make_seed(poly(1, 0, -4), Int(3), Int(2), Int(0));
  CHECK(zero.t0 == 4);
}

TEST_CASE("seed scanning: worked cases") {
  QuadraticPoly f = poly(1, 1, 0);
  auto s2 = chowla::find_seed(f, Int(2), Int(10));
  REQUIRE(s2.has_value());
  CHECK(s2->n0 == 1);
  CHECK(s2->m0 == 1);
  CHECK(s2->t0 == 3);

  auto s3 = chowla::find_seed(f, Int(3), Int(10));
  REQUIRE(s3.has_value());
  CHECK(s3->n0 == 3);
  CHECK(s3->m0 == 2);

  // n^2 + 1 is never divisible by 7
  CHECK_FALSE(chowla::find_seed(poly(1, 0, 1), Int(7), Int(50)).has_value());
}

TEST_CASE("member verification") {
  QuadraticPoly f = poly(1, 1, 0);
  CHECK(chowla::verify_member(f, Int(2), Int(49), Int(35)));
  CHECK(chowla::verify_member(f, Int(2), Int(1681), Int(1189)));
  CHECK_FALSE(chowla::verify_member(f, Int(2), Int(2), Int(1)));
  CHECK_FALSE(chowla::verify_member(f, Int(2), Int(49), Int(36)));
}

TEST_CASE("family growth from the square-triangular seed") {
  QuadraticPoly f = poly(1, 1, 0);
  chowla::SeedSolution seed = chowla::make_seed(f, Int(2), Int(1), Int(1));
  chowla::SolutionFamily fam = chowla::generate_family(seed, 5);

  CHECK(fam.pell_n == 32);
  CHECK(fam.fundamental.x == 17);
  CHECK(fam.fundamental.y == 3);

  REQUIRE(fam.members.size() == 5);
  // orbit of (1,1): n = 1, 49, 1681, 57121, 1940449 with matching m
  const long expect_n[] = {1, 49, 1681, 57121, 1940449};
  const long expect_m[] = {1, 35, 1189, 40391, 1372105};
  for (int i = 0; i < 5; ++i) {
    CHECK(fam.members[i].n == expect_n[i]);
    CHECK(fam.members[i].m == expect_m[i]);
    CHECK(chowla::verify_member(f, seed.l, fam.members[i].n, fam.members[i].m));
  }
}

TEST_CASE("family members stay distinct, sorted, verified as they grow") {
  QuadraticPoly f = poly(1, 0, 1);
  chowla::SeedSolution seed = chowla::make_seed(f, Int(5), Int(2), Int(1));
  chowla::SolutionFamily fam = chowla::generate_family(seed, 10);
  REQUIRE(fam.members.size() == 10);
  CHECK(fam.members[0].n == 2);    // the seed itself, via the trivial (1, 0)
  CHECK(fam.members[1].n == 38);   // (-t0, +m0) branch of the fundamental
  CHECK(fam.members[2].n == 682);  // (+t0, +m0) branch of the fundamental
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    CHECK(chowla::verify_member(f, seed.l, fam.members[i].n, fam.members[i].m));
    if (i > 0) CHECK(fam.members[i - 1].n < fam.members[i].n);
  }
}

TEST_CASE("degenerate Pell modulus is rejected") {
  // f(2) = 0 = 1 * 0^2, and l = 1 makes a*l = 1 a perfect square
  QuadraticPoly f = poly(1, 0, -4);
  chowla::SeedSolution seed = chowla::make_seed(f, Int(1), Int(2), Int(0));
  CHECK_THROWS_AS(chowla::generate_family(seed, 3), chowla::PellDegenerate);
}

TEST_CASE("zero discriminant is rejected at the family level") {
  QuadraticPoly f = poly(1, 2, 1);  // (x+1)^2
  chowla::SeedSolution seed = chowla::make_seed(f, Int(1), Int(1), Int(2));  // f(1) = 4 = 1*2^2
  CHECK_THROWS_AS(chowla::generate_family(seed, 3), chowla::ExcludedForm);
}

TEST_CASE("congruence preservation on a random polynomial corpus") {
  std::mt19937 rng(20260813);
  std::uniform_int_distribution<long> da(1, 5), dbc(-20, 20);
  int accepted = 0;
  while (accepted < 25) {
    QuadraticPoly f = poly(da(rng), dbc(rng), dbc(rng));
    if (f.disc == 0) continue;
    // squarefree part of the first positive value
    Int l = 0;
    for (Int n = 1; n <= 50; ++n) {
      if (f.eval(n) >= 1) {
        l = chowla::squarefree_decompose(f.eval(n)).squarefree;
        break;
      }
    }
    if (l == 0 || chowla::is_perfect_square(f.a * l)) continue;
    auto seed = chowla::find_seed(f, l, Int(400));
    if (!seed) continue;
    ++accepted;
    chowla::SolutionFamily fam = chowla::generate_family(*seed, 6);
    const Int two_a = 2 * f.a;
    for (const chowla::FamilyMember& mem : fam.members) {
      CHECK(chowla::verify_member(f, l, mem.n, mem.m));
      bool cong_m = (mem.m - seed->m0) % two_a == 0 || (mem.m + seed->m0) % two_a == 0;
      CHECK(cong_m);
      Int t = chowla::derive_t0(f, mem.n);
      bool cong_t = (t - seed->t0) % two_a == 0 || (t + seed->t0) % two_a == 0;
      CHECK(cong_t);
    }
  }
}

TEST_CASE("family never emits a false solution (brute cross-check)") {
  QuadraticPoly f = poly(1, 1, 0);
  chowla::SeedSolution seed = chowla::make_seed(f, Int(2), Int(1), Int(1));
  chowla::SolutionFamily fam = chowla::generate_family(seed, 8);
  std::set<std::uint64_t> brute;
  for (std::uint64_t n = 1; n <= 2'000'000; ++n) {
    std::uint64_t v = n * (n + 1);
    if (v % 2 == 0 && oracle::is_square_u64(v / 2)) brute.insert(n);
  }
  for (const chowla::FamilyMember& mem : fam.members) {
    if (mem.n <= 2'000'000) CHECK(brute.count(mem.n.get_ui()) == 1);
  }
}
