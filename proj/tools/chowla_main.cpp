#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <variant>

#include "chowla/certificate_json.hpp"
#include "chowla/signchange.hpp"

using chowla::Int;
using chowla::QuadraticPoly;

namespace {

// Exit code contract: 0 success, 1 negative-but-valid outcome (nothing found
// within a stated budget), 2 usage or domain errors.
constexpr int kOk = 0;
constexpr int kNotFound = 1;
constexpr int kUsage = 2;

Int parse_int(std::string text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty integer field");
  text = text.substr(first, last - first + 1);
  if (text[0] == '+') text.erase(0, 1);
  return Int(text);  // throws std::invalid_argument on anything non-decimal
}

std::vector<Int> parse_csv_ints(const std::string& text, std::size_t count, const char* what) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != count) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) +
                                " comma-separated integers");
  }
  return out;
}

QuadraticPoly parse_poly(const std::string& text) {
  std::vector<Int> v = parse_csv_ints(text, 3, "--poly");
  return QuadraticPoly::make(v[0], v[1], v[2]);
}

std::string sign_str(int lambda) { return lambda > 0 ? "+1" : "-1"; }

void print_witness(const chowla::Witness& w) {
  std::cout << "witness n=" << w.n << " value=" << w.value << " l=" << w.l << " m=" << w.m
            << " lambda=" << sign_str(w.lambda) << "\n";
}

void print_family_text(const chowla::SolutionFamily& fam) {
  std::cout << "family l=" << fam.seed.l << " seed n0=" << fam.seed.n0 << " m0=" << fam.seed.m0
            << " t0=" << fam.seed.t0 << " pellN=" << fam.pell_n << " r=" << fam.fundamental.x
            << " s=" << fam.fundamental.y << "\n";
  for (const chowla::FamilyMember& mem : fam.members) {
    std::cout << "n=" << mem.n << " m=" << mem.m << "\n";
  }
}

std::uint64_t default_sieve_limit() {
  std::uint64_t limit = 1'000'000;
  if (const char* env = std::getenv("CHOWLA_SIEVE_LIMIT")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed >= 1) limit = parsed;
  }
  return limit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouville lambda, Pell families, and sign-change certificates for f(n) = a n^2 + b n + c"};
  app.require_subcommand(1);

  std::uint64_t sieve_limit = default_sieve_limit();
  app.add_option("--sieve-limit", sieve_limit,
                 "Cap for sieve-backed commands (default 1000000, or CHOWLA_SIEVE_LIMIT)")
      ->check(CLI::PositiveNumber);

  std::string lambda_n;
  CLI::App* cmd_lambda = app.add_subcommand("lambda", "Print lambda(n), the parity of Omega(n)");
  cmd_lambda->add_option("n", lambda_n, "Positive integer")->required();

  std::uint64_t lsum_x = 0;
  bool lsum_csv = false;
  CLI::App* cmd_lsum = app.add_subcommand("lsum", "Summatory L(x) = sum of lambda(n) for n <= x");
  cmd_lsum->add_option("x", lsum_x, "Upper bound")->required()->check(CLI::PositiveNumber);
  cmd_lsum->add_flag("--csv", lsum_csv, "Emit the full prefix table as CSV (header n,L)");

  std::string certify_poly;
  std::string certify_limit = "10000";
  std::size_t certify_members = 6;
  bool certify_json = false;
  CLI::App* cmd_certify =
      app.add_subcommand("certify", "Scan for a lambda sign change in f(n) and certify it");
  cmd_certify->add_option("--poly", certify_poly, "Coefficients a,b,c")->required();
  cmd_certify->add_option("--limit", certify_limit, "Highest n to scan (default 10000)");
  cmd_certify->add_option("--members", certify_members, "Members per certified family")
      ->check(CLI::PositiveNumber);
  cmd_certify->add_flag("--json", certify_json, "Print the canonical JSON certificate");

  std::string pell_n;
  std::size_t pell_count = 1;
  CLI::App* cmd_pell = app.add_subcommand("pell", "Solutions of x^2 - N y^2 = 1");
  cmd_pell->add_option("N", pell_n, "Non-square modulus >= 2")->required();
  cmd_pell->add_option("--count", pell_count, "How many solutions (default 1)")
      ->check(CLI::PositiveNumber);

  std::string seed_poly, seed_l;
  std::string seed_max = "10000";
  CLI::App* cmd_seed = app.add_subcommand("seed", "Smallest n with f(n) = l * square");
  cmd_seed->add_option("--poly", seed_poly, "Coefficients a,b,c")->required();
  cmd_seed->add_option("--l", seed_l, "Squarefree part to match")->required();
  cmd_seed->add_option("--max", seed_max, "Highest n to try (default 10000)");

  std::string family_poly, family_l, family_seed;
  std::size_t family_count = 5;
  bool family_json = false;
  CLI::App* cmd_family =
      app.add_subcommand("family", "Grow solutions of f(n) = l m^2 from a seed via Pell units");
  cmd_family->add_option("--poly", family_poly, "Coefficients a,b,c")->required();
  cmd_family->add_option("--l", family_l, "Squarefree part")->required();
  cmd_family->add_option("--seed", family_seed, "Base solution n0,m0")->required();
  cmd_family->add_option("--count", family_count, "Members to emit (default 5)")
      ->check(CLI::PositiveNumber);
  cmd_family->add_flag("--json", family_json, "Print the family as JSON");

  std::string apflip_n0, apflip_step;
  CLI::App* cmd_apflip =
      app.add_subcommand("apflip", "Least k with lambda(n0 + k*step) != lambda(n0)");
  cmd_apflip->add_option("--n0", apflip_n0, "Start of the progression")->required();
  cmd_apflip->add_option("--step", apflip_step, "Common difference")->required();

  double dirichlet_s = 2.0;
  std::uint64_t dirichlet_limit = 1'000'000;
  CLI::App* cmd_dirichlet =
      app.add_subcommand("dirichlet", "Partial sum of lambda(n)/n^s (s > 1)");
  cmd_dirichlet->add_option("--s", dirichlet_s, "Exponent (default 2)");
  cmd_dirichlet->add_option("--limit", dirichlet_limit, "Number of terms (default 1000000)")
      ->check(CLI::PositiveNumber);

  std::string monic_poly;
  std::string monic_limit = "10000";
  CLI::App* cmd_monic =
      app.add_subcommand("monic", "One-witness conclusion for monic f via f(n)f(n+1) = f(f(n)+n)");
  cmd_monic->add_option("--poly", monic_poly, "Coefficients 1,b,c")->required();
  cmd_monic->add_option("--limit", monic_limit, "Highest n to scan (default 10000)");

  std::string primesq_poly, primesq_l;
  std::size_t primesq_count = 1;
  CLI::App* cmd_primesq = app.add_subcommand(
      "primesq", "Solutions of f(n) = l m^2 for prime a and square discriminant");
  cmd_primesq->add_option("--poly", primesq_poly, "Coefficients a,b,c (a prime)")->required();
  cmd_primesq->add_option("--l", primesq_l, "Squarefree part")->required();
  cmd_primesq->add_option("--count", primesq_count, "Solutions to emit (default 1)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_lambda) {
      Int n = parse_int(lambda_n);
      std::cout << sign_str(chowla::lambda_point(n)) << "\n";
      return kOk;
    }

    if (*cmd_lsum) {
      if (lsum_x > sieve_limit) {
        std::cerr << "lsum: x exceeds the sieve limit " << sieve_limit
                  << "; raise --sieve-limit or CHOWLA_SIEVE_LIMIT\n";
        return kUsage;
      }
      chowla::LiouvilleSieve sieve(lsum_x);
      if (lsum_csv) {
        std::cout << "n,L\n";
        for (std::uint64_t n = 1; n <= lsum_x; ++n) {
          std::cout << n << "," << sieve.prefix(n) << "\n";
        }
      } else {
        std::cout << sieve.prefix(lsum_x) << "\n";
      }
      return kOk;
    }

    if (*cmd_certify) {
      QuadraticPoly f = parse_poly(certify_poly);
      chowla::ScanOutcome outcome =
          chowla::scan_certificate(f, parse_int(certify_limit), certify_members);
      if (const auto* cs = std::get_if<chowla::ConstantSoFar>(&outcome)) {
        std::cout << "no sign change up to n=" << cs->scanned_to << ": lambda(f(n)) = "
                  << (cs->sign == 0 ? std::string("undefined (no usable values)")
                                    : sign_str(cs->sign))
                  << " on " << cs->usable_points << " usable points (skipped " << cs->skipped
                  << ")\n";
        return kNotFound;
      }
      const auto& cert = std::get<chowla::SignChangeCertificate>(outcome);
      if (certify_json) {
        std::cout << chowla::certificate_to_json(cert);
      } else {
        std::cout << "A0=" << cert.a0 << "\n";
        for (const chowla::Witness& w : cert.witnesses) print_witness(w);
        for (const chowla::SolutionFamily& fam : cert.families) print_family_text(fam);
      }
      return kOk;
    }

    if (*cmd_pell) {
      chowla::PellSolution fund = chowla::pell_fundamental(parse_int(pell_n));
      chowla::PellSolution cur = fund;
      for (std::size_t k = 1; k <= pell_count; ++k) {
        std::cout << "x=" << cur.x << " y=" << cur.y << "\n";
        cur = chowla::pell_next(fund, cur);
      }
      return kOk;
    }

    if (*cmd_seed) {
      QuadraticPoly f = parse_poly(seed_poly);
      auto found = chowla::find_seed(f, parse_int(seed_l), parse_int(seed_max));
      if (!found) {
        std::cerr << "seed: no n <= " << seed_max << " has f(n) = l * square\n";
        return kNotFound;
      }
      std::cout << "n0=" << found->n0 << " m0=" << found->m0 << " t0=" << found->t0 << "\n";
      return kOk;
    }

    if (*cmd_family) {
      QuadraticPoly f = parse_poly(family_poly);
      std::vector<Int> nm = parse_csv_ints(family_seed, 2, "--seed");
      chowla::SeedSolution seed = chowla::make_seed(f, parse_int(family_l), nm[0], nm[1]);
      chowla::SolutionFamily fam = chowla::generate_family(seed, family_count);
      if (family_json) {
        std::cout << chowla::family_to_json(fam);
      } else {
        print_family_text(fam);
      }
      return kOk;
    }

    if (*cmd_apflip) {
      std::cout << "k=" << chowla::ap_sign_flip(parse_int(apflip_n0), parse_int(apflip_step))
                << "\n";
      return kOk;
    }

    if (*cmd_dirichlet) {
      if (dirichlet_limit > sieve_limit) {
        std::cerr << "dirichlet: limit exceeds the sieve limit " << sieve_limit
                  << "; raise --sieve-limit or CHOWLA_SIEVE_LIMIT\n";
        return kUsage;
      }
      double sum = chowla::dirichlet_partial(dirichlet_s, dirichlet_limit);
      std::cout << std::setprecision(15) << sum << "\n";
      return kOk;
    }

    if (*cmd_monic) {
      QuadraticPoly f = parse_poly(monic_poly);
      chowla::MonicWitnessResult r = chowla::monic_witness_conclude(f, parse_int(monic_limit));
      if (!r.witness) {
        std::cerr << "monic: no n <= " << monic_limit << " with lambda(f(n)) = -1\n";
        return kNotFound;
      }
      std::cout << "n0=" << *r.witness << "\n";
      return kOk;
    }

    if (*cmd_primesq) {
      QuadraticPoly f = parse_poly(primesq_poly);
      auto sols = chowla::prime_square_disc_solutions(f, parse_int(primesq_l), primesq_count);
      for (const chowla::FamilyMember& mem : sols) {
        std::cout << "n=" << mem.n << " m=" << mem.m << "\n";
      }
      return kOk;
    }
  } catch (const chowla::FactoringGaveUp& e) {
    std::cerr << e.what() << "\n";
    return kNotFound;
  } catch (const chowla::SearchBudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kNotFound;
  } catch (const chowla::NoIntegralSolution& e) {
    std::cerr << e.what() << "\n";
    return kNotFound;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
