#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "gmdiv/bigint.hpp"
#include "gmdiv/mersenne.hpp"
#include "gmdiv/number_theory.hpp"
#include "gmdiv/polyring.hpp"
#include "sweep.hpp"

namespace {

using namespace gmdiv;

const char* bool_str(bool b) { return b ? "true" : "false"; }

int cmd_check(std::uint64_t a, std::uint64_t m, std::uint64_t k,
              std::uint64_t d, bool with_certificate, std::uint64_t max_bits) {
  DivInstance inst(a, m, k, d);
  bool crit = divides_criterion(m, k, d);
  bool oracle = divides_oracle(inst, max_bits);
  if (crit != oracle) {
    std::cerr << "internal disagreement: criterion=" << bool_str(crit)
              << " oracle=" << bool_str(oracle) << "\n";
    return 3;
  }
  std::ostringstream line;
  line << "divides: " << bool_str(oracle);
  if (with_certificate) {
    Certificate cert = explain(inst, max_bits);
    line << ", " << to_string(cert);
    if (!certificate_verify(cert, inst, max_bits)) {
      std::cout << line.str() << "\n";
      std::cerr << "certificate failed verification\n";
      return 3;
    }
  }
  std::cout << line.str() << "\n";
  return 0;
}

int cmd_witness(std::uint64_t a, std::uint64_t n, std::uint64_t max_bits,
                std::uint64_t seed) {
  FactorOptions opt;
  opt.seed = seed;
  ZsigmondyResult r = zsigmondy_witness(a, n, max_bits, opt);
  if (!r.has_witness()) {
    std::cout << "exceptional: " << to_string(*r.exception) << "\n";
    return 0;
  }
  std::uint64_t ord = multiplicative_order(a, *r.witness, n, opt);
  std::cout << "p=" << r.witness->get_str() << " ord=" << ord << "\n";
  if (ord != n) {
    std::cerr << "witness order " << ord << " differs from n=" << n << "\n";
    return 3;
  }
  return 0;
}

int cmd_valuation(bool imbalance, bool cofactor, std::uint64_t b,
                  std::uint64_t n, std::uint64_t d, std::uint64_t max_bits,
                  std::uint64_t seed) {
  if (imbalance == cofactor)
    throw std::invalid_argument(
        "valuation: pass exactly one of --imbalance or --cofactor");
  if (imbalance) {
    FactorOptions opt;
    opt.seed = seed;
    ImbalanceReport rep = valuation_imbalance(b, n, d, max_bits, opt);
    std::cout << "q=" << rep.q << " p=" << rep.p.get_str()
              << " num=" << rep.nu_num << " den=" << rep.nu_den << "\n";
    if (rep.nu_den <= rep.nu_num) {
      std::cerr << "valuation imbalance violated\n";
      return 3;
    }
    return 0;
  }
  CofactorReport rep = cofactor_residues(b, n, d, max_bits);
  std::cout << "M=" << rep.M.get_str() << " r1=" << rep.r_num_over_n.get_str()
            << " r2=" << rep.r_num_over_d.get_str() << "\n";
  return 0;
}

int cmd_order(std::uint64_t a, std::uint64_t k, std::uint64_t d,
              std::uint64_t max_bits, std::uint64_t seed) {
  if (a < 2 || k < 1 || d < 2)
    throw std::invalid_argument("order: need a >= 2, k >= 1, d >= 2");
  FactorOptions opt;
  opt.seed = seed;
  mpz_class modulus = eval_mersenne(pow_u64(a, k), d, max_bits);
  std::uint64_t expected = sat_mul(k, d);
  std::uint64_t ord = multiplicative_order(a, modulus, expected, opt);
  bool ok = ord == expected;
  std::cout << "ord=" << ord << " expected=" << expected
            << (ok ? " OK" : " MISMATCH") << "\n";
  return ok ? 0 : 3;
}

int cmd_poly(std::uint64_t m, std::uint64_t k, std::uint64_t d) {
  bool crit = poly_criterion(m, k, d);
  if (sat_mul(std::max(m, k), d) > kDefaultMaxDegree)
    throw GuardExceeded("poly: degree exceeds " +
                        std::to_string(kDefaultMaxDegree));
  auto q = poly_exact_div(poly_mersenne(d, m), poly_mersenne(d, k));
  if (q.has_value() != crit) {
    std::cerr << "internal disagreement: polynomial division "
              << (q ? "succeeded" : "failed") << " against criterion "
              << bool_str(crit) << "\n";
    return 3;
  }
  if (q)
    std::cout << "divides; quotient = " << q->to_string() << "\n";
  else
    std::cout << "does not divide\n";
  if (m % k == 0) {
    CongruenceResidues cr = congruence_residues(m / k, d);
    std::cout << "congruence residues: lhs = " << cr.lhs.to_string()
              << ", rhs = " << cr.rhs.to_string() << "\n";
    if (!(cr.lhs == cr.rhs)) {
      std::cerr << "congruence residues differ\n";
      return 3;
    }
  }
  return 0;
}

int cmd_quotient(std::uint64_t a, std::uint64_t m, std::uint64_t k,
                 std::uint64_t d, std::uint64_t max_bits) {
  DivInstance inst(a, m, k, d);
  std::optional<mpz_class> q = quotient(inst, max_bits);
  if (q)
    std::cout << "Q=" << q->get_str() << "\n";
  else
    std::cout << "not divisible\n";
  return 0;
}

int cmd_factor(const std::string& text, std::uint64_t seed) {
  mpz_class n;
  if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("factor: '" + text + "' is not an integer");
  FactorOptions opt;
  opt.seed = seed;
  Factorization f = factorize(n, opt);
  std::cout << n.get_str() << " = ";
  if (f.entries.empty()) {
    std::cout << "1\n";
    return 0;
  }
  bool first = true;
  for (const FactorEntry& e : f.entries) {
    if (!first) std::cout << " * ";
    first = false;
    std::cout << e.prime.get_str();
    if (e.exponent > 1) std::cout << "^" << e.exponent;
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Mersenne number divisibility toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  struct {
    std::uint64_t a, m, k, d;
    bool with_certificate = false;
    std::uint64_t max_bits = kDefaultMaxBits;
  } check_args;
  CLI::App* check = app.add_subcommand(
      "check", "decide whether M_d(a^k) divides M_d(a^m)");
  check->add_option("a", check_args.a, "base, >= 2")->required();
  check->add_option("m", check_args.m, "numerator stride, >= 1")->required();
  check->add_option("k", check_args.k, "denominator stride, >= 1")->required();
  check->add_option("d", check_args.d, "repunit length, >= 2")->required();
  check->add_flag("--with-certificate", check_args.with_certificate,
                  "emit and verify a certificate for the verdict");
  check->add_option("--max-bits", check_args.max_bits, "bit-size guard");
  check->callback([&] {
    rc = cmd_check(check_args.a, check_args.m, check_args.k, check_args.d,
                   check_args.with_certificate, check_args.max_bits);
  });

  struct {
    std::string a = "2:5", m = "1:24", k = "1:4", d = "2:6";
    bool include_poly = false;
    std::uint64_t max_bits = kDefaultMaxBits;
    std::uint64_t jobs = 1;
    std::string format = "table";
    std::uint64_t seed = 0;
  } sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "compare criterion vs. oracle over a parameter grid");
  sweep->add_option("--a", sweep_args.a, "base range lo:hi (default 2:5)");
  sweep->add_option("--m", sweep_args.m,
                    "numerator stride range lo:hi (default 1:24)");
  sweep->add_option("--k", sweep_args.k,
                    "denominator stride range lo:hi (default 1:4)");
  sweep->add_option("--d", sweep_args.d,
                    "repunit length range lo:hi (default 2:6)");
  sweep->add_flag("--include-poly", sweep_args.include_poly,
                  "also run the polynomial division per instance");
  sweep->add_option("--max-bits", sweep_args.max_bits, "bit-size guard");
  sweep->add_option("--jobs", sweep_args.jobs, "worker threads");
  sweep->add_option("--format", sweep_args.format, "json, csv, or table");
  sweep->add_option("--seed", sweep_args.seed, "rng seed (reserved)");
  sweep->callback([&] {
    gmdiv::cli::SweepConfig cfg;
    cfg.a = gmdiv::cli::parse_range(sweep_args.a);
    cfg.m = gmdiv::cli::parse_range(sweep_args.m);
    cfg.k = gmdiv::cli::parse_range(sweep_args.k);
    cfg.d = gmdiv::cli::parse_range(sweep_args.d);
    cfg.include_poly = sweep_args.include_poly;
    cfg.max_bits = sweep_args.max_bits;
    cfg.jobs = sweep_args.jobs;
    cfg.format = gmdiv::cli::parse_format(sweep_args.format);
    cfg.seed = sweep_args.seed;
    rc = gmdiv::cli::run_sweep(cfg, std::cout, std::cerr);
  });

  struct {
    std::uint64_t a, n;
    std::uint64_t max_bits = kDefaultMaxBits;
    std::uint64_t seed = 0;
  } witness_args;
  CLI::App* witness = app.add_subcommand(
      "witness", "find a prime divisor of a^n - 1 with order exactly n");
  witness->add_option("a", witness_args.a, "base, >= 2")->required();
  witness->add_option("n", witness_args.n, "exponent, >= 1")->required();
  witness->add_option("--max-bits", witness_args.max_bits, "bit-size guard");
  witness->add_option("--seed", witness_args.seed, "factoring rng seed");
  witness->callback([&] {
    rc = cmd_witness(witness_args.a, witness_args.n, witness_args.max_bits,
                     witness_args.seed);
  });

  struct {
    std::uint64_t b, n, d;
    bool imbalance = false;
    bool cofactor = false;
    std::uint64_t max_bits = kDefaultMaxBits;
    std::uint64_t seed = 0;
  } valuation_args;
  CLI::App* valuation = app.add_subcommand(
      "valuation", "p-adic valuation imbalance or cofactor residues");
  valuation->add_option("b", valuation_args.b, "base, >= 2")->required();
  valuation->add_option("n", valuation_args.n, "first exponent")->required();
  valuation->add_option("d", valuation_args.d, "second exponent")->required();
  valuation->add_flag("--imbalance", valuation_args.imbalance,
                      "compare valuations of (b^n-1)(b^d-1) vs (b^nd-1)(b-1)");
  valuation->add_flag("--cofactor", valuation_args.cofactor,
                      "residues of the two cofactors mod (b^gcd-1)/(b-1)");
  valuation->add_option("--max-bits", valuation_args.max_bits,
                        "bit-size guard");
  valuation->add_option("--seed", valuation_args.seed, "factoring rng seed");
  valuation->callback([&] {
    rc = cmd_valuation(valuation_args.imbalance, valuation_args.cofactor,
                       valuation_args.b, valuation_args.n, valuation_args.d,
                       valuation_args.max_bits, valuation_args.seed);
  });

  struct {
    std::uint64_t a, k, d;
    std::uint64_t max_bits = kDefaultMaxBits;
    std::uint64_t seed = 0;
  } order_args;
  CLI::App* order = app.add_subcommand(
      "order", "multiplicative order of a modulo M_d(a^k), expected k*d");
  order->add_option("a", order_args.a, "base, >= 2")->required();
  order->add_option("k", order_args.k, "stride, >= 1")->required();
  order->add_option("d", order_args.d, "repunit length, >= 2")->required();
  order->add_option("--max-bits", order_args.max_bits, "bit-size guard");
  order->add_option("--seed", order_args.seed, "factoring rng seed");
  order->callback([&] {
    rc = cmd_order(order_args.a, order_args.k, order_args.d,
                   order_args.max_bits, order_args.seed);
  });

  struct {
    std::uint64_t m, k, d;
  } poly_args;
  CLI::App* poly = app.add_subcommand(
      "poly", "polynomial divisibility of M_d(x^m) by M_d(x^k)");
  poly->add_option("m", poly_args.m, "numerator stride, >= 1")->required();
  poly->add_option("k", poly_args.k, "denominator stride, >= 1")->required();
  poly->add_option("d", poly_args.d, "repunit length, >= 2")->required();
  poly->callback(
      [&] { rc = cmd_poly(poly_args.m, poly_args.k, poly_args.d); });

  struct {
    std::uint64_t a, m, k, d;
    std::uint64_t max_bits = kDefaultMaxBits;
  } quotient_args;
  CLI::App* quot = app.add_subcommand(
      "quotient", "integer quotient M_d(a^m) / M_d(a^k) when it exists");
  quot->add_option("a", quotient_args.a, "base, >= 2")->required();
  quot->add_option("m", quotient_args.m, "numerator stride")->required();
  quot->add_option("k", quotient_args.k, "denominator stride")->required();
  quot->add_option("d", quotient_args.d, "repunit length, >= 2")->required();
  quot->add_option("--max-bits", quotient_args.max_bits, "bit-size guard");
  quot->callback([&] {
    rc = cmd_quotient(quotient_args.a, quotient_args.m, quotient_args.k,
                      quotient_args.d, quotient_args.max_bits);
  });

  struct {
    std::string n;
    std::uint64_t seed = 0;
  } factor_args;
  CLI::App* factor =
      app.add_subcommand("factor", "prime factorization of an integer");
  factor->add_option("n", factor_args.n, "integer, >= 1")->required();
  factor->add_option("--seed", factor_args.seed, "factoring rng seed");
  factor->callback([&] { rc = cmd_factor(factor_args.n, factor_args.seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
