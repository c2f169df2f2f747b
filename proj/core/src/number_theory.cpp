#include "gmdiv/number_theory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gmdiv/bigint.hpp"

namespace gmdiv {

namespace {

constexpr std::uint64_t kTrialDivisionBound = 100'000;

void require_bits(std::uint64_t bits, std::uint64_t max_bits) {
  if (bits > max_bits) {
    std::ostringstream os;
    os << "bit-size guard exceeded: need ~" << bits << " bits, limit is "
       << max_bits;
    throw GuardExceeded(os.str());
  }
}

const std::vector<std::uint32_t>& small_primes() {
  static std::vector<std::uint32_t> primes;
  static std::once_flag once;
  std::call_once(once, [] {
    std::vector<bool> composite(kTrialDivisionBound, false);
    for (std::uint64_t i = 2; i < kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j < kTrialDivisionBound; j += i)
        composite[j] = true;
    }
  });
  return primes;
}

// One Brent-rho attempt; returns a nontrivial factor of odd composite n or
// 0 when the cycle degenerated. Decrements the shared budget.
mpz_class rho_attempt(const mpz_class& n, std::mt19937_64 rng,
                      std::uint64_t& budget) {
  mpz_class y = mpz_class(static_cast<unsigned long>(rng() % 0xFFFFFFFFul + 2)) % n;
  mpz_class c = mpz_class(static_cast<unsigned long>(rng() % 0xFFFFFFFFul + 1)) % n;
  if (c == 0) c = 1;
  mpz_class x, ys, q = 1, g = 1, diff;
  std::uint64_t r = 1;
  const std::uint64_t batch = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) {
      if (budget == 0) throw UnfactoredCofactor("factorize: rho budget exhausted");
      --budget;
      y = (y * y + c) % n;
    }
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t steps = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        if (budget == 0)
          throw UnfactoredCofactor("factorize: rho budget exhausted");
        --budget;
        y = (y * y + c) % n;
        diff = x - y;
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        q = q * diff % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += steps;
    }
    r *= 2;
  }
  if (g == n) {
    // backtrack one step at a time
    do {
      if (budget == 0)
        throw UnfactoredCofactor("factorize: rho budget exhausted");
      --budget;
      ys = (ys * ys + c) % n;
      diff = x - ys;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

void factor_recursive(const mpz_class& n, std::map<mpz_class, std::uint64_t>& out,
                      std::uint64_t exponent_scale, std::uint64_t seed,
                      std::uint64_t& budget) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += exponent_scale;
    return;
  }
  // Perfect powers first: rho converges slowly on p^e.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (std::uint64_t e = 2; e <= bit_length(n); ++e) {
      mpz_class root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(),
                  static_cast<unsigned long>(e));
      if (rem == 0) {
        factor_recursive(root, out, exponent_scale * e, seed, budget);
        return;
      }
    }
  }
  std::uint64_t salt = mpz_class(n % mpz_class("18446744073709551557")).get_ui();
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed ^ (salt + 0x9e3779b97f4a7c15ull * (attempt + 1)));
    mpz_class f = rho_attempt(n, rng, budget);
    if (f != 0) {
      factor_recursive(f, out, exponent_scale, seed, budget);
      factor_recursive(divexact(n, f), out, exponent_scale, seed, budget);
      return;
    }
  }
}

// Least g with base^g = 1 (mod modulus), given any multiple of g and the
// multiple's factorization.
std::uint64_t descend_order(const mpz_class& base, const mpz_class& modulus,
                            const mpz_class& multiple,
                            const Factorization& mult_factors) {
  mpz_class g = multiple;
  for (const FactorEntry& f : mult_factors.entries) {
    for (std::uint64_t i = 0; i < f.exponent; ++i) {
      mpz_class candidate = divexact(g, f.prime);
      if (powmod(base, candidate, modulus) == 1)
        g = candidate;
      else
        break;
    }
  }
  return to_u64(g);
}

// Smallest prime factor of v >= 2 by trial division (v is small in every
// in-scope use: it divides gcd(n, d)).
std::uint64_t smallest_prime_factor(std::uint64_t v) {
  if (v % 2 == 0) return 2;
  for (std::uint64_t p = 3; p * p <= v; p += 2)
    if (v % p == 0) return p;
  return v;
}

std::vector<std::uint64_t> sorted_divisors(std::uint64_t n,
                                           const FactorOptions& opt) {
  Factorization f = factorize(mpz_class(n), opt);
  std::vector<std::uint64_t> divs{1};
  for (const FactorEntry& e : f.entries) {
    std::uint64_t p = to_u64(e.prime);
    std::size_t count = divs.size();
    std::uint64_t pe = 1;
    for (std::uint64_t i = 0; i < e.exponent; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

mpz_class Factorization::value() const {
  mpz_class v = 1;
  for (const FactorEntry& e : entries) v *= pow_u64(e.prime, e.exponent);
  return v;
}

Factorization factorize(const mpz_class& n, const FactorOptions& opt) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::map<mpz_class, std::uint64_t> found;
  mpz_class rest = n;
  for (std::uint32_t p : small_primes()) {
    if (rest == 1) break;
    mpz_class pz(p);
    if (mpz_class(pz * pz) > rest) break;
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e) found[pz] += e;
  }
  if (rest > 1) {
    if (rest < mpz_class(kTrialDivisionBound) * kTrialDivisionBound) {
      found[rest] += 1;  // below the square of the trial bound: prime
    } else {
      std::uint64_t budget = opt.rho_iterations;
      factor_recursive(rest, found, 1, opt.seed, budget);
    }
  }
  Factorization result;
  for (auto& [p, e] : found) result.entries.push_back({p, e});
  return result;
}

std::uint64_t multiplicative_order(const mpz_class& a, const mpz_class& modulus,
                                   const FactorOptions& opt) {
  if (modulus < 2)
    throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  mpz_class base = a % modulus;
  if (base < 0) base += modulus;
  if (gcd(base, modulus) != 1)
    throw std::invalid_argument(
        "multiplicative_order: a and modulus must be coprime");
  if (base == 1) return 1;
  // Euler phi is a multiple of the order; assemble its factorization from
  // the modulus factorization and the factorizations of each p - 1.
  Factorization fm = factorize(modulus, opt);
  std::map<mpz_class, std::uint64_t> phi_factors;
  mpz_class phi = 1;
  for (const FactorEntry& f : fm.entries) {
    if (f.exponent > 1) {
      phi_factors[f.prime] += f.exponent - 1;
      phi *= pow_u64(f.prime, f.exponent - 1);
    }
    mpz_class pm1 = f.prime - 1;
    phi *= pm1;
    for (const FactorEntry& g : factorize(pm1, opt).entries)
      phi_factors[g.prime] += g.exponent;
  }
  Factorization pf;
  for (auto& [p, e] : phi_factors) pf.entries.push_back({p, e});
  return descend_order(base, modulus, phi, pf);
}

std::uint64_t multiplicative_order(const mpz_class& a, const mpz_class& modulus,
                                   std::uint64_t order_multiple,
                                   const FactorOptions& opt) {
  if (modulus < 2)
    throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  if (order_multiple < 1)
    throw std::invalid_argument("multiplicative_order: multiple must be >= 1");
  mpz_class base = a % modulus;
  if (base < 0) base += modulus;
  if (gcd(base, modulus) != 1)
    throw std::invalid_argument(
        "multiplicative_order: a and modulus must be coprime");
  if (powmod_u64(base, order_multiple, modulus) != 1)
    throw std::invalid_argument(
        "multiplicative_order: supplied value is not a multiple of the order");
  mpz_class mult(order_multiple);
  return descend_order(base, modulus, mult, factorize(mult, opt));
}

std::uint64_t valuation(const mpz_class& p, const mpz_class& n) {
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  if (n < 1) throw std::invalid_argument("valuation: n must be >= 1");
  std::uint64_t e = 0;
  mpz_class rest = n;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest = divexact(rest, p);
    ++e;
  }
  return e;
}

std::uint64_t lte_nu_odd(const mpz_class& p, const mpz_class& x,
                         std::uint64_t n) {
  if (p < 3 || p % 2 == 0 || !is_probable_prime(p))
    throw std::invalid_argument("lte_nu_odd: p must be an odd prime");
  if (n < 1) throw std::invalid_argument("lte_nu_odd: n must be >= 1");
  if (x < 2 || (x - 1) % p != 0)
    throw std::invalid_argument("lte_nu_odd: requires p | x - 1");
  return valuation(p, x - 1) + valuation(p, mpz_class(n));
}

std::uint64_t lte_nu_two(const mpz_class& x, std::uint64_t n) {
  if (x < 3 || x % 2 == 0)
    throw std::invalid_argument("lte_nu_two: x must be odd and >= 3");
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("lte_nu_two: n must be even and >= 2");
  return valuation(2, x * x - 1) - 1 + valuation(2, mpz_class(n));
}

mpz_class cyclotomic_value(std::uint64_t n, const mpz_class& a,
                           std::uint64_t max_bits) {
  if (n < 1) throw std::invalid_argument("cyclotomic_value: n must be >= 1");
  if (a < 2) throw std::invalid_argument("cyclotomic_value: a must be >= 2");
  require_bits(sat_mul(n, ceil_log2(a)), max_bits);
  std::vector<std::uint64_t> divs = sorted_divisors(n, {});
  std::map<std::uint64_t, mpz_class> phi;
  for (std::uint64_t dd : divs) {
    mpz_class v = pow_u64(a, dd) - 1;
    for (std::uint64_t e : divs) {
      if (e >= dd || dd % e != 0) continue;
      v = divexact(v, phi.at(e));
    }
    phi.emplace(dd, std::move(v));
  }
  return phi.at(n);
}

std::string to_string(ZsigmondyException e) {
  switch (e) {
    case ZsigmondyException::kNOneBaseTwo:
      return "n=1 base-2";
    case ZsigmondyException::kNTwoBasePlusOnePowerOfTwo:
      return "a+1 power of two";
    case ZsigmondyException::kNSixBaseTwo:
      return "base-2 n=6";
  }
  return "unknown";
}

ZsigmondyResult zsigmondy_witness(const mpz_class& a, std::uint64_t n,
                                  std::uint64_t max_bits,
                                  const FactorOptions& opt) {
  if (a < 2) throw std::invalid_argument("zsigmondy_witness: a must be >= 2");
  if (n < 1) throw std::invalid_argument("zsigmondy_witness: n must be >= 1");
  require_bits(sat_mul(n, ceil_log2(a)), max_bits);

  ZsigmondyResult result;
  if (n == 1 && a == 2) {
    result.exception = ZsigmondyException::kNOneBaseTwo;
    return result;
  }
  if (n == 2 && is_power_of_two(a + 1)) {
    result.exception = ZsigmondyException::kNTwoBasePlusOnePowerOfTwo;
    return result;
  }
  if (n == 6 && a == 2) {
    result.exception = ZsigmondyException::kNSixBaseTwo;
    return result;
  }

  // Every prime with ord_p(a) = n divides the n-th cyclotomic value, so it
  // suffices to sift that factorization.
  Factorization fc = factorize(cyclotomic_value(n, a, max_bits), opt);
  std::vector<std::uint64_t> n_primes;
  for (const FactorEntry& f : factorize(mpz_class(n), opt).entries)
    n_primes.push_back(to_u64(f.prime));
  for (const FactorEntry& f : fc.entries) {
    bool primitive = true;
    for (std::uint64_t q : n_primes) {
      if (powmod_u64(a, n / q, f.prime) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      result.witness = f.prime;
      return result;
    }
  }
  throw std::logic_error(
      "zsigmondy_witness: no primitive prime found outside the exception set");
}

CofactorReport cofactor_residues(const mpz_class& b, std::uint64_t n,
                                 std::uint64_t d, std::uint64_t max_bits) {
  if (b < 2) throw std::invalid_argument("cofactor_residues: b must be >= 2");
  if (n < 1 || d < 2)
    throw std::invalid_argument("cofactor_residues: need n >= 1, d >= 2");
  require_bits(sat_mul(sat_mul(n, d), ceil_log2(b)), max_bits);
  std::uint64_t g = std::gcd(n, d);
  CofactorReport rep;
  rep.M = divexact(pow_u64(b, g) - 1, b - 1);
  mpz_class num = pow_u64(b, n * d) - 1;
  mpz_class c1 = divexact(num, pow_u64(b, n) - 1);
  mpz_class c2 = divexact(num, pow_u64(b, d) - 1);
  rep.r_num_over_n = c1 % rep.M;
  rep.r_num_over_d = c2 % rep.M;
  return rep;
}

ImbalanceReport valuation_imbalance(const mpz_class& b, std::uint64_t n,
                                    std::uint64_t d, std::uint64_t max_bits,
                                    const FactorOptions& opt) {
  if (b < 2) throw std::invalid_argument("valuation_imbalance: b must be >= 2");
  if (n < 1 || d < 1)
    throw std::invalid_argument("valuation_imbalance: need n, d >= 1");
  std::uint64_t g = std::gcd(n, d);
  if (g <= 1)
    throw std::invalid_argument(
        "valuation_imbalance: requires gcd(n, d) > 1");
  require_bits(sat_mul(sat_mul(n, d), ceil_log2(b)), max_bits);

  ImbalanceReport rep;
  rep.q = smallest_prime_factor(g);
  if (rep.q >= 3) {
    ZsigmondyResult z = zsigmondy_witness(b, rep.q, max_bits, opt);
    if (!z.has_witness())
      throw std::logic_error(
          "valuation_imbalance: odd prime q admits no primitive prime");
    rep.p = *z.witness;
    if (rep.p == 2 || rep.p == rep.q)
      throw std::logic_error(
          "valuation_imbalance: primitive prime collided with 2 or q");
  } else {
    mpz_class bp1 = b + 1;
    if (is_power_of_two(bp1)) {
      rep.p = 2;
    } else {
      rep.p = 0;
      for (const FactorEntry& f : factorize(bp1, opt).entries) {
        if (f.prime != 2) {
          rep.p = f.prime;
          break;
        }
      }
      if (rep.p == 0)
        throw std::logic_error("valuation_imbalance: no odd prime in b + 1");
    }
  }
  rep.nu_num =
      valuation(rep.p, pow_u64(b, n * d) - 1) + valuation(rep.p, b - 1);
  rep.nu_den =
      valuation(rep.p, pow_u64(b, n) - 1) + valuation(rep.p, pow_u64(b, d) - 1);
  return rep;
}

}  // namespace gmdiv
