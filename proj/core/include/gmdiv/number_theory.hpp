#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmdiv/errors.hpp"

namespace gmdiv {

struct FactorEntry {
  mpz_class prime;
  std::uint64_t exponent;  // >= 1
};

// Complete prime factorization, entries ascending by prime.
struct Factorization {
  std::vector<FactorEntry> entries;

  // Product of prime^exponent over all entries (1 for the empty list).
  mpz_class value() const;
};

struct FactorOptions {
  std::uint64_t seed = 0;                     // seeds the rho splitter
  std::uint64_t rho_iterations = 1u << 24;    // total splitting budget
};

// Trial division below 10^5, then deterministic Brent-rho splitting with
// a probabilistic primality test on cofactors. Throws UnfactoredCofactor
// when the splitting budget runs out.
Factorization factorize(const mpz_class& n, const FactorOptions& opt = {});

// Least g >= 1 with a^g = 1 (mod modulus); requires gcd(a, modulus) = 1.
// Derives a multiple of g from the factorization of the modulus (Euler
// phi) and descends through its divisors.
std::uint64_t multiplicative_order(const mpz_class& a, const mpz_class& modulus,
                                   const FactorOptions& opt = {});

// Same, descending from a caller-supplied multiple of the order (checked).
std::uint64_t multiplicative_order(const mpz_class& a, const mpz_class& modulus,
                                   std::uint64_t order_multiple,
                                   const FactorOptions& opt);

// Largest e with p^e | n, for p >= 2 and n >= 1.
std::uint64_t valuation(const mpz_class& p, const mpz_class& n);

// nu_p(x^n - 1) = nu_p(x - 1) + nu_p(n) for an odd prime p dividing x - 1.
std::uint64_t lte_nu_odd(const mpz_class& p, const mpz_class& x,
                         std::uint64_t n);

// nu_2(x^n - 1) = nu_2(x^2 - 1) - 1 + nu_2(n) for odd x >= 3 and even n.
std::uint64_t lte_nu_two(const mpz_class& x, std::uint64_t n);

// Value of the n-th cyclotomic polynomial at a >= 2, by exact division of
// a^n - 1 through the lower cyclotomic values over the divisors of n.
mpz_class cyclotomic_value(std::uint64_t n, const mpz_class& a,
                           std::uint64_t max_bits = kDefaultMaxBits);

// The pairs (a, n) for which a^n - 1 has no prime divisor of
// multiplicative order exactly n.
enum class ZsigmondyException {
  kNOneBaseTwo,             // n = 1, a = 2 (a - 1 = 1 has no prime divisor)
  kNTwoBasePlusOnePowerOfTwo,  // n = 2 and a + 1 a power of two
  kNSixBaseTwo,             // n = 6, a = 2
};

std::string to_string(ZsigmondyException e);

struct ZsigmondyResult {
  // Smallest prime p | a^n - 1 with ord_p(a) = n, when one exists.
  std::optional<mpz_class> witness;
  // Set exactly when witness is empty.
  std::optional<ZsigmondyException> exception;

  bool has_witness() const { return witness.has_value(); }
};

// Primitive prime divisor search for a^n - 1, restricted to the factors
// of the n-th cyclotomic value.
ZsigmondyResult zsigmondy_witness(const mpz_class& a, std::uint64_t n,
                                  std::uint64_t max_bits = kDefaultMaxBits,
                                  const FactorOptions& opt = {});

// Residues of the two cofactors (b^(n*d)-1)/(b^n-1) and
// (b^(n*d)-1)/(b^d-1) modulo M = (b^gcd(n,d) - 1)/(b - 1). The residues
// equal d mod M and n mod M unconditionally.
struct CofactorReport {
  mpz_class M;
  mpz_class r_num_over_n;
  mpz_class r_num_over_d;
};

CofactorReport cofactor_residues(const mpz_class& b, std::uint64_t n,
                                 std::uint64_t d,
                                 std::uint64_t max_bits = kDefaultMaxBits);

// For gcd(n, d) > 1: a prime p at which the denominator
// (b^n - 1)(b^d - 1) carries a strictly larger p-adic valuation than the
// numerator (b^(n*d) - 1)(b - 1), so the quotient is not an integer.
//   q >= 3:                    p is a primitive prime of b^q - 1;
//   q = 2, b+1 not 2-power:    p is the smallest odd prime of b + 1;
//   q = 2, b+1 = 2^t:          p = 2.
struct ImbalanceReport {
  std::uint64_t q;  // smallest common prime of n and d
  mpz_class p;
  std::uint64_t nu_num;
  std::uint64_t nu_den;
};

ImbalanceReport valuation_imbalance(const mpz_class& b, std::uint64_t n,
                                    std::uint64_t d,
                                    std::uint64_t max_bits = kDefaultMaxBits,
                                    const FactorOptions& opt = {});

}  // namespace gmdiv
