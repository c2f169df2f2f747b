#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "gmdiv/errors.hpp"

namespace gmdiv {

// One divisibility question: does M_d(a^k) divide M_d(a^m)?
// Here M_d(x) = 1 + x + ... + x^(d-1) = (x^d - 1)/(x - 1), the base-x
// repunit of length d.
struct DivInstance {
  std::uint64_t a;  // base, >= 2
  std::uint64_t m;  // numerator stride, >= 1
  std::uint64_t k;  // denominator stride, >= 1
  std::uint64_t d;  // repunit length, >= 2

  DivInstance(std::uint64_t a_, std::uint64_t m_, std::uint64_t k_,
              std::uint64_t d_);

  // Upper bound on the bit size touched by an oracle evaluation:
  // max(m, k) * d * ceil(log2 a), saturating.
  std::uint64_t bit_estimate() const;
};

// Derived quantities for instances with k | m, rewritten in base b = a^k.
struct ReducedInstance {
  mpz_class b;       // a^k
  std::uint64_t n;   // m / k
  std::uint64_t l;   // gcd(n, d)
  std::uint64_t n1;  // n / l
  std::uint64_t d1;  // d / l

  static ReducedInstance from(const DivInstance& inst,
                              std::uint64_t max_bits = kDefaultMaxBits);
};

// Divisibility holds; Q * M_d(a^k) = M_d(a^m).
struct DividesCert {
  mpz_class quotient;
};

// Non-divisibility by a prime with multiplicative order k*d: p divides
// M_d(a^k) but a^(m*d) != 1 (mod p), so p cannot divide M_d(a^m).
struct OrderWitnessCert {
  mpz_class p;
  std::uint64_t order;  // = k*d
};

// Non-divisibility via the closed-form remainder for k | m and
// l = gcd(m/k, d) > 1: M_d(b^n) mod M_d(b) = l * M_{d/l}(b^l), which is
// strictly between 0 and M_d(b).
struct ResidueWitnessCert {
  std::uint64_t l;
  mpz_class residue;
  mpz_class modulus;  // M_d(a^k)
};

// Non-divisibility by the raw remainder, used where no structured
// witness applies.
struct RawRemainderCert {
  mpz_class remainder;
  mpz_class modulus;  // M_d(a^k)
};

using Certificate =
    std::variant<DividesCert, OrderWitnessCert, ResidueWitnessCert,
                 RawRemainderCert>;

// (x^d - 1)/(x - 1) for x >= 2, d >= 1. Throws GuardExceeded when the
// result would exceed max_bits bits.
mpz_class eval_mersenne(const mpz_class& x, std::uint64_t d,
                        std::uint64_t max_bits = kDefaultMaxBits);

// The O(1) arithmetic criterion: k | m and gcd(m/k, d) = 1. Independent
// of the base a.
bool divides_criterion(std::uint64_t m, std::uint64_t k, std::uint64_t d);

// Ground truth by full big-integer remainder; makes no use of the
// criterion.
bool divides_oracle(const DivInstance& inst,
                    std::uint64_t max_bits = kDefaultMaxBits);

// M_d(a^m) / M_d(a^k) when divisibility holds, nullopt otherwise.
std::optional<mpz_class> quotient(const DivInstance& inst,
                                  std::uint64_t max_bits = kDefaultMaxBits);

// (b^(n*d) - 1) / lcm(b^n - 1, b^d - 1). Requires gcd(n, d) = 1, in which
// case it equals quotient() of the corresponding instance.
mpz_class quotient_via_lcm(const mpz_class& b, std::uint64_t n,
                           std::uint64_t d,
                           std::uint64_t max_bits = kDefaultMaxBits);

// Produces a verifiable certificate for the instance's verdict:
//   - DividesCert when M_d(a^k) | M_d(a^m);
//   - OrderWitnessCert when k does not divide m and a primitive prime of
//     a^(k*d) - 1 exists;
//   - ResidueWitnessCert when k | m and gcd(m/k, d) > 1;
//   - RawRemainderCert in the remaining non-divisible cases (in
//     particular when the (a, k*d) pair admits no primitive prime, or the
//     witness search exceeds its factoring budget).
// Every returned certificate passes certificate_verify.
Certificate explain(const DivInstance& inst,
                    std::uint64_t max_bits = kDefaultMaxBits);

// Re-checks a certificate's defining equalities from scratch with
// big-integer arithmetic only. True iff they all hold for this instance.
bool certificate_verify(const Certificate& cert, const DivInstance& inst,
                        std::uint64_t max_bits = kDefaultMaxBits);

// Compact one-line rendering, e.g. "Q=13" or
// "residue-witness l=3 r=3 mod 21".
std::string to_string(const Certificate& cert);

}  // namespace gmdiv
