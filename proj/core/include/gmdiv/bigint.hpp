#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace gmdiv {

inline mpz_class pow_u64(const mpz_class& base, std::uint64_t exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline mpz_class powmod(const mpz_class& base, const mpz_class& exp,
                        const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

inline mpz_class powmod_u64(const mpz_class& base, std::uint64_t exp,
                            const mpz_class& mod) {
  mpz_class r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), exp, mod.get_mpz_t());
  return r;
}

// Exact quotient n/d; the operands must divide.
inline mpz_class divexact(const mpz_class& n, const mpz_class& d) {
  if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) == 0)
    throw std::logic_error("divexact: inexact division");
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

// Number of bits in x, for x >= 1.
inline std::uint64_t bit_length(const mpz_class& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Smallest c with x <= 2^c. ceil_log2(1) = 0.
inline std::uint64_t ceil_log2(const mpz_class& x) {
  if (x <= 1) return 0;
  mpz_class t = x - 1;
  return mpz_sizeinbase(t.get_mpz_t(), 2);
}

inline bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline bool is_power_of_two(const mpz_class& x) {
  return x > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

inline std::uint64_t to_u64(const mpz_class& x) {
  if (x < 0 || !x.fits_ulong_p())
    throw std::overflow_error("value does not fit in 64 bits");
  return mpz_get_ui(x.get_mpz_t());
}

// a*b clamped to 2^64-1; keeps guard arithmetic overflow-free.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(p);
}

}  // namespace gmdiv
