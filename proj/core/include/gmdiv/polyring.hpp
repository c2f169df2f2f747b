#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmdiv/errors.hpp"

namespace gmdiv {

// Dense integer-coefficient polynomial, coefficients in ascending degree
// order with no trailing zero (the zero polynomial has an empty list).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(mpz_class c);
  static IntPoly monomial(std::uint64_t degree, mpz_class coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  // Coefficient of x^i (0 beyond the degree).
  const mpz_class& coeff(std::uint64_t i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& leading() const;  // requires a nonzero polynomial
  bool is_monic() const { return !is_zero() && leading() == 1; }

  mpz_class eval(const mpz_class& x) const;
  // Substitutes x -> x^s, s >= 1.
  IntPoly inflate(std::uint64_t s) const;
  IntPoly derivative() const;

  // gcd of the coefficients, >= 0; content of the zero polynomial is 0.
  mpz_class content() const;
  // Divides out the content and fixes the leading coefficient positive.
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
  friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
  friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& f);
  friend bool operator==(const IntPoly& f, const IntPoly& g) {
    return f.coeffs_ == g.coeffs_;
  }

  // Human-readable form, ascending: "1 - x + x^2", "2 + 2x^2", "0".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

// sum_{j=0}^{d-1} x^(stride*j), i.e. M_d(x^stride). Requires d >= 1,
// stride >= 1.
IntPoly poly_mersenne(std::uint64_t d, std::uint64_t stride);

// Quotient h with f = g*h over the integers if it exists. Long division
// tracking integer divisibility of every step; complete for any nonzero g
// (a failed step can only occur when no integer quotient exists).
std::optional<IntPoly> poly_exact_div(const IntPoly& f, const IntPoly& g);

// Remainder of f modulo a monic g, degree < deg g.
IntPoly poly_mod(const IntPoly& f, const IntPoly& g);

// Same predicate as divides_criterion; kept here so the polynomial suite
// is self-contained.
bool poly_criterion(std::uint64_t m, std::uint64_t k, std::uint64_t d);

// Both sides of the repunit congruence
//   M_d(x^n) = l * M_{d/l}(x^l)  (mod M_d(x)),  l = gcd(n, d),
// reduced modulo M_d(x). The two residues are always equal.
struct CongruenceResidues {
  IntPoly lhs;
  IntPoly rhs;
};
CongruenceResidues congruence_residues(std::uint64_t n, std::uint64_t d);

// n-th cyclotomic polynomial by exact division of x^n - 1 through the
// lower cyclotomics over the proper divisors of n.
IntPoly cyclotomic_poly(std::uint64_t n,
                        std::uint64_t max_degree = kDefaultMaxDegree);

// Whether the (k*d)-th cyclotomic polynomial divides x^(m*d) - 1; the
// exact stand-in for evaluating at a primitive (k*d)-th root of unity.
// Holds iff k*d | m*d.
bool root_of_unity_divisibility(std::uint64_t m, std::uint64_t k,
                                std::uint64_t d,
                                std::uint64_t max_degree = kDefaultMaxDegree);

// The repeated-factor part of f (gcd of f and f' over the integers, made
// primitive with positive leading coefficient) with all x - 1 factors
// removed. Returns the remaining nonconstant factor, or nullopt when f
// has no repeated root other than 1.
std::optional<IntPoly> multiple_root_witness(const IntPoly& f);

// direct = (g | f), substituted = (g(x^k) | f(x^k)); the two agree for
// every monic g.
struct SubstitutionDivisibility {
  bool direct;
  bool substituted;
};
SubstitutionDivisibility substitution_divisibility(const IntPoly& f,
                                                   const IntPoly& g,
                                                   std::uint64_t k);

// gcd over Z[x]: gcd of contents times the primitive gcd, leading
// coefficient positive. Primitive pseudo-remainder sequence.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

}  // namespace gmdiv
