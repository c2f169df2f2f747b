#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>

#include "gmdiv/bigint.hpp"
#include "gmdiv/mersenne.hpp"

using namespace gmdiv;

namespace {

// Sum-form oracle for M_d(x); independent of the closed form used by
// eval_mersenne.
mpz_class mersenne_by_sum(const mpz_class& x, std::uint64_t d) {
  mpz_class acc = 0, pw = 1;
  for (std::uint64_t j = 0; j < d; ++j) {
    acc += pw;
    pw *= x;
  }
  return acc;
}

}  // namespace

TEST_CASE("eval_mersenne matches the sum definition") {
  CHECK(eval_mersenne(4, 3) == 21);
  CHECK(eval_mersenne(8, 2) == 9);
  CHECK(eval_mersenne(10, 5) == 11111);
  CHECK(eval_mersenne(2, 2) == 3);
  for (std::uint64_t x = 2; x <= 9; ++x)
    for (std::uint64_t d = 1; d <= 12; ++d)
      CHECK(eval_mersenne(x, d) == mersenne_by_sum(x, d));
}

TEST_CASE("eval_mersenne validates and guards") {
  CHECK_THROWS_AS(eval_mersenne(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(eval_mersenne(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(eval_mersenne(2, 5000, 1000), GuardExceeded);
  CHECK(eval_mersenne(2, 5000, 5001) > 0);  // exactly at the limit
}

TEST_CASE("divides_criterion") {
  CHECK(divides_criterion(4, 2, 3));
  CHECK_FALSE(divides_criterion(6, 2, 3));
  CHECK(divides_criterion(9, 3, 2));
  CHECK_FALSE(divides_criterion(5, 2, 3));
  CHECK_THROWS_AS(divides_criterion(4, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(divides_criterion(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(divides_criterion(4, 0, 3), std::invalid_argument);
}

TEST_CASE("divides_oracle examples") {
  CHECK(divides_oracle(DivInstance(2, 4, 2, 3)));
  CHECK_FALSE(divides_oracle(DivInstance(2, 6, 2, 3)));
  for (std::uint64_t a = 2; a <= 5; ++a)
    for (std::uint64_t k = 1; k <= 3; ++k)
      for (std::uint64_t d = 2; d <= 4; ++d)
        CHECK(divides_oracle(DivInstance(a, k, k, d)));
}

TEST_CASE("criterion equals oracle and is base-independent") {
  for (std::uint64_t m = 1; m <= 8; ++m)
    for (std::uint64_t k = 1; k <= 8; ++k)
      for (std::uint64_t d = 2; d <= 5; ++d) {
        bool crit = divides_criterion(m, k, d);
        for (std::uint64_t a = 2; a <= 6; ++a)
          CHECK(divides_oracle(DivInstance(a, m, k, d)) == crit);
      }
}

TEST_CASE("DivInstance validation and guard estimate") {
  CHECK_THROWS_AS(DivInstance(1, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(DivInstance(2, 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(DivInstance(2, 1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(DivInstance(2, 1, 1, 1), std::invalid_argument);
  CHECK(DivInstance(2, 10, 2, 3).bit_estimate() == 30);
  CHECK_THROWS_AS(divides_oracle(DivInstance(2, 2000, 1, 1000)),
                  GuardExceeded);
}

TEST_CASE("ReducedInstance derived quantities") {
  ReducedInstance r = ReducedInstance::from(DivInstance(2, 12, 2, 3));
  CHECK(r.b == 4);
  CHECK(r.n == 6);
  CHECK(r.l == 3);
  CHECK(r.n1 == 2);
  CHECK(r.d1 == 1);
  CHECK_THROWS_AS(ReducedInstance::from(DivInstance(2, 5, 2, 3)),
                  std::invalid_argument);
  for (std::uint64_t a = 2; a <= 4; ++a)
    for (std::uint64_t k = 1; k <= 3; ++k)
      for (std::uint64_t n = 1; n <= 8; ++n)
        for (std::uint64_t d = 2; d <= 6; ++d) {
          DivInstance inst(a, n * k, k, d);
          ReducedInstance red = ReducedInstance::from(inst);
          CHECK(red.b == pow_u64(a, k));
          CHECK(red.n * k == inst.m);
          CHECK(red.l == std::gcd(red.n, d));
          CHECK(red.n1 * red.l == red.n);
          CHECK(red.d1 * red.l == d);
          CHECK(std::gcd(red.n1, red.d1) == 1);
        }
}

TEST_CASE("quotient examples") {
  CHECK(quotient(DivInstance(2, 4, 2, 3)) == mpz_class(13));
  CHECK(quotient(DivInstance(2, 2, 2, 3)) == mpz_class(1));
  CHECK(quotient(DivInstance(2, 8, 2, 3)) == mpz_class(3133));
  CHECK_FALSE(quotient(DivInstance(2, 6, 2, 3)).has_value());
}

TEST_CASE("quotient_via_lcm") {
  CHECK(quotient_via_lcm(4, 2, 3) == 13);
  CHECK(quotient_via_lcm(3, 2, 3) == 7);
  for (std::uint64_t b = 2; b <= 6; ++b)
    for (std::uint64_t d = 2; d <= 6; ++d)
      CHECK(quotient_via_lcm(b, 1, d) == 1);
  CHECK_THROWS_AS(quotient_via_lcm(4, 2, 2), std::invalid_argument);
}

TEST_CASE("quotient_via_lcm agrees with quotient when the criterion holds") {
  for (std::uint64_t a = 2; a <= 4; ++a)
    for (std::uint64_t m = 1; m <= 10; ++m)
      for (std::uint64_t k = 1; k <= 4; ++k)
        for (std::uint64_t d = 2; d <= 5; ++d) {
          if (!divides_criterion(m, k, d)) continue;
          DivInstance inst(a, m, k, d);
          CHECK(quotient_via_lcm(pow_u64(a, k), m / k, d) == *quotient(inst));
        }
}

TEST_CASE("factor identity M_d(b) = M_d1(b^l) * M_l(b)") {
  for (std::uint64_t b = 2; b <= 8; ++b)
    for (std::uint64_t d = 2; d <= 12; ++d)
      for (std::uint64_t l = 1; l <= d; ++l) {
        if (d % l != 0) continue;
        mpz_class lhs = eval_mersenne(b, d);
        mpz_class rhs =
            eval_mersenne(pow_u64(b, l), d / l) * eval_mersenne(b, l);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("residue bound 0 < l * M_d1(b^l) < M_d(b) for l > 1") {
  for (std::uint64_t b = 2; b <= 8; ++b)
    for (std::uint64_t d = 2; d <= 12; ++d)
      for (std::uint64_t l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        mpz_class residue = l * eval_mersenne(pow_u64(b, l), d / l);
        CHECK(residue > 0);
        CHECK(residue < eval_mersenne(b, d));
      }
}

TEST_CASE("mersenne-modulus power: b^N = 1 mod M_d(b) when d | N") {
  for (std::uint64_t b = 2; b <= 6; ++b)
    for (std::uint64_t d = 2; d <= 8; ++d)
      for (std::uint64_t N = d; N <= 48; N += d)
        CHECK(powmod_u64(b, N, eval_mersenne(b, d)) == 1);
}

TEST_CASE("explain picks the expected certificate shape") {
  Certificate c1 = explain(DivInstance(2, 4, 2, 3));
  auto* div = std::get_if<DividesCert>(&c1);
  REQUIRE(div != nullptr);
  CHECK(div->quotient == 13);

  Certificate c2 = explain(DivInstance(2, 6, 2, 3));
  auto* res = std::get_if<ResidueWitnessCert>(&c2);
  REQUIRE(res != nullptr);
  CHECK(res->l == 3);
  CHECK(res->residue == 3);
  CHECK(res->modulus == 21);

  Certificate c3 = explain(DivInstance(3, 2, 1, 2));
  auto* res2 = std::get_if<ResidueWitnessCert>(&c3);
  REQUIRE(res2 != nullptr);
  CHECK(res2->l == 2);
  CHECK(res2->residue == 2);
  CHECK(res2->modulus == 4);

  // k does not divide m; (a, kd) = (3, 6) has the primitive prime 7.
  Certificate c4 = explain(DivInstance(3, 5, 2, 3));
  auto* ord = std::get_if<OrderWitnessCert>(&c4);
  REQUIRE(ord != nullptr);
  CHECK(ord->p == 7);
  CHECK(ord->order == 6);

  // k does not divide m but (a, kd) = (2, 6) is a Zsigmondy exception,
  // so the fallback raw remainder is used: M_3(32) mod 21 = 7.
  Certificate c5 = explain(DivInstance(2, 5, 2, 3));
  auto* raw = std::get_if<RawRemainderCert>(&c5);
  REQUIRE(raw != nullptr);
  CHECK(raw->remainder == 7);
  CHECK(raw->modulus == 21);
}

TEST_CASE("certificate_verify accepts valid and rejects tampered") {
  DivInstance inst(2, 4, 2, 3);
  CHECK(certificate_verify(DividesCert{13}, inst));
  CHECK_FALSE(certificate_verify(DividesCert{14}, inst));

  DivInstance inst2(2, 6, 2, 3);
  CHECK(certificate_verify(ResidueWitnessCert{3, 3, 21}, inst2));
  CHECK_FALSE(certificate_verify(ResidueWitnessCert{3, 4, 21}, inst2));
  CHECK_FALSE(certificate_verify(ResidueWitnessCert{3, 3, 22}, inst2));

  // M_3(3^5) = 59293 = 91 * 651 + 52.
  DivInstance inst3(3, 5, 2, 3);
  CHECK(certificate_verify(RawRemainderCert{52, 91}, inst3));
  CHECK_FALSE(certificate_verify(RawRemainderCert{53, 91}, inst3));

  CHECK(certificate_verify(OrderWitnessCert{7, 6}, inst3));
  CHECK_FALSE(certificate_verify(OrderWitnessCert{5, 6}, inst3));   // ord_5(3)=4
  CHECK_FALSE(certificate_verify(OrderWitnessCert{7, 3}, inst3));   // order != kd
  CHECK_FALSE(certificate_verify(OrderWitnessCert{7, 6}, inst2));   // kd | md
}

TEST_CASE("every explain output verifies") {
  for (std::uint64_t a = 2; a <= 3; ++a)
    for (std::uint64_t m = 1; m <= 10; ++m)
      for (std::uint64_t k = 1; k <= 10; ++k)
        for (std::uint64_t d = 2; d <= 5; ++d) {
          DivInstance inst(a, m, k, d);
          Certificate cert = explain(inst);
          CHECK(certificate_verify(cert, inst));
          bool is_divides = std::holds_alternative<DividesCert>(cert);
          CHECK(is_divides == divides_criterion(m, k, d));
        }
}

TEST_CASE("certificate rendering") {
  CHECK(to_string(Certificate{DividesCert{13}}) == "Q=13");
  CHECK(to_string(Certificate{ResidueWitnessCert{3, 3, 21}}) ==
        "residue-witness l=3 r=3 mod 21");
  CHECK(to_string(Certificate{RawRemainderCert{7, 21}}) ==
        "raw-remainder r=7 mod 21");
  CHECK(to_string(Certificate{OrderWitnessCert{7, 6}}) ==
        "order-witness p=7 ord=6");
}
