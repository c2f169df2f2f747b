#include "gmdiv/mersenne.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gmdiv/bigint.hpp"
#include "gmdiv/number_theory.hpp"

namespace gmdiv {

namespace {

void require_bits(std::uint64_t bits, std::uint64_t max_bits) {
  if (bits > max_bits) {
    std::ostringstream os;
    os << "bit-size guard exceeded: need ~" << bits << " bits, limit is "
       << max_bits;
    throw GuardExceeded(os.str());
  }
}

// (x^d - 1)/(x - 1) with the guard already checked by the caller.
mpz_class repunit(const mpz_class& x, std::uint64_t d) {
  return divexact(pow_u64(x, d) - 1, x - 1);
}

}  // namespace

DivInstance::DivInstance(std::uint64_t a_, std::uint64_t m_, std::uint64_t k_,
                         std::uint64_t d_)
    : a(a_), m(m_), k(k_), d(d_) {
  if (a < 2) throw std::invalid_argument("DivInstance: base a must be >= 2");
  if (d < 2) throw std::invalid_argument("DivInstance: length d must be >= 2");
  if (m < 1 || k < 1)
    throw std::invalid_argument("DivInstance: strides m, k must be >= 1");
}

std::uint64_t DivInstance::bit_estimate() const {
  return sat_mul(sat_mul(std::max(m, k), d), ceil_log2(mpz_class(a)));
}

ReducedInstance ReducedInstance::from(const DivInstance& inst,
                                      std::uint64_t max_bits) {
  if (inst.m % inst.k != 0)
    throw std::invalid_argument("ReducedInstance: k does not divide m");
  require_bits(sat_mul(inst.k, ceil_log2(mpz_class(inst.a))), max_bits);
  ReducedInstance r;
  r.b = pow_u64(mpz_class(inst.a), inst.k);
  r.n = inst.m / inst.k;
  r.l = std::gcd(r.n, inst.d);
  r.n1 = r.n / r.l;
  r.d1 = inst.d / r.l;
  return r;
}

mpz_class eval_mersenne(const mpz_class& x, std::uint64_t d,
                        std::uint64_t max_bits) {
  if (x < 2) throw std::invalid_argument("eval_mersenne: x must be >= 2");
  if (d < 1) throw std::invalid_argument("eval_mersenne: d must be >= 1");
  require_bits(sat_mul(d, ceil_log2(x)), max_bits);
  return repunit(x, d);
}

bool divides_criterion(std::uint64_t m, std::uint64_t k, std::uint64_t d) {
  if (m < 1 || k < 1)
    throw std::invalid_argument("divides_criterion: m, k must be >= 1");
  if (d < 2) throw std::invalid_argument("divides_criterion: d must be >= 2");
  return m % k == 0 && std::gcd(m / k, d) == 1;
}

bool divides_oracle(const DivInstance& inst, std::uint64_t max_bits) {
  require_bits(inst.bit_estimate(), max_bits);
  mpz_class a(inst.a);
  mpz_class num = repunit(pow_u64(a, inst.m), inst.d);
  mpz_class den = repunit(pow_u64(a, inst.k), inst.d);
  return num % den == 0;
}

std::optional<mpz_class> quotient(const DivInstance& inst,
                                  std::uint64_t max_bits) {
  require_bits(inst.bit_estimate(), max_bits);
  mpz_class a(inst.a);
  mpz_class num = repunit(pow_u64(a, inst.m), inst.d);
  mpz_class den = repunit(pow_u64(a, inst.k), inst.d);
  if (num % den != 0) return std::nullopt;
  return divexact(num, den);
}

mpz_class quotient_via_lcm(const mpz_class& b, std::uint64_t n,
                           std::uint64_t d, std::uint64_t max_bits) {
  if (b < 2) throw std::invalid_argument("quotient_via_lcm: b must be >= 2");
  if (n < 1 || d < 1)
    throw std::invalid_argument("quotient_via_lcm: n, d must be >= 1");
  if (std::gcd(n, d) != 1)
    throw std::invalid_argument(
        "quotient_via_lcm: requires gcd(n, d) = 1; the lcm form equals the "
        "quotient only for coprime strides");
  require_bits(sat_mul(sat_mul(n, d), ceil_log2(b)), max_bits);
  mpz_class bn = pow_u64(b, n) - 1;
  mpz_class bd = pow_u64(b, d) - 1;
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), bn.get_mpz_t(), bd.get_mpz_t());
  return divexact(pow_u64(b, sat_mul(n, d)) - 1, l);
}

Certificate explain(const DivInstance& inst, std::uint64_t max_bits) {
  require_bits(inst.bit_estimate(), max_bits);
  mpz_class a(inst.a);
  mpz_class num = repunit(pow_u64(a, inst.m), inst.d);
  mpz_class den = repunit(pow_u64(a, inst.k), inst.d);
  mpz_class rem = num % den;
  if (rem == 0) return DividesCert{divexact(num, den)};

  if (inst.m % inst.k != 0) {
    std::uint64_t kd = sat_mul(inst.k, inst.d);
    try {
      ZsigmondyResult z = zsigmondy_witness(a, kd, max_bits);
      if (z.has_witness()) return OrderWitnessCert{*z.witness, kd};
    } catch (const UnfactoredCofactor&) {
      // witness search over budget: fall through to the raw remainder
    }
    return RawRemainderCert{rem, den};
  }

  ReducedInstance red = ReducedInstance::from(inst, max_bits);
  if (red.l > 1) {
    mpz_class residue =
        mpz_class(red.l) * repunit(pow_u64(red.b, red.l), red.d1);
    if (residue != rem)
      throw std::logic_error("explain: congruence residue mismatch");
    return ResidueWitnessCert{red.l, residue, den};
  }
  // k | m with gcd(m/k, d) = 1 always divides; a nonzero remainder here
  // cannot occur. Keep a total fallback anyway.
  return RawRemainderCert{rem, den};
}

namespace {

bool verify_divides(const DividesCert& c, const DivInstance& inst,
                    std::uint64_t max_bits) {
  mpz_class a(inst.a);
  mpz_class num = eval_mersenne(pow_u64(a, inst.m), inst.d, max_bits);
  mpz_class den = eval_mersenne(pow_u64(a, inst.k), inst.d, max_bits);
  return c.quotient * den == num;
}

bool verify_order_witness(const OrderWitnessCert& c, const DivInstance& inst,
                          std::uint64_t max_bits) {
  std::uint64_t kd = sat_mul(inst.k, inst.d);
  std::uint64_t md = sat_mul(inst.m, inst.d);
  if (c.order != kd) return false;
  if (md % kd == 0) return false;
  if (c.p < 2 || !is_probable_prime(c.p)) return false;
  mpz_class a(inst.a);
  if (powmod_u64(a, kd, c.p) != 1) return false;  // p | a^(kd) - 1
  // ord_p(a) = kd exactly: no proper divisor of kd works.
  for (const FactorEntry& f : factorize(mpz_class(kd)).entries) {
    std::uint64_t q = mpz_get_ui(f.prime.get_mpz_t());
    if (powmod_u64(a, kd / q, c.p) == 1) return false;
  }
  return powmod_u64(a, md, c.p) != 1;
}

bool verify_residue_witness(const ResidueWitnessCert& c,
                            const DivInstance& inst, std::uint64_t max_bits) {
  if (inst.m % inst.k != 0) return false;
  ReducedInstance red = ReducedInstance::from(inst, max_bits);
  if (red.l <= 1 || c.l != red.l) return false;
  mpz_class a(inst.a);
  mpz_class den = eval_mersenne(pow_u64(a, inst.k), inst.d, max_bits);
  if (c.modulus != den) return false;
  mpz_class expected = mpz_class(red.l) *
                       eval_mersenne(pow_u64(red.b, red.l), red.d1, max_bits);
  if (c.residue != expected) return false;
  if (!(c.residue > 0 && c.residue < den)) return false;
  mpz_class num = eval_mersenne(pow_u64(a, inst.m), inst.d, max_bits);
  return num % den == c.residue;
}

bool verify_raw_remainder(const RawRemainderCert& c, const DivInstance& inst,
                          std::uint64_t max_bits) {
  mpz_class a(inst.a);
  mpz_class den = eval_mersenne(pow_u64(a, inst.k), inst.d, max_bits);
  if (c.modulus != den) return false;
  if (!(c.remainder > 0 && c.remainder < den)) return false;
  mpz_class num = eval_mersenne(pow_u64(a, inst.m), inst.d, max_bits);
  return num % den == c.remainder;
}

}  // namespace

bool certificate_verify(const Certificate& cert, const DivInstance& inst,
                        std::uint64_t max_bits) {
  require_bits(inst.bit_estimate(), max_bits);
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DividesCert>)
          return verify_divides(c, inst, max_bits);
        else if constexpr (std::is_same_v<T, OrderWitnessCert>)
          return verify_order_witness(c, inst, max_bits);
        else if constexpr (std::is_same_v<T, ResidueWitnessCert>)
          return verify_residue_witness(c, inst, max_bits);
        else
          return verify_raw_remainder(c, inst, max_bits);
      },
      cert);
}

std::string to_string(const Certificate& cert) {
  std::ostringstream os;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DividesCert>) {
          os << "Q=" << c.quotient;
        } else if constexpr (std::is_same_v<T, OrderWitnessCert>) {
          os << "order-witness p=" << c.p << " ord=" << c.order;
        } else if constexpr (std::is_same_v<T, ResidueWitnessCert>) {
          os << "residue-witness l=" << c.l << " r=" << c.residue << " mod "
             << c.modulus;
        } else {
          os << "raw-remainder r=" << c.remainder << " mod " << c.modulus;
        }
      },
      cert);
  return os.str();
}

}  // namespace gmdiv
