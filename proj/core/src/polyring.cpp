#include "gmdiv/polyring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gmdiv/bigint.hpp"

namespace gmdiv {

namespace {

const mpz_class kZero = 0;

std::vector<std::uint64_t> sorted_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> divs;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    divs.push_back(i);
    if (i != n / i) divs.push_back(n / i);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(std::uint64_t degree, mpz_class coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, 0);
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

const mpz_class& IntPoly::coeff(std::uint64_t i) const {
  if (i >= coeffs_.size()) return kZero;
  return coeffs_[i];
}

const mpz_class& IntPoly::leading() const {
  if (is_zero()) throw std::logic_error("IntPoly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

IntPoly IntPoly::inflate(std::uint64_t s) const {
  if (s < 1) throw std::invalid_argument("IntPoly::inflate: s must be >= 1");
  if (is_zero() || s == 1) return *this;
  IntPoly out;
  out.coeffs_.assign((coeffs_.size() - 1) * s + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * s] = coeffs_[i];
  return out;
}

IntPoly IntPoly::derivative() const {
  IntPoly out;
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  out.normalize();
  return out;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const mpz_class& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class c = content();
  if (leading() < 0) c = -c;
  IntPoly out;
  out.coeffs_.reserve(coeffs_.size());
  for (const mpz_class& x : coeffs_) out.coeffs_.push_back(x / c);
  return out;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (mpz_class& c : out.coeffs_) c = -c;
  return out;
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
  IntPoly out;
  out.coeffs_.resize(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = f.coeff(i) + g.coeff(i);
  out.normalize();
  return out;
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
  IntPoly out;
  out.coeffs_.resize(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = f.coeff(i) - g.coeff(i);
  out.normalize();
  return out;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
  IntPoly out;
  if (f.is_zero() || g.is_zero()) return out;
  out.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
      out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
  return out;
}

IntPoly operator*(const mpz_class& c, const IntPoly& f) {
  IntPoly out;
  if (c == 0 || f.is_zero()) return out;
  out.coeffs_.reserve(f.coeffs_.size());
  for (const mpz_class& x : f.coeffs_) out.coeffs_.push_back(c * x);
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly poly_mersenne(std::uint64_t d, std::uint64_t stride) {
  if (d < 1 || stride < 1)
    throw std::invalid_argument("poly_mersenne: need d >= 1, stride >= 1");
  std::vector<mpz_class> coeffs((d - 1) * stride + 1, 0);
  for (std::uint64_t j = 0; j < d; ++j) coeffs[j * stride] = 1;
  return IntPoly(std::move(coeffs));
}

std::optional<IntPoly> poly_exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero())
    throw std::invalid_argument("poly_exact_div: divisor must be nonzero");
  if (f.is_zero()) return IntPoly();
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<mpz_class> q(
      static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
  IntPoly rem = f;
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    if (!mpz_divisible_p(rem.leading().get_mpz_t(), g.leading().get_mpz_t()))
      return std::nullopt;
    mpz_class c = divexact(rem.leading(), g.leading());
    std::uint64_t pos = static_cast<std::uint64_t>(rem.degree() - g.degree());
    q[pos] = c;
    rem = rem - IntPoly::monomial(pos, c) * g;
  }
  if (!rem.is_zero()) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly poly_mod(const IntPoly& f, const IntPoly& g) {
  if (!g.is_monic())
    throw std::invalid_argument("poly_mod: modulus must be monic");
  IntPoly rem = f;
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    std::uint64_t pos = static_cast<std::uint64_t>(rem.degree() - g.degree());
    rem = rem - IntPoly::monomial(pos, rem.leading()) * g;
  }
  return rem;
}

bool poly_criterion(std::uint64_t m, std::uint64_t k, std::uint64_t d) {
  if (m < 1 || k < 1 || d < 2)
    throw std::invalid_argument("poly_criterion: need m, k >= 1 and d >= 2");
  return m % k == 0 && std::gcd(m / k, d) == 1;
}

CongruenceResidues congruence_residues(std::uint64_t n, std::uint64_t d) {
  if (n < 1 || d < 2)
    throw std::invalid_argument("congruence_residues: need n >= 1, d >= 2");
  std::uint64_t l = std::gcd(n, d);
  IntPoly modulus = poly_mersenne(d, 1);
  CongruenceResidues out;
  out.lhs = poly_mod(poly_mersenne(d, n), modulus);
  out.rhs = poly_mod(mpz_class(l) * poly_mersenne(d / l, l), modulus);
  return out;
}

IntPoly cyclotomic_poly(std::uint64_t n, std::uint64_t max_degree) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  if (n > max_degree) {
    std::ostringstream os;
    os << "cyclotomic_poly: degree budget exceeded: n = " << n << ", limit is "
       << max_degree;
    throw GuardExceeded(os.str());
  }
  std::vector<std::uint64_t> divs = sorted_divisors(n);
  std::map<std::uint64_t, IntPoly> phi;
  for (std::uint64_t dd : divs) {
    IntPoly v = IntPoly::monomial(dd) - IntPoly::constant(1);
    for (std::uint64_t e : divs) {
      if (e >= dd || dd % e != 0) continue;
      auto q = poly_exact_div(v, phi.at(e));
      if (!q) throw std::logic_error("cyclotomic_poly: inexact division");
      v = std::move(*q);
    }
    phi.emplace(dd, std::move(v));
  }
  return phi.at(n);
}

bool root_of_unity_divisibility(std::uint64_t m, std::uint64_t k,
                                std::uint64_t d, std::uint64_t max_degree) {
  if (m < 1 || k < 1 || d < 1)
    throw std::invalid_argument(
        "root_of_unity_divisibility: need m, k, d >= 1");
  std::uint64_t kd = sat_mul(k, d);
  std::uint64_t md = sat_mul(m, d);
  if (md > max_degree) {
    std::ostringstream os;
    os << "root_of_unity_divisibility: degree budget exceeded: m*d = " << md
       << ", limit is " << max_degree;
    throw GuardExceeded(os.str());
  }
  IntPoly target = IntPoly::monomial(md) - IntPoly::constant(1);
  return poly_mod(target, cyclotomic_poly(kd, max_degree)).is_zero();
}

std::optional<IntPoly> multiple_root_witness(const IntPoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("multiple_root_witness: f must be nonzero");
  if (f.degree() < 1) return std::nullopt;
  IntPoly repeated = poly_gcd(f, f.derivative()).primitive_part();
  IntPoly x_minus_1(std::vector<mpz_class>{-1, 1});
  while (true) {
    auto q = poly_exact_div(repeated, x_minus_1);
    if (!q) break;
    repeated = std::move(*q);
  }
  if (repeated.degree() < 1) return std::nullopt;
  return repeated;
}

SubstitutionDivisibility substitution_divisibility(const IntPoly& f,
                                                   const IntPoly& g,
                                                   std::uint64_t k) {
  if (!g.is_monic())
    throw std::invalid_argument("substitution_divisibility: g must be monic");
  if (k < 1)
    throw std::invalid_argument("substitution_divisibility: k must be >= 1");
  SubstitutionDivisibility out;
  out.direct = poly_mod(f, g).is_zero();
  out.substituted = poly_mod(f.inflate(k), g.inflate(k)).is_zero();
  return out;
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return g.primitive_part() * IntPoly::constant(g.content());
  if (g.is_zero()) return f.primitive_part() * IntPoly::constant(f.content());
  mpz_class c = gcd(f.content(), g.content());
  IntPoly a = f.primitive_part();
  IntPoly b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b, then strip content to keep sizes tame
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::uint64_t pos = static_cast<std::uint64_t>(r.degree() - b.degree());
      r = b.leading() * r - IntPoly::monomial(pos, r.leading()) * b;
    }
    a = std::move(b);
    b = r.primitive_part();
  }
  return c * a.primitive_part();
}

}  // namespace gmdiv
