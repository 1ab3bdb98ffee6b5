#include "downcolor/finite_field.hpp"

#include <limits>
#include <string>

#include "downcolor/error.hpp"

namespace downcolor {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of a modulo the monic polynomial m, both constant term first.
Poly poly_rem(Poly a, const Poly &m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i < dm; ++i) {
        const std::uint64_t sub = lead * m[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool all_zero(const Poly &a) {
  for (auto c : a)
    if (c != 0)
      return false;
  return true;
}

// Monic polynomial of degree d whose lower coefficients spell `index` in
// base p.
Poly monic_from_index(std::uint64_t index, std::size_t d, std::uint32_t p) {
  Poly f(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[d] = 1;
  return f;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > limit / base)
      return limit + 1;
    r *= base;
  }
  return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) {
  if (n < 2)
    return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1)
    return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

bool is_irreducible(const std::vector<std::uint32_t> &poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = checked_pow(p, static_cast<std::uint32_t>(d),
                                            std::numeric_limits<std::uint64_t>::max() / 2);
    for (std::uint64_t i = 0; i < count; ++i)
      if (all_zero(poly_rem(poly, monic_from_index(i, d, p), p)))
        return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  if (k == 0)
    throw InvalidArgument("field degree must be positive");
  const std::uint64_t q = checked_pow(p, k, std::numeric_limits<std::uint32_t>::max());
  if (q > std::numeric_limits<std::uint32_t>::max())
    throw CapExceeded(std::to_string(p) + "^" + std::to_string(k) + " does not fit in 32 bits");
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    modulus_ = {0, 1};
    return;
  }
  for (std::uint64_t i = 0; i < q; ++i) {
    auto candidate = monic_from_index(i, k, p);
    if (candidate[0] == 0)
      continue; // divisible by x
    if (is_irreducible(candidate, p)) {
      modulus_ = std::move(candidate);
      return;
    }
  }
  throw Error("no irreducible polynomial found"); // unreachable for prime p
}

FieldElement FiniteField::zero() const { return FieldElement{Poly(k_, 0)}; }

FieldElement FiniteField::one() const {
  auto e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= q_)
    throw InvalidArgument("field element index " + std::to_string(index) + " out of range");
  FieldElement e = zero();
  for (std::uint32_t i = 0; i < k_; ++i) {
    e.coeffs[i] = index % p_;
    index /= p_;
  }
  return e;
}

std::uint32_t FiniteField::index(const FieldElement &x) const {
  check(x);
  std::uint64_t idx = 0;
  for (std::uint32_t i = k_; i-- > 0;)
    idx = idx * p_ + x.coeffs[i];
  return static_cast<std::uint32_t>(idx);
}

void FiniteField::check(const FieldElement &a) const {
  if (a.coeffs.size() != k_)
    throw InvalidArgument("field element has the wrong length");
  for (auto c : a.coeffs)
    if (c >= p_)
      throw InvalidArgument("field element coefficient out of range");
}

FieldElement FiniteField::add(const FieldElement &a, const FieldElement &b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i)
    r.coeffs[i] = static_cast<std::uint32_t>((std::uint64_t{a.coeffs[i]} + b.coeffs[i]) % p_);
  return r;
}

FieldElement FiniteField::neg(const FieldElement &a) const {
  check(a);
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i)
    r.coeffs[i] = (p_ - a.coeffs[i]) % p_;
  return r;
}

FieldElement FiniteField::sub(const FieldElement &a, const FieldElement &b) const {
  return add(a, neg(b));
}

FieldElement FiniteField::mul(const FieldElement &a, const FieldElement &b) const {
  check(a);
  check(b);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0)
      continue;
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p_);
  }
  auto rem = poly_rem(std::move(prod), modulus_, p_);
  rem.resize(k_, 0);
  return FieldElement{std::move(rem)};
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement FiniteField::inv(const FieldElement &a) const {
  if (a == zero())
    throw InvalidArgument("zero has no inverse");
  return pow(a, std::uint64_t{q_} - 2);
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  return index(add(element(a), element(b)));
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  return index(mul(element(a), element(b)));
}

} // namespace downcolor
