#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace downcolor {

// Polynomial representation of an element of GF(p^k): coefficients of
// 1, x, ..., x^(k-1), each in 0..p-1.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement &, const FieldElement &) = default;
};

// GF(p^k) as Z_p[x] modulo a monic irreducible polynomial of degree k.
//
// The modulus is the first irreducible candidate when monic degree-k
// polynomials are ordered by their coefficient vectors read from x^(k-1)
// down to the constant term, i.e. by the integer sum c_i p^i. For k = 1 the
// modulus is x and the field is Z_p.
//
// Elements are also addressed by index sum c_i p^i in 0..q-1; index 0 is
// zero and index 1 is one.
class FiniteField {
public:
  // Throws InvalidArgument if p is not prime or k == 0, CapExceeded if
  // p^k does not fit in 32 bits.
  FiniteField(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  // k + 1 coefficients, constant term first, leading 1 last.
  const std::vector<std::uint32_t> &modulus() const noexcept { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::uint32_t index) const;
  std::uint32_t index(const FieldElement &x) const;

  FieldElement add(const FieldElement &a, const FieldElement &b) const;
  FieldElement sub(const FieldElement &a, const FieldElement &b) const;
  FieldElement neg(const FieldElement &a) const;
  FieldElement mul(const FieldElement &a, const FieldElement &b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Throws InvalidArgument for zero.
  FieldElement inv(const FieldElement &a) const;

  // The same operations on element indices.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

private:
  void check(const FieldElement &a) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
};

inline FiniteField build_field(std::uint32_t p, std::uint32_t k) { return FiniteField(p, k); }

bool is_prime(std::uint64_t n);

// (p, e) with n = p^e, if n is a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n);

// Trial division of a monic polynomial over Z_p (constant term first) by all
// monic polynomials of degree 1..deg/2.
bool is_irreducible(const std::vector<std::uint32_t> &poly, std::uint32_t p);

} // namespace downcolor
