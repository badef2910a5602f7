#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cwl/ring.hpp"

namespace cwl {

using Exponent = std::uint32_t;

/// Largest total degree a monomial may reach. Products that would exceed it
/// throw ErrorCode::Overflow.
inline constexpr std::uint64_t kMaxDegree = (std::uint64_t{1} << 31) - 1;

/// A monic monomial x^a, stored as its exponent vector. The arity is carried
/// so that mismatched operands are caught; the ring itself lives on the
/// ideal.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial of the given arity.
  explicit Monomial(std::size_t arity);
  explicit Monomial(std::span<const Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial variable(std::size_t arity, std::size_t index,
                           Exponent power = 1);
  /// Product of the variables whose bits are set in `mask`.
  static Monomial from_mask(std::size_t arity, std::uint32_t mask);

  std::size_t arity() const noexcept { return arity_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept {
    return {exps_.data(), arity_};
  }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  /// Bit i is set iff x_i divides the monomial.
  std::uint32_t support_mask() const noexcept;

  bool divides(const Monomial& other) const;

  /// Copy with exponent i replaced.
  Monomial with(std::size_t i, Exponent value) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; throws unless `divisor` divides `*this`.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  void recompute_degree();

  std::array<Exponent, kMaxArity> exps_{};
  std::uint64_t degree_ = 0;
  std::uint8_t arity_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Graded order: lower degree first, then larger exponent vector first
/// (x^3 < x^2*y < x*y^2 < y^3). This is the canonical generator order.
bool canonical_less(const Monomial& a, const Monomial& b) noexcept;

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return canonical_less(a, b);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of the given degree, in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t arity,
                                          std::uint64_t degree);

/// Number of monomials of degree d in `arity` variables, C(d+n-1, n-1).
std::uint64_t count_monomials(std::size_t arity, std::uint64_t degree);

/// Renders as `x^3*y`, the unit as `1`.
std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace cwl
