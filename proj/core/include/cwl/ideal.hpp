#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cwl/monomial.hpp"
#include "cwl/ring.hpp"

namespace cwl {

/// A monomial ideal, represented by its minimal generating set G(I) sorted
/// in canonical order. Construction always minimalizes, so two ideals are
/// equal iff their generator lists are equal. The zero ideal has no
/// generators; the unit ideal is generated by the unit monomial.
class MonomialIdeal {
 public:
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(Ring ring);
  static MonomialIdeal unit(Ring ring);
  /// m = (x_1, ..., x_n).
  static MonomialIdeal maximal(Ring ring);
  /// The monomial prime generated by the variables in `mask`.
  static MonomialIdeal prime(Ring ring, std::uint32_t mask);
  static MonomialIdeal principal(Ring ring, const Monomial& generator);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t arity() const noexcept { return ring_.arity(); }
  std::span<const Monomial> gens() const noexcept { return gens_; }
  std::size_t mu() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_unit();
  }
  bool is_principal() const noexcept { return gens_.size() == 1; }

  bool contains(const Monomial& m) const;
  /// True iff `other` is a subideal of this ideal.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  struct Minimal {};
  MonomialIdeal(Ring ring, std::vector<Monomial> gens, Minimal)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  friend MonomialIdeal scale(const Monomial&, const MonomialIdeal&);

  Ring ring_;
  std::vector<Monomial> gens_;
};

struct IdealStats {
  std::uint64_t order = 0;
  std::size_t mu = 0;
  /// Indices of variables in Supp(I).
  std::vector<std::size_t> support;
  std::uint64_t max_gen_degree = 0;
  bool is_m_primary = false;
};

MonomialIdeal minimalize(std::vector<Monomial> gens, const Ring& ring);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal scale(const Monomial& f, const MonomialIdeal& ideal);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : f). Equals the unit ideal when f is in I.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
/// (I : J), J nonzero.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
/// (I : m).
MonomialIdeal colon_maximal(const MonomialIdeal& ideal);
/// I_<j>, the ideal generated by the degree-j monomials of I.
MonomialIdeal component(const MonomialIdeal& ideal, std::uint64_t degree);
MonomialIdeal power(const MonomialIdeal& ideal, long long exponent);

/// Throws ErrorCode::ZeroIdeal for the zero ideal.
IdealStats stats(const MonomialIdeal& ideal);
/// o(I); throws for the zero ideal.
std::uint64_t order(const MonomialIdeal& ideal);
std::uint64_t max_generator_degree(const MonomialIdeal& ideal);
/// Union of generator supports as a bit mask.
std::uint32_t support_mask(const MonomialIdeal& ideal);

/// (f, I') with f = gcd(G(I)) and I = f * I'.
std::pair<Monomial, MonomialIdeal> factor_gcd(const MonomialIdeal& ideal);

/// dim_k I_d, the number of degree-d monomials in I.
std::uint64_t graded_dimension(const MonomialIdeal& ideal, std::uint64_t degree);

/// `x^3, x*y, y^3` (canonical order); `0` for the zero ideal.
std::string to_string(const MonomialIdeal& ideal);
std::vector<std::string> generator_strings(const MonomialIdeal& ideal);

}  // namespace cwl
