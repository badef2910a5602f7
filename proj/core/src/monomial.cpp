#include "cwl/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "cwl/error.hpp"

namespace cwl {

namespace {

void require_arity(std::size_t n) {
  if (n > kMaxArity)
    throw Error(ErrorCode::InvalidArgument, "arity exceeds kMaxArity");
}

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw Error(ErrorCode::MixedRing, "monomials of different arity");
}

}  // namespace

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
  require_arity(arity);
}

Monomial::Monomial(std::span<const Exponent> exponents)
    : arity_(static_cast<std::uint8_t>(exponents.size())) {
  require_arity(exponents.size());
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
  recompute_degree();
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m(arity);
  m.exps_[index] = power;
  m.recompute_degree();
  return m;
}

Monomial Monomial::from_mask(std::size_t arity, std::uint32_t mask) {
  Monomial m(arity);
  for (std::size_t i = 0; i < arity; ++i)
    if (mask >> i & 1u) m.exps_[i] = 1;
  m.recompute_degree();
  return m;
}

void Monomial::recompute_degree() {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += exps_[i];
  if (d > kMaxDegree) throw Error(ErrorCode::Overflow, "monomial degree overflow");
  degree_ = d;
}

bool Monomial::is_squarefree() const noexcept {
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] > 1) return false;
  return true;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] > 0) mask |= 1u << i;
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::with(std::size_t i, Exponent value) const {
  if (i >= arity_) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m = *this;
  m.exps_[i] = value;
  m.recompute_degree();
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  Monomial m(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) {
    std::uint64_t e = std::uint64_t{a.exps_[i]} + b.exps_[i];
    if (e > kMaxDegree) throw Error(ErrorCode::Overflow, "exponent overflow");
    m.exps_[i] = static_cast<Exponent>(e);
  }
  m.recompute_degree();
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this))
    throw Error(ErrorCode::InvalidArgument, "monomial quotient is not exact");
  Monomial m(arity_);
  for (std::size_t i = 0; i < arity_; ++i) m.exps_[i] = exps_[i] - divisor.exps_[i];
  m.recompute_degree();
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = arity_;
  for (std::size_t i = 0; i < arity_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(e);
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(e);
}

bool canonical_less(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  // Larger exponent vector first within a degree.
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (arity == 0) return out;
  std::vector<Exponent> e(arity, 0);
  // Walk compositions of `degree` in decreasing lexicographic order.
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos + 1 == arity) {
      e[pos] = static_cast<Exponent>(left);
      out.emplace_back(std::span<const Exponent>(e));
      return;
    }
    for (std::uint64_t k = left + 1; k-- > 0;) {
      e[pos] = static_cast<Exponent>(k);
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::uint64_t count_monomials(std::size_t arity, std::uint64_t degree) {
  if (arity == 0) return degree == 0 ? 1 : 0;
  // C(degree + arity - 1, arity - 1), computed incrementally to stay exact.
  std::uint64_t r = 1;
  for (std::uint64_t k = 1; k < arity; ++k) r = r * (degree + k) / k;
  return r;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.arity() != ring.arity())
    throw Error(ErrorCode::MixedRing, "monomial arity does not match ring");
  if (m.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace cwl
