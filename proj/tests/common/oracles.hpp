#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "cwl/ideal.hpp"
#include "cwl/linalg.hpp"
#include "cwl/resolution.hpp"

namespace cwl::testing {

using Q = boost::multiprecision::cpp_rational;

// Plain Gaussian elimination over exact rationals.
inline std::size_t rank_by_rationals(const IntMatrix& m) {
  std::vector<std::vector<Q>> a(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Q(m(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      const Q factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Regularity read off the lcm-lattice Betti table.
inline long long reg_by_lattice(const MonomialIdeal& i) {
  return regularity(betti_oracle_lcm_lattice(i)).reg;
}

// I_<j> linear for each j from o(I) to reg I, every Betti number taken from
// the lcm lattice. Small ideals only.
inline bool cwl_by_lattice(const MonomialIdeal& i) {
  if (i.is_zero() || i.is_unit()) return true;
  const long long top = reg_by_lattice(i);
  for (long long j = static_cast<long long>(order(i)); j <= top; ++j) {
    const auto comp = component(i, static_cast<std::uint64_t>(j));
    if (comp.is_zero()) continue;
    const auto table = betti_oracle_lcm_lattice(comp);
    for (const auto& e : table.entries())
      if (static_cast<long long>(e.multidegree.degree()) != j + e.homological_degree) return false;
  }
  return true;
}

// dim (I : l)_d for the linear form l = sum c_i x_i: the kernel of
// multiplication by l from S_d to (S/I)_{d+1}.
inline std::uint64_t colon_dim_by_form(const MonomialIdeal& i, const std::vector<std::int64_t>& c,
                                       std::uint64_t d) {
  const auto source = monomials_of_degree(i.arity(), d);
  std::vector<Monomial> target;
  for (const auto& m : monomials_of_degree(i.arity(), d + 1))
    if (!i.contains(m)) target.push_back(m);
  IntMatrix a(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col)
    for (std::size_t v = 0; v < i.arity(); ++v) {
      const auto image = source[col] * Monomial::variable(i.arity(), v);
      const auto row = std::find(target.begin(), target.end(), image);
      if (row != target.end()) a(row - target.begin(), col) += c[v];
    }
  return source.size() - rank_by_rationals(a);
}

}  // namespace cwl::testing
