#include "cwl/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <utility>

namespace cwl {

namespace {

struct OverflowSignal {};

struct Int64Ops {
  using Scalar = std::int64_t;
  // (a*b - c*d) / e, exact by the Bareiss identity.
  static Scalar combine(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e) {
    __int128 num = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
    __int128 q = num / e;
    if (q > std::numeric_limits<Scalar>::max() || q < std::numeric_limits<Scalar>::min())
      throw OverflowSignal{};
    return static_cast<Scalar>(q);
  }
};

struct BigOps {
  using Scalar = boost::multiprecision::cpp_int;
  static Scalar combine(const Scalar& a, const Scalar& b, const Scalar& c,
                        const Scalar& d, const Scalar& e) {
    return (a * b - c * d) / e;
  }
};

template <class Ops>
std::size_t bareiss_rank(const IntMatrix& m) {
  using Scalar = typename Ops::Scalar;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Scalar> a(m.data().begin(), m.data().end());
  auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return a[r * cols + c]; };

  Scalar prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    const Scalar p = at(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Scalar lead = at(r, c);
      for (std::size_t k = c + 1; k < cols; ++k)
        at(r, k) = Ops::combine(p, at(r, k), lead, at(rank, k), prev);
      at(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_over_rationals(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  try {
    return bareiss_rank<Int64Ops>(m);
  } catch (const OverflowSignal&) {
    return bareiss_rank<BigOps>(m);
  }
}

std::size_t rank_over_rationals_bigint(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank<BigOps>(m);
}

}  // namespace cwl
