#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cwl {

/// Upper bound on the number of variables. Monomials are stored inline.
inline constexpr std::size_t kMaxArity = 12;

/// The polynomial ring k[x_1..x_n] over a field of characteristic zero,
/// identified by its ordered list of variable names. Two rings are the same
/// ring iff they declare the same names in the same order.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  /// x, y, z for n <= 3, otherwise x1..xn.
  static Ring standard(std::size_t arity);

  std::size_t arity() const noexcept { return names_->size(); }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws ErrorCode::MixedRing unless both rings coincide.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace cwl
