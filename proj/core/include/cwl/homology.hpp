#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cwl {

/// A finite abstract simplicial complex. Faces are sorted vertex lists; the
/// empty face is allowed and is what distinguishes the complex {∅} (reduced
/// homology k in degree -1) from the void complex (no faces, zero homology).
///
/// Used transiently: build, ask for reduced Betti numbers, discard.
class SimplicialComplex {
 public:
  using Face = std::vector<std::uint32_t>;

  SimplicialComplex() = default;

  /// Adds a face. The caller is responsible for closing the family under
  /// subsets; `is_closed()` checks it.
  void add_face(Face face);

  /// Faces given as vertex bit masks (vertex count <= 32).
  static SimplicialComplex from_masks(const std::vector<std::uint32_t>& masks);

  std::size_t face_count() const noexcept;
  bool is_void() const noexcept { return face_count() == 0; }
  /// Highest face dimension, -1 for {∅}, -2 for the void complex.
  int dimension() const noexcept;
  bool is_closed() const;

  /// Entry d+1 holds dim H̃_d(Δ; Q) for d = -1 .. dimension().
  std::vector<std::size_t> reduced_betti() const;

 private:
  // by_size_[k] holds the faces with k vertices (dimension k-1).
  std::vector<std::vector<Face>> by_size_;
};

}  // namespace cwl

namespace cwl {

/// Reduced Betti numbers of a complex on `vertices` (<= 16) vertices given as
/// a membership table: `present[mask]` is nonzero iff the face with that
/// vertex mask belongs to the complex. Same output convention as
/// SimplicialComplex::reduced_betti().
std::vector<std::size_t> reduced_betti_of_mask_complex(const std::vector<std::uint8_t>& present,
                                                       std::size_t vertices);

}  // namespace cwl
