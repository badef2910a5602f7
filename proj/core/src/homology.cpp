#include "cwl/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cwl/error.hpp"
#include "cwl/linalg.hpp"

namespace cwl {

void SimplicialComplex::add_face(Face face) {
  std::sort(face.begin(), face.end());
  if (std::adjacent_find(face.begin(), face.end()) != face.end())
    throw Error(ErrorCode::InvalidArgument, "face with repeated vertex");
  if (by_size_.size() <= face.size()) by_size_.resize(face.size() + 1);
  by_size_[face.size()].push_back(std::move(face));
}

SimplicialComplex SimplicialComplex::from_masks(const std::vector<std::uint32_t>& masks) {
  SimplicialComplex c;
  for (auto mask : masks) {
    Face f;
    for (std::uint32_t v = 0; v < 32; ++v)
      if (mask >> v & 1u) f.push_back(v);
    c.add_face(std::move(f));
  }
  return c;
}

std::size_t SimplicialComplex::face_count() const noexcept {
  std::size_t n = 0;
  for (const auto& layer : by_size_) n += layer.size();
  return n;
}

int SimplicialComplex::dimension() const noexcept {
  for (std::size_t k = by_size_.size(); k-- > 0;)
    if (!by_size_[k].empty()) return static_cast<int>(k) - 1;
  return -2;
}

bool SimplicialComplex::is_closed() const {
  std::set<Face> all;
  for (const auto& layer : by_size_) all.insert(layer.begin(), layer.end());
  for (const auto& f : all) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!all.count(sub)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> SimplicialComplex::reduced_betti() const {
  const int dim = dimension();
  if (dim < -1) return {};
  const std::size_t layers = static_cast<std::size_t>(dim) + 2;  // sizes 0..dim+1

  std::vector<std::map<Face, std::size_t>> index(layers);
  for (std::size_t k = 0; k < layers; ++k) {
    std::vector<Face> faces = k < by_size_.size() ? by_size_[k] : std::vector<Face>{};
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (std::size_t i = 0; i < faces.size(); ++i) index[k].emplace(faces[i], i);
  }

  // rank_[k] = rank of the boundary from faces of size k to size k-1.
  std::vector<std::size_t> boundary_rank(layers + 1, 0);
  for (std::size_t k = 1; k < layers; ++k) {
    if (index[k].empty() || index[k - 1].empty()) continue;
    IntMatrix d(index[k - 1].size(), index[k].size());
    for (const auto& [face, col] : index[k]) {
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        Face sub = face;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        auto it = index[k - 1].find(sub);
        if (it == index[k - 1].end())
          throw Error(ErrorCode::Internal, "simplicial complex is not closed under faces");
        d(it->second, col) = (drop % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[k] = rank_over_rationals(d);
  }

  std::vector<std::size_t> betti(layers, 0);
  for (std::size_t k = 0; k < layers; ++k) {
    const std::size_t faces = index[k].size();
    betti[k] = faces - boundary_rank[k] - boundary_rank[k + 1];
  }
  return betti;
}

}  // namespace cwl

namespace cwl {

std::vector<std::size_t> reduced_betti_of_mask_complex(const std::vector<std::uint8_t>& present,
                                                       std::size_t vertices) {
  if (vertices > 16) throw Error(ErrorCode::InvalidArgument, "mask complex too large");
  const std::uint32_t full = (1u << vertices) - 1;
  if (present.size() <= full) throw Error(ErrorCode::InvalidArgument, "membership table too short");

  int top = -1;  // largest face size present
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    if (present[mask]) top = std::max(top, __builtin_popcount(mask));
  if (top < 0) return {};

  // Cone over some vertex: acyclic.
  for (std::size_t v = 0; v < vertices; ++v) {
    const std::uint32_t bit = 1u << v;
    bool cone = true;
    for (std::uint32_t mask = 0; mask <= full && cone; ++mask)
      if (present[mask] && !present[mask | bit]) cone = false;
    if (cone) return std::vector<std::size_t>(static_cast<std::size_t>(top) + 1, 0);
  }

  const std::size_t layers = static_cast<std::size_t>(top) + 1;
  std::vector<std::vector<std::uint32_t>> faces(layers);
  std::vector<std::int32_t> position(full + 1, -1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!present[mask]) continue;
    auto& layer = faces[static_cast<std::size_t>(__builtin_popcount(mask))];
    position[mask] = static_cast<std::int32_t>(layer.size());
    layer.push_back(mask);
  }

  std::vector<std::size_t> boundary_rank(layers + 1, 0);
  for (std::size_t k = 1; k < layers; ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    IntMatrix d(faces[k - 1].size(), faces[k].size());
    for (std::size_t col = 0; col < faces[k].size(); ++col) {
      const std::uint32_t mask = faces[k][col];
      int sign = 1;
      for (std::size_t v = 0; v < vertices; ++v) {
        if (!(mask >> v & 1u)) continue;
        const std::int32_t row = position[mask & ~(1u << v)];
        if (row < 0) throw Error(ErrorCode::Internal, "mask complex is not closed under faces");
        d(static_cast<std::size_t>(row), col) = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = rank_over_rationals(d);
  }
  std::vector<std::size_t> betti(layers, 0);
  for (std::size_t k = 0; k < layers; ++k)
    betti[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  return betti;
}

}  // namespace cwl
