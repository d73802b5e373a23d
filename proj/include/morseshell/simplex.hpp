#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morseshell/label.hpp"

namespace msh {

// A finite set of vertices kept in canonical label order. The default value
// is the empty face.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Label> vertices);
  Simplex(std::initializer_list<Label> vertices) : Simplex(std::vector<Label>(vertices)) {}

  // Shorthand for tests and tools: one atom per token.
  static Simplex of_atoms(std::initializer_list<std::string_view> tokens);

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  const std::vector<Label>& vertices() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  Label operator[](std::size_t i) const { return v_[i]; }

  bool contains(Label l) const;
  bool is_face_of(const Simplex& other) const;
  bool disjoint_from(const Simplex& other) const;

  Simplex unite(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;
  Simplex with(Label l) const;
  Simplex without(Label l) const;

  // All 2^(n+1) faces, including the empty face and the simplex itself.
  std::vector<Simplex> faces() const;
  // Codimension-one faces, the i-th omitting the i-th vertex.
  std::vector<Simplex> ridges() const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(),
                                                  b.v_.end());
  }

 private:
  struct Sorted {};
  Simplex(Sorted, std::vector<Label> v) : v_(std::move(v)) {}
  std::vector<Label> v_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL ^ s.size();
    for (auto l : s) {
      h ^= l.id() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using FaceSet = std::unordered_set<Simplex, SimplexHash>;
template <typename V>
using FaceMap = std::unordered_map<Simplex, V, SimplexHash>;

// Sorted copy of a face set, for deterministic iteration.
std::vector<Simplex> sorted_faces(const FaceSet& faces);

}  // namespace msh
