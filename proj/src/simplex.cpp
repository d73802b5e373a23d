#include "morseshell/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace msh {

Simplex::Simplex(std::vector<Label> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

Simplex Simplex::of_atoms(std::initializer_list<std::string_view> tokens) {
  std::vector<Label> v;
  for (auto t : tokens) v.push_back(Label::atom(t));
  return Simplex(std::move(v));
}

bool Simplex::contains(Label l) const {
  return std::find(v_.begin(), v_.end(), l) != v_.end();
}

bool Simplex::is_face_of(const Simplex& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
  for (auto l : v_)
    if (other.contains(l)) return false;
  return true;
}

Simplex Simplex::unite(const Simplex& other) const {
  std::vector<Label> out;
  out.reserve(size() + other.size());
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<Label> out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                      std::back_inserter(out));
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::intersect(const Simplex& other) const {
  std::vector<Label> out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out));
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::with(Label l) const {
  if (contains(l)) return *this;
  std::vector<Label> out = v_;
  out.insert(std::upper_bound(out.begin(), out.end(), l), l);
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::without(Label l) const {
  std::vector<Label> out;
  out.reserve(v_.size());
  for (auto x : v_)
    if (x != l) out.push_back(x);
  return Simplex(Sorted{}, std::move(out));
}

std::vector<Simplex> Simplex::faces() const {
  if (v_.size() > 24) throw std::length_error("simplex too large to enumerate faces");
  const std::size_t n = v_.size();
  std::vector<Simplex> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Label> f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) f.push_back(v_[i]);
    out.push_back(Simplex(Sorted{}, std::move(f)));
  }
  return out;
}

std::vector<Simplex> Simplex::ridges() const {
  std::vector<Simplex> out;
  out.reserve(v_.size());
  for (auto l : v_) out.push_back(without(l));
  return out;
}

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) out += ' ';
    out += v_[i].to_string();
  }
  return out + "}";
}

std::vector<Simplex> sorted_faces(const FaceSet& faces) {
  std::vector<Simplex> out(faces.begin(), faces.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace msh
