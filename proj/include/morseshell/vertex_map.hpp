#pragma once

#include <unordered_map>

#include "morseshell/complex.hpp"

namespace msh {

// Injective relabeling of vertices. Applying it to anything carrying a label
// outside the domain throws std::out_of_range.
class VertexMap {
 public:
  VertexMap() = default;

  void set(Label from, Label to);
  bool defined_on(Label l) const { return map_.count(l) != 0; }
  Label operator()(Label l) const;
  std::size_t size() const { return map_.size(); }
  const std::unordered_map<Label, Label, LabelHash>& entries() const { return map_; }

  Simplex apply(const Simplex& s) const;
  SimplicialComplex apply(const SimplicialComplex& k) const;
  RelativeComplex apply(const RelativeComplex& s) const;

  bool is_injective() const;

 private:
  std::unordered_map<Label, Label, LabelHash> map_;
};

// sd(∂σ) * sd(lk_K σ), the model of the link of σ̂ in sd(K).
SimplicialComplex link_model(const SimplicialComplex& k, const Simplex& sigma);

// Bary(ρ) ↦ Bary(ρ) for ρ ⊊ σ and Bary(λ) ↦ Bary(σ ∪ λ) for λ in lk_K(σ).
VertexMap link_iso_sd(const SimplicialComplex& k, const Simplex& sigma);

// Bary(Λ) ↦ Bary(φ(Λ) ∪ {σ̂}) on the vertices of sd(link_model), φ being
// link_iso_sd. Lands on the link of σ̂̂ in sd²(K).
VertexMap link_iso_sd2(const SimplicialComplex& k, const Simplex& sigma);

// σ̂̂ as a vertex of sd²(K).
Label double_bary(const Simplex& sigma);

// st(σ̂̂) ∩ st(τ̂̂) in sd²(K).
SimplicialComplex star_intersection_sd2(const SimplicialComplex& k, const Simplex& sigma,
                                        const Simplex& tau);
// Image of N(τ̂, link_model(K, σ)) under link_iso_sd2(K, σ), for σ ⊊ τ or τ ⊊ σ.
// Equals star_intersection_sd2(K, σ, τ).
SimplicialComplex star_intersection_model(const SimplicialComplex& k, const Simplex& sigma,
                                          const Simplex& tau);

}  // namespace msh
