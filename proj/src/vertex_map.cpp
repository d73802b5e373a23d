#include "morseshell/vertex_map.hpp"

#include <stdexcept>
#include <unordered_set>

namespace msh {

void VertexMap::set(Label from, Label to) { map_.insert_or_assign(from, to); }

Label VertexMap::operator()(Label l) const {
  auto it = map_.find(l);
  if (it == map_.end()) throw std::out_of_range("label outside map domain: " + l.to_string());
  return it->second;
}

Simplex VertexMap::apply(const Simplex& s) const {
  std::vector<Label> out;
  out.reserve(s.size());
  for (auto l : s) out.push_back((*this)(l));
  return Simplex(std::move(out));
}

SimplicialComplex VertexMap::apply(const SimplicialComplex& k) const {
  if (k.is_void()) return {};
  std::vector<Simplex> gens;
  gens.reserve(k.facets().size());
  for (const auto& f : k.facets()) gens.push_back(apply(f));
  return SimplicialComplex::closure(std::move(gens));
}

RelativeComplex VertexMap::apply(const RelativeComplex& s) const {
  return RelativeComplex(apply(s.ambient()), apply(s.missing()));
}

bool VertexMap::is_injective() const {
  std::unordered_set<Label, LabelHash> seen;
  for (const auto& [_, to] : map_)
    if (!seen.insert(to).second) return false;
  return true;
}

SimplicialComplex link_model(const SimplicialComplex& k, const Simplex& sigma) {
  if (sigma.empty() || !k.contains(sigma))
    throw std::invalid_argument("simplex " + sigma.to_string() + " is not a face of K");
  auto bd = sigma.size() == 1 ? SimplicialComplex::empty_face() : boundary(sigma);
  return join(barycentric(bd), barycentric(link(k, sigma)));
}

VertexMap link_iso_sd(const SimplicialComplex& k, const Simplex& sigma) {
  if (sigma.empty() || !k.contains(sigma))
    throw std::invalid_argument("simplex " + sigma.to_string() + " is not a face of K");
  VertexMap m;
  for (const auto& rho : sigma.faces()) {
    if (rho.empty() || rho == sigma) continue;
    auto b = Label::bary(rho.vertices());
    m.set(b, b);
  }
  const auto lk = link(k, sigma);
  for (const auto& lambda : lk.faces()) {
    if (lambda.empty()) continue;
    m.set(Label::bary(lambda.vertices()), Label::bary(sigma.unite(lambda).vertices()));
  }
  return m;
}

Label double_bary(const Simplex& sigma) {
  return Label::bary({Label::bary(sigma.vertices())});
}

VertexMap link_iso_sd2(const SimplicialComplex& k, const Simplex& sigma) {
  auto phi = link_iso_sd(k, sigma);
  auto center = Label::bary(sigma.vertices());
  VertexMap m;
  const auto model = link_model(k, sigma);
  for (const auto& big_lambda : model.faces()) {
    if (big_lambda.empty()) continue;
    auto image = phi.apply(big_lambda).with(center);
    m.set(Label::bary(big_lambda.vertices()), Label::bary(image.vertices()));
  }
  return m;
}

SimplicialComplex star_intersection_sd2(const SimplicialComplex& k, const Simplex& sigma,
                                        const Simplex& tau) {
  auto sd2 = barycentric(k, 2);
  auto a = star(sd2, Simplex{double_bary(sigma)});
  auto b = star(sd2, Simplex{double_bary(tau)});
  FaceSet common;
  for (const auto& f : a.faces())
    if (b.contains(f)) common.insert(f);
  return SimplicialComplex::from_faces(common);
}

SimplicialComplex star_intersection_model(const SimplicialComplex& k, const Simplex& sigma,
                                          const Simplex& tau) {
  Simplex tau_hat;
  if (tau.size() < sigma.size()) {
    if (!tau.is_face_of(sigma)) return {};
    tau_hat = Simplex{Label::bary(tau.vertices())};
  } else {
    if (!sigma.is_face_of(tau) || sigma == tau) return {};
    tau_hat = Simplex{Label::bary(tau.minus(sigma).vertices())};
  }
  auto model = link_model(k, sigma);
  auto n = derived_neighborhood(SimplicialComplex::closure({tau_hat}), model);
  return link_iso_sd2(k, sigma).apply(n);
}

}  // namespace msh
