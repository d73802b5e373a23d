#include "morseshell/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msh {

namespace {

const std::vector<std::uint32_t> kNoFacets;

std::vector<Simplex> maximal_only(std::vector<Simplex> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Simplex& a, const Simplex& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Simplex> out;
  for (auto& g : gens) {
    bool absorbed = false;
    for (const auto& m : out) {
      if (g.is_face_of(m)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::closure(std::vector<Simplex> generators) {
  SimplicialComplex c;
  c.facets_ = maximal_only(std::move(generators));
  for (std::uint32_t i = 0; i < c.facets_.size(); ++i) {
    for (auto& f : c.facets_[i].faces()) c.index_[f].push_back(i);
  }
  c.faces_.reserve(c.index_.size());
  for (const auto& [f, _] : c.index_) c.faces_.push_back(f);
  std::sort(c.faces_.begin(), c.faces_.end());
  return c;
}

SimplicialComplex SimplicialComplex::from_faces(const FaceSet& faces) {
  return closure(std::vector<Simplex>(faces.begin(), faces.end()));
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dim());
  return d;
}

const std::vector<std::uint32_t>& SimplicialComplex::facets_containing(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? kNoFacets : it->second;
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::vector<Label> SimplicialComplex::vertices() const {
  std::vector<Label> out;
  for (const auto& f : faces_)
    if (f.size() == 1) out.push_back(f[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(dim() + 1, 0)), 0);
  for (const auto& f : faces_)
    if (!f.empty()) ++out[f.size() - 1];
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (const auto& f : faces_)
    if (!f.empty()) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return other.contains(f); });
}

SimplicialComplex make_complex(std::vector<Simplex> facets) {
  for (const auto& f : facets)
    if (f.empty()) throw std::invalid_argument("empty facet");
  return SimplicialComplex::closure(std::move(facets));
}

RelativeComplex::RelativeComplex(SimplicialComplex k) : k_(std::move(k)) {}

RelativeComplex::RelativeComplex(SimplicialComplex k, SimplicialComplex l) {
  if (!l.is_subcomplex_of(k)) throw std::invalid_argument("missing complex is not a subcomplex");
  std::vector<Simplex> kept;
  for (const auto& f : k.facets())
    if (!l.contains(f)) kept.push_back(f);
  if (kept.size() == k.facets().size()) {
    k_ = std::move(k);
    l_ = std::move(l);
    return;
  }
  k_ = SimplicialComplex::closure(std::move(kept));
  std::vector<Simplex> lf;
  for (const auto& f : l.faces())
    if (k_.contains(f)) lf.push_back(f);
  l_ = SimplicialComplex::closure(std::move(lf));
}

std::vector<Simplex> RelativeComplex::faces() const {
  std::vector<Simplex> out;
  for (const auto& f : k_.faces())
    if (!l_.contains(f)) out.push_back(f);
  return out;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) return {};
  auto va = a.vertices();
  for (auto v : b.vertices())
    if (std::binary_search(va.begin(), va.end(), v))
      throw std::invalid_argument("join of complexes sharing vertex " + v.to_string());
  std::vector<Simplex> gens;
  gens.reserve(a.facets().size() * b.facets().size());
  for (const auto& x : a.facets())
    for (const auto& y : b.facets()) gens.push_back(x.unite(y));
  return SimplicialComplex::closure(std::move(gens));
}

RelativeComplex join(const RelativeComplex& a, const RelativeComplex& b) {
  auto k = join(a.ambient(), b.ambient());
  auto l1 = join(a.missing(), b.ambient());
  auto l2 = join(a.ambient(), b.missing());
  std::vector<Simplex> gens = l1.facets();
  gens.insert(gens.end(), l2.facets().begin(), l2.facets().end());
  return RelativeComplex(std::move(k), SimplicialComplex::closure(std::move(gens)));
}

Simplex bary_support(Label l) {
  if (!l.is_bary()) throw std::invalid_argument("not a barycenter label: " + l.to_string());
  auto m = l.members();
  return Simplex(std::vector<Label>(m.begin(), m.end()));
}

SimplicialComplex barycentric(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  std::vector<Simplex> gens;
  for (const auto& facet : k.facets()) {
    if (facet.empty()) {
      gens.emplace_back();
      continue;
    }
    std::vector<Label> perm = facet.vertices();
    do {
      std::vector<Label> flag;
      flag.reserve(perm.size());
      for (std::size_t i = 1; i <= perm.size(); ++i)
        flag.push_back(Label::bary(std::span<const Label>(perm.data(), i)));
      gens.emplace_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::closure(std::move(gens));
}

RelativeComplex barycentric(const RelativeComplex& s) {
  return RelativeComplex(barycentric(s.ambient()), barycentric(s.missing()));
}

SimplicialComplex barycentric(const SimplicialComplex& k, int depth) {
  if (depth < 0) throw std::invalid_argument("negative subdivision depth");
  SimplicialComplex out = k;
  for (int i = 0; i < depth; ++i) out = barycentric(out);
  return out;
}

RelativeComplex barycentric(const RelativeComplex& s, int depth) {
  if (depth < 0) throw std::invalid_argument("negative subdivision depth");
  RelativeComplex out = s;
  for (int i = 0; i < depth; ++i) out = barycentric(out);
  return out;
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s) {
  std::vector<Simplex> gens;
  for (auto i : k.facets_containing(s)) gens.push_back(k.facets()[i]);
  return SimplicialComplex::closure(std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
  std::vector<Simplex> gens;
  for (auto i : k.facets_containing(s)) gens.push_back(k.facets()[i].minus(s));
  return SimplicialComplex::closure(std::move(gens));
}

StarLink star_link(const RelativeComplex& s, const Simplex& sigma) {
  if (!s.ambient().contains(sigma))
    throw std::invalid_argument("simplex " + sigma.to_string() + " is not in the complex");
  const auto& k = s.ambient();
  const auto& l = s.missing();
  return {RelativeComplex(star(k, sigma), star(l, sigma)),
          RelativeComplex(link(k, sigma), link(l, sigma))};
}

SimplicialComplex boundary(const Simplex& s) {
  if (s.empty()) return {};
  return SimplicialComplex::closure(s.ridges());
}

SimplicialComplex derived_neighborhood(const SimplicialComplex& l, const SimplicialComplex& k) {
  if (!l.is_subcomplex_of(k)) throw std::invalid_argument("L is not a subcomplex of K");
  auto sd = barycentric(k);
  auto lv = l.vertices();
  std::vector<Simplex> gens;
  for (const auto& flag : sd.facets()) {
    if (flag.empty()) continue;
    // The smallest element of a flag is the member of least cardinality.
    auto first = *std::min_element(flag.begin(), flag.end(), [](Label a, Label b) {
      return a.members().size() < b.members().size();
    });
    auto supp = bary_support(first);
    for (auto v : supp) {
      if (std::binary_search(lv.begin(), lv.end(), v)) {
        gens.push_back(flag);
        break;
      }
    }
  }
  if (gens.empty() && !lv.empty()) gens.emplace_back();
  return SimplicialComplex::closure(std::move(gens));
}

std::vector<Simplex> derived_neighborhood_faces(const RelativeComplex& s,
                                                const std::vector<Label>& vertices) {
  auto sd = barycentric(s);
  std::vector<Simplex> out;
  if (vertices.empty()) return out;
  for (const auto& face : sd.faces()) {
    if (face.empty()) {
      out.push_back(face);
      continue;
    }
    auto first = *std::min_element(face.begin(), face.end(), [](Label a, Label b) {
      return a.members().size() < b.members().size();
    });
    for (auto v : first.members()) {
      if (std::find(vertices.begin(), vertices.end(), v) != vertices.end()) {
        out.push_back(face);
        break;
      }
    }
  }
  return out;
}

}  // namespace msh
