#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "morseshell/simplex.hpp"

namespace msh {

// Finite simplicial complex. The default-constructed value is the void
// complex, which has no faces at all; {∅} is a different, non-void complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Closure of the given simplices. Non-maximal entries are absorbed. The
  // empty face is allowed here, so closure({∅}) is the complex {∅}.
  static SimplicialComplex closure(std::vector<Simplex> generators);
  // Downward closure of an arbitrary face set.
  static SimplicialComplex from_faces(const FaceSet& faces);
  static SimplicialComplex empty_face() { return closure({Simplex{}}); }

  bool is_void() const { return faces_.empty(); }
  // Complex {∅}: the empty face and nothing else.
  bool is_empty_face_only() const { return faces_.size() == 1; }
  int dim() const;

  const std::vector<Simplex>& facets() const { return facets_; }
  // Every face, including ∅ when the complex is not void, in canonical order.
  const std::vector<Simplex>& faces() const { return faces_; }
  bool contains(const Simplex& s) const { return index_.count(s) != 0; }
  // Indices into facets() of the facets containing s.
  const std::vector<std::uint32_t>& facets_containing(const Simplex& s) const;
  bool is_facet(const Simplex& s) const;

  std::vector<Label> vertices() const;
  // f_vector()[i] counts faces of dimension i (the empty face is excluded).
  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.faces_ == b.faces_;
  }

 private:
  std::vector<Simplex> facets_;
  std::vector<Simplex> faces_;
  FaceMap<std::vector<std::uint32_t>> index_;
};

// Checked public constructor: every facet must be non-empty.
SimplicialComplex make_complex(std::vector<Simplex> facets);

// The pair K \ L. On construction facets of K that lie in L are deleted
// together with their faces, so K is always the closure of the relative faces.
class RelativeComplex {
 public:
  RelativeComplex() = default;
  explicit RelativeComplex(SimplicialComplex k);
  RelativeComplex(SimplicialComplex k, SimplicialComplex l);

  const SimplicialComplex& ambient() const { return k_; }
  const SimplicialComplex& missing() const { return l_; }
  bool is_absolute() const { return l_.is_void(); }

  // Faces of K not in L, canonical order.
  std::vector<Simplex> faces() const;
  bool contains(const Simplex& s) const { return k_.contains(s) && !l_.contains(s); }

 private:
  SimplicialComplex k_;
  SimplicialComplex l_;
};

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
RelativeComplex join(const RelativeComplex& a, const RelativeComplex& b);

SimplicialComplex barycentric(const SimplicialComplex& k);
RelativeComplex barycentric(const RelativeComplex& s);
SimplicialComplex barycentric(const SimplicialComplex& k, int depth);
RelativeComplex barycentric(const RelativeComplex& s, int depth);

// The face of K whose barycenter is `l`; `l` must be a Bary label.
Simplex bary_support(Label l);

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s);
SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);

struct StarLink {
  RelativeComplex star;
  RelativeComplex link;
};
// Pair semantics: stars and links are taken in K and L separately.
StarLink star_link(const RelativeComplex& s, const Simplex& sigma);

// Boundary complex of a simplex; {∅} for a vertex.
SimplicialComplex boundary(const Simplex& s);

// Union of the stars of v̂ in sd(K) over the vertices v of L.
SimplicialComplex derived_neighborhood(const SimplicialComplex& l, const SimplicialComplex& k);
// Same neighborhood taken inside sd(S) for a relative S, with the vertex set
// given directly.
std::vector<Simplex> derived_neighborhood_faces(const RelativeComplex& s,
                                                const std::vector<Label>& vertices);

}  // namespace msh
