#include "morseshell/tile.hpp"

#include <stdexcept>

namespace msh {

std::vector<Simplex> MorseTile::missing_ridges() const {
  std::vector<Simplex> out;
  for (auto r : restriction) out.push_back(simplex.without(r));
  return out;
}

std::vector<Simplex> MorseTile::missing_faces() const {
  auto out = missing_ridges();
  if (morse_face) out.push_back(*morse_face);
  return out;
}

std::string MorseTile::to_string() const {
  std::string out = simplex.to_string() + " r=" + restriction.to_string();
  if (morse_face) out += " mu=" + morse_face->to_string();
  return out;
}

std::variant<MorseTile, NotAMorseTile> classify(const Simplex& underlying,
                                                const std::vector<Simplex>& missing) {
  for (const auto& m : missing) {
    if (!m.is_face_of(underlying) || m == underlying)
      throw std::invalid_argument("missing face " + m.to_string() + " is not a proper face of " +
                                  underlying.to_string());
  }
  // r(T): vertices whose opposite ridge is missing.
  std::vector<Label> r;
  for (auto v : underlying) {
    auto ridge = underlying.without(v);
    for (const auto& m : missing) {
      if (m == ridge) {
        r.push_back(v);
        break;
      }
    }
  }
  Simplex restriction(std::move(r));
  // Faces outside the closure of the missing ridges are exactly those
  // containing r(T); what remains to be removed must be one face's closure.
  std::optional<Simplex> mu;
  for (const auto& m : missing) {
    if (!restriction.is_face_of(m)) continue;
    mu = mu ? mu->unite(m) : m;
  }
  if (mu) {
    bool is_listed = false;
    for (const auto& m : missing) {
      if (m == *mu) {
        is_listed = true;
        break;
      }
    }
    if (!is_listed)
      return NotAMorseTile{"faces missing beyond the ridges have no largest element"};
  }
  return MorseTile{underlying, std::move(restriction), std::move(mu)};
}

MorseTile make_tile(const Simplex& underlying, const std::vector<Simplex>& missing) {
  auto c = classify(underlying, missing);
  if (auto* bad = std::get_if<NotAMorseTile>(&c))
    throw std::domain_error("not a Morse tile on " + underlying.to_string() + ": " + bad->reason);
  return std::get<MorseTile>(std::move(c));
}

MorseTile closed_tile(const Simplex& s) { return MorseTile{s, {}, std::nullopt}; }
MorseTile open_tile(const Simplex& s) { return MorseTile{s, s, std::nullopt}; }
MorseTile dotted_tile(const Simplex& s) { return make_tile(s, {Simplex{}}); }
MorseTile empty_tile() { return MorseTile{}; }

TileClass tile_class(const MorseTile& t) {
  if (t.is_closed()) return TileClass::critical_of(0);
  if (t.morse_face) {
    if (*t.morse_face == t.restriction) return TileClass::critical_of(t.order());
    return TileClass::regular();
  }
  if (t.restriction == t.simplex) return TileClass::critical_of(t.dim());
  return TileClass::regular();
}

CanonicalTriple canonical_triple(const MorseTile& t) {
  if (t.morse_face)
    return {t.morse_face->minus(t.restriction), t.restriction, t.simplex.minus(*t.morse_face)};
  return {t.simplex.minus(t.restriction), t.restriction, Simplex{}};
}

MorseTile recompose(const CanonicalTriple& c) {
  if (c.tau.size() == 1) throw std::invalid_argument("dotted part of dimension zero");
  if (c.tau.empty()) return MorseTile{c.sigma.unite(c.theta), c.theta, std::nullopt};
  auto mu = c.sigma.unite(c.theta);
  return MorseTile{mu.unite(c.tau), c.theta, mu};
}

MorseTile tile_join(const MorseTile& t, const MorseTile& t2) {
  if (!t.is_basic()) throw std::invalid_argument("left join factor must be a basic tile");
  if (!t.simplex.disjoint_from(t2.simplex))
    throw std::invalid_argument("join of tiles sharing a vertex");
  MorseTile out;
  out.simplex = t.simplex.unite(t2.simplex);
  out.restriction = t.restriction.unite(t2.restriction);
  if (t2.morse_face) out.morse_face = t.simplex.unite(*t2.morse_face);
  return out;
}

MorseTile cone(Label v, const MorseTile& t, bool dotted) {
  Simplex apex{v};
  return tile_join(dotted ? open_tile(apex) : closed_tile(apex), t);
}

MorseTile tile_vertex_link(const MorseTile& t, Label v) {
  if (!t.simplex.contains(v))
    throw std::invalid_argument("vertex " + v.to_string() + " is not in the tile");
  MorseTile out;
  out.simplex = t.simplex.without(v);
  out.restriction = t.restriction.without(v);
  if (t.morse_face && t.morse_face->contains(v)) out.morse_face = t.morse_face->without(v);
  return out;
}

std::pair<MorseTile, MorseTile> split_tile(const MorseTile& t, const Simplex& front) {
  if (!front.is_face_of(t.simplex)) throw std::invalid_argument("split vertices not in the tile");
  if (t.morse_face && !front.is_face_of(*t.morse_face))
    throw std::invalid_argument("split vertices must lie in the Morse face");
  MorseTile a{front, t.restriction.intersect(front), std::nullopt};
  MorseTile b;
  b.simplex = t.simplex.minus(front);
  b.restriction = t.restriction.minus(front);
  if (t.morse_face) b.morse_face = t.morse_face->minus(front);
  return {a, b};
}

MorseTile deprive(const MorseTile& t, const Simplex& face) {
  auto missing = t.missing_faces();
  missing.push_back(face);
  return make_tile(t.simplex, missing);
}

std::vector<Simplex> tile_faces(const MorseTile& t) {
  std::vector<Simplex> out;
  for (auto& f : t.simplex.faces()) {
    if (!t.restriction.is_face_of(f)) continue;
    if (t.morse_face && f.is_face_of(*t.morse_face)) continue;
    out.push_back(std::move(f));
  }
  return out;
}

long euler_signature(const MorseTile& t) {
  long chi = 0;
  for (const auto& f : tile_faces(t))
    if (!f.empty()) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

RelativeComplex tile_as_relative(const MorseTile& t) {
  auto missing = t.missing_faces();
  auto l = missing.empty() ? SimplicialComplex{} : SimplicialComplex::closure(missing);
  return RelativeComplex(SimplicialComplex::closure({t.simplex}), std::move(l));
}

MorseTile apply_map(const MorseTile& t, const VertexMap& m) {
  MorseTile out;
  out.simplex = m.apply(t.simplex);
  out.restriction = m.apply(t.restriction);
  if (t.morse_face) out.morse_face = m.apply(*t.morse_face);
  return out;
}

}  // namespace msh
