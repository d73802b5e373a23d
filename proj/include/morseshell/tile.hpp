#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "morseshell/complex.hpp"
#include "morseshell/vertex_map.hpp"

namespace msh {

// A simplex deprived of the ridges opposite to the vertices of `restriction`,
// and of the closure of `morse_face` when present. morse_face = ∅ is the
// dotted simplex. The simplex itself anchors the tile in an ambient complex.
// The tile on the empty simplex is the closed {∅}; it is the unit of joins.
struct MorseTile {
  Simplex simplex;
  Simplex restriction;
  std::optional<Simplex> morse_face;

  int dim() const { return simplex.dim(); }
  int order() const { return static_cast<int>(restriction.size()); }
  bool is_basic() const { return !morse_face.has_value(); }
  bool is_closed() const { return restriction.empty() && !morse_face; }
  bool is_dotted() const { return restriction.empty() && morse_face && morse_face->empty(); }
  bool is_open() const { return !morse_face && !simplex.empty() && restriction == simplex; }
  bool is_empty() const { return simplex.empty(); }

  std::vector<Simplex> missing_ridges() const;
  // Ridges followed by the Morse face.
  std::vector<Simplex> missing_faces() const;

  std::string to_string() const;

  friend bool operator==(const MorseTile&, const MorseTile&) = default;
};

struct NotAMorseTile {
  std::string reason;
};

struct TileClass {
  bool critical = false;
  int index = 0;

  static TileClass regular() { return {}; }
  static TileClass critical_of(int k) { return {true, k}; }
  friend bool operator==(const TileClass&, const TileClass&) = default;
};

// Reads a relative simplex given by its underlying simplex and a list of
// missing faces (∅ allowed). Throws std::invalid_argument when a listed face
// is not a proper face.
std::variant<MorseTile, NotAMorseTile> classify(const Simplex& underlying,
                                                const std::vector<Simplex>& missing);
// classify, throwing std::domain_error on NotAMorseTile.
MorseTile make_tile(const Simplex& underlying, const std::vector<Simplex>& missing);

MorseTile closed_tile(const Simplex& s);
MorseTile open_tile(const Simplex& s);
MorseTile dotted_tile(const Simplex& s);
MorseTile empty_tile();

TileClass tile_class(const MorseTile& t);

struct CanonicalTriple {
  Simplex sigma;  // closed part
  Simplex theta;  // open part, the restriction set
  Simplex tau;    // dotted part, empty or of positive dimension

  friend bool operator==(const CanonicalTriple&, const CanonicalTriple&) = default;
};

CanonicalTriple canonical_triple(const MorseTile& t);
MorseTile recompose(const CanonicalTriple& c);

// T * T' for a basic T.
MorseTile tile_join(const MorseTile& t, const MorseTile& t2);
// v * T, or v̇ * T when dotted.
MorseTile cone(Label v, const MorseTile& t, bool dotted);
MorseTile tile_vertex_link(const MorseTile& t, Label v);
// Splits T as A' * T' where A' is the basic tile on the vertices `front`.
std::pair<MorseTile, MorseTile> split_tile(const MorseTile& t, const Simplex& front);
// T with `face` removed as well; throws std::domain_error if the result is not
// a Morse tile.
MorseTile deprive(const MorseTile& t, const Simplex& face);

// Faces of the underlying simplex that survive in the tile.
std::vector<Simplex> tile_faces(const MorseTile& t);
// Σ over non-empty faces of (-1)^dim.
long euler_signature(const MorseTile& t);
// The tile as the pair (closure of simplex, closure of missing faces).
RelativeComplex tile_as_relative(const MorseTile& t);

MorseTile apply_map(const MorseTile& t, const VertexMap& m);

}  // namespace msh
