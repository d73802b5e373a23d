#pragma once

#include <cstddef>
#include <vector>

#include "morseshell/complex.hpp"
#include "morseshell/morse.hpp"
#include "morseshell/tile.hpp"

namespace msh {

// Tiles in shelling order.
using Tiling = std::vector<MorseTile>;

// A tiling whose first `prefix` tiles exactly tile a prescribed derived
// neighborhood.
struct PrefixedTiling {
  Tiling tiles;
  std::size_t prefix = 0;
};

// sd(T * T') starting with N(T, T * T'). T must be basic and non-empty, T'
// non-empty. Vertices of the result are Bary(F) for faces F of T * T'.
PrefixedTiling shell_sd_join(const MorseTile& t, const MorseTile& t2);

// Same, allowing either factor to be the empty tile.
PrefixedTiling shell_with_prefix(const MorseTile& t, const MorseTile& t2);

// Shelling of sd(T). sd of the empty tile is the empty tile.
Tiling shell_sd_tile(const MorseTile& t);

// apex * t_i, dotted for i < deprive_prefix.
Tiling cone_shelling(Label apex, const Tiling& t, std::size_t deprive_prefix);

struct BoundaryShelling {
  Tiling tiles;
  // tiles[0, split) shell sd(∂σ minus the facet `last`).
  std::size_t split = 0;
  // The remaining tiles are apex̊ * tail_base[i], tail_base shelling sd(∂last).
  Tiling tail_base;
  // Barycenter of `last`.
  Label apex;
};

// Shelled h-tiling of sd(∂σ) from the classical shelling of ∂σ ending at
// `last`. Requires dim σ ≥ 1 and `last` a ridge of σ.
BoundaryShelling shell_boundary_sd(const Simplex& sigma, const Simplex& last);

// Morse shelling of sd(S) whose first `prefix` tiles tile st(v̂) in sd(S).
PrefixedTiling shell_sd_relative(const RelativeComplex& s, Label v);

struct Sd2Result {
  Tiling tiles;
  // Tile count after each filtration step.
  std::vector<std::size_t> step_ends;
};

// Morse shelling of sd²(K) whose critical tiles match the critical faces of
// f. f must be canonical.
Sd2Result shell_sd2_from_dmf(const SimplicialComplex& k, const DiscreteMorseFunction& f);

}  // namespace msh
