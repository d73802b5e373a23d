#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morseshell/complex.hpp"
#include "morseshell/engine.hpp"
#include "morseshell/morse.hpp"
#include "morseshell/tile.hpp"

namespace msh {

// A tile as read from outside: a facet and the faces it is deprived of, with
// an optional declared class to be checked against the computed one.
struct RawTile {
  Simplex facet;
  std::vector<Simplex> missing;
  std::optional<TileClass> declared;
};

RawTile to_raw(const MorseTile& t);
std::vector<RawTile> to_raw(const Tiling& t);

struct Census {
  // critical[k] = number of critical tiles of index k.
  std::vector<std::size_t> critical;
  std::size_t regular = 0;

  long alternating_sum() const;
  std::size_t total_critical() const;
  friend bool operator==(const Census&, const Census&) = default;
};

struct Failure {
  long tile = -1;  // -1 when not attached to a tile
  std::string reason;
  std::optional<Simplex> witness;
};

struct Certificate {
  bool tiles_ok = true;
  bool partition_ok = true;
  bool shelling_ok = true;
  bool euler_ok = true;
  bool morse_inequalities_ok = true;
  // Only evaluated when requested.
  std::optional<bool> strong_ok;
  // Set by audit and check_declared_census.
  std::optional<bool> census_ok;
  bool absolute = false;
  Census census;
  long euler = 0;
  std::vector<std::size_t> betti;
  std::vector<Failure> failures;

  bool passed() const {
    return tiles_ok && partition_ok && shelling_ok && euler_ok && morse_inequalities_ok &&
           strong_ok.value_or(true) && census_ok.value_or(true);
  }
};

struct VerifyOptions {
  // Also require the union of tiles of dimension > d to be a subcomplex.
  bool strong = false;
  // Cap on failures recorded per check.
  std::size_t max_failures = 16;
};

Certificate verify_tiling(const RelativeComplex& s, const std::vector<RawTile>& tiles,
                          const VerifyOptions& opts = {});
Certificate verify_tiling(const RelativeComplex& s, const Tiling& tiles,
                          const VerifyOptions& opts = {});

Census critical_census(const Tiling& t);

// Betti numbers over the two-element field, b_0 .. b_dim.
std::vector<std::size_t> mod2_betti(const SimplicialComplex& k);

// Certificate extended with the comparison against the critical faces of f.
// `cert` is typically the result of verify_tiling on sd²(K).
Certificate audit(const SimplicialComplex& k, const DiscreteMorseFunction& f, Certificate cert);

// Compares a declared census (e.g. from a summary record) with the computed
// one; records a failure naming the first differing index.
void check_declared_census(Certificate& cert, const Census& declared);

}  // namespace msh
