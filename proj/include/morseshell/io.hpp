#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "morseshell/complex.hpp"
#include "morseshell/engine.hpp"
#include "morseshell/morse.hpp"
#include "morseshell/tile.hpp"
#include "morseshell/verify.hpp"

namespace msh {

using json = nlohmann::json;

// Malformed input of any kind.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Atoms are strings, barycenters arrays of their members.
json to_json(Label l);
Label label_from_json(const json& j);
json to_json(const Simplex& s);
Simplex simplex_from_json(const json& j);

// {"facets": [...], "missing": [...]}; "missing" is omitted for absolute
// complexes.
json to_json(const RelativeComplex& s);
RelativeComplex complex_from_json(const json& j);

// One facet per line, whitespace-separated atom names, '#' starts a comment.
RelativeComplex parse_facet_text(std::string_view text);
// Either format; JSON is recognized by a leading '{'.
RelativeComplex parse_complex(std::string_view text);
RelativeComplex read_complex_file(const std::string& path);

json to_json(const TileClass& c);
TileClass tile_class_from_json(const json& j);
// {"simplex", "ridges", "morse_face"}.
json to_json(const MorseTile& t);

json to_json(const Census& c);
Census census_from_json(const json& j);
json to_json(const Certificate& c);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

// JSON lines: one {"facet", "ridges", "morse_face", "class"} per tile, then
// {"summary": {...}}. The checksum covers the tile lines including newlines.
std::string tile_record(const MorseTile& t);
// `extra` keys are merged into the summary record.
void write_tiling(std::ostream& out, const Tiling& t, long euler, const json& extra = json::object());

struct TilingFile {
  std::vector<RawTile> tiles;
  std::optional<Census> declared_census;
  std::optional<std::uint64_t> declared_checksum;
  std::uint64_t checksum = 0;
};
TilingFile read_tiling(std::istream& in);

// Reads {"values": [[face, "p/q"], ...]}, {"values": {"a b": "p/q", ...}} or
// {"pairs": [[face, coface], ...]}.
DiscreteMorseFunction morse_from_json(const SimplicialComplex& k, const json& j);
json to_json(const DiscreteMorseFunction& f);

Rational parse_rational(const json& j);
std::string to_string(const Rational& r);

}  // namespace msh
