#include "morseshell/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace msh {

namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::vector<Simplex> simplices_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Simplex> out;
  for (const auto& s : j) out.push_back(simplex_from_json(s));
  return out;
}

void trim_census(Census& c) {
  while (!c.critical.empty() && c.critical.back() == 0) c.critical.pop_back();
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto first = s.data(), last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last || first == last)
    throw ParseError("bad integer '" + std::string(s) + "'");
  return v;
}

Simplex simplex_from_key(const std::string& key) {
  std::istringstream is(key);
  std::vector<Label> v;
  for (std::string tok; is >> tok;) v.push_back(Label::atom(tok));
  return Simplex(v);
}

}  // namespace

json to_json(Label l) {
  if (l.is_atom()) return l.token();
  json a = json::array();
  for (auto m : l.members()) a.push_back(to_json(m));
  return a;
}

Label label_from_json(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty()) throw ParseError("empty atom name");
    return Label::atom(s);
  }
  if (j.is_number_integer()) return Label::atom(std::to_string(j.get<long long>()));
  if (j.is_array() && !j.empty()) {
    std::vector<Label> m;
    for (const auto& x : j) m.push_back(label_from_json(x));
    return Label::bary(m);
  }
  throw ParseError("bad label " + j.dump());
}

json to_json(const Simplex& s) {
  json a = json::array();
  for (auto l : s) a.push_back(to_json(l));
  return a;
}

Simplex simplex_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("simplex must be an array: " + j.dump());
  std::vector<Label> v;
  for (const auto& x : j) v.push_back(label_from_json(x));
  return Simplex(v);
}

json to_json(const RelativeComplex& s) {
  json j;
  j["facets"] = json::array();
  for (const auto& f : s.ambient().facets()) j["facets"].push_back(to_json(f));
  if (!s.is_absolute()) {
    j["missing"] = json::array();
    for (const auto& f : s.missing().facets()) j["missing"].push_back(to_json(f));
  }
  return j;
}

RelativeComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("facets")) throw ParseError("expected {\"facets\": [...]}");
  SimplicialComplex k;
  try {
    k = make_complex(simplices_from_json(j["facets"], "facets"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!j.contains("missing") || j["missing"].is_null()) return RelativeComplex(std::move(k));
  auto l = SimplicialComplex::closure(simplices_from_json(j["missing"], "missing"));
  if (!l.is_subcomplex_of(k)) throw ParseError("missing part is not a subcomplex");
  return RelativeComplex(std::move(k), std::move(l));
}

RelativeComplex parse_facet_text(std::string_view text) {
  std::vector<Simplex> facets;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    std::istringstream ls(line);
    std::vector<Label> v;
    for (std::string tok; ls >> tok;) v.push_back(Label::atom(tok));
    if (!v.empty()) facets.emplace_back(v);
  }
  if (facets.empty()) throw ParseError("no facets");
  return RelativeComplex(make_complex(std::move(facets)));
}

RelativeComplex parse_complex(std::string_view text) {
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(e.what());
    }
    return complex_from_json(j);
  }
  return parse_facet_text(text);
}

RelativeComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str());
}

json to_json(const TileClass& c) {
  if (!c.critical) return "regular";
  return json{{"critical", c.index}};
}

TileClass tile_class_from_json(const json& j) {
  if (j == "regular") return TileClass::regular();
  if (j.is_object() && j.contains("critical") && j["critical"].is_number_integer())
    return TileClass::critical_of(j["critical"].get<int>());
  throw ParseError("bad tile class " + j.dump());
}

namespace {

json morse_face_json(const MorseTile& t) {
  if (!t.morse_face) return nullptr;
  if (t.morse_face->empty()) return "empty";
  return to_json(*t.morse_face);
}

json ridges_json(const MorseTile& t) {
  json r = json::array();
  for (const auto& x : t.missing_ridges()) r.push_back(to_json(x));
  return r;
}

}  // namespace

json to_json(const MorseTile& t) {
  return {{"simplex", to_json(t.simplex)}, {"ridges", ridges_json(t)},
          {"morse_face", morse_face_json(t)}};
}

json to_json(const Census& c) {
  json crit = json::object();
  for (std::size_t k = 0; k < c.critical.size(); ++k)
    if (c.critical[k]) crit[std::to_string(k)] = c.critical[k];
  return {{"critical", crit}, {"regular", c.regular}};
}

Census census_from_json(const json& j) {
  Census c;
  if (!j.is_object() || !j.contains("critical") || !j["critical"].is_object())
    throw ParseError("bad census " + j.dump());
  for (const auto& [k, v] : j["critical"].items()) {
    auto idx = parse_int(k);
    if (idx < 0 || !v.is_number_unsigned()) throw ParseError("bad census entry " + k);
    if (c.critical.size() <= static_cast<std::size_t>(idx))
      c.critical.resize(static_cast<std::size_t>(idx) + 1, 0);
    c.critical[static_cast<std::size_t>(idx)] = v.get<std::size_t>();
  }
  trim_census(c);
  if (j.contains("regular")) c.regular = j["regular"].get<std::size_t>();
  return c;
}

json to_json(const Certificate& c) {
  json j = {{"passed", c.passed()},
            {"tiles_ok", c.tiles_ok},
            {"partition_ok", c.partition_ok},
            {"shelling_ok", c.shelling_ok},
            {"euler_ok", c.euler_ok},
            {"morse_inequalities_ok", c.morse_inequalities_ok},
            {"absolute", c.absolute},
            {"census", to_json(c.census)},
            {"euler", c.euler}};
  if (c.strong_ok) j["strong_ok"] = *c.strong_ok;
  if (c.census_ok) j["census_ok"] = *c.census_ok;
  if (c.absolute) j["betti"] = c.betti;
  j["failures"] = json::array();
  for (const auto& f : c.failures) {
    json x = {{"tile", f.tile}, {"reason", f.reason}};
    x["witness"] = f.witness ? to_json(*f.witness) : json(nullptr);
    j["failures"].push_back(std::move(x));
  }
  return j;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string tile_record(const MorseTile& t) {
  json j = {{"facet", to_json(t.simplex)},
            {"ridges", ridges_json(t)},
            {"morse_face", morse_face_json(t)},
            {"class", to_json(tile_class(t))}};
  return j.dump();
}

void write_tiling(std::ostream& out, const Tiling& t, long euler, const json& extra) {
  std::uint64_t h = fnv1a64("");
  for (const auto& tile : t) {
    auto line = tile_record(tile) + "\n";
    h = fnv1a64(line, h);
    out << line;
  }
  auto census = critical_census(t);
  json s = {{"tiles", t.size()},
            {"census", to_json(census)},
            {"euler", euler},
            {"checksum", hex64(h)}};
  for (const auto& [k, v] : extra.items()) s[k] = v;
  out << json{{"summary", s}}.dump() << "\n";
}

TilingFile read_tiling(std::istream& in) {
  TilingFile tf;
  std::uint64_t h = fnv1a64("");
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (j.contains("summary")) {
      const auto& s = j["summary"];
      if (s.contains("census")) tf.declared_census = census_from_json(s["census"]);
      if (s.contains("checksum")) {
        auto hex = s["checksum"].get<std::string>();
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
        if (ec != std::errc{} || p != hex.data() + hex.size())
          throw ParseError("bad checksum " + hex);
        tf.declared_checksum = v;
      }
      continue;
    }
    h = fnv1a64(line + "\n", h);
    try {
      RawTile raw;
      const json& facet = j.contains("facet") ? j["facet"] : j.at("simplex");
      raw.facet = simplex_from_json(facet);
      if (j.contains("ridges")) raw.missing = simplices_from_json(j["ridges"], "ridges");
      if (j.contains("morse_face")) {
        const auto& m = j["morse_face"];
        if (m == "empty")
          raw.missing.push_back(Simplex{});
        else if (!m.is_null())
          raw.missing.push_back(simplex_from_json(m));
      }
      if (j.contains("class")) raw.declared = tile_class_from_json(j["class"]);
      tf.tiles.push_back(std::move(raw));
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  tf.checksum = h;
  return tf;
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError("bad rational " + j.dump());
  std::string_view s = j.get_ref<const std::string&>();
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in " + std::string(s));
    return Rational(parse_int(s.substr(0, slash)), den);
  } catch (const boost::bad_rational&) {
    throw ParseError("bad rational " + std::string(s));
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

DiscreteMorseFunction morse_from_json(const SimplicialComplex& k, const json& j) {
  if (!j.is_object()) throw ParseError("Morse file must be a JSON object");
  if (j.contains("pairs")) {
    std::vector<std::pair<Simplex, Simplex>> pairs;
    for (const auto& p : j["pairs"]) {
      if (!p.is_array() || p.size() != 2) throw ParseError("pair must be [face, coface]");
      pairs.emplace_back(simplex_from_json(p[0]), simplex_from_json(p[1]));
    }
    return dmf_from_matching(k, pairs);
  }
  if (!j.contains("values")) throw ParseError("Morse file needs \"values\" or \"pairs\"");
  DiscreteMorseFunction f;
  const auto& v = j["values"];
  auto put = [&](Simplex s, const json& val) {
    if (!f.values.emplace(std::move(s), parse_rational(val)).second)
      throw ParseError("face listed twice");
  };
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) put(simplex_from_key(key), val);
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_array() || e.size() != 2) throw ParseError("value entry must be [face, value]");
      put(simplex_from_json(e[0]), e[1]);
    }
  } else {
    throw ParseError("\"values\" must be an object or array");
  }
  return f;
}

json to_json(const DiscreteMorseFunction& f) {
  std::vector<std::pair<Simplex, Rational>> entries(f.values.begin(), f.values.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json v = json::array();
  for (const auto& [s, r] : entries) v.push_back(json::array({to_json(s), to_string(r)}));
  return {{"values", v}};
}

}  // namespace msh
