#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "morseshell/io.hpp"
#include "oracles.hpp"

using namespace msh;
using oracle::S;

TEST_CASE("labels and simplices round-trip through JSON") {
  auto a = Label::atom("a"), b = Label::atom("b");
  auto deep = Label::bary({Label::bary({a}), Label::bary({a, b})});
  for (auto l : {a, Label::bary({a, b}), deep}) CHECK(label_from_json(to_json(l)) == l);
  CHECK(to_json(Label::bary({b, a})) == json::parse(R"(["a","b"])"));
  CHECK(label_from_json(json(7)) == Label::atom("7"));
  CHECK_THROWS_AS(label_from_json(json("")), ParseError);
  CHECK_THROWS_AS(label_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(label_from_json(json(1.5)), ParseError);

  Simplex s{a, Label::bary({a, b})};
  CHECK(simplex_from_json(to_json(s)) == s);
  CHECK(simplex_from_json(json::array()) == Simplex{});
  CHECK_THROWS_AS(simplex_from_json(json("a")), ParseError);
}

TEST_CASE("complex formats") {
  auto text = parse_complex("# a triangle and an edge\n0 1 2\n\n2 3  # trailing\n");
  CHECK(text.is_absolute());
  CHECK(text.ambient().facets() == std::vector<Simplex>{S("012"), S("23")});
  CHECK_THROWS_AS(parse_complex("# nothing\n"), ParseError);

  auto rel = parse_complex(R"( {"facets": [["0","1"]], "missing": [["1"]]} )");
  CHECK_FALSE(rel.is_absolute());
  CHECK(rel.missing().facets() == std::vector<Simplex>{S("1")});
  CHECK(complex_from_json(to_json(rel)).faces() == rel.faces());
  CHECK_FALSE(to_json(text).contains("missing"));

  CHECK_THROWS_AS(parse_complex(R"({"facets": [["0","1"]], "missing": [["2"]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex(R"({"facets": [[]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex(R"({"faces": []})"), ParseError);
  CHECK_THROWS_AS(parse_complex("{not json"), ParseError);

  // The empty-face complex as the missing part.
  auto dotted = parse_complex(R"({"facets": [["0","1"]], "missing": [[]]})");
  CHECK(dotted.missing() == SimplicialComplex::empty_face());
}

TEST_CASE("subdivisions round-trip bit-exactly") {
  for (const auto& e : corpus::all()) {
    CAPTURE(e.name);
    RelativeComplex sd(barycentric(e.k));
    auto once = to_json(sd).dump();
    auto back = complex_from_json(json::parse(once));
    CHECK(back.faces() == sd.faces());
    CHECK(to_json(back).dump() == once);
  }
}

TEST_CASE("tiles, classes and censuses") {
  CHECK(to_json(TileClass::regular()) == "regular");
  CHECK(tile_class_from_json(to_json(TileClass::critical_of(2))) == TileClass::critical_of(2));
  CHECK_THROWS_AS(tile_class_from_json(json("critical")), ParseError);

  auto t = to_json(oracle::shape_tile({S("a"), S("b"), S("cd")}));
  CHECK(t["simplex"] == json::parse(R"(["a","b","c","d"])"));
  CHECK(t["ridges"] == json::parse(R"([["a","c","d"]])"));
  CHECK(t["morse_face"] == json::parse(R"(["a","b"])"));
  CHECK(to_json(dotted_tile(S("ab")))["morse_face"] == "empty");
  CHECK(to_json(closed_tile(S("ab")))["morse_face"].is_null());

  Census c{{1, 0, 2, 0}, 5};
  auto j = to_json(c);
  CHECK(j == json::parse(R"({"critical": {"0": 1, "2": 2}, "regular": 5})"));
  auto back = census_from_json(j);
  CHECK(back.critical == std::vector<std::size_t>{1, 0, 2});
  CHECK(back.regular == 5);
  CHECK_THROWS_AS(census_from_json(json::parse(R"({"critical": {"x": 1}})")), ParseError);
  CHECK_THROWS_AS(census_from_json(json::parse(R"({"critical": {"-1": 1}})")), ParseError);
}

TEST_CASE("tiling streams carry a checksum") {
  auto k = corpus::from({"01", "12", "02"});
  auto f = trivial_dmf(k);
  auto tiles = shell_sd2_from_dmf(k, f).tiles;
  std::ostringstream out;
  write_tiling(out, tiles, k.euler_characteristic(), {{"note", "x"}});
  auto text = out.str();

  std::istringstream in(text);
  auto tf = read_tiling(in);
  REQUIRE(tf.tiles.size() == tiles.size());
  CHECK(tf.declared_checksum == tf.checksum);
  REQUIRE(tf.declared_census);
  CHECK(tf.declared_census->critical == std::vector<std::size_t>{3, 3});
  CHECK(tf.declared_census->regular == tiles.size() - 6);
  auto cert = verify_tiling(RelativeComplex(barycentric(k, 2)), tf.tiles);
  CHECK(cert.passed());
  CHECK(to_raw(tiles).size() == tf.tiles.size());
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    CHECK(tf.tiles[i].facet == tiles[i].simplex);
    CHECK(tf.tiles[i].declared == tile_class(tiles[i]));
  }

  auto last = text.rfind("{\"summary\"");
  auto summary = json::parse(text.substr(last));
  CHECK(summary["summary"]["note"] == "x");
  CHECK(summary["summary"]["tiles"] == tiles.size());
  CHECK(summary["summary"]["checksum"].get<std::string>().size() == 16);

  // Editing a tile line changes the checksum.
  auto edited = text;
  edited.replace(edited.find("regular"), 7, "REGULAR");
  std::istringstream in2(edited);
  CHECK_THROWS_AS(read_tiling(in2), ParseError);
  edited = text;
  auto pos = edited.find("\n");
  edited.insert(pos, " ");
  std::istringstream in3(edited);
  auto tf3 = read_tiling(in3);
  CHECK(tf3.declared_checksum != tf3.checksum);

  std::istringstream garbage("{\"facet\": [\"a\"]}\nnot json\n");
  CHECK_THROWS_AS(read_tiling(garbage), ParseError);
}

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(fnv1a64("bar", fnv1a64("foo")) == fnv1a64("foobar"));
}

TEST_CASE("Morse function files") {
  auto edge = SimplicialComplex::closure({S("ab")});
  auto from_pairs = morse_from_json(edge, json::parse(R"({"pairs": [[["b"], ["a","b"]]]})"));
  CHECK(critical_faces(edge, from_pairs) == std::map<Simplex, int>{{S("a"), 0}});

  auto listed = morse_from_json(edge, json::parse(R"({"values": [[["a"], "1/2"], [["b"], 3], [["a","b"], "3"]]})"));
  CHECK(listed(S("a")) == Rational(1, 2));
  CHECK(listed(S("ab")) == Rational(3));

  auto keyed = morse_from_json(edge, json::parse(R"({"values": {"a": "0", "b": "-2/4", "a b": "7"}})"));
  CHECK(keyed(S("b")) == Rational(-1, 2));
  CHECK(morse_from_json(edge, to_json(keyed)).values == keyed.values);

  CHECK(parse_rational(json("6/4")) == Rational(3, 2));
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK_THROWS_AS(parse_rational(json("1/0")), ParseError);
  CHECK_THROWS_AS(parse_rational(json("x")), ParseError);
  CHECK_THROWS_AS(morse_from_json(edge, json::parse(R"({"other": 1})")), ParseError);
}
