#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "morseshell/engine.hpp"
#include "morseshell/verify.hpp"
#include "oracles.hpp"

using namespace msh;
using oracle::S;

namespace {

std::set<Simplex> nonempty(const std::set<Simplex>& s) {
  std::set<Simplex> out;
  for (const auto& f : s)
    if (!f.empty()) out.insert(f);
  return out;
}

std::set<Simplex> face_set(const SimplicialComplex& k) { return {k.faces().begin(), k.faces().end()}; }

std::string failures(const Certificate& c) {
  std::string s;
  for (const auto& f : c.failures)
    s += std::to_string(f.tile) + ": " + f.reason + (f.witness ? " " + f.witness->to_string() : "") + "\n";
  return s;
}

Census census_of(const Tiling& t, std::size_t from, std::size_t to) {
  return critical_census(Tiling(t.begin() + static_cast<long>(from), t.begin() + static_cast<long>(to)));
}

}  // namespace

TEST_CASE("sd of a single Morse tile") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& t : oracle::morse_tiles_on(oracle::simplex_on(n))) {
      CAPTURE(t.to_string());
      auto tiles = shell_sd_tile(t);
      auto cert = verify_tiling(barycentric(tile_as_relative(t)), tiles);
      CHECK_MESSAGE(cert.passed(), failures(cert));
      auto cls = tile_class(t);
      auto c = critical_census(tiles);
      if (cls.critical)
        CHECK(c.total_critical() == 1);
      else
        CHECK(c.total_critical() == 0);
      if (cls.critical) CHECK(c.critical.back() == 1);
      if (cls.critical) CHECK(c.critical.size() == static_cast<std::size_t>(cls.index) + 1);
    }
  }
  CHECK(shell_sd_tile(empty_tile()) == Tiling{empty_tile()});
}

TEST_CASE("join shellings begin with the derived neighborhood") {
  const char* left = "abc";
  const char* right = "vwx";
  std::size_t pairs = 0;
  for (int n = 0; n <= 1; ++n) {
    for (int m = 0; n + m <= 2; ++m) {
      auto a = S(std::string(left, static_cast<std::size_t>(n + 1)));
      auto b = S(std::string(right, static_cast<std::size_t>(m + 1)));
      for (const auto& t : oracle::basic_tiles_on(a)) {
        for (const auto& t2 : oracle::morse_tiles_on(b)) {
          ++pairs;
          CAPTURE(t.to_string());
          CAPTURE(t2.to_string());
          auto r = shell_sd_join(t, t2);
          auto j = tile_join(t, t2);
          auto cert = verify_tiling(barycentric(tile_as_relative(j)), r.tiles);
          CHECK_MESSAGE(cert.passed(), failures(cert));
          auto sd = oracle::flags(oracle::tile_face_set(j), j.is_closed());
          auto n_faces = oracle::neighborhood(sd, a);
          CHECK(oracle::covered(r.tiles, 0, r.prefix) == n_faces);
        }
      }
    }
  }
  CHECK(pairs == 2 * (2 + 5 + 15) + 4 * (2 + 5));
}

TEST_CASE("join shellings with an empty factor") {
  auto t = closed_tile(S("ab"));
  auto r = shell_with_prefix(empty_tile(), t);
  CHECK(r.prefix == 0);
  auto r2 = shell_with_prefix(open_tile(S("ab")), empty_tile());
  CHECK(r2.prefix == r2.tiles.size());
}

TEST_CASE("boundary shellings") {
  for (int n = 1; n <= 4; ++n) {
    auto sigma = oracle::simplex_on(n);
    auto bd = boundary(sigma);
    auto sd = barycentric(bd);
    for (const auto& last : sigma.ridges()) {
      CAPTURE(sigma.to_string());
      CAPTURE(last.to_string());
      auto b = shell_boundary_sd(sigma, last);
      auto cert = verify_tiling(RelativeComplex(sd), b.tiles);
      CHECK_MESSAGE(cert.passed(), failures(cert));
      Census sphere;
      sphere.critical.assign(static_cast<std::size_t>(n), 0);
      sphere.critical[0] = 1;
      sphere.critical[static_cast<std::size_t>(n - 1)] += 1;
      sphere.regular = b.tiles.size() - 2;
      CHECK(critical_census(b.tiles) == sphere);
      CHECK(b.tiles.front().is_closed());

      std::set<Simplex> others;
      for (const auto& r : sigma.ridges())
        if (r != last)
          for (const auto& f : oracle::subsets(r)) others.insert(f);
      CHECK(oracle::covered(b.tiles, 0, b.split) == oracle::flags(nonempty(others), true));
      REQUIRE(b.tiles.size() - b.split == b.tail_base.size());
      CHECK(b.apex == oracle::bary(last));
      for (std::size_t i = 0; i < b.tail_base.size(); ++i)
        CHECK(b.tiles[b.split + i] == cone(b.apex, b.tail_base[i], true));
    }
  }
}

TEST_CASE("shellings of sd(S) beginning with a vertex star") {
  std::vector<RelativeComplex> cases;
  for (const auto& e : corpus::all()) cases.emplace_back(e.k);
  auto tri = SimplicialComplex::closure({S("012")});
  cases.emplace_back(tri, SimplicialComplex::closure({S("01")}));
  cases.emplace_back(tri, SimplicialComplex::closure({S("0"), S("12")}));
  cases.emplace_back(tri, SimplicialComplex::empty_face());
  cases.emplace_back(corpus::from({"012", "013", "023", "123"}), SimplicialComplex::closure({S("3")}));
  cases.emplace_back(corpus::from({"012", "034"}), SimplicialComplex::closure({S("12"), S("3")}));

  for (const auto& s : cases) {
    auto s_faces = s.faces();
    auto sd = oracle::flags(std::set<Simplex>(s_faces.begin(), s_faces.end()), s.is_absolute());
    for (auto v : s.ambient().vertices()) {
      CAPTURE(s.ambient().facets().size());
      CAPTURE(v.to_string());
      auto r = shell_sd_relative(s, v);
      auto cert = verify_tiling(barycentric(s), r.tiles);
      CHECK_MESSAGE(cert.passed(), failures(cert));
      CHECK(oracle::covered(r.tiles, 0, r.prefix) == oracle::neighborhood(sd, Simplex{v}));
      CHECK(cert.census.alternating_sum() == oracle::chi(nonempty(sd)));
    }
  }
}

TEST_CASE("sd² shellings follow the Morse filtration") {
  std::mt19937 rng(7);
  for (const auto& e : corpus::all()) {
    std::vector<std::pair<std::string, DiscreteMorseFunction>> fs = {
        {"trivial", trivial_dmf(e.k)}, {"greedy", greedy_collapse_dmf(e.k)}};
    if (e.name != "torus7")
      for (int i = 0; i < 3; ++i)
        fs.emplace_back("random", dmf_from_matching(e.k, oracle::random_matching(e.k, rng)));
    for (const auto& [fname, f] : fs) {
      CAPTURE(e.name);
      CAPTURE(fname);
      auto r = shell_sd2_from_dmf(e.k, f);
      auto cert = audit(e.k, f, verify_tiling(RelativeComplex(barycentric(e.k, 2)), r.tiles));
      CHECK_MESSAGE(cert.passed(), failures(cert));

      auto steps = filtration(e.k, f);
      REQUIRE(r.step_ends.size() == steps.size());
      if (e.name == "torus7") continue;
      // After step i the tiles cover the union of the stars of σ̂̂ over the
      // faces σ of the i-th sublevel complex; a step brings in a critical
      // tile exactly for a critical face.
      auto sd2 = oracle::flags(nonempty(oracle::flags(nonempty(face_set(e.k)), true)), true);
      std::set<Simplex> reached;
      std::size_t begin = 0;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        Simplex crit;
        bool is_crit = false;
        std::vector<Simplex> added;
        if (auto* c = std::get_if<CriticalStep>(&steps[i])) {
          added = {c->sigma};
          crit = c->sigma;
          is_crit = true;
        } else {
          auto& p = std::get<CollapseStep>(steps[i]);
          added = {p.theta, p.tau};
        }
        for (const auto& sigma : added) {
          auto x = Label::bary({oracle::bary(sigma)});
          for (const auto& f : sd2)
            if (sd2.count(f.with(x))) reached.insert(f);
        }
        CHECK(oracle::covered(r.tiles, 0, r.step_ends[i]) == reached);
        auto c = census_of(r.tiles, begin, r.step_ends[i]);
        if (is_crit) {
          CHECK(c.total_critical() == 1);
          CHECK(c.critical.size() == crit.size());
        } else {
          CHECK(c.total_critical() == 0);
        }
        begin = r.step_ends[i];
      }
    }
  }
}

TEST_CASE("collapsible complexes get a single closed critical tile") {
  for (const auto& e : corpus::all()) {
    if (!e.collapsible) continue;
    CAPTURE(e.name);
    auto r = shell_sd2_from_dmf(e.k, greedy_collapse_dmf(e.k));
    auto c = critical_census(r.tiles);
    CHECK(c.critical == std::vector<std::size_t>{1});
    std::size_t closed = 0;
    for (const auto& t : r.tiles) closed += t.is_closed();
    CHECK(closed == 1);
    CHECK(r.tiles.front().is_closed());
  }
}

TEST_CASE("runs are deterministic") {
  auto k = corpus::all()[4].k;
  auto a = shell_sd2_from_dmf(k, greedy_collapse_dmf(k));
  auto b = shell_sd2_from_dmf(k, greedy_collapse_dmf(k));
  CHECK(a.tiles == b.tiles);
  CHECK(a.step_ends == b.step_ends);
  CHECK(face_set(barycentric(k, 2)).size() == oracle::covered(a.tiles, 0, a.tiles.size()).size());
}

TEST_CASE("worked examples") {
  auto census = [](const Tiling& t) { return critical_census(t).critical; };
  using V = std::vector<std::size_t>;

  auto edge = shell_sd_tile(closed_tile(S("ab")));
  CHECK(edge.size() == 2);
  CHECK(census(edge) == V{1});

  auto open2 = shell_sd_tile(open_tile(S("abc")));
  CHECK(open2.size() == 6);
  CHECK(census(open2) == V{0, 0, 1});

  auto dotted = shell_sd_tile(dotted_tile(S("ab")));
  CHECK(census(dotted) == V{1});
  for (const auto& t : dotted)
    if (tile_class(t).critical) CHECK(t.is_dotted());

  // v̇ * w: an open simplex and a dotted closed one.
  auto r = shell_sd_join(open_tile(S("v")), closed_tile(S("w")));
  REQUIRE(r.tiles.size() == 2);
  CHECK(r.tiles[0].is_dotted());
  CHECK(r.tiles[1].is_open());

  // v̇ * dotted edge: one critical tile of index one, outside the prefix.
  r = shell_sd_join(open_tile(S("v")), dotted_tile(S("wx")));
  std::size_t where = 0, count = 0;
  for (std::size_t i = 0; i < r.tiles.size(); ++i)
    if (tile_class(r.tiles[i]).critical) where = i, ++count;
  CHECK(count == 1);
  CHECK(tile_class(r.tiles[where]) == TileClass::critical_of(1));
  CHECK(where >= r.prefix);

  auto tri = SimplicialComplex::closure({S("012")});
  for (auto v : tri.vertices()) {
    auto p = shell_sd_relative(RelativeComplex(tri), v);
    CHECK(p.tiles.size() == 6);
    CHECK(p.prefix == 2);
  }
  auto circle = corpus::from({"01", "12", "02"});
  CHECK(census(shell_sd_relative(RelativeComplex(circle), Label::atom("1")).tiles) == V{1, 1});

  auto b = shell_boundary_sd(S("012"), S("12"));
  CHECK(b.split == 4);
  CHECK(b.tiles.size() - b.split == 2);

  // Cones over the boundary shelling of the triangle.
  auto apex = Label::atom("c");
  auto closed_cone = cone_shelling(apex, b.tiles, 0);
  CHECK(census(closed_cone) == V{1});
  auto open_cone = cone_shelling(apex, b.tiles, b.tiles.size());
  CHECK(census(open_cone) == V{0, 0, 1});
  std::set<Simplex> inner;
  for (const auto& t : open_cone)
    for (const auto& f : tile_faces(t)) inner.insert(f);
  for (const auto& f : inner) CHECK(f.contains(apex));
}
