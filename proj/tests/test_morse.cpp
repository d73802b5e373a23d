#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "corpus.hpp"
#include "morseshell/morse.hpp"
#include "morseshell/verify.hpp"
#include "oracles.hpp"

using namespace msh;
using oracle::S;

namespace {

std::vector<Simplex> nonempty_faces(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  for (const auto& f : k.faces())
    if (!f.empty()) out.push_back(f);
  return out;
}

// The definition, over all comparable pairs rather than codimension one.
bool is_dmf(const SimplicialComplex& k, const DiscreteMorseFunction& f) {
  auto faces = nonempty_faces(k);
  for (const auto& s : faces) {
    int up = 0, down = 0;
    for (const auto& t : faces) {
      if (t == s) continue;
      if (s.is_face_of(t) && f(s) >= f(t)) ++up;
      if (t.is_face_of(s) && f(s) <= f(t)) ++down;
    }
    if (up > 1 || down > 1) return false;
  }
  return true;
}

std::set<Simplex> critical_by_definition(const SimplicialComplex& k, const DiscreteMorseFunction& f) {
  auto faces = nonempty_faces(k);
  std::set<Simplex> out;
  for (const auto& s : faces) {
    bool injective = true;
    for (const auto& t : faces)
      if (t != s && f(t) == f(s)) injective = false;
    if (injective) out.insert(s);
  }
  return out;
}

bool canonical(const SimplicialComplex& k, const DiscreteMorseFunction& f) {
  auto r = validate(k, f);
  return r.is_dmf && r.is_monotone && r.is_semi_injective && r.is_generic;
}

}  // namespace

TEST_CASE("validation flags") {
  auto circle = corpus::from({"01", "12", "02"});
  DiscreteMorseFunction dim;
  for (const auto& f : nonempty_faces(circle)) dim.values[f] = f.dim();
  auto r = validate(circle, dim);
  CHECK(r.is_dmf);
  CHECK(r.is_monotone);
  CHECK_FALSE(r.is_semi_injective);
  CHECK_FALSE(r.is_generic);
  CHECK_FALSE(r.witnesses.empty());

  auto tri = SimplicialComplex::closure({S("012")});
  DiscreteMorseFunction injective;
  int next = 0;
  for (const auto& f : nonempty_faces(tri)) injective.values[f] = 0;
  std::vector<Simplex> by_size = nonempty_faces(tri);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  for (const auto& f : by_size) injective.values[f] = next++;
  r = validate(tri, injective);
  CHECK((r.is_dmf && r.is_monotone && r.is_semi_injective && r.is_generic));

  DiscreteMorseFunction flat;
  for (const auto& f : nonempty_faces(tri)) flat.values[f] = f.size() == 1 ? 0 : 5;
  r = validate(tri, flat);
  CHECK_FALSE(r.is_dmf);
  CHECK_FALSE(r.witnesses.empty());
  CHECK_THROWS_AS(canonicalize(tri, flat), std::invalid_argument);

  DiscreteMorseFunction partial;
  partial.values[S("0")] = 1;
  CHECK_THROWS_AS(validate(tri, partial), std::invalid_argument);
}

TEST_CASE("trivial functions make every face critical") {
  for (const auto& e : corpus::all()) {
    CAPTURE(e.name);
    auto f = trivial_dmf(e.k);
    CHECK(canonical(e.k, f));
    CHECK(is_dmf(e.k, f));
    auto crit = critical_faces(e.k, f);
    CHECK(crit.size() == nonempty_faces(e.k).size());
    CHECK(critical_census(e.k, f) == e.k.f_vector());
  }
  auto edge = SimplicialComplex::closure({S("ab")});
  auto steps = filtration(edge, trivial_dmf(edge));
  CHECK(steps == std::vector<FiltrationStep>{CriticalStep{S("a")}, CriticalStep{S("b")},
                                             CriticalStep{S("ab")}});
}

TEST_CASE("matchings and their filtrations") {
  auto edge = SimplicialComplex::closure({S("ab")});
  auto f = dmf_from_matching(edge, {{S("b"), S("ab")}});
  CHECK(canonical(edge, f));
  CHECK(f(S("b")) == f(S("ab")));
  CHECK(f(S("a")) < f(S("b")));
  CHECK(critical_faces(edge, f) == std::map<Simplex, int>{{S("a"), 0}});
  CHECK(filtration(edge, f) ==
        std::vector<FiltrationStep>{CriticalStep{S("a")}, CollapseStep{S("b"), S("ab")}});
  CHECK_THROWS_AS(dmf_from_matching(edge, {{S("a"), S("ab")}, {S("b"), S("ab")}}),
                  std::invalid_argument);
  // A gradient cycle around the circle.
  auto circle = corpus::from({"01", "12", "02"});
  CHECK_THROWS_AS(dmf_from_matching(circle, {{S("0"), S("01")}, {S("1"), S("12")}, {S("2"), S("02")}}),
                  std::invalid_argument);
}

TEST_CASE("canonicalize keeps the pairing and critical faces") {
  auto edge = SimplicialComplex::closure({S("ab")});
  DiscreteMorseFunction f;
  f.values[S("a")] = Rational(1, 2);
  f.values[S("b")] = 7;
  f.values[S("ab")] = 3;
  REQUIRE(is_dmf(edge, f));
  auto g = canonicalize(edge, f);
  CHECK(canonical(edge, g));
  CHECK(gradient_pairs(edge, g) == gradient_pairs(edge, f));
  CHECK(critical_by_definition(edge, g) == std::set<Simplex>{S("a")});
  CHECK(g.values == canonicalize(edge, g).values);
}

TEST_CASE("greedy collapse") {
  for (const auto& e : corpus::all()) {
    CAPTURE(e.name);
    auto f = greedy_collapse_dmf(e.k);
    CHECK(canonical(e.k, f));
    CHECK(is_dmf(e.k, f));
    auto census = critical_census(e.k, f);
    std::size_t total = 0;
    for (auto c : census) total += c;
    if (e.collapsible) CHECK((census[0] == 1 && total == 1));
    if (e.name == "boundary_delta3") CHECK(total >= 2);
    if (e.name == "boundary_delta2") CHECK(census == std::vector<std::size_t>{1, 1});
  }
  auto circle = corpus::from({"01", "12", "02"});
  auto steps = filtration(circle, greedy_collapse_dmf(circle));
  REQUIRE(steps.size() == 4);
  CHECK(std::holds_alternative<CriticalStep>(steps[0]));
  CHECK(std::holds_alternative<CollapseStep>(steps[1]));
  CHECK(std::holds_alternative<CollapseStep>(steps[2]));
  CHECK(std::holds_alternative<CriticalStep>(steps[3]));
  CHECK(std::get<CriticalStep>(steps[3]).sigma.dim() == 1);
}

TEST_CASE("random matchings: Euler count, weak inequalities, filtrations") {
  std::mt19937 rng(20240611);
  for (const auto& e : corpus::all()) {
    CAPTURE(e.name);
    for (int trial = 0; trial < 20; ++trial) {
      auto pairs = oracle::random_matching(e.k, rng);
      auto f = dmf_from_matching(e.k, pairs);
      REQUIRE(canonical(e.k, f));
      CHECK(is_dmf(e.k, f));

      auto got = gradient_pairs(e.k, f);
      CHECK(std::set(got.begin(), got.end()) == std::set(pairs.begin(), pairs.end()));

      auto crit = critical_faces(e.k, f);
      CHECK(crit.size() == critical_by_definition(e.k, f).size());
      long alt = 0;
      for (const auto& [s, idx] : crit) alt += idx % 2 ? -1 : 1;
      CHECK(alt == e.k.euler_characteristic());
      auto census = critical_census(e.k, f);
      for (std::size_t i = 0; i < e.betti.size(); ++i)
        CHECK((i < census.size() ? census[i] : 0) >= e.betti[i]);

      // Steps partition the faces and every prefix is closed.
      std::set<Simplex> seen;
      for (const auto& step : filtration(e.k, f)) {
        std::vector<Simplex> added;
        if (auto* c = std::get_if<CriticalStep>(&step)) {
          added = {c->sigma};
        } else {
          auto& p = std::get<CollapseStep>(step);
          CHECK(p.theta.size() + 1 == p.tau.size());
          CHECK(p.theta.is_face_of(p.tau));
          added = {p.theta, p.tau};
        }
        for (const auto& s : added) CHECK(seen.insert(s).second);
        for (const auto& s : added)
          for (const auto& r : s.ridges())
            if (!r.empty()) CHECK(seen.count(r));
      }
      CHECK(seen.size() == nonempty_faces(e.k).size());
    }
  }
}

TEST_CASE("weak Morse inequalities against the homology oracle") {
  for (const auto& e : corpus::all()) {
    CAPTURE(e.name);
    CHECK(mod2_betti(e.k) == e.betti);
  }
}
