#include "morseshell/morse.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace msh {

namespace {

std::vector<Simplex> nonempty_faces(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  for (const auto& f : k.faces())
    if (!f.empty()) out.push_back(f);
  return out;
}

// Codimension-one cofaces of s inside k.
std::vector<Simplex> cofacets(const SimplicialComplex& k, const Simplex& s) {
  std::vector<Simplex> out;
  for (auto i : k.facets_containing(s)) {
    for (auto v : k.facets()[i].minus(s)) out.push_back(s.with(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Simplex> all_cofaces(const SimplicialComplex& k, const Simplex& s) {
  std::set<Simplex> out;
  for (auto i : k.facets_containing(s)) {
    auto extra = k.facets()[i].minus(s);
    for (const auto& e : extra.faces())
      if (!e.empty()) out.insert(s.unite(e));
  }
  return {out.begin(), out.end()};
}

std::string rat(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" +
                                    std::to_string(r.denominator());
}

void require_total(const SimplicialComplex& k, const DiscreteMorseFunction& f) {
  std::size_t n = 0;
  for (const auto& s : k.faces()) {
    if (s.empty()) continue;
    ++n;
    if (!f.values.count(s)) throw std::invalid_argument("no value on face " + s.to_string());
  }
  if (f.values.size() != n) {
    for (const auto& [s, _] : f.values)
      if (s.empty() || !k.contains(s))
        throw std::invalid_argument("value given on " + s.to_string() + ", not a face of K");
  }
}

using Pair = std::pair<Simplex, Simplex>;

// Orders the Hasse diagram with each pair merged into one node and assigns
// consecutive integers. `key` breaks ties between available nodes.
template <typename Key>
DiscreteMorseFunction order_matching(const SimplicialComplex& k, const std::vector<Pair>& pairs,
                                     Key key) {
  auto faces = nonempty_faces(k);
  FaceMap<std::size_t> node_of;
  std::vector<std::vector<Simplex>> nodes;
  FaceMap<Simplex> partner;
  for (const auto& [a, b] : pairs) {
    if (!k.contains(a) || !k.contains(b) || a.empty() || a.size() + 1 != b.size() ||
        !a.is_face_of(b))
      throw std::invalid_argument("pair " + a.to_string() + " < " + b.to_string() +
                                  " is not a codimension-one pair of K");
    if (partner.count(a) || partner.count(b))
      throw std::invalid_argument("face matched twice near " + a.to_string());
    partner.emplace(a, b);
    partner.emplace(b, a);
    node_of[a] = node_of[b] = nodes.size();
    nodes.push_back({a, b});
  }
  for (const auto& s : faces) {
    if (node_of.count(s)) continue;
    node_of[s] = nodes.size();
    nodes.push_back({s});
  }
  std::vector<std::vector<std::size_t>> out_edges(nodes.size());
  std::vector<std::size_t> indegree(nodes.size(), 0);
  for (const auto& s : faces) {
    for (const auto& c : cofacets(k, s)) {
      auto it = partner.find(s);
      if (it != partner.end() && it->second == c) continue;
      auto a = node_of[s];
      auto b = node_of[c];
      if (a == b) continue;
      out_edges[a].push_back(b);
      ++indegree[b];
    }
  }
  using Entry = std::pair<decltype(key(nodes[0])), std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (indegree[i] == 0) ready.push({key(nodes[i]), i});
  DiscreteMorseFunction g;
  std::int64_t next = 1;
  std::size_t done = 0;
  while (!ready.empty()) {
    auto [_, i] = ready.top();
    ready.pop();
    for (const auto& s : nodes[i]) g.values[s] = Rational(next);
    ++next;
    ++done;
    for (auto j : out_edges[i])
      if (--indegree[j] == 0) ready.push({key(nodes[j]), j});
  }
  if (done != nodes.size()) throw std::invalid_argument("matching has a closed gradient path");
  return g;
}

}  // namespace

Rational DiscreteMorseFunction::operator()(const Simplex& s) const {
  auto it = values.find(s);
  if (it == values.end()) throw std::out_of_range("no value on face " + s.to_string());
  return it->second;
}

MorseReport validate(const SimplicialComplex& k, const DiscreteMorseFunction& f) {
  require_total(k, f);
  MorseReport rep;
  rep.is_dmf = rep.is_monotone = rep.is_semi_injective = rep.is_generic = true;
  auto faces = nonempty_faces(k);
  for (const auto& s : faces) {
    auto fs = f(s);
    std::vector<Simplex> up, down;
    for (const auto& t : all_cofaces(k, s))
      if (fs >= f(t)) up.push_back(t);
    for (const auto& t : s.faces())
      if (!t.empty() && t != s && fs <= f(t)) down.push_back(t);
    if (rep.is_dmf && (up.size() > 1 || down.size() > 1)) {
      rep.is_dmf = false;
      const auto& w = up.size() > 1 ? up : down;
      rep.witnesses.push_back("face " + s.to_string() + " has " + std::to_string(w.size()) +
                              (up.size() > 1 ? " cofaces" : " faces") +
                              " violating the Morse condition, e.g. " + w[0].to_string() +
                              " and " + w[1].to_string());
    }
    if (rep.is_monotone) {
      for (const auto& t : cofacets(k, s)) {
        if (fs > f(t)) {
          rep.is_monotone = false;
          rep.witnesses.push_back("not monotone: f" + s.to_string() + "=" + rat(fs) + " > f" +
                                  t.to_string() + "=" + rat(f(t)));
          break;
        }
      }
    }
  }
  std::map<Rational, std::vector<Simplex>> levels;
  for (const auto& s : faces) levels[f(s)].push_back(s);
  for (const auto& [val, group] : levels) {
    if (rep.is_semi_injective && group.size() > 2) {
      rep.is_semi_injective = false;
      rep.witnesses.push_back("value " + rat(val) + " taken by " + std::to_string(group.size()) +
                              " faces, e.g. " + group[0].to_string());
    }
    if (!rep.is_generic) continue;
    for (std::size_t i = 0; i < group.size() && rep.is_generic; ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (!group[i].is_face_of(group[j]) && !group[j].is_face_of(group[i])) {
          rep.is_generic = false;
          rep.witnesses.push_back("not generic: " + group[i].to_string() + " and " +
                                  group[j].to_string() + " share value " + rat(val));
          break;
        }
      }
    }
  }
  return rep;
}

std::vector<std::pair<Simplex, Simplex>> gradient_pairs(const SimplicialComplex& k,
                                                        const DiscreteMorseFunction& f) {
  std::vector<Pair> out;
  for (const auto& s : nonempty_faces(k))
    for (const auto& t : cofacets(k, s))
      if (f(s) >= f(t)) out.emplace_back(s, t);
  return out;
}

DiscreteMorseFunction canonicalize(const SimplicialComplex& k, const DiscreteMorseFunction& f) {
  auto rep = validate(k, f);
  if (!rep.is_dmf) throw std::invalid_argument("not a discrete Morse function: " + rep.witnesses[0]);
  for (const auto& s : nonempty_faces(k))
    for (const auto& t : all_cofaces(k, s))
      if (t.size() > s.size() + 1 && f(s) >= f(t))
        throw std::invalid_argument("non-increasing pair of codimension > 1: " + s.to_string());
  auto key = [&](const std::vector<Simplex>& node) {
    const auto& top = node.back();
    return std::make_tuple(f(top), top.size(), top);
  };
  return order_matching(k, gradient_pairs(k, f), key);
}

DiscreteMorseFunction dmf_from_matching(const SimplicialComplex& k,
                                        const std::vector<std::pair<Simplex, Simplex>>& pairs) {
  auto key = [](const std::vector<Simplex>& node) {
    const auto& top = node.back();
    return std::make_tuple(top.size(), top);
  };
  return order_matching(k, pairs, key);
}

std::map<Simplex, int> critical_faces(const SimplicialComplex& k, const DiscreteMorseFunction& f) {
  FaceSet paired;
  for (const auto& [a, b] : gradient_pairs(k, f)) {
    paired.insert(a);
    paired.insert(b);
  }
  std::map<Simplex, int> out;
  for (const auto& s : nonempty_faces(k))
    if (!paired.count(s)) out.emplace(s, s.dim());
  return out;
}

std::vector<std::size_t> critical_census(const SimplicialComplex& k,
                                         const DiscreteMorseFunction& f) {
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(k.dim() + 1, 0)), 0);
  for (const auto& [_, idx] : critical_faces(k, f)) ++out[static_cast<std::size_t>(idx)];
  return out;
}

std::vector<FiltrationStep> filtration(const SimplicialComplex& k,
                                       const DiscreteMorseFunction& f) {
  require_total(k, f);
  std::map<Rational, std::vector<Simplex>> levels;
  for (const auto& s : nonempty_faces(k)) levels[f(s)].push_back(s);
  std::vector<FiltrationStep> steps;
  FaceSet present{Simplex{}};
  auto check_faces = [&](const Simplex& s, const Simplex* sibling) {
    for (const auto& r : s.ridges()) {
      if (present.count(r) || (sibling && r == *sibling)) continue;
      throw std::invalid_argument("sublevel set is not a subcomplex at " + s.to_string());
    }
  };
  for (auto& [val, group] : levels) {
    if (group.size() == 1) {
      check_faces(group[0], nullptr);
      steps.push_back(CriticalStep{group[0]});
      present.insert(group[0]);
    } else if (group.size() == 2) {
      std::sort(group.begin(), group.end(),
                [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
      const auto& theta = group[0];
      const auto& tau = group[1];
      if (theta.size() + 1 != tau.size() || !theta.is_face_of(tau))
        throw std::invalid_argument("level " + rat(val) + " is not a ridge/facet pair");
      check_faces(theta, nullptr);
      check_faces(tau, &theta);
      steps.push_back(CollapseStep{theta, tau});
      present.insert(theta);
      present.insert(tau);
    } else {
      throw std::invalid_argument("level " + rat(val) + " holds more than two faces");
    }
  }
  return steps;
}

DiscreteMorseFunction trivial_dmf(const SimplicialComplex& k) {
  DiscreteMorseFunction f;
  for (const auto& s : nonempty_faces(k)) f.values[s] = Rational(s.dim());
  return canonicalize(k, f);
}

DiscreteMorseFunction greedy_collapse_dmf(const SimplicialComplex& k) {
  std::set<Simplex> alive;
  for (const auto& s : nonempty_faces(k)) alive.insert(s);
  auto live_cofacets = [&](const Simplex& s) {
    std::vector<Simplex> out;
    for (const auto& c : cofacets(k, s))
      if (alive.count(c)) out.push_back(c);
    return out;
  };
  std::vector<std::vector<Simplex>> removed;
  while (!alive.empty()) {
    bool collapsed = false;
    for (const auto& theta : alive) {
      auto up = live_cofacets(theta);
      if (up.size() != 1) continue;
      if (!live_cofacets(up[0]).empty()) continue;
      removed.push_back({theta, up[0]});
      alive.erase(up[0]);
      alive.erase(theta);
      collapsed = true;
      break;
    }
    if (collapsed) continue;
    const Simplex* pick = nullptr;
    for (const auto& s : alive) {
      if (!live_cofacets(s).empty()) continue;
      if (!pick || s.size() > pick->size()) pick = &s;
    }
    removed.push_back({*pick});
    alive.erase(*pick);
  }
  DiscreteMorseFunction f;
  std::int64_t value = 1;
  for (auto it = removed.rbegin(); it != removed.rend(); ++it, ++value)
    for (const auto& s : *it) f.values[s] = Rational(value);
  return canonicalize(k, f);
}

}  // namespace msh
