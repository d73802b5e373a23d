#include "morseshell/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "morseshell/vertex_map.hpp"

namespace msh {

namespace {

Label bary_of(const Simplex& s) { return Label::bary(s.vertices()); }

// Relabels every vertex through fn.
template <typename Fn>
MorseTile relabel(const MorseTile& t, Fn fn) {
  auto map_simplex = [&](const Simplex& s) {
    std::vector<Label> out;
    out.reserve(s.size());
    for (auto l : s) out.push_back(fn(l));
    return Simplex(std::move(out));
  };
  MorseTile out;
  out.simplex = map_simplex(t.simplex);
  out.restriction = map_simplex(t.restriction);
  if (t.morse_face) out.morse_face = map_simplex(*t.morse_face);
  return out;
}

// sd of the link of v in a tile sits in the link of v̂ via F ↦ F ∪ {v}.
MorseTile lift_into_link(const MorseTile& t, Label v) {
  return relabel(t, [v](Label l) { return bary_of(bary_support(l).with(v)); });
}

void dot_closed(Tiling& tiles) {
  for (auto& t : tiles)
    if (t.is_closed() && !t.is_empty()) t = deprive(t, Simplex{});
}

void append(Tiling& out, const Tiling& more) { out.insert(out.end(), more.begin(), more.end()); }

Tiling link_tiling(const SimplicialComplex& k, const Simplex& sigma) {
  auto lk = link(k, sigma);
  if (lk.is_empty_face_only()) return {empty_tile()};
  return shell_sd_relative(RelativeComplex(lk), lk.vertices().front()).tiles;
}

// N-parts of every block first, then every remainder, both in block order.
struct BlockCollector {
  Tiling head;
  std::vector<Tiling> remainders;

  void add(const PrefixedTiling& pt) {
    auto cut = pt.tiles.begin() + static_cast<std::ptrdiff_t>(pt.prefix);
    head.insert(head.end(), pt.tiles.begin(), cut);
    remainders.emplace_back(cut, pt.tiles.end());
  }
};

Tiling transport_and_cone(const Tiling& link_tiles, std::size_t prefix, const SimplicialComplex& k,
                          const Simplex& sigma) {
  auto iso = link_iso_sd2(k, sigma);
  Tiling mapped;
  mapped.reserve(link_tiles.size());
  for (const auto& t : link_tiles) mapped.push_back(apply_map(t, iso));
  return cone_shelling(double_bary(sigma), mapped, prefix);
}

std::vector<Simplex> sorted_ridges(const Simplex& s) {
  auto r = s.ridges();
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

Tiling cone_shelling(Label apex, const Tiling& t, std::size_t deprive_prefix) {
  if (deprive_prefix > t.size()) throw std::invalid_argument("deprived prefix longer than tiling");
  Tiling out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(cone(apex, t[i], i < deprive_prefix));
  return out;
}

PrefixedTiling shell_sd_join(const MorseTile& t, const MorseTile& t2) {
  if (!t.is_basic()) throw std::invalid_argument("shell_sd_join: first tile must be basic");
  if (t.is_empty() || t2.is_empty()) throw std::invalid_argument("shell_sd_join: empty tile");
  const auto x = tile_join(t, t2);
  const auto c1 = canonical_triple(t);
  const auto c2 = canonical_triple(t2);
  std::vector<Label> order;
  for (const auto* part : {&c1.sigma, &c1.theta, &c2.sigma, &c2.theta, &c2.tau})
    order.insert(order.end(), part->begin(), part->end());

  PrefixedTiling out;
  const std::size_t n = order.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Label v = order[j];
    const auto xj = tile_vertex_link(x, v);
    PrefixedTiling sub;
    if (j == 0) {
      sub.tiles = shell_sd_tile(xj);
    } else if (j + 1 == n) {
      sub.tiles = shell_sd_tile(xj);
      sub.prefix = sub.tiles.size();
    } else {
      Simplex front(std::vector<Label>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j)));
      auto [a, b] = split_tile(xj, front);
      sub = shell_sd_join(a, b);
    }
    for (auto& tile : sub.tiles) tile = lift_into_link(tile, v);
    auto star = cone_shelling(bary_of(Simplex{v}), sub.tiles, sub.prefix);
    if (j == 0 && !x.is_closed()) dot_closed(star);
    append(out.tiles, star);
    if (j + 1 == t.simplex.size()) out.prefix = out.tiles.size();
  }
  return out;
}

PrefixedTiling shell_with_prefix(const MorseTile& t, const MorseTile& t2) {
  if (t.is_empty()) return {shell_sd_tile(t2), 0};
  if (t2.is_empty()) {
    auto tiles = shell_sd_tile(t);
    auto n = tiles.size();
    return {std::move(tiles), n};
  }
  return shell_sd_join(t, t2);
}

Tiling shell_sd_tile(const MorseTile& t) {
  if (t.is_empty()) return {t};
  if (t.dim() == 0) return {relabel(t, [](Label l) { return bary_of(Simplex{l}); })};
  const auto c = canonical_triple(t);
  if (!c.sigma.empty()) {
    const Label v = c.sigma[0];
    return shell_sd_join(closed_tile(Simplex{v}), tile_vertex_link(t, v)).tiles;
  }
  if (!c.theta.empty()) {
    const Label v = c.theta[0];
    return shell_sd_join(open_tile(Simplex{v}), tile_vertex_link(t, v)).tiles;
  }
  auto tiles = shell_sd_tile(closed_tile(t.simplex));
  dot_closed(tiles);
  return tiles;
}

BoundaryShelling shell_boundary_sd(const Simplex& sigma, const Simplex& last) {
  if (sigma.size() < 2) throw std::invalid_argument("boundary shelling needs dim ≥ 1");
  if (last.size() + 1 != sigma.size() || !last.is_face_of(sigma))
    throw std::invalid_argument(last.to_string() + " is not a ridge of " + sigma.to_string());
  auto ridges = sorted_ridges(sigma);
  ridges.erase(std::find(ridges.begin(), ridges.end(), last));
  BoundaryShelling out{{}, 0, {}, bary_of(last)};
  for (std::size_t p = 0; p < ridges.size(); ++p) {
    std::vector<Simplex> missing;
    for (std::size_t q = 0; q < p; ++q) missing.push_back(ridges[p].intersect(ridges[q]));
    append(out.tiles, shell_sd_tile(make_tile(ridges[p], missing)));
  }
  out.split = out.tiles.size();
  if (last.size() == 1) {
    out.tail_base = {empty_tile()};
  } else {
    out.tail_base = shell_boundary_sd(last, sorted_ridges(last).back()).tiles;
  }
  append(out.tiles, cone_shelling(out.apex, out.tail_base, out.tail_base.size()));
  return out;
}

PrefixedTiling shell_sd_relative(const RelativeComplex& s, Label v) {
  const auto& k = s.ambient();
  if (!k.contains(Simplex{v}))
    throw std::invalid_argument("vertex " + v.to_string() + " is not in the complex");
  std::vector<Simplex> facets = k.facets();
  std::stable_partition(facets.begin(), facets.end(),
                        [v](const Simplex& f) { return f.contains(v); });

  FaceSet covered;  // K_{j-1} ∪ L
  for (const auto& f : s.missing().faces()) covered.insert(f);

  auto subtract = [&covered](const MorseTile& tile) {
    std::vector<Label> flag = tile.simplex.vertices();
    std::sort(flag.begin(), flag.end(), [](Label a, Label b) {
      return a.members().size() < b.members().size();
    });
    std::vector<Label> prefix;
    for (auto l : flag) {
      if (!covered.count(bary_support(l))) break;
      prefix.push_back(l);
    }
    if (prefix.empty()) {
      if (covered.empty() || !tile.is_closed()) return tile;
      return deprive(tile, Simplex{});
    }
    return deprive(tile, Simplex(std::move(prefix)));
  };

  Tiling head, star_rest, others;
  for (const auto& facet : facets) {
    std::vector<Label> r;
    for (auto x : facet)
      if (covered.count(facet.without(x))) r.push_back(x);
    MorseTile basic{facet, Simplex(std::move(r)), std::nullopt};
    PrefixedTiling pt;
    const bool in_star = facet.contains(v);
    if (in_star) {
      Simplex apex{v};
      auto vt = basic.restriction.contains(v) ? open_tile(apex) : closed_tile(apex);
      pt = shell_with_prefix(vt, tile_vertex_link(basic, v));
    } else {
      pt.tiles = shell_sd_tile(basic);
    }
    for (std::size_t i = 0; i < pt.tiles.size(); ++i) {
      auto tile = subtract(pt.tiles[i]);
      if (!in_star)
        others.push_back(std::move(tile));
      else if (i < pt.prefix)
        head.push_back(std::move(tile));
      else
        star_rest.push_back(std::move(tile));
    }
    for (auto& f : facet.faces()) covered.insert(std::move(f));
  }
  PrefixedTiling out;
  out.prefix = head.size();
  out.tiles = std::move(head);
  append(out.tiles, star_rest);
  append(out.tiles, others);
  return out;
}

Sd2Result shell_sd2_from_dmf(const SimplicialComplex& k, const DiscreteMorseFunction& f) {
  if (k.is_void() || k.is_empty_face_only()) throw std::invalid_argument("empty complex");
  Sd2Result out;
  bool earlier = false;  // L_{i-1} is non-void
  for (const auto& step : filtration(k, f)) {
    if (const auto* crit = std::get_if<CriticalStep>(&step)) {
      const auto& sigma = crit->sigma;
      if (sigma.size() == 1) {
        auto lk = link(k, sigma);
        Tiling lt;
        if (lk.is_empty_face_only()) {
          lt = {empty_tile()};
        } else {
          auto j = barycentric(lk);
          lt = shell_sd_relative(RelativeComplex(j), j.vertices().front()).tiles;
        }
        auto star = transport_and_cone(lt, 0, k, sigma);
        if (earlier) dot_closed(star);
        append(out.tiles, star);
      } else {
        auto bs = shell_boundary_sd(sigma, sorted_ridges(sigma).back());
        auto lt = link_tiling(k, sigma);
        BlockCollector blocks;
        for (const auto& tl : bs.tiles)
          for (const auto& tm : lt) blocks.add(shell_with_prefix(tl, tm));
        Tiling link_tiles = blocks.head;
        for (const auto& r : blocks.remainders) append(link_tiles, r);
        append(out.tiles, transport_and_cone(link_tiles, blocks.head.size(), k, sigma));
      }
    } else {
      const auto& [theta, tau] = std::get<CollapseStep>(step);
      // Stage one: the star of τ̂̂.
      auto bs = shell_boundary_sd(tau, theta);
      auto lt = link_tiling(k, tau);
      BlockCollector first;
      for (std::size_t l = 0; l < bs.split; ++l)
        for (const auto& tm : lt) first.add(shell_with_prefix(bs.tiles[l], tm));
      for (const auto& base : bs.tail_base)
        for (const auto& tm : lt) first.add(shell_with_prefix(base, cone(bs.apex, tm, true)));
      Tiling link_tiles = first.head;
      for (const auto& r : first.remainders) append(link_tiles, r);
      append(out.tiles, transport_and_cone(link_tiles, first.head.size(), k, tau));

      // Stage two: the star of θ̂̂, starting from st(ŵ) in sd(lk θ).
      const Label w = tau.minus(theta)[0];
      const Label w_hat = bary_of(Simplex{w});
      auto lk_theta = link(k, theta);
      auto rel = shell_sd_relative(RelativeComplex(lk_theta), w);
      Tiling apex_links;
      for (std::size_t m = 0; m < rel.prefix; ++m) {
        auto below = tile_vertex_link(rel.tiles[m], w_hat);
        if (cone(w_hat, below, false) != rel.tiles[m])
          throw std::logic_error("star tile is not a closed cone at the distinguished vertex");
        apex_links.push_back(std::move(below));
      }
      // Blocks indexed (l, m) lexicographically; the neighborhood is taken
      // at T''_l * ŵ for m in the star, at T''_l otherwise.
      std::vector<PrefixedTiling> grid;
      Tiling head1, head2;
      for (const auto& base : bs.tail_base) {
        for (std::size_t m = 0; m < rel.tiles.size(); ++m) {
          PrefixedTiling pt = m < rel.prefix
                                  ? shell_with_prefix(tile_join(base, closed_tile(Simplex{w_hat})),
                                                      apex_links[m])
                                  : shell_with_prefix(base, rel.tiles[m]);
          auto& head = m < rel.prefix ? head1 : head2;
          head.insert(head.end(), pt.tiles.begin(),
                      pt.tiles.begin() + static_cast<std::ptrdiff_t>(pt.prefix));
          grid.push_back(std::move(pt));
        }
      }
      Tiling second = head1;
      append(second, head2);
      const std::size_t prefix = second.size();
      for (const auto& pt : grid)
        second.insert(second.end(), pt.tiles.begin() + static_cast<std::ptrdiff_t>(pt.prefix),
                      pt.tiles.end());
      append(out.tiles, transport_and_cone(second, prefix, k, theta));
    }
    earlier = true;
    out.step_ends.push_back(out.tiles.size());
  }
  return out;
}

}  // namespace msh
