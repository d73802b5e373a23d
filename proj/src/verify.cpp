#include "morseshell/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace msh {

namespace {

void fail(Certificate& cert, bool Certificate::*flag, std::size_t& budget, long tile,
          std::string reason, std::optional<Simplex> witness = std::nullopt) {
  cert.*flag = false;
  if (budget == 0) return;
  --budget;
  cert.failures.push_back({tile, std::move(reason), std::move(witness)});
}

void add_to_census(Census& c, const TileClass& cls) {
  if (!cls.critical) {
    ++c.regular;
    return;
  }
  auto k = static_cast<std::size_t>(cls.index);
  if (c.critical.size() <= k) c.critical.resize(k + 1, 0);
  ++c.critical[k];
}

std::string class_name(const TileClass& c) {
  return c.critical ? "critical(" + std::to_string(c.index) + ")" : "regular";
}

// Rank over GF(2) of a matrix given by its columns as sets of row indices.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> cols) {
  std::map<std::size_t, std::size_t> pivot_owner;  // pivot row -> column
  std::size_t rank = 0;
  auto low = [](const std::vector<std::uint64_t>& c) -> long {
    for (std::size_t w = c.size(); w-- > 0;)
      if (c[w]) return static_cast<long>(w * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(c[w])));
    return -1;
  };
  for (std::size_t j = 0; j < cols.size(); ++j) {
    long p = low(cols[j]);
    while (p >= 0) {
      auto it = pivot_owner.find(static_cast<std::size_t>(p));
      if (it == pivot_owner.end()) break;
      const auto& other = cols[it->second];
      for (std::size_t w = 0; w < other.size(); ++w) cols[j][w] ^= other[w];
      p = low(cols[j]);
    }
    if (p >= 0) {
      pivot_owner.emplace(static_cast<std::size_t>(p), j);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

long Census::alternating_sum() const {
  long s = 0;
  for (std::size_t k = 0; k < critical.size(); ++k)
    s += (k % 2 == 0 ? 1 : -1) * static_cast<long>(critical[k]);
  return s;
}

std::size_t Census::total_critical() const {
  std::size_t s = 0;
  for (auto c : critical) s += c;
  return s;
}

RawTile to_raw(const MorseTile& t) { return {t.simplex, t.missing_faces(), tile_class(t)}; }

std::vector<RawTile> to_raw(const Tiling& t) {
  std::vector<RawTile> out;
  out.reserve(t.size());
  for (const auto& x : t) out.push_back(to_raw(x));
  return out;
}

Census critical_census(const Tiling& t) {
  Census c;
  for (const auto& x : t) add_to_census(c, tile_class(x));
  return c;
}

std::vector<std::size_t> mod2_betti(const SimplicialComplex& k) {
  const int d = k.dim();
  if (d < 0) return {};
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(d) + 1);
  for (const auto& f : k.faces())
    if (!f.empty()) by_dim[f.size() - 1].push_back(f);
  std::vector<FaceMap<std::size_t>> index(by_dim.size());
  for (std::size_t i = 0; i < by_dim.size(); ++i)
    for (std::size_t j = 0; j < by_dim[i].size(); ++j) index[i][by_dim[i][j]] = j;
  // rank[i] = rank of the boundary map from i-faces to (i-1)-faces.
  std::vector<std::size_t> rank(by_dim.size() + 1, 0);
  for (std::size_t i = 1; i < by_dim.size(); ++i) {
    const std::size_t words = (by_dim[i - 1].size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cols;
    cols.reserve(by_dim[i].size());
    for (const auto& f : by_dim[i]) {
      std::vector<std::uint64_t> col(words, 0);
      for (const auto& r : f.ridges()) {
        auto row = index[i - 1].at(r);
        col[row / 64] |= std::uint64_t{1} << (row % 64);
      }
      cols.push_back(std::move(col));
    }
    rank[i] = gf2_rank(std::move(cols));
  }
  std::vector<std::size_t> betti(by_dim.size());
  for (std::size_t i = 0; i < by_dim.size(); ++i)
    betti[i] = by_dim[i].size() - rank[i] - rank[i + 1];
  return betti;
}

Certificate verify_tiling(const RelativeComplex& s, const std::vector<RawTile>& tiles,
                          const VerifyOptions& opts) {
  Certificate cert;
  cert.absolute = s.is_absolute();
  const auto& k = s.ambient();
  std::size_t budget = opts.max_failures;

  std::vector<std::optional<MorseTile>> parsed(tiles.size());
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const auto& raw = tiles[i];
    const long ti = static_cast<long>(i);
    if (!k.is_facet(raw.facet)) {
      fail(cert, &Certificate::tiles_ok, budget, ti, "not a facet of the ambient complex",
           raw.facet);
      continue;
    }
    try {
      auto c = classify(raw.facet, raw.missing);
      if (auto* bad = std::get_if<NotAMorseTile>(&c)) {
        fail(cert, &Certificate::tiles_ok, budget, ti, "not a Morse tile: " + bad->reason,
             raw.facet);
        continue;
      }
      parsed[i] = std::get<MorseTile>(std::move(c));
    } catch (const std::invalid_argument& e) {
      fail(cert, &Certificate::tiles_ok, budget, ti, e.what(), raw.facet);
      continue;
    }
    auto cls = tile_class(*parsed[i]);
    if (raw.declared && !(*raw.declared == cls))
      fail(cert, &Certificate::tiles_ok, budget, ti,
           "declared " + class_name(*raw.declared) + " but tile is " + class_name(cls),
           raw.facet);
    add_to_census(cert.census, cls);
  }

  FaceMap<long> owner;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (!parsed[i]) continue;
    const long ti = static_cast<long>(i);
    for (auto& f : tile_faces(*parsed[i])) {
      if (!s.contains(f)) {
        fail(cert, &Certificate::partition_ok, budget, ti, "tile covers a face outside S", f);
        continue;
      }
      auto [it, fresh] = owner.emplace(f, ti);
      if (!fresh)
        fail(cert, &Certificate::partition_ok, budget, ti,
             "face already covered by tile " + std::to_string(it->second), f);
    }
  }
  long chi = 0;
  for (const auto& f : s.faces()) {
    if (!f.empty()) chi += (f.size() % 2 == 1) ? 1 : -1;
    if (!owner.count(f)) fail(cert, &Certificate::partition_ok, budget, -1, "face not covered", f);
  }

  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (!parsed[i]) continue;
    const long ti = static_cast<long>(i);
    for (const auto& f : parsed[i]->simplex.faces()) {
      if (!s.contains(f)) continue;
      auto it = owner.find(f);
      if (it == owner.end() || it->second > ti) {
        fail(cert, &Certificate::shelling_ok, budget, ti,
             it == owner.end() ? "closure meets an uncovered face"
                               : "closure meets a face of later tile " +
                                     std::to_string(it->second),
             f);
        break;
      }
    }
  }

  cert.euler = chi;
  if (cert.census.alternating_sum() != chi)
    fail(cert, &Certificate::euler_ok, budget, -1,
         "alternating census " + std::to_string(cert.census.alternating_sum()) +
             " differs from Euler characteristic " + std::to_string(chi));

  if (cert.absolute) {
    cert.betti = mod2_betti(k);
    for (std::size_t d = 0; d < cert.betti.size(); ++d) {
      auto c = d < cert.census.critical.size() ? cert.census.critical[d] : 0;
      if (c < cert.betti[d])
        fail(cert, &Certificate::morse_inequalities_ok, budget, -1,
             "index " + std::to_string(d) + ": " + std::to_string(c) +
                 " critical tiles below Betti number " + std::to_string(cert.betti[d]));
    }
  }

  if (opts.strong) {
    cert.strong_ok = true;
    int top = -1;
    for (const auto& p : parsed)
      if (p) top = std::max(top, p->dim());
    for (int d = -1; d < top && *cert.strong_ok; ++d) {
      for (const auto& [f, ti] : owner) {
        if (!parsed[static_cast<std::size_t>(ti)] || parsed[static_cast<std::size_t>(ti)]->dim() <= d)
          continue;
        for (const auto& r : f.ridges()) {
          if (!s.contains(r)) continue;
          auto it = owner.find(r);
          if (it == owner.end() || parsed[static_cast<std::size_t>(it->second)]->dim() <= d) {
            cert.strong_ok = false;
            if (budget > 0) {
              --budget;
              cert.failures.push_back({ti,
                                       "union of tiles of dimension > " + std::to_string(d) +
                                           " is not a subcomplex",
                                       r});
            }
            break;
          }
        }
        if (!*cert.strong_ok) break;
      }
    }
  }
  return cert;
}

Certificate verify_tiling(const RelativeComplex& s, const Tiling& tiles,
                          const VerifyOptions& opts) {
  return verify_tiling(s, to_raw(tiles), opts);
}

Certificate audit(const SimplicialComplex& k, const DiscreteMorseFunction& f, Certificate cert) {
  auto expected = critical_census(k, f);
  cert.census_ok = true;
  const auto& got = cert.census.critical;
  const std::size_t n = std::max(expected.size(), got.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto e = i < expected.size() ? expected[i] : 0;
    auto g = i < got.size() ? got[i] : 0;
    if (e != g) {
      cert.census_ok = false;
      cert.failures.push_back({-1,
                               "index " + std::to_string(i) + ": " + std::to_string(g) +
                                   " critical tiles but " + std::to_string(e) +
                                   " critical faces",
                               std::nullopt});
      break;
    }
  }
  if (cert.census.alternating_sum() != k.euler_characteristic()) {
    cert.euler_ok = false;
    cert.failures.push_back({-1, "alternating census differs from the Euler characteristic of K",
                             std::nullopt});
  }
  auto betti = mod2_betti(k);
  for (std::size_t i = 0; i < betti.size(); ++i) {
    auto g = i < got.size() ? got[i] : 0;
    if (g < betti[i]) {
      cert.morse_inequalities_ok = false;
      cert.failures.push_back({-1, "weak Morse inequality fails at index " + std::to_string(i),
                               std::nullopt});
    }
  }
  return cert;
}

void check_declared_census(Certificate& cert, const Census& declared) {
  const auto& got = cert.census.critical;
  const std::size_t n = std::max(declared.critical.size(), got.size());
  cert.census_ok = cert.census_ok.value_or(true);
  for (std::size_t i = 0; i < n; ++i) {
    auto d = i < declared.critical.size() ? declared.critical[i] : 0;
    auto g = i < got.size() ? got[i] : 0;
    if (d != g) {
      cert.census_ok = false;
      cert.failures.push_back({-1,
                               "declared census has " + std::to_string(d) +
                                   " critical tiles of index " + std::to_string(i) + ", found " +
                                   std::to_string(g),
                               std::nullopt});
      return;
    }
  }
  if (declared.regular != cert.census.regular) {
    cert.census_ok = false;
    cert.failures.push_back({-1, "declared regular count differs", std::nullopt});
  }
}

}  // namespace msh
