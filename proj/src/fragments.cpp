#include "cyclebound/fragments.hpp"

#include <algorithm>
#include <map>

#include "cyclebound/invariants.hpp"

namespace cyclebound {

CutsetList minimum_cutsets(const Graph& g, Budget& budget) {
  CutsetList out;
  const int n = g.order();
  out.kappa = connectivity(g, budget);
  if (n >= 1 && out.kappa == n - 1 && g.size() == n * (n - 1) / 2) {
    out.complete = true;
    return out;
  }
  const VertexSet all = g.vertices();
  if (out.kappa == 0) {
    out.cutsets.push_back(0);
    return out;
  }
  for (VertexSet cut = low_mask(out.kappa); cut != 0; cut = next_combination(cut, n)) {
    budget.tick();
    if (!g.connected_within(all & ~cut)) out.cutsets.push_back(cut);
  }
  return out;
}

FragmentCatalog enumerate_fragments(const Graph& g, std::size_t limit, Budget& budget) {
  const CutsetList cuts = minimum_cutsets(g, budget);
  FragmentCatalog catalog;
  catalog.kappa = cuts.kappa;
  std::map<std::pair<int, VertexSet>, Fragment> by_vertices;
  for (VertexSet cut : cuts.cutsets) {
    const auto comps = g.components(g.vertices() & ~cut);
    const std::size_t k = comps.size();
    if (k >= 63 || (std::size_t{1} << k) - 2 > limit) {
      throw CatalogLimitExceeded("fragment catalog exceeds the limit of " + std::to_string(limit));
    }
    for (std::uint64_t pick = 1; pick + 1 < (std::uint64_t{1} << k); ++pick) {
      budget.tick();
      VertexSet x = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if ((pick >> i) & 1U) x |= comps[i];
      }
      const Fragment frag{x, cut, g.vertices() & ~x & ~cut};
      by_vertices.emplace(std::make_pair(count(x), x), frag);
      if (by_vertices.size() > limit) {
        throw CatalogLimitExceeded("fragment catalog exceeds the limit of " + std::to_string(limit));
      }
    }
  }
  for (auto& [key, frag] : by_vertices) catalog.fragments.push_back(frag);
  catalog.endfragment.assign(catalog.fragments.size(), true);
  for (std::size_t i = 0; i < catalog.fragments.size(); ++i) {
    const VertexSet x = catalog.fragments[i].vertices;
    for (std::size_t j = 0; j < catalog.fragments.size(); ++j) {
      const VertexSet y = catalog.fragments[j].vertices;
      if (y != x && is_subset(y, x)) {
        catalog.endfragment[i] = false;
        break;
      }
    }
  }
  return catalog;
}

std::vector<Fragment> endfragments(const FragmentCatalog& catalog) {
  std::vector<Fragment> out;
  for (std::size_t i = 0; i < catalog.fragments.size(); ++i) {
    if (catalog.endfragment[i]) out.push_back(catalog.fragments[i]);
  }
  return out;
}

std::vector<Fragment> endfragments(const Graph& g, Budget& budget) {
  return endfragments(enumerate_fragments(g, kDefaultCatalogLimit, budget));
}

Fragment fragment_complement(const Graph& g, const Fragment& frag) {
  const VertexSet x = frag.complement;
  const VertexSet s = g.neighborhood(x);
  return Fragment{x, s, g.vertices() & ~x & ~s};
}

bool is_valid_fragment(const Graph& g, const Fragment& frag, int kappa) {
  const VertexSet all = g.vertices();
  if (frag.vertices == 0 || !is_subset(frag.vertices, all)) return false;
  if (g.neighborhood(frag.vertices) != frag.cutset) return false;
  if (count(frag.cutset) != kappa) return false;
  if (frag.complement != (all & ~frag.vertices & ~frag.cutset) || frag.complement == 0) return false;
  for_each_vertex(frag.vertices, [&](int v) {
    if ((g.neighbors(v) & frag.complement) != 0) kappa = -1;
  });
  return kappa >= 0;
}

}  // namespace cyclebound
