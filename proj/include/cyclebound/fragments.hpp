#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cyclebound/budget.hpp"
#include "cyclebound/graph.hpp"

namespace cyclebound {

// X with S = N(X) a minimum cut-set and complement X^ = V - (X u S)
// nonempty.
struct Fragment {
  VertexSet vertices = 0;
  VertexSet cutset = 0;
  VertexSet complement = 0;

  bool operator==(const Fragment&) const = default;
};

struct CutsetList {
  bool complete = false;  // complete graphs have no cut-set
  int kappa = 0;
  std::vector<VertexSet> cutsets;  // ascending by mask
};

struct FragmentCatalog {
  int kappa = 0;
  std::vector<Fragment> fragments;  // ascending by (|X|, X)
  std::vector<bool> endfragment;    // parallel to fragments
};

class CatalogLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultCatalogLimit = std::size_t{1} << 16;

// All vertex sets T with |T| = kappa and G - T disconnected.
CutsetList minimum_cutsets(const Graph& g, Budget& budget = Budget::none());

// Every X that is a nonempty union of components of G - T, for some minimum
// cut-set T, leaving at least one component outside. Keyed on X.
FragmentCatalog enumerate_fragments(const Graph& g, std::size_t limit = kDefaultCatalogLimit,
                                    Budget& budget = Budget::none());

// Inclusion-minimal catalog entries.
std::vector<Fragment> endfragments(const Graph& g, Budget& budget = Budget::none());
std::vector<Fragment> endfragments(const FragmentCatalog& catalog);

Fragment fragment_complement(const Graph& g, const Fragment& frag);

// S = N(X), |S| = kappa, complement nonempty and consistent.
bool is_valid_fragment(const Graph& g, const Fragment& frag, int kappa);

}  // namespace cyclebound
