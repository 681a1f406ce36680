#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclebound {

class SchemeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class HostKind { kCycle, kPath };

std::string_view host_name(HostKind kind);
HostKind parse_host(std::string_view text);

// Classes Z_1..Z_p of positions 0..length-1 on an abstract cycle or path.
struct SchemeInstance {
  HostKind host = HostKind::kCycle;
  int length = 0;
  std::vector<std::vector<int>> classes;
  int r = 2;
};

// Cyclic distance on a cycle, |x - y| on a path.
int host_distance(HostKind host, int length, int x, int y);

// Distinct members of one class at distance >= 2, distinct members of
// different classes at distance >= r. A position may belong to several
// classes. Throws on positions outside the host or r < 2.
bool is_scheme(const SchemeInstance& inst);

// True when the classes admit a system of distinct representatives
// (augmenting-path bipartite matching).
bool has_sdr(const std::vector<std::vector<int>>& classes);

// Throws SchemeError when inst is not a scheme.
bool is_nontrivial(const SchemeInstance& inst);

enum class SchemeLemma { kA, kL1, kL2, kL3, kL4, kL5, kL6, kL7, kL8 };

inline constexpr SchemeLemma kAllSchemeLemmas[] = {
    SchemeLemma::kA,  SchemeLemma::kL1, SchemeLemma::kL2, SchemeLemma::kL3, SchemeLemma::kL4,
    SchemeLemma::kL5, SchemeLemma::kL6, SchemeLemma::kL7, SchemeLemma::kL8};

std::string_view scheme_lemma_name(SchemeLemma lemma);
SchemeLemma parse_scheme_lemma(std::string_view text);
HostKind lemma_host(SchemeLemma lemma);
int lemma_class_count(SchemeLemma lemma);

struct BoundQuery {
  SchemeLemma lemma = SchemeLemma::kA;
  std::vector<int> sizes;
  int r = 2;
  HostKind host = HostKind::kCycle;
};

// Empty string when the query meets the lemma's class count, host kind and
// size constraints; otherwise the reason.
std::string query_violation(const BoundQuery& q);

// Lower bound on the host order. Halved terms are rounded up. Throws
// SchemeError for inadmissible queries.
long scheme_bound(const BoundQuery& q);

constexpr int kDefaultHostCap = 14;

// Smallest host (cycles from 3 vertices, paths from 1) carrying a nontrivial
// scheme with the given class sizes, with one such placement. nullopt when
// nothing fits within cap.
std::optional<SchemeInstance> min_host_bruteforce(const std::vector<int>& sizes, int r,
                                                  HostKind host, int cap = kDefaultHostCap);

}  // namespace cyclebound
