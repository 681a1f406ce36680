#include "cyclebound/schemes.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace cyclebound {

std::string_view host_name(HostKind kind) { return kind == HostKind::kCycle ? "cycle" : "path"; }

HostKind parse_host(std::string_view text) {
  if (text == "cycle") return HostKind::kCycle;
  if (text == "path") return HostKind::kPath;
  throw SchemeError("host must be 'cycle' or 'path', got '" + std::string(text) + "'");
}

int host_distance(HostKind host, int length, int x, int y) {
  const int d = std::abs(x - y);
  return host == HostKind::kCycle ? std::min(d, length - d) : d;
}

bool is_scheme(const SchemeInstance& inst) {
  if (inst.r < 2) throw SchemeError("r must be at least 2");
  for (const auto& cls : inst.classes) {
    for (int x : cls) {
      if (x < 0 || x >= inst.length) {
        throw SchemeError("position " + std::to_string(x) + " outside host of order " +
                          std::to_string(inst.length));
      }
    }
  }
  const std::size_t p = inst.classes.size();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      const int need = i == j ? 2 : inst.r;
      for (int x : inst.classes[i]) {
        for (int y : inst.classes[j]) {
          if (x == y) continue;
          if (host_distance(inst.host, inst.length, x, y) < need) return false;
        }
      }
    }
  }
  return true;
}

bool has_sdr(const std::vector<std::vector<int>>& classes) {
  std::vector<int> owner;  // indexed by compressed element
  std::vector<int> elements;
  for (const auto& cls : classes) elements.insert(elements.end(), cls.begin(), cls.end());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.size() < classes.size()) return false;
  owner.assign(elements.size(), -1);
  auto index = [&](int x) {
    return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), x) - elements.begin());
  };
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t c) {
    for (int x : classes[c]) {
      const std::size_t e = index(x);
      if (seen[e]) continue;
      seen[e] = 1;
      if (owner[e] < 0 || augment(static_cast<std::size_t>(owner[e]))) {
        owner[e] = static_cast<int>(c);
        return true;
      }
    }
    return false;
  };
  for (std::size_t c = 0; c < classes.size(); ++c) {
    seen.assign(elements.size(), 0);
    if (!augment(c)) return false;
  }
  return true;
}

bool is_nontrivial(const SchemeInstance& inst) {
  if (!is_scheme(inst)) throw SchemeError("not a scheme");
  return has_sdr(inst.classes);
}

namespace {

constexpr const char* kLemmaNames[] = {"A", "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8"};

long ceil_half(long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

}  // namespace

std::string_view scheme_lemma_name(SchemeLemma lemma) { return kLemmaNames[static_cast<int>(lemma)]; }

SchemeLemma parse_scheme_lemma(std::string_view text) {
  for (SchemeLemma l : kAllSchemeLemmas) {
    if (text == scheme_lemma_name(l)) return l;
  }
  if (text == "LemA") return SchemeLemma::kA;
  throw SchemeError("unknown scheme lemma '" + std::string(text) + "' (A, L1..L8)");
}

HostKind lemma_host(SchemeLemma lemma) {
  switch (lemma) {
    case SchemeLemma::kA:
    case SchemeLemma::kL1:
    case SchemeLemma::kL2: return HostKind::kCycle;
    default: return HostKind::kPath;
  }
}

int lemma_class_count(SchemeLemma lemma) {
  switch (lemma) {
    case SchemeLemma::kA:
    case SchemeLemma::kL3:
    case SchemeLemma::kL4: return 2;
    case SchemeLemma::kL1:
    case SchemeLemma::kL5:
    case SchemeLemma::kL6: return 3;
    default: return 4;
  }
}

std::string query_violation(const BoundQuery& q) {
  const int p = lemma_class_count(q.lemma);
  const std::string name(scheme_lemma_name(q.lemma));
  if (static_cast<int>(q.sizes.size()) != p) return name + " takes " + std::to_string(p) + " class sizes";
  if (q.host != lemma_host(q.lemma)) return name + " needs a " + std::string(host_name(lemma_host(q.lemma))) + " host";
  if (q.r < 2) return "r must be at least 2";
  for (int s : q.sizes) {
    if (s < 1) return "class sizes must be positive";
  }
  const auto& z = q.sizes;
  auto unit = [&](int count) {
    for (int i = 0; i < count; ++i) {
      if (z[static_cast<std::size_t>(i)] != 1) return false;
    }
    return true;
  };
  switch (q.lemma) {
    case SchemeLemma::kA:
    case SchemeLemma::kL3: break;
    case SchemeLemma::kL1:
    case SchemeLemma::kL5:
      if (!unit(1)) return name + " needs |Z1| = 1";
      break;
    case SchemeLemma::kL2:
    case SchemeLemma::kL7:
      if (!unit(2)) return name + " needs |Z1| = |Z2| = 1";
      break;
    case SchemeLemma::kL4:
      if (!unit(1) || z[1] < 2) return name + " needs |Z1| = 1 and |Z2| >= 2";
      break;
    case SchemeLemma::kL6:
      if (!unit(2) || z[2] < 3) return name + " needs |Z1| = |Z2| = 1 and |Z3| >= 3";
      break;
    case SchemeLemma::kL8:
      if (!unit(3) || z[3] < 4) return name + " needs |Z1| = |Z2| = |Z3| = 1 and |Z4| >= 4";
      break;
  }
  return {};
}

long scheme_bound(const BoundQuery& q) {
  if (auto why = query_violation(q); !why.empty()) throw SchemeError(why);
  const long s = std::accumulate(q.sizes.begin(), q.sizes.end(), 0L);
  const long r = q.r;
  switch (q.lemma) {
    case SchemeLemma::kA: return std::min(2 * s + 2 * r - 6, ceil_half(r * s));
    case SchemeLemma::kL1: return std::min(2 * s + 3 * r - 12, ceil_half(r * (s - 1)));
    case SchemeLemma::kL2: return std::min(2 * s + 4 * r - 18, ceil_half(r * (s - 2)));
    case SchemeLemma::kL3: return std::min(2 * s + r - 5, ceil_half(r * (s - 2)) + 1);
    case SchemeLemma::kL4: return 2L * q.sizes[1] + r - 3;
    case SchemeLemma::kL5: return std::min(2 * s + 2 * r - 11, ceil_half(r * (s - 3)) + 1);
    case SchemeLemma::kL6: return 2L * q.sizes[2] + 2 * r - 5;
    case SchemeLemma::kL7: return std::min(2 * s + 3 * r - 17, ceil_half(r * (s - 4)) + 1);
    case SchemeLemma::kL8: return 2L * q.sizes[3] + 3 * r - 7;
  }
  return 0;
}

namespace {

// Assigns each host position a set of classes, left to right. Two labelled
// positions closer than r must carry the same single class (and be at least
// 2 apart); a position in several classes keeps every other labelled
// position at distance >= r.
class Placement {
 public:
  Placement(const std::vector<int>& sizes, int r, HostKind host, int length)
      : sizes_(sizes), r_(r), host_(host), length_(length), p_(static_cast<int>(sizes.size())),
        labels_(static_cast<std::size_t>(length), 0), need_(sizes) {}

  bool run() { return place(0); }

  SchemeInstance instance() const {
    SchemeInstance inst{host_, length_, std::vector<std::vector<int>>(static_cast<std::size_t>(p_)), r_};
    for (int x = 0; x < length_; ++x) {
      for (int i = 0; i < p_; ++i) {
        if ((labels_[static_cast<std::size_t>(x)] >> i) & 1U) inst.classes[static_cast<std::size_t>(i)].push_back(x);
      }
    }
    return inst;
  }

 private:
  bool compatible(unsigned a, unsigned b, int d) const {
    if (a == 0 || b == 0) return true;
    if (d >= r_) return true;
    if (a != b || (a & (a - 1)) != 0) return false;
    return d >= 2;
  }

  bool fits(int x, unsigned mask) const {
    for (int y = 0; y < x; ++y) {
      const unsigned other = labels_[static_cast<std::size_t>(y)];
      if (other != 0 && !compatible(mask, other, host_distance(host_, length_, x, y))) return false;
    }
    return true;
  }

  bool place(int x) {
    int outstanding = 0;
    for (int n : need_) outstanding = std::max(outstanding, n);
    if (outstanding == 0) return has_sdr(instance().classes);
    const int left = length_ - x;
    // One class cannot use two adjacent positions.
    if (outstanding > (left + 1) / 2) return false;
    const unsigned full = (1U << p_) - 1;
    // On a cycle position 0 may be taken as labelled by rotation.
    const unsigned first = (host_ == HostKind::kCycle && x == 0) ? 1 : 0;
    for (unsigned mask = first; mask <= full; ++mask) {
      bool ok = true;
      for (int i = 0; i < p_ && ok; ++i) {
        if (((mask >> i) & 1U) && need_[static_cast<std::size_t>(i)] == 0) ok = false;
      }
      if (!ok || !fits(x, mask)) continue;
      labels_[static_cast<std::size_t>(x)] = mask;
      for (int i = 0; i < p_; ++i) need_[static_cast<std::size_t>(i)] -= static_cast<int>((mask >> i) & 1U);
      if (place(x + 1)) return true;
      for (int i = 0; i < p_; ++i) need_[static_cast<std::size_t>(i)] += static_cast<int>((mask >> i) & 1U);
      labels_[static_cast<std::size_t>(x)] = 0;
    }
    return false;
  }

  const std::vector<int>& sizes_;
  int r_;
  HostKind host_;
  int length_;
  int p_;
  std::vector<unsigned> labels_;
  std::vector<int> need_;
};

}  // namespace

std::optional<SchemeInstance> min_host_bruteforce(const std::vector<int>& sizes, int r, HostKind host,
                                                  int cap) {
  if (r < 2) throw SchemeError("r must be at least 2");
  if (sizes.size() < 2 || sizes.size() > 8) throw SchemeError("between 2 and 8 classes");
  for (int s : sizes) {
    if (s < 1) throw SchemeError("class sizes must be positive");
  }
  for (int length = host == HostKind::kCycle ? 3 : 1; length <= cap; ++length) {
    Placement search(sizes, r, host, length);
    if (search.run()) return search.instance();
  }
  return std::nullopt;
}

}  // namespace cyclebound
