#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/soft_maps.hpp"

namespace softtop {

/// Universe bound for enumerating all |X|! self-bijections.
inline constexpr std::size_t kMaxPermutationUniverse = 6;

using Permutation = std::vector<std::size_t>;

enum class HomeoKind : std::uint8_t { soft_homeo, beta_homeo, beta_irresolute_homeo };

inline constexpr std::array<HomeoKind, 3> kAllHomeoKinds = {HomeoKind::soft_homeo, HomeoKind::beta_homeo,
                                                           HomeoKind::beta_irresolute_homeo};

inline std::string_view to_string(HomeoKind k) {
  switch (k) {
    case HomeoKind::soft_homeo: return "soft-homeo";
    case HomeoKind::beta_homeo: return "beta-homeo";
    case HomeoKind::beta_irresolute_homeo: return "beta-irresolute-homeo";
  }
  return "?";
}

/// Accepts the canonical names plus the short forms soft, beta, beta-irresolute.
inline HomeoKind parse_homeo_kind(std::string_view name) {
  if (name == "soft-homeo" || name == "soft" || name == "homeo") return HomeoKind::soft_homeo;
  if (name == "beta-homeo" || name == "beta") return HomeoKind::beta_homeo;
  if (name == "beta-irresolute-homeo" || name == "beta-irresolute") return HomeoKind::beta_irresolute_homeo;
  throw InvalidArgument("unknown homeomorphism kind '" + std::string(name) + "'");
}

class HomeoKindSet {
 public:
  constexpr void insert(HomeoKind k) { bits_ |= std::uint8_t(1U << static_cast<unsigned>(k)); }
  constexpr bool contains(HomeoKind k) const { return (bits_ >> static_cast<unsigned>(k)) & 1U; }
  constexpr bool operator==(const HomeoKindSet&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Tests bijections X -> Y against the three homeomorphism notions, with the
/// beta-open families of both spaces indexed once.
class HomeoTester {
 public:
  HomeoTester(SoftTopology tx, SoftTopology ty)
      : tx_(std::move(tx)), ty_(std::move(ty)), beta_x_(tx_, SetClass::beta_open), beta_y_(ty_, SetClass::beta_open) {}

  bool is_homeo(const SoftMapping& f, HomeoKind kind) const {
    require_same_context(f.domain(), tx_.context_ref());
    require_same_context(f.codomain(), ty_.context_ref());
    if (!f.is_bijective()) return false;
    const SoftMapping g = f.inverse();
    return forward(f, tx_, ty_, beta_x_, beta_y_, kind) && forward(g, ty_, tx_, beta_y_, beta_x_, kind);
  }

  HomeoKindSet classify(const SoftMapping& f) const {
    HomeoKindSet out;
    for (HomeoKind k : kAllHomeoKinds) {
      if (is_homeo(f, k)) out.insert(k);
    }
    return out;
  }

 private:
  static bool forward(const SoftMapping& f, const SoftTopology& src, const SoftTopology& dst, const ClassIndex& beta_src,
                      const ClassIndex& beta_dst, HomeoKind kind) {
    switch (kind) {
      case HomeoKind::soft_homeo:
        for (Mask g : dst.open_masks()) {
          if (!src.is_open(f.preimage(g))) return false;
        }
        return true;
      case HomeoKind::beta_homeo:
        for (Mask g : dst.open_masks()) {
          if (!beta_src.contains(f.preimage(g))) return false;
        }
        return true;
      case HomeoKind::beta_irresolute_homeo:
        for (Mask g : beta_dst.members()) {
          if (!beta_src.contains(f.preimage(g))) return false;
        }
        return true;
    }
    return false;
  }

  SoftTopology tx_;
  SoftTopology ty_;
  ClassIndex beta_x_;
  ClassIndex beta_y_;
};

inline bool is_homeomorphism(const SoftMapping& f, const SoftTopology& tx, const SoftTopology& ty, HomeoKind kind) {
  return HomeoTester(tx, ty).is_homeo(f, kind);
}

inline SoftMapping as_self_map(const SoftTopology& tau, const Permutation& p) {
  return SoftMapping(tau.context_ref(), tau.context_ref(), p);
}

inline HomeoKindSet classify_bijection(const Permutation& p, const SoftTopology& tau) {
  const SoftMapping f = as_self_map(tau, p);
  if (!f.is_bijective()) throw InvalidArgument("not a bijection of the universe");
  return HomeoTester(tau, tau).classify(f);
}

struct HomeoCollection {
  SoftTopology space;
  HomeoKind kind;
  /// Lexicographic order.
  std::vector<Permutation> elements;
};

inline void require_permutation_bound(const SoftContext& ctx) {
  if (ctx.universe_size() > kMaxPermutationUniverse) {
    throw CapExceeded("bijection enumeration supports at most " + std::to_string(kMaxPermutationUniverse) +
                      " points, got " + std::to_string(ctx.universe_size()));
  }
}

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline HomeoCollection build_collection(const SoftTopology& tau, HomeoKind kind) {
  require_permutation_bound(tau.context());
  const HomeoTester tester(tau, tau);
  HomeoCollection out{tau, kind, {}};
  Permutation p = identity_permutation(tau.context().universe_size());
  do {
    if (tester.is_homeo(as_self_map(tau, p), kind)) out.elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// b o a: apply a first, then b. This is the group operation alpha(a, b).
inline Permutation then(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

inline Permutation invert(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = x;
  return out;
}

/// Finite permutation group with its Cayley table. cayley[i][j] is the index of
/// alpha(a_i, a_j) = a_j o a_i.
struct GroupTable {
  SoftTopology space;
  std::vector<Permutation> elements;
  std::vector<std::vector<std::size_t>> cayley;
  std::size_t identity_index = 0;
  std::vector<std::size_t> inverse;

  std::size_t order() const noexcept { return elements.size(); }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

struct GroupAxioms {
  bool closure = false;
  bool associativity = false;
  bool identity = false;
  bool inverses = false;

  bool all() const noexcept { return closure && associativity && identity && inverses; }
};

/// Re-derives all four axioms from the table and the element list.
inline GroupAxioms verify_group_axioms(const GroupTable& g) {
  GroupAxioms out;
  const std::size_t n = g.order();
  out.closure = g.cayley.size() == n;
  for (std::size_t i = 0; out.closure && i < n; ++i) {
    if (g.cayley[i].size() != n) {
      out.closure = false;
      break;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = g.cayley[i][j];
      if (k >= n || g.elements[k] != then(g.elements[i], g.elements[j])) {
        out.closure = false;
        break;
      }
    }
  }
  if (!out.closure) return out;

  out.associativity = true;
  for (std::size_t a = 0; a < n && out.associativity; ++a) {
    for (std::size_t b = 0; b < n && out.associativity; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.cayley[g.cayley[a][b]][c] != g.cayley[a][g.cayley[b][c]]) {
          out.associativity = false;
          break;
        }
      }
    }
  }

  const std::size_t e = g.identity_index;
  out.identity = e < n && n > 0;
  for (std::size_t i = 0; out.identity && i < n; ++i) {
    if (g.cayley[e][i] != i || g.cayley[i][e] != i) out.identity = false;
  }

  out.inverses = out.identity && g.inverse.size() == n;
  for (std::size_t i = 0; out.inverses && i < n; ++i) {
    const std::size_t j = g.inverse[i];
    if (j >= n || g.cayley[i][j] != e || g.cayley[j][i] != e) out.inverses = false;
  }
  return out;
}

struct GroupFailure {
  std::string reason;
  Permutation left;
  Permutation right;
};

struct GroupBuild {
  std::optional<GroupTable> table;
  std::optional<GroupFailure> failure;

  explicit operator bool() const noexcept { return table.has_value(); }
};

inline GroupBuild build_group(const HomeoCollection& c) {
  GroupTable g{c.space, c.elements, {}, 0, {}};
  std::sort(g.elements.begin(), g.elements.end());
  const std::size_t n = g.elements.size();
  if (n == 0) return {std::nullopt, GroupFailure{"empty collection", {}, {}}};

  const auto id = g.index_of(identity_permutation(g.elements.front().size()));
  if (!id) return {std::nullopt, GroupFailure{"identity missing", {}, {}}};
  g.identity_index = *id;

  g.cayley.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto k = g.index_of(then(g.elements[i], g.elements[j]));
      if (!k) return {std::nullopt, GroupFailure{"not closed under composition", g.elements[i], g.elements[j]}};
      g.cayley[i][j] = *k;
    }
  }
  g.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = g.index_of(invert(g.elements[i]));
    if (!k) return {std::nullopt, GroupFailure{"inverse missing", g.elements[i], {}}};
    g.inverse[i] = *k;
  }
  const GroupAxioms axioms = verify_group_axioms(g);
  if (!axioms.all()) return {std::nullopt, GroupFailure{"group axiom check failed", {}, {}}};
  return {std::move(g), std::nullopt};
}

struct SubgroupCheck {
  bool ok = false;
  std::string reason;
  std::optional<std::pair<Permutation, Permutation>> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Element containment, shared identity, and closure of the subset under
/// alpha(a, b^-1) = b^-1 o a.
inline SubgroupCheck is_subgroup(const std::vector<Permutation>& subset, const GroupTable& g) {
  SubgroupCheck out;
  if (subset.empty()) {
    out.reason = "empty subset";
    return out;
  }
  for (const auto& a : subset) {
    if (!g.index_of(a)) {
      out.reason = "element outside the group";
      out.witness = std::make_pair(a, Permutation{});
      return out;
    }
  }
  std::vector<Permutation> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  const auto has = [&](const Permutation& p) { return std::binary_search(sorted.begin(), sorted.end(), p); };
  if (!has(g.elements[g.identity_index])) {
    out.reason = "identity missing";
    return out;
  }
  for (const auto& a : sorted) {
    for (const auto& b : sorted) {
      if (!has(then(a, invert(b)))) {
        out.reason = "not closed under a, b -> b^-1 o a";
        out.witness = std::make_pair(a, b);
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

inline SubgroupCheck is_subgroup(const GroupTable& h, const GroupTable& g) {
  if (!(h.space == g.space)) return {false, "groups act on different spaces", std::nullopt};
  return is_subgroup(h.elements, g);
}

/// f o a o f^-1 for a bijection f : X -> Y and a self-map a of X.
inline Permutation conjugate(const SoftMapping& f, const Permutation& a) {
  const SoftMapping inv = f.inverse();
  Permutation out(f.codomain()->universe_size());
  for (std::size_t y = 0; y < out.size(); ++y) out[y] = f(a[inv(y)]);
  return out;
}

struct ConjugationCheck {
  /// Index in the target group of f*(a_i), or npos when it escapes.
  std::vector<std::size_t> mapping;
  bool lands_in_target = false;
  bool bijective = false;
  bool homomorphic = false;
  std::optional<Permutation> escaped;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  bool is_isomorphism() const noexcept { return lands_in_target && bijective && homomorphic; }
};

/// Checks that a -> f o a o f^-1 is an isomorphism gx -> gy. f must be a
/// beta-irresolute homeomorphism between the two groups' spaces.
inline ConjugationCheck conjugation_iso(const SoftMapping& f, const GroupTable& gx, const GroupTable& gy) {
  if (!is_homeomorphism(f, gx.space, gy.space, HomeoKind::beta_irresolute_homeo)) {
    throw InvalidArgument("conjugating map is not a beta-irresolute homeomorphism");
  }
  ConjugationCheck out;
  out.lands_in_target = true;
  for (const auto& a : gx.elements) {
    const Permutation image = conjugate(f, a);
    const auto k = gy.index_of(image);
    out.mapping.push_back(k ? *k : ConjugationCheck::npos);
    if (!k && out.lands_in_target) {
      out.lands_in_target = false;
      out.escaped = image;
    }
  }
  if (!out.lands_in_target) return out;

  std::vector<std::size_t> sorted = out.mapping;
  std::sort(sorted.begin(), sorted.end());
  out.bijective = gx.order() == gy.order() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  out.homomorphic = true;
  for (std::size_t i = 0; i < gx.order() && out.homomorphic; ++i) {
    for (std::size_t j = 0; j < gx.order(); ++j) {
      if (out.mapping[gx.cayley[i][j]] != gy.cayley[out.mapping[i]][out.mapping[j]]) {
        out.homomorphic = false;
        break;
      }
    }
  }
  return out;
}

/// (g o f)* = g* o f* evaluated element-wise on gx.
inline bool conjugation_functorial(const SoftMapping& f, const SoftMapping& g, const GroupTable& gx) {
  const SoftMapping gf = compose(f, g);
  for (const auto& a : gx.elements) {
    if (conjugate(gf, a) != conjugate(g, conjugate(f, a))) return false;
  }
  return true;
}

}  // namespace softtop
