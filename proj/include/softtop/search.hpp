#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "softtop/open_classes.hpp"

namespace softtop {

/// Randomness is std::mt19937_64 (portable by the C++ standard). Cells are
/// filled when (draw >> 11) * 2^-53 < density; generator counts are 1 + draw % 4.
/// Trial t of a search samples its space with seed + t.
struct SearchSpec {
  std::size_t universe_size = 3;
  std::size_t param_count = 2;
  std::uint64_t seed = 0;
  std::size_t max_trials = 100;
  double density = 0.5;

  void validate() const {
    if (universe_size == 0 || param_count == 0) throw InvalidArgument("universe and params must be nonempty");
    if (universe_size * param_count > kEnumerationCap) {
      throw CapExceeded("search space has " + std::to_string(universe_size * param_count) + " cells (cap " +
                        std::to_string(kEnumerationCap) + ")");
    }
    if (max_trials == 0) throw InvalidArgument("max_trials must be at least 1");
    if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
  }
};

inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Closes a family under pairwise union and intersection, adding the null and absolute sets.
inline std::vector<Mask> close_family(const SoftContext& ctx, std::vector<Mask> family) {
  family.push_back(0);
  family.push_back(ctx.full_mask());
  family = detail::sorted_unique(std::move(family));
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = family.size();
    std::vector<Mask> fresh;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (Mask m : {family[i] | family[j], family[i] & family[j]}) {
          if (!detail::contains_sorted(family, m)) fresh.push_back(m);
        }
      }
    }
    if (!fresh.empty()) {
      family.insert(family.end(), fresh.begin(), fresh.end());
      family = detail::sorted_unique(std::move(family));
      grew = true;
    }
  }
  return family;
}

inline SoftTopology random_space(const SearchSpec& spec) {
  spec.validate();
  const ContextRef ctx = SoftContext::numbered(spec.universe_size, spec.param_count);
  std::mt19937_64 rng(spec.seed);
  const std::size_t generators = 1 + static_cast<std::size_t>(rng() % 4);
  std::vector<Mask> family;
  for (std::size_t g = 0; g < generators; ++g) {
    Mask m = 0;
    for (std::size_t c = 0; c < ctx->cells(); ++c) {
      if (unit_draw(rng) < spec.density) m |= Mask{1} << c;
    }
    family.push_back(m);
  }
  std::vector<SoftSet> closed;
  for (Mask m : close_family(*ctx, std::move(family))) closed.emplace_back(ctx, m);
  return make_topology(ctx, closed);
}

/// Canonically-first soft set in class a but not in class b.
inline std::optional<SoftSet> find_separating_set(const SoftTopology& tau, SetClass a, SetClass b) {
  tau.context().require_enumerable("separating set search");
  const Mask end = Mask{1} << tau.context().cells();
  for (Mask m = 0; m < end; ++m) {
    if (in_class(tau, m, a) && !in_class(tau, m, b)) return SoftSet(tau.context_ref(), m);
  }
  return std::nullopt;
}

/// Canonically-first pair (i < j) of class members whose union or
/// intersection falls outside the class.
inline std::optional<std::pair<SoftSet, SoftSet>> find_nonclosed_pair(const SoftTopology& tau, SetClass c,
                                                                      FamilyOp op) {
  const ClassIndex index(tau, c);
  const auto& members = index.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Mask combined = op == FamilyOp::union_op ? members[i] | members[j] : members[i] & members[j];
      if (!index.contains(combined)) {
        return std::make_pair(SoftSet(tau.context_ref(), members[i]), SoftSet(tau.context_ref(), members[j]));
      }
    }
  }
  return std::nullopt;
}

enum class ClaimKind : std::uint8_t { separates, union_not_closed, intersection_not_closed };

struct Claim {
  ClaimKind kind;
  SetClass first;
  /// Only meaningful for ClaimKind::separates.
  SetClass second;
};

struct Witness {
  SoftTopology space;
  std::variant<SoftSet, std::pair<SoftSet, SoftSet>> subject;
  Claim claim;
};

/// Re-runs the claim on the stored witness.
inline bool reverify(const Witness& w) {
  switch (w.claim.kind) {
    case ClaimKind::separates: {
      const auto* s = std::get_if<SoftSet>(&w.subject);
      return s && in_class(w.space, *s, w.claim.first) && !in_class(w.space, *s, w.claim.second);
    }
    case ClaimKind::union_not_closed:
    case ClaimKind::intersection_not_closed: {
      const auto* p = std::get_if<std::pair<SoftSet, SoftSet>>(&w.subject);
      if (!p) return false;
      const SoftSet combined =
          w.claim.kind == ClaimKind::union_not_closed ? unite(p->first, p->second) : intersect(p->first, p->second);
      return in_class(w.space, p->first, w.claim.first) && in_class(w.space, p->second, w.claim.first) &&
             !in_class(w.space, combined, w.claim.first);
    }
  }
  return false;
}

struct SearchOutcome {
  std::optional<Witness> witness;
  /// Trial index of the witness, or the number of trials run when exhausted.
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
};

inline SearchSpec trial_spec(const SearchSpec& spec, std::size_t trial) {
  SearchSpec s = spec;
  s.seed = spec.seed + trial;
  return s;
}

inline SearchOutcome search_separation(const SearchSpec& spec, SetClass a, SetClass b) {
  spec.validate();
  for (std::size_t t = 0; t < spec.max_trials; ++t) {
    const SearchSpec s = trial_spec(spec, t);
    SoftTopology tau = random_space(s);
    if (auto found = find_separating_set(tau, a, b)) {
      return {Witness{std::move(tau), *found, Claim{ClaimKind::separates, a, b}}, t, s.seed};
    }
  }
  return {std::nullopt, spec.max_trials, 0};
}

}  // namespace softtop
