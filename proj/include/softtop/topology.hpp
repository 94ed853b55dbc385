#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "softtop/soft_set.hpp"

namespace softtop {

namespace detail {

inline std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool contains_sorted(const std::vector<Mask>& v, Mask m) { return std::binary_search(v.begin(), v.end(), m); }

}  // namespace detail

/// A soft topology tau over a context: holds the open sets, their complements,
/// and (for enumerable contexts) a precomputed interior table.
class SoftTopology {
 public:
  const ContextRef& context_ref() const noexcept { return ctx_; }
  const SoftContext& context() const noexcept { return *ctx_; }

  const std::vector<Mask>& open_masks() const noexcept { return open_; }
  const std::vector<Mask>& closed_masks() const noexcept { return closed_; }
  std::size_t size() const noexcept { return open_.size(); }

  std::vector<SoftSet> members() const { return wrap(open_); }
  std::vector<SoftSet> closed_members() const { return wrap(closed_); }

  bool is_open(Mask m) const {
    if (!interior_.empty()) return interior_[m] == m;
    return detail::contains_sorted(open_, m);
  }
  bool is_closed(Mask m) const { return is_open(~m & ctx_->full_mask()); }

  /// Largest open set inside m. Uses the table when present, else a member scan.
  Mask interior(Mask m) const { return interior_.empty() ? interior_scan(m) : interior_[m]; }

  /// Smallest closed set containing m, via cl(F) = (int(F'))'.
  Mask closure(Mask m) const {
    const Mask full = ctx_->full_mask();
    return ~interior(~m & full) & full;
  }

  /// Union of all members contained in m.
  Mask interior_scan(Mask m) const {
    Mask out = 0;
    for (Mask g : open_) {
      if ((g & ~m) == 0) out |= g;
    }
    return out;
  }

  /// Intersection of all closed members containing m.
  Mask closure_scan(Mask m) const {
    Mask out = ctx_->full_mask();
    for (Mask c : closed_) {
      if ((m & ~c) == 0) out &= c;
    }
    return out;
  }

  bool has_interior_table() const noexcept { return !interior_.empty(); }

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
    return same_context(a.ctx_, b.ctx_) && a.open_ == b.open_;
  }

  /// Wraps an already-closed family. Callers guarantee the topology axioms;
  /// use validate_topology for untrusted input.
  static SoftTopology trusted(ContextRef ctx, std::vector<Mask> members) {
    return SoftTopology(std::move(ctx), detail::sorted_unique(std::move(members)));
  }

 private:
  SoftTopology(ContextRef ctx, std::vector<Mask> open) : ctx_(std::move(ctx)), open_(std::move(open)) {
    const Mask full = ctx_->full_mask();
    closed_.reserve(open_.size());
    for (Mask g : open_) closed_.push_back(~g & full);
    std::sort(closed_.begin(), closed_.end());
    if (ctx_->enumerable()) build_interior_table();
  }

  // int(F) = F when F is open; otherwise every open subset of F misses some cell
  // of F, so int(F) is the union of int(F - {c}) over cells c of F.
  void build_interior_table() {
    const std::size_t n = std::size_t{1} << ctx_->cells();
    std::vector<char> open_flag(n, 0);
    for (Mask g : open_) open_flag[g] = 1;
    interior_.assign(n, 0);
    for (std::size_t f = 0; f < n; ++f) {
      if (open_flag[f]) {
        interior_[f] = f;
        continue;
      }
      Mask acc = 0;
      for (Mask rest = f; rest != 0; rest &= rest - 1) {
        acc |= interior_[f & ~(rest & (~rest + 1))];
      }
      interior_[f] = acc;
    }
  }

  std::vector<SoftSet> wrap(const std::vector<Mask>& v) const {
    std::vector<SoftSet> out;
    out.reserve(v.size());
    for (Mask m : v) out.emplace_back(ctx_, m);
    return out;
  }

  ContextRef ctx_;
  std::vector<Mask> open_;
  std::vector<Mask> closed_;
  std::vector<Mask> interior_;
};

/// A family containing the null and absolute sets and closed under unions.
class SoftSupratopology {
 public:
  SoftSupratopology(ContextRef ctx, std::vector<Mask> members)
      : ctx_(std::move(ctx)), members_(detail::sorted_unique(std::move(members))) {}

  const ContextRef& context_ref() const noexcept { return ctx_; }
  const std::vector<Mask>& member_masks() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Mask m) const { return detail::contains_sorted(members_, m); }

 private:
  ContextRef ctx_;
  std::vector<Mask> members_;
};

enum class FamilyOp { union_op, intersection_op };

inline const char* to_string(FamilyOp op) { return op == FamilyOp::union_op ? "union" : "intersection"; }

struct ClosureViolation {
  FamilyOp op;
  SoftSet left;
  SoftSet right;
  SoftSet missing;
};

template <class Family>
struct FamilyCheck {
  std::optional<Family> family;
  std::optional<ClosureViolation> violation;
  std::vector<std::string> notices;

  explicit operator bool() const noexcept { return family.has_value(); }
};

using TopologyCheck = FamilyCheck<SoftTopology>;
using SupratopologyCheck = FamilyCheck<SoftSupratopology>;

namespace detail {

struct PreparedFamily {
  std::vector<Mask> members;
  std::vector<std::string> notices;
};

inline PreparedFamily prepare_family(const ContextRef& ctx, const std::vector<SoftSet>& candidates) {
  PreparedFamily out;
  out.members.reserve(candidates.size() + 2);
  for (const auto& c : candidates) {
    require_same_context(ctx, c.context_ref());
    out.members.push_back(c.bits());
  }
  out.members = sorted_unique(std::move(out.members));
  if (!contains_sorted(out.members, 0)) out.notices.push_back("null set added");
  if (!contains_sorted(out.members, ctx->full_mask())) out.notices.push_back("absolute set added");
  out.members.push_back(0);
  out.members.push_back(ctx->full_mask());
  out.members = sorted_unique(std::move(out.members));
  return out;
}

// First pair (i <= j, canonical order) whose combination leaves the family.
inline std::optional<ClosureViolation> first_violation(const ContextRef& ctx, const std::vector<Mask>& members,
                                                       bool check_intersection) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Mask a = members[i];
      const Mask b = members[j];
      if (!contains_sorted(members, a | b)) {
        return ClosureViolation{FamilyOp::union_op, SoftSet(ctx, a), SoftSet(ctx, b), SoftSet(ctx, a | b)};
      }
      if (check_intersection && !contains_sorted(members, a & b)) {
        return ClosureViolation{FamilyOp::intersection_op, SoftSet(ctx, a), SoftSet(ctx, b), SoftSet(ctx, a & b)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks the soft topology axioms. The null and absolute sets are inserted
/// when missing (recorded in notices); closure is checked pairwise.
inline TopologyCheck validate_topology(const ContextRef& ctx, const std::vector<SoftSet>& candidates) {
  auto prepared = detail::prepare_family(ctx, candidates);
  TopologyCheck out;
  out.notices = std::move(prepared.notices);
  out.violation = detail::first_violation(ctx, prepared.members, true);
  if (!out.violation) out.family = SoftTopology::trusted(ctx, std::move(prepared.members));
  return out;
}

inline SupratopologyCheck validate_supratopology(const ContextRef& ctx, const std::vector<SoftSet>& candidates) {
  auto prepared = detail::prepare_family(ctx, candidates);
  SupratopologyCheck out;
  out.notices = std::move(prepared.notices);
  out.violation = detail::first_violation(ctx, prepared.members, false);
  if (!out.violation) out.family = SoftSupratopology(ctx, std::move(prepared.members));
  return out;
}

inline std::string describe(const ClosureViolation& v) {
  return std::string(to_string(v.op)) + " of " + to_string(v.left) + " and " + to_string(v.right) + " = " +
         to_string(v.missing) + " is missing";
}

/// validate_topology that throws ValidationError on failure.
inline SoftTopology make_topology(const ContextRef& ctx, const std::vector<SoftSet>& candidates) {
  auto check = validate_topology(ctx, candidates);
  if (!check) throw ValidationError("not a soft topology: " + describe(*check.violation));
  return std::move(*check.family);
}

inline SoftTopology discrete(const ContextRef& ctx) {
  ctx->require_enumerable("discrete topology");
  std::vector<Mask> all(std::size_t{1} << ctx->cells());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return SoftTopology::trusted(ctx, std::move(all));
}

inline SoftTopology indiscrete(const ContextRef& ctx) { return SoftTopology::trusted(ctx, {0, ctx->full_mask()}); }

inline bool is_open(const SoftTopology& tau, const SoftSet& f) {
  require_same_context(tau.context_ref(), f.context_ref());
  return tau.is_open(f.bits());
}

inline bool is_closed(const SoftTopology& tau, const SoftSet& f) {
  require_same_context(tau.context_ref(), f.context_ref());
  return tau.is_closed(f.bits());
}

inline SoftSet interior(const SoftTopology& tau, const SoftSet& f) {
  require_same_context(tau.context_ref(), f.context_ref());
  return SoftSet(f.context_ref(), tau.interior(f.bits()));
}

inline SoftSet closure(const SoftTopology& tau, const SoftSet& f) {
  require_same_context(tau.context_ref(), f.context_ref());
  return SoftSet(f.context_ref(), tau.closure(f.bits()));
}

inline SoftSet interior_by_scan(const SoftTopology& tau, const SoftSet& f) {
  require_same_context(tau.context_ref(), f.context_ref());
  return SoftSet(f.context_ref(), tau.interior_scan(f.bits()));
}

inline SoftSet closure_by_scan(const SoftTopology& tau, const SoftSet& f) {
  require_same_context(tau.context_ref(), f.context_ref());
  return SoftSet(f.context_ref(), tau.closure_scan(f.bits()));
}

}  // namespace softtop
