#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/open_classes.hpp"

namespace softtop {

/// A point function X -> Y acting as the identity on the shared parameter list.
class SoftMapping {
 public:
  SoftMapping(ContextRef domain, ContextRef codomain, std::vector<std::size_t> points)
      : dom_(std::move(domain)), cod_(std::move(codomain)), points_(std::move(points)) {
    if (dom_->params() != cod_->params()) throw ContextMismatch("mapping contexts have different parameter lists");
    if (points_.size() != dom_->universe_size()) throw InvalidArgument("mapping is not total over the domain");
    for (std::size_t y : points_) {
      if (y >= cod_->universe_size()) throw InvalidArgument("mapping sends a point outside the codomain");
    }
  }

  static SoftMapping identity(const ContextRef& ctx) {
    std::vector<std::size_t> pts(ctx->universe_size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = i;
    return SoftMapping(ctx, ctx, std::move(pts));
  }

  const ContextRef& domain() const noexcept { return dom_; }
  const ContextRef& codomain() const noexcept { return cod_; }
  const std::vector<std::size_t>& points() const noexcept { return points_; }
  std::size_t operator()(std::size_t x) const { return points_.at(x); }

  bool is_bijective() const {
    if (dom_->universe_size() != cod_->universe_size()) return false;
    std::vector<char> hit(cod_->universe_size(), 0);
    for (std::size_t y : points_) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  }

  SoftMapping inverse() const {
    if (!is_bijective()) throw InvalidArgument("mapping is not a bijection");
    std::vector<std::size_t> inv(points_.size());
    for (std::size_t x = 0; x < points_.size(); ++x) inv[points_[x]] = x;
    return SoftMapping(cod_, dom_, std::move(inv));
  }

  Mask preimage(Mask g) const {
    Mask out = 0;
    for (std::size_t e = 0; e < dom_->param_count(); ++e) {
      for (std::size_t x = 0; x < points_.size(); ++x) {
        if ((g >> cod_->cell(points_[x], e)) & 1U) out |= Mask{1} << dom_->cell(x, e);
      }
    }
    return out;
  }

  Mask image(Mask f) const {
    Mask out = 0;
    for (std::size_t e = 0; e < dom_->param_count(); ++e) {
      for (std::size_t x = 0; x < points_.size(); ++x) {
        if ((f >> dom_->cell(x, e)) & 1U) out |= Mask{1} << cod_->cell(points_[x], e);
      }
    }
    return out;
  }

  friend bool operator==(const SoftMapping& a, const SoftMapping& b) {
    return a.points_ == b.points_ && same_context(a.dom_, b.dom_) && same_context(a.cod_, b.cod_);
  }

 private:
  ContextRef dom_;
  ContextRef cod_;
  std::vector<std::size_t> points_;
};

/// (f^-1 G)(e) = { x : f(x) in G(e) }.
inline SoftSet preimage(const SoftMapping& f, const SoftSet& g) {
  require_same_context(f.codomain(), g.context_ref());
  return SoftSet(f.domain(), f.preimage(g.bits()));
}

/// (f F)(e) = { f(x) : x in F(e) }.
inline SoftSet image(const SoftMapping& f, const SoftSet& s) {
  require_same_context(f.domain(), s.context_ref());
  return SoftSet(f.codomain(), f.image(s.bits()));
}

/// g o f: apply f, then g.
inline SoftMapping compose(const SoftMapping& f, const SoftMapping& g) {
  require_same_context(f.codomain(), g.domain());
  std::vector<std::size_t> pts(f.points().size());
  for (std::size_t x = 0; x < pts.size(); ++x) pts[x] = g(f(x));
  return SoftMapping(f.domain(), g.codomain(), std::move(pts));
}

enum class ContinuityClass : std::uint8_t {
  continuous,
  semi_continuous,
  pre_continuous,
  alpha_continuous,
  beta_continuous,
  beta_irresolute,
};

inline constexpr std::array<ContinuityClass, 6> kAllContinuityClasses = {
    ContinuityClass::continuous,       ContinuityClass::semi_continuous, ContinuityClass::pre_continuous,
    ContinuityClass::alpha_continuous, ContinuityClass::beta_continuous, ContinuityClass::beta_irresolute,
};

inline std::string_view to_string(ContinuityClass c) {
  switch (c) {
    case ContinuityClass::continuous: return "continuous";
    case ContinuityClass::semi_continuous: return "semi-continuous";
    case ContinuityClass::pre_continuous: return "pre-continuous";
    case ContinuityClass::alpha_continuous: return "alpha-continuous";
    case ContinuityClass::beta_continuous: return "beta-continuous";
    case ContinuityClass::beta_irresolute: return "beta-irresolute";
  }
  return "?";
}

class ContinuitySet {
 public:
  constexpr void insert(ContinuityClass c) { bits_ |= std::uint8_t(1U << static_cast<unsigned>(c)); }
  constexpr bool contains(ContinuityClass c) const { return (bits_ >> static_cast<unsigned>(c)) & 1U; }
  constexpr bool operator==(const ContinuitySet&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

namespace detail {

inline void require_map_spaces(const SoftMapping& f, const SoftTopology& tx, const SoftTopology& ty) {
  require_same_context(f.domain(), tx.context_ref());
  require_same_context(f.codomain(), ty.context_ref());
}

// Class that preimages of open sets must land in.
inline SetClass target_class(ContinuityClass c) {
  switch (c) {
    case ContinuityClass::continuous: return SetClass::open;
    case ContinuityClass::semi_continuous: return SetClass::semi_open;
    case ContinuityClass::pre_continuous: return SetClass::pre_open;
    case ContinuityClass::alpha_continuous: return SetClass::alpha_open;
    default: return SetClass::beta_open;
  }
}

inline bool preimages_in(const SoftMapping& f, const std::vector<Mask>& sources, const SoftTopology& tx,
                         SetClass target) {
  for (Mask g : sources) {
    if (!in_class(tx, f.preimage(g), target)) return false;
  }
  return true;
}

}  // namespace detail

/// One continuity condition. beta_irresolute needs the codomain to be enumerable.
inline bool has_continuity(const SoftMapping& f, const SoftTopology& tx, const SoftTopology& ty, ContinuityClass c) {
  detail::require_map_spaces(f, tx, ty);
  if (c == ContinuityClass::beta_irresolute) {
    return detail::preimages_in(f, class_masks(ty, SetClass::beta_open), tx, SetClass::beta_open);
  }
  return detail::preimages_in(f, ty.open_masks(), tx, detail::target_class(c));
}

inline ContinuitySet classify_map(const SoftMapping& f, const SoftTopology& tx, const SoftTopology& ty) {
  ContinuitySet out;
  for (ContinuityClass c : kAllContinuityClasses) {
    if (has_continuity(f, tx, ty, c)) out.insert(c);
  }
  return out;
}

/// The five equivalent formulations of beta-continuity.
enum class BetaContinuityCriterion : std::uint8_t {
  preimage_of_open,          // f^-1(G) beta-open for every open G
  point_neighbourhood,       // beta-open neighbourhoods of soft points map inside open G
  preimage_of_closed,        // f^-1(C) beta-closed for every closed C
  interior_closure_preimage, // int(cl(int(f^-1 G))) <= f^-1(cl G) for every G over Y
  image_of_interior_closure, // f(int(cl(int F))) <= cl(f F) for every F over X
};

inline constexpr std::array<BetaContinuityCriterion, 5> kAllBetaCriteria = {
    BetaContinuityCriterion::preimage_of_open,          BetaContinuityCriterion::point_neighbourhood,
    BetaContinuityCriterion::preimage_of_closed,        BetaContinuityCriterion::interior_closure_preimage,
    BetaContinuityCriterion::image_of_interior_closure,
};

inline std::string_view to_string(BetaContinuityCriterion c) {
  switch (c) {
    case BetaContinuityCriterion::preimage_of_open: return "i";
    case BetaContinuityCriterion::point_neighbourhood: return "ii";
    case BetaContinuityCriterion::preimage_of_closed: return "iii";
    case BetaContinuityCriterion::interior_closure_preimage: return "iv";
    case BetaContinuityCriterion::image_of_interior_closure: return "v";
  }
  return "?";
}

inline bool beta_continuity_criterion(const SoftMapping& f, const SoftTopology& tx, const SoftTopology& ty,
                                      BetaContinuityCriterion which) {
  detail::require_map_spaces(f, tx, ty);
  const auto sub = [](Mask a, Mask b) { return (a & ~b) == 0; };
  const auto ici = [&](Mask m) { return tx.interior(tx.closure(tx.interior(m))); };
  const SoftContext& cx = tx.context();
  const SoftContext& cy = ty.context();

  switch (which) {
    case BetaContinuityCriterion::preimage_of_open:
      return detail::preimages_in(f, ty.open_masks(), tx, SetClass::beta_open);

    case BetaContinuityCriterion::point_neighbourhood: {
      cx.require_enumerable("soft point neighbourhood search");
      const ClassIndex beta_x(tx, SetClass::beta_open);
      for (std::size_t e = 0; e < cx.param_count(); ++e) {
        for (std::size_t x = 0; x < cx.universe_size(); ++x) {
          const Mask point = Mask{1} << cx.cell(x, e);
          const Mask image_point = Mask{1} << cy.cell(f(x), e);
          for (Mask g : ty.open_masks()) {
            if ((g & image_point) == 0) continue;
            const Mask direct = f.preimage(g);
            if (beta_x.contains(direct)) continue;
            bool found = false;
            for (Mask cand : beta_x.members()) {
              if ((cand & point) != 0 && sub(f.image(cand), g)) {
                found = true;
                break;
              }
            }
            if (!found) return false;
          }
        }
      }
      return true;
    }

    case BetaContinuityCriterion::preimage_of_closed:
      return detail::preimages_in(f, ty.closed_masks(), tx, SetClass::beta_closed);

    case BetaContinuityCriterion::interior_closure_preimage: {
      cy.require_enumerable("criterion over all soft sets of the codomain");
      const Mask end = Mask{1} << cy.cells();
      for (Mask g = 0; g < end; ++g) {
        if (!sub(ici(f.preimage(g)), f.preimage(ty.closure(g)))) return false;
      }
      return true;
    }

    case BetaContinuityCriterion::image_of_interior_closure: {
      cx.require_enumerable("criterion over all soft sets of the domain");
      const Mask end = Mask{1} << cx.cells();
      for (Mask s = 0; s < end; ++s) {
        if (!sub(f.image(ici(s)), ty.closure(f.image(s)))) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace softtop
