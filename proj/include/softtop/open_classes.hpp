#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

enum class SetClass : std::uint8_t {
  open,
  closed,
  semi_open,
  semi_closed,
  pre_open,
  pre_closed,
  alpha_open,
  alpha_closed,
  beta_open,
  beta_closed,
};

inline constexpr std::array<SetClass, 10> kAllSetClasses = {
    SetClass::open,     SetClass::closed,     SetClass::semi_open,  SetClass::semi_closed, SetClass::pre_open,
    SetClass::pre_closed, SetClass::alpha_open, SetClass::alpha_closed, SetClass::beta_open, SetClass::beta_closed,
};

/// The five open classes in hierarchy order.
inline constexpr std::array<SetClass, 5> kOpenClasses = {SetClass::open, SetClass::alpha_open, SetClass::semi_open,
                                                         SetClass::pre_open, SetClass::beta_open};

inline std::string_view to_string(SetClass c) {
  switch (c) {
    case SetClass::open: return "open";
    case SetClass::closed: return "closed";
    case SetClass::semi_open: return "semi-open";
    case SetClass::semi_closed: return "semi-closed";
    case SetClass::pre_open: return "pre-open";
    case SetClass::pre_closed: return "pre-closed";
    case SetClass::alpha_open: return "alpha-open";
    case SetClass::alpha_closed: return "alpha-closed";
    case SetClass::beta_open: return "beta-open";
    case SetClass::beta_closed: return "beta-closed";
  }
  return "?";
}

inline SetClass parse_set_class(std::string_view name) {
  for (SetClass c : kAllSetClasses) {
    if (to_string(c) == name) return c;
  }
  throw InvalidArgument("unknown set class '" + std::string(name) + "'");
}

/// Complement-dual class: F is in c iff F' is in dual(c).
constexpr SetClass dual(SetClass c) {
  const auto v = static_cast<std::uint8_t>(c);
  return static_cast<SetClass>(v % 2 == 0 ? v + 1 : v - 1);
}

class ClassSet {
 public:
  constexpr ClassSet() = default;

  constexpr void insert(SetClass c) { bits_ |= bit(c); }
  constexpr bool contains(SetClass c) const { return (bits_ & bit(c)) != 0; }
  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool operator==(const ClassSet&) const = default;

  std::vector<SetClass> to_vector() const {
    std::vector<SetClass> out;
    for (SetClass c : kAllSetClasses) {
      if (contains(c)) out.push_back(c);
    }
    return out;
  }

 private:
  static constexpr std::uint16_t bit(SetClass c) { return std::uint16_t(1U << static_cast<unsigned>(c)); }
  std::uint16_t bits_ = 0;
};

/// Membership of a raw grid in one class.
inline bool in_class(const SoftTopology& tau, Mask f, SetClass c) {
  const auto sub = [](Mask a, Mask b) { return (a & ~b) == 0; };
  const auto in = [&](Mask m) { return tau.interior(m); };
  const auto cl = [&](Mask m) { return tau.closure(m); };
  switch (c) {
    case SetClass::open: return tau.is_open(f);
    case SetClass::closed: return tau.is_closed(f);
    case SetClass::semi_open: return sub(f, cl(in(f)));
    case SetClass::semi_closed: return sub(in(cl(f)), f);
    case SetClass::pre_open: return sub(f, in(cl(f)));
    case SetClass::pre_closed: return sub(cl(in(f)), f);
    case SetClass::alpha_open: return sub(f, in(cl(in(f))));
    case SetClass::alpha_closed: return sub(cl(in(cl(f))), f);
    case SetClass::beta_open: return sub(f, cl(in(cl(f))));
    case SetClass::beta_closed: return sub(in(cl(in(f))), f);
  }
  return false;
}

inline bool in_class(const SoftTopology& tau, const SoftSet& f, SetClass c) {
  require_same_context(tau.context_ref(), f.context_ref());
  return in_class(tau, f.bits(), c);
}

inline ClassSet classify(const SoftTopology& tau, const SoftSet& f) {
  require_same_context(tau.context_ref(), f.context_ref());
  ClassSet out;
  for (SetClass c : kAllSetClasses) {
    if (in_class(tau, f.bits(), c)) out.insert(c);
  }
  return out;
}

/// Raw grids of every soft set in class c, ascending.
inline std::vector<Mask> class_masks(const SoftTopology& tau, SetClass c) {
  tau.context().require_enumerable("class enumeration");
  std::vector<Mask> out;
  const Mask end = Mask{1} << tau.context().cells();
  for (Mask m = 0; m < end; ++m) {
    if (in_class(tau, m, c)) out.push_back(m);
  }
  return out;
}

inline std::vector<SoftSet> enumerate_class(const SoftTopology& tau, SetClass c) {
  std::vector<SoftSet> out;
  for (Mask m : class_masks(tau, c)) out.emplace_back(tau.context_ref(), m);
  return out;
}

/// Membership bitmap over all 2^cells grids, for O(1) class lookups in hot loops.
class ClassIndex {
 public:
  ClassIndex(const SoftTopology& tau, SetClass c) {
    tau.context().require_enumerable("class index");
    const std::size_t n = std::size_t{1} << tau.context().cells();
    flags_.assign(n, 0);
    for (std::size_t m = 0; m < n; ++m) {
      if (in_class(tau, m, c)) {
        flags_[m] = 1;
        members_.push_back(m);
      }
    }
  }

  bool contains(Mask m) const { return flags_[m] != 0; }
  const std::vector<Mask>& members() const noexcept { return members_; }

 private:
  std::vector<char> flags_;
  std::vector<Mask> members_;
};

/// Evaluates cl(F)-F <= cl(X - cl(int F)) - (X - cl F), which holds exactly
/// for the beta-closed sets.
inline bool check_beta_closed_characterization(const SoftTopology& tau, const SoftSet& f) {
  const SoftSet cl_f = closure(tau, f);
  const SoftSet lhs = difference(cl_f, f);
  const SoftSet rhs = difference(closure(tau, complement(closure(tau, interior(tau, f)))), complement(cl_f));
  return is_subset(lhs, rhs);
}

struct HierarchyEntry {
  bool included = false;
  /// Canonically-first set in the row class but not the column class.
  std::optional<SoftSet> witness;
};

/// Pairwise inclusions among the five open-class families of one space,
/// indexed in kOpenClasses order.
struct HierarchyReport {
  std::array<std::array<HierarchyEntry, 5>, 5> entries;
  std::array<std::size_t, 5> family_sizes{};

  const HierarchyEntry& at(SetClass from, SetClass to) const { return entries[index_of(from)][index_of(to)]; }

  static std::size_t index_of(SetClass c) {
    for (std::size_t i = 0; i < kOpenClasses.size(); ++i) {
      if (kOpenClasses[i] == c) return i;
    }
    throw InvalidArgument("not an open class: " + std::string(to_string(c)));
  }
};

inline HierarchyReport hierarchy_report(const SoftTopology& tau) {
  tau.context().require_enumerable("hierarchy report");
  HierarchyReport out;
  std::array<std::vector<Mask>, 5> families;
  for (std::size_t i = 0; i < 5; ++i) {
    families[i] = class_masks(tau, kOpenClasses[i]);
    out.family_sizes[i] = families[i].size();
  }
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      auto& entry = out.entries[a][b];
      entry.included = true;
      for (Mask m : families[a]) {
        if (!detail::contains_sorted(families[b], m)) {
          entry.included = false;
          entry.witness = SoftSet(tau.context_ref(), m);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace softtop
