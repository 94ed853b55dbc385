#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "softtop/error.hpp"

namespace softtop {

/// Largest number of grid cells (|X| * |E|) a soft set can hold.
inline constexpr std::size_t kMaxCells = 64;
/// Largest grid for which the 2^cells soft sets may be enumerated.
inline constexpr std::size_t kEnumerationCap = 16;

using Mask = std::uint64_t;

/// The finite universe X and parameter list E shared by every soft set built on it.
class SoftContext {
 public:
  SoftContext(std::vector<std::string> universe, std::vector<std::string> params)
      : universe_(std::move(universe)), params_(std::move(params)) {
    check_labels(universe_, "universe");
    check_labels(params_, "params");
    if (universe_.size() * params_.size() > kMaxCells) {
      throw CapExceeded("soft context has " + std::to_string(universe_.size() * params_.size()) +
                        " cells; at most " + std::to_string(kMaxCells) + " are supported");
    }
  }

  static std::shared_ptr<const SoftContext> make(std::vector<std::string> universe,
                                                 std::vector<std::string> params) {
    return std::make_shared<const SoftContext>(std::move(universe), std::move(params));
  }

  /// Context over x1..xn and e1..em.
  static std::shared_ptr<const SoftContext> numbered(std::size_t universe_size, std::size_t param_count) {
    std::vector<std::string> xs;
    std::vector<std::string> es;
    for (std::size_t i = 1; i <= universe_size; ++i) xs.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= param_count; ++i) es.push_back("e" + std::to_string(i));
    return make(std::move(xs), std::move(es));
  }

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<std::string>& params() const noexcept { return params_; }
  std::size_t universe_size() const noexcept { return universe_.size(); }
  std::size_t param_count() const noexcept { return params_.size(); }
  std::size_t cells() const noexcept { return universe_.size() * params_.size(); }

  /// Cell of element x at parameter e; the grid is parameter-major.
  std::size_t cell(std::size_t element, std::size_t param) const noexcept {
    return param * universe_.size() + element;
  }

  Mask full_mask() const noexcept {
    return cells() == 64 ? ~Mask{0} : (Mask{1} << cells()) - 1;
  }

  /// Mask of all cells belonging to parameter e.
  Mask param_mask(std::size_t param) const noexcept {
    const Mask row = universe_.size() == 64 ? ~Mask{0} : (Mask{1} << universe_.size()) - 1;
    return row << (param * universe_.size());
  }

  bool enumerable() const noexcept { return cells() <= kEnumerationCap; }

  void require_enumerable(std::string_view what) const {
    if (!enumerable()) {
      throw CapExceeded(std::string(what) + " needs exhaustive enumeration, but the context has " +
                        std::to_string(cells()) + " cells (cap " + std::to_string(kEnumerationCap) + ")");
    }
  }

  std::size_t element_index(std::string_view label) const { return index_in(universe_, label, "element"); }
  std::size_t param_index(std::string_view label) const { return index_in(params_, label, "parameter"); }

  friend bool operator==(const SoftContext& a, const SoftContext& b) {
    return a.universe_ == b.universe_ && a.params_ == b.params_;
  }

 private:
  static void check_labels(const std::vector<std::string>& labels, const char* what) {
    if (labels.empty()) throw InvalidArgument(std::string(what) + " must not be empty");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw InvalidArgument(std::string(what) + " contains an empty label");
      if (!seen.insert(l).second) throw InvalidArgument(std::string(what) + " label '" + l + "' is repeated");
    }
  }

  static std::size_t index_in(const std::vector<std::string>& labels, std::string_view label, const char* what) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InvalidArgument(std::string("unknown ") + what + " '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels.begin());
  }

  std::vector<std::string> universe_;
  std::vector<std::string> params_;
};

using ContextRef = std::shared_ptr<const SoftContext>;

inline bool same_context(const ContextRef& a, const ContextRef& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextRef& a, const ContextRef& b) {
  if (!same_context(a, b)) throw ContextMismatch("soft sets belong to different contexts");
}

/// A soft set (F,E): one subset of the universe per parameter, stored as a cell grid.
class SoftSet {
 public:
  SoftSet(ContextRef ctx, Mask bits) : ctx_(std::move(ctx)), bits_(bits) {
    if (!ctx_) throw InvalidArgument("soft set without a context");
    if ((bits_ & ~ctx_->full_mask()) != 0) throw InvalidArgument("soft set has cells outside its context");
  }

  /// Builds from one list of element indices per parameter.
  static SoftSet from_rows(ContextRef ctx, const std::vector<std::vector<std::size_t>>& rows) {
    if (rows.size() != ctx->param_count()) {
      throw InvalidArgument("expected " + std::to_string(ctx->param_count()) + " parameter rows, got " +
                            std::to_string(rows.size()));
    }
    Mask bits = 0;
    for (std::size_t e = 0; e < rows.size(); ++e) {
      for (std::size_t x : rows[e]) {
        if (x >= ctx->universe_size()) throw InvalidArgument("element index out of range");
        bits |= Mask{1} << ctx->cell(x, e);
      }
    }
    return SoftSet(std::move(ctx), bits);
  }

  /// Builds from element labels per parameter, in parameter order.
  static SoftSet from_labels(ContextRef ctx, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<std::size_t>> idx(rows.size());
    for (std::size_t e = 0; e < rows.size(); ++e) {
      for (const auto& l : rows[e]) idx[e].push_back(ctx->element_index(l));
    }
    return from_rows(std::move(ctx), idx);
  }

  const SoftContext& context() const noexcept { return *ctx_; }
  const ContextRef& context_ref() const noexcept { return ctx_; }
  Mask bits() const noexcept { return bits_; }

  bool contains(std::size_t element, std::size_t param) const noexcept {
    return (bits_ >> ctx_->cell(element, param)) & 1U;
  }

  /// F(e) as ascending element indices.
  std::vector<std::size_t> row(std::size_t param) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < ctx_->universe_size(); ++x) {
      if (contains(x, param)) out.push_back(x);
    }
    return out;
  }

  bool empty() const noexcept { return bits_ == 0; }
  std::size_t cell_count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.bits_ == b.bits_ && same_context(a.ctx_, b.ctx_);
  }

  /// Canonical order: integer order of the cell grid.
  friend std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b) { return a.bits_ <=> b.bits_; }

 private:
  ContextRef ctx_;
  Mask bits_;
};

struct SoftPoint {
  std::size_t element;
  std::size_t param;
};

inline SoftSet null_set(const ContextRef& ctx) { return SoftSet(ctx, 0); }
inline SoftSet absolute_set(const ContextRef& ctx) { return SoftSet(ctx, ctx->full_mask()); }

inline SoftSet unite(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.context_ref(), g.context_ref());
  return SoftSet(f.context_ref(), f.bits() | g.bits());
}

inline SoftSet intersect(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.context_ref(), g.context_ref());
  return SoftSet(f.context_ref(), f.bits() & g.bits());
}

/// Relative complement: F'(e) = X - F(e).
inline SoftSet complement(const SoftSet& f) {
  return SoftSet(f.context_ref(), ~f.bits() & f.context().full_mask());
}

inline SoftSet difference(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.context_ref(), g.context_ref());
  return SoftSet(f.context_ref(), f.bits() & ~g.bits());
}

inline bool is_subset(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.context_ref(), g.context_ref());
  return (f.bits() & ~g.bits()) == 0;
}

inline SoftSet operator|(const SoftSet& f, const SoftSet& g) { return unite(f, g); }
inline SoftSet operator&(const SoftSet& f, const SoftSet& g) { return intersect(f, g); }
inline SoftSet operator-(const SoftSet& f, const SoftSet& g) { return difference(f, g); }
inline SoftSet operator~(const SoftSet& f) { return complement(f); }

inline void check_point(const SoftContext& ctx, SoftPoint p) {
  if (p.element >= ctx.universe_size() || p.param >= ctx.param_count()) {
    throw InvalidArgument("soft point index out of range");
  }
}

/// The soft point x_e: {x} at e and empty elsewhere.
inline SoftSet soft_point(const ContextRef& ctx, SoftPoint p) {
  check_point(*ctx, p);
  return SoftSet(ctx, Mask{1} << ctx->cell(p.element, p.param));
}

/// x belongs to (F,E) when x is in F(e) for every parameter e.
inline bool point_belongs(std::size_t element, const SoftSet& f) {
  if (element >= f.context().universe_size()) throw InvalidArgument("element index out of range");
  for (std::size_t e = 0; e < f.context().param_count(); ++e) {
    if (!f.contains(element, e)) return false;
  }
  return true;
}

/// Containment of a soft point: x is in F(e) at the point's own parameter.
inline bool soft_point_in(SoftPoint p, const SoftSet& f) {
  check_point(f.context(), p);
  return f.contains(p.element, p.param);
}

/// Every soft set over an enumerable context, in canonical order.
class SoftSetRange {
 public:
  class iterator {
   public:
    using value_type = SoftSet;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const ContextRef* ctx, std::uint64_t at) : ctx_(ctx), at_(at) {}

    SoftSet operator*() const { return SoftSet(*ctx_, at_); }
    iterator& operator++() {
      ++at_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++at_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.at_ == b.at_; }

   private:
    const ContextRef* ctx_ = nullptr;
    std::uint64_t at_ = 0;
  };

  explicit SoftSetRange(ContextRef ctx) : ctx_(std::move(ctx)) { ctx_->require_enumerable("soft set enumeration"); }

  iterator begin() const { return iterator(&ctx_, 0); }
  iterator end() const { return iterator(&ctx_, std::uint64_t{1} << ctx_->cells()); }
  std::uint64_t size() const { return std::uint64_t{1} << ctx_->cells(); }

 private:
  ContextRef ctx_;
};

inline SoftSetRange enumerate_all_soft_sets(const ContextRef& ctx) { return SoftSetRange(ctx); }

/// Rendering in parameter order, e.g. ({x1,x2},{}).
inline std::string to_string(const SoftSet& f) {
  const auto& ctx = f.context();
  std::string out = "(";
  for (std::size_t e = 0; e < ctx.param_count(); ++e) {
    if (e) out += ',';
    out += '{';
    bool first = true;
    for (std::size_t x = 0; x < ctx.universe_size(); ++x) {
      if (!f.contains(x, e)) continue;
      if (!first) out += ',';
      out += ctx.universe()[x];
      first = false;
    }
    out += '}';
  }
  out += ')';
  return out;
}

}  // namespace softtop
