#pragma once

// The golden corpus run by `softtop verify-paper`: the worked examples as
// exact checks, and the theorem suites as exhaustive scans over seeded random
// spaces.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "softtop/embedded_spaces.hpp"
#include "softtop/homeo_groups.hpp"
#include "softtop/search.hpp"
#include "softtop/space_file.hpp"

namespace softtop::corpus {

inline constexpr std::uint64_t kCorpusSeed = 1729;
inline constexpr std::size_t kRandomSpaceCount = 500;
inline constexpr std::size_t kMapInstanceCount = 200;
inline constexpr std::size_t kGroupSpaceCount = 120;

struct ItemResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

/// Collects the first few failures of a check run.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }

  bool ok() const noexcept { return failed_ == 0; }
  std::size_t checks() const noexcept { return checks_; }

  std::string detail() const {
    if (ok()) return std::to_string(checks_) + " checks";
    std::string out = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed";
    for (const auto& f : failures_) out += "; " + f;
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

inline SpaceFile load(std::string_view text) { return parse_space_file(text); }

inline SoftTopology topology_of(const SpaceFile& file) {
  auto check = build_topology(file);
  if (!check) throw ValidationError("corpus space is not a topology: " + describe(*check.violation));
  return std::move(*check.family);
}

inline SoftTopology topology_of(std::string_view text) { return topology_of(load(text)); }

inline std::vector<SoftTopology> golden_spaces() {
  std::vector<SoftTopology> out;
  for (const auto& s : kEmbeddedSpaces) {
    if (s.file == "ex38.space") continue;  // same space as ex36
    out.push_back(topology_of(s.text));
  }
  return out;
}

/// Deterministic spaces cycling through sizes 1..max_universe x 1..max_params
/// and densities 0.2..0.8.
inline std::vector<SoftTopology> random_spaces(std::size_t count, std::uint64_t seed, std::size_t max_universe,
                                               std::size_t max_params) {
  static constexpr double kDensities[] = {0.2, 0.4, 0.6, 0.8};
  std::vector<SoftTopology> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SearchSpec spec;
    spec.universe_size = 1 + i % max_universe;
    spec.param_count = 1 + (i / max_universe) % max_params;
    spec.seed = seed + i;
    spec.density = kDensities[(i / (max_universe * max_params)) % 4];
    out.push_back(random_space(spec));
  }
  return out;
}

/// Shipped spaces plus the seeded random corpus with |X| <= 3, |E| <= 2.
inline std::vector<SoftTopology> theorem_corpus() {
  auto out = golden_spaces();
  for (auto& t : random_spaces(kRandomSpaceCount, kCorpusSeed, 3, 2)) out.push_back(std::move(t));
  return out;
}

inline std::vector<SoftTopology> group_corpus() {
  auto out = golden_spaces();
  for (auto& t : random_spaces(kGroupSpaceCount, kCorpusSeed + 100000, 4, 2)) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Golden examples

inline bool has(const SoftTopology& tau, const SoftSet& f, SetClass c) { return in_class(tau, f, c); }

inline void ex33_checks(Checker& c) {
  const SpaceFile file = load(kEx33);
  const auto check = build_topology(file);
  c.expect(bool(check), "the seven-member family is a topology");
  if (!check) return;
  const SoftTopology& tau = *check.family;
  c.expect(tau.size() == 9, "topology has 9 members");
  const SoftSet& h = file.set("H");
  c.expect(has(tau, h, SetClass::pre_open), "H is pre-open");
  c.expect(!has(tau, h, SetClass::alpha_open), "H is not alpha-open");
  c.expect(has(tau, h, SetClass::beta_open), "H is beta-open");
  c.expect(!has(tau, h, SetClass::semi_open), "H is not semi-open");
}

inline void ex36_checks(Checker& c) {
  const SpaceFile file = load(kEx36);
  const SoftTopology tau = topology_of(file);
  const SoftSet& g = file.set("G");
  const SoftSet& h = file.set("H");
  const SoftSet k = intersect(g, h);
  c.expect(has(tau, g, SetClass::beta_open), "G is beta-open");
  c.expect(has(tau, h, SetClass::beta_open), "H is beta-open");
  c.expect(k == SoftSet::from_labels(file.ctx, {{"x2"}, {}}), "G & H = ({x2},{})");
  c.expect(!has(tau, k, SetClass::beta_open), "K is not beta-open");
  c.expect(closure(tau, interior(tau, closure(tau, k))) == null_set(file.ctx), "cl(int(cl K)) is null");
}

inline void ex38_checks(Checker& c) {
  const SpaceFile file = load(kEx38);
  const SoftTopology tau = topology_of(file);
  const SoftSet& g = file.set("G");
  const SoftSet& h = file.set("H");
  const SoftSet k = unite(g, h);
  c.expect(has(tau, g, SetClass::beta_closed), "G is beta-closed");
  c.expect(has(tau, h, SetClass::beta_closed), "H is beta-closed");
  c.expect(k == SoftSet::from_labels(file.ctx, {{"x1"}, {"x1", "x2"}}), "G | H = ({x1},{x1,x2})");
  c.expect(!has(tau, k, SetClass::beta_closed), "K is not beta-closed");
  c.expect(interior(tau, closure(tau, interior(tau, k))) == absolute_set(file.ctx), "int(cl(int K)) is absolute");
  c.expect(!check_beta_closed_characterization(tau, k), "characterization rejects K");
}

inline void ex43_checks(Checker& c) {
  const SoftTopology tx = topology_of(kEx43_X);
  const SoftTopology ty = topology_of(kEx43_Y);
  const SoftMapping f(tx.context_ref(), ty.context_ref(), {1, 0, 2});
  c.expect(tx.size() == 2 && ty.size() == 64, "indiscrete domain, discrete codomain");
  c.expect(has_continuity(f, tx, ty, ContinuityClass::beta_continuous), "swap is beta-continuous");
  c.expect(!has_continuity(f, tx, ty, ContinuityClass::semi_continuous), "swap is not semi-continuous");
}

inline void ex44_checks(Checker& c) {
  const SpaceFile fx = load(kEx44_X);
  const SpaceFile fy = load(kEx44_Y);
  const SoftTopology tx = topology_of(fx);
  const SoftTopology ty = topology_of(fy);
  const SoftMapping f(tx.context_ref(), ty.context_ref(), {0, 2, 1});
  c.expect(preimage(f, fy.set("G2")) == SoftSet::from_labels(fx.ctx, {{"x1", "x3"}, {"x1", "x3"}}),
           "f^-1(G2) = ({x1,x3},{x1,x3})");
  c.expect(has_continuity(f, tx, ty, ContinuityClass::beta_continuous), "f is beta-continuous");
  c.expect(!has_continuity(f, tx, ty, ContinuityClass::pre_continuous), "f is not pre-continuous");
}

inline void ex47_checks(Checker& c) {
  const SoftTopology tx = topology_of(kEx47_X);
  const SoftTopology ty = topology_of(kEx47_Y);
  const SpaceFile fz = load(kEx47_Z);
  const SoftTopology tz = topology_of(fz);
  const SoftMapping inclusion(tx.context_ref(), ty.context_ref(), {0, 1, 2});
  const SoftMapping f(ty.context_ref(), tz.context_ref(), {0, 1, 2, 1});
  const SoftMapping fi = compose(inclusion, f);
  c.expect(has_continuity(inclusion, tx, ty, ContinuityClass::beta_continuous), "I is beta-continuous");
  c.expect(has_continuity(f, ty, tz, ContinuityClass::beta_continuous), "f is beta-continuous");
  c.expect(preimage(fi, fz.set("H1")) == SoftSet::from_labels(tx.context_ref(), {{"x3"}, {"x3"}}),
           "(f o I)^-1(H1) = ({x3},{x3})");
  c.expect(!has_continuity(fi, tx, tz, ContinuityClass::beta_continuous), "f o I is not beta-continuous");
}

// ---------------------------------------------------------------------------
// Theorem suites

/// Implications between open classes that every space must satisfy.
inline constexpr std::pair<SetClass, SetClass> kHierarchyImplications[] = {
    {SetClass::open, SetClass::alpha_open},     {SetClass::alpha_open, SetClass::semi_open},
    {SetClass::alpha_open, SetClass::pre_open}, {SetClass::semi_open, SetClass::beta_open},
    {SetClass::pre_open, SetClass::beta_open},  {SetClass::alpha_open, SetClass::beta_open},
};

inline std::string where(const SoftTopology& tau, Mask m) { return to_string(SoftSet(tau.context_ref(), m)); }

template <class Body>
inline void for_each_set(const SoftTopology& tau, Body&& body) {
  const Mask end = Mask{1} << tau.context().cells();
  for (Mask m = 0; m < end; ++m) body(m);
}

inline void hierarchy_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  for (const auto& tau : spaces) {
    for_each_set(tau, [&](Mask m) {
      for (const auto& [from, to] : kHierarchyImplications) {
        if (in_class(tau, m, from)) {
          c.expect(in_class(tau, m, to), std::string(to_string(from)) + " => " + std::string(to_string(to)) +
                                             " fails at " + where(tau, m));
        }
      }
    });
    const HierarchyReport report = hierarchy_report(tau);
    for (const auto& [from, to] : kHierarchyImplications) {
      c.expect(report.at(from, to).included, "hierarchy report disagrees on " + std::string(to_string(from)));
    }
  }
}

inline void supratopology_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  for (const auto& tau : spaces) {
    const auto family = enumerate_class(tau, SetClass::beta_open);
    const auto check = validate_supratopology(tau.context_ref(), family);
    c.expect(bool(check) && check.notices.empty(), "beta-open family is not a supratopology");
    c.expect(!find_nonclosed_pair(tau, SetClass::beta_open, FamilyOp::union_op), "beta-open union escapes");
  }
}

inline void beta_closed_intersection_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  for (const auto& tau : spaces) {
    c.expect(!find_nonclosed_pair(tau, SetClass::beta_closed, FamilyOp::intersection_op),
             "beta-closed intersection escapes");
    const Mask full = tau.context().full_mask();
    for_each_set(tau, [&](Mask m) {
      for (SetClass cls : kOpenClasses) {
        c.expect(in_class(tau, m, cls) == in_class(tau, ~m & full, dual(cls)),
                 "complement duality fails for " + std::string(to_string(cls)) + " at " + where(tau, m));
      }
    });
  }
}

inline void semi_closed_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  for (const auto& tau : spaces) {
    for_each_set(tau, [&](Mask m) {
      if (in_class(tau, m, SetClass::beta_open) && in_class(tau, m, SetClass::semi_closed)) {
        c.expect(in_class(tau, m, SetClass::semi_open), "beta-open & semi-closed not semi-open at " + where(tau, m));
      }
      if (in_class(tau, m, SetClass::beta_closed) && in_class(tau, m, SetClass::semi_open)) {
        c.expect(in_class(tau, m, SetClass::semi_closed), "beta-closed & semi-open not semi-closed at " + where(tau, m));
      }
    });
  }
}

inline void indiscrete_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  std::vector<SoftTopology> indiscretes;
  for (std::size_t x = 1; x <= 4; ++x) {
    for (std::size_t e = 1; x * e <= kEnumerationCap; ++e) indiscretes.push_back(indiscrete(SoftContext::numbered(x, e)));
  }
  for (const auto& tau : spaces) {
    if (tau.size() == 2) indiscretes.push_back(tau);
  }
  for (const auto& tau : indiscretes) {
    for_each_set(tau, [&](Mask m) {
      if (in_class(tau, m, SetClass::beta_open)) {
        c.expect(in_class(tau, m, SetClass::pre_open), "indiscrete beta-open not pre-open at " + where(tau, m));
      }
    });
  }
}

inline void characterization_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  for (const auto& tau : spaces) {
    for_each_set(tau, [&](Mask m) {
      const SoftSet f(tau.context_ref(), m);
      c.expect(check_beta_closed_characterization(tau, f) == in_class(tau, m, SetClass::beta_closed),
               "characterization disagrees at " + where(tau, m));
    });
  }
}

inline void closed_open_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  for (const auto& tau : spaces) {
    for_each_set(tau, [&](Mask m) {
      if (in_class(tau, m, SetClass::beta_open) && in_class(tau, m, SetClass::alpha_closed)) {
        c.expect(tau.is_closed(m), "beta-open & alpha-closed not closed at " + where(tau, m));
        c.expect(tau.closure(tau.interior(tau.closure(m))) == m, "F != cl(int(cl F)) at " + where(tau, m));
      }
      if (in_class(tau, m, SetClass::beta_closed) && in_class(tau, m, SetClass::alpha_open)) {
        c.expect(tau.is_open(m), "beta-closed & alpha-open not open at " + where(tau, m));
      }
    });
  }
}

struct MapInstance {
  SoftTopology domain;
  SoftTopology codomain;
  SoftMapping map;
};

/// Seeded (space, space, map) triples with |X|, |Y| <= 3 and |E| <= 2.
inline std::vector<MapInstance> map_instances(std::size_t count, std::uint64_t seed) {
  static constexpr double kDensities[] = {0.3, 0.5, 0.7};
  std::vector<MapInstance> out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    SearchSpec sx;
    sx.universe_size = 1 + rng() % 3;
    sx.param_count = 1 + rng() % 2;
    sx.seed = rng();
    sx.density = kDensities[rng() % 3];
    SearchSpec sy = sx;
    sy.universe_size = 1 + rng() % 3;
    sy.seed = rng();
    sy.density = kDensities[rng() % 3];
    SoftTopology tx = random_space(sx);
    SoftTopology ty = random_space(sy);
    std::vector<std::size_t> pts(sx.universe_size);
    for (auto& p : pts) p = rng() % sy.universe_size;
    SoftMapping f(tx.context_ref(), ty.context_ref(), std::move(pts));
    out.push_back({std::move(tx), std::move(ty), std::move(f)});
  }
  return out;
}

inline void beta_continuity_equivalence_checks(Checker& c, const std::vector<MapInstance>& instances,
                                               std::size_t* continuous_count = nullptr) {
  std::size_t positives = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const bool reference =
        beta_continuity_criterion(inst.map, inst.domain, inst.codomain, BetaContinuityCriterion::preimage_of_open);
    positives += reference ? 1 : 0;
    for (auto which : kAllBetaCriteria) {
      c.expect(beta_continuity_criterion(inst.map, inst.domain, inst.codomain, which) == reference,
               "instance " + std::to_string(i) + ": criterion (" + std::string(to_string(which)) + ") disagrees");
    }
    const ContinuitySet tags = classify_map(inst.map, inst.domain, inst.codomain);
    const auto implies = [&](ContinuityClass a, ContinuityClass b) {
      c.expect(!tags.contains(a) || tags.contains(b), "instance " + std::to_string(i) + ": " +
                                                          std::string(to_string(a)) + " without " +
                                                          std::string(to_string(b)));
    };
    implies(ContinuityClass::continuous, ContinuityClass::alpha_continuous);
    implies(ContinuityClass::alpha_continuous, ContinuityClass::semi_continuous);
    implies(ContinuityClass::alpha_continuous, ContinuityClass::pre_continuous);
    implies(ContinuityClass::semi_continuous, ContinuityClass::beta_continuous);
    implies(ContinuityClass::pre_continuous, ContinuityClass::beta_continuous);
    implies(ContinuityClass::beta_irresolute, ContinuityClass::beta_continuous);
  }
  if (continuous_count) *continuous_count = positives;
}

inline bool same_elements(const std::vector<Permutation>& small, const std::vector<Permutation>& big) {
  for (const auto& p : small) {
    if (std::find(big.begin(), big.end(), p) == big.end()) return false;
  }
  return true;
}

inline void group_checks_for(Checker& c, const SoftTopology& tau, std::mt19937_64& rng) {
  const auto tag = [&](const std::string& what) { return what + " on " + serialize_space(tau); };
  const HomeoCollection sh = build_collection(tau, HomeoKind::soft_homeo);
  const HomeoCollection sbr = build_collection(tau, HomeoKind::beta_irresolute_homeo);
  const HomeoCollection sb = build_collection(tau, HomeoKind::beta_homeo);
  c.expect(same_elements(sh.elements, sbr.elements), tag("S-h not inside Sbr-h"));
  c.expect(same_elements(sbr.elements, sb.elements), tag("Sbr-h not inside Sb-h"));

  const GroupBuild gbr = build_group(sbr);
  const GroupBuild gh = build_group(sh);
  c.expect(bool(gbr), tag("Sbr-h is not a group"));
  c.expect(bool(gh), tag("S-h is not a group"));
  if (!gbr || !gh) return;
  const GroupTable& g = *gbr.table;
  c.expect(verify_group_axioms(g).all(), tag("Sbr-h axioms"));
  c.expect(bool(is_subgroup(*gh.table, g)), tag("S-h is not a subgroup of Sbr-h"));

  for (const auto& p : sh.elements) {
    const SoftMapping f = as_self_map(tau, p);
    for_each_set(tau, [&](Mask m) {
      c.expect(f.preimage(tau.closure(tau.interior(tau.closure(m)))) ==
                   tau.closure(tau.interior(tau.closure(f.preimage(m)))),
               tag("homeomorphism does not commute with cl int cl"));
    });
  }

  const SoftMapping id = SoftMapping::identity(tau.context_ref());
  const ConjugationCheck id_star = conjugation_iso(id, g, g);
  bool identity_map = id_star.is_isomorphism();
  for (std::size_t i = 0; i < id_star.mapping.size(); ++i) identity_map = identity_map && id_star.mapping[i] == i;
  c.expect(identity_map, tag("(1_X)* is not the identity"));

  for (const auto& p : g.elements) {
    c.expect(conjugation_iso(as_self_map(tau, p), g, g).is_isomorphism(), tag("conjugation is not an isomorphism"));
  }
  for (const auto& p : g.elements) {
    for (const auto& q : g.elements) {
      c.expect(conjugation_functorial(as_self_map(tau, p), as_self_map(tau, q), g), tag("(g o f)* != g* o f*"));
    }
  }

  // Transport tau along a random bijection to get an isomorphic space Y; the
  // bijection is then a homeomorphism X -> Y and conjugates Sbr-h(X) onto Sbr-h(Y).
  Permutation pi = identity_permutation(tau.context().universe_size());
  std::shuffle(pi.begin(), pi.end(), rng);
  const ContextRef ctx_y = SoftContext::make(tau.context().universe(), tau.context().params());
  const SoftMapping to_y(tau.context_ref(), ctx_y, pi);
  std::vector<Mask> moved;
  for (Mask m : tau.open_masks()) moved.push_back(to_y.image(m));
  const SoftTopology ty = SoftTopology::trusted(ctx_y, moved);
  const HomeoTester cross(tau, ty);
  c.expect(cross.is_homeo(to_y, HomeoKind::soft_homeo), tag("transport map is not a homeomorphism"));
  c.expect(cross.is_homeo(to_y, HomeoKind::beta_irresolute_homeo), tag("homeomorphism X->Y is not beta-irresolute"));
  c.expect(cross.is_homeo(to_y, HomeoKind::beta_homeo), tag("homeomorphism X->Y is not a beta-homeomorphism"));
  const GroupBuild gy = build_group(build_collection(ty, HomeoKind::beta_irresolute_homeo));
  c.expect(bool(gy), tag("Sbr-h(Y) is not a group"));
  if (gy) c.expect(conjugation_iso(to_y, g, *gy.table).is_isomorphism(), tag("f* : Sbr-h(X) -> Sbr-h(Y)"));
}

inline void group_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  std::mt19937_64 rng(kCorpusSeed);
  for (const auto& tau : spaces) {
    if (tau.context().universe_size() > 4) continue;
    group_checks_for(c, tau, rng);
  }
  const auto g = build_group(build_collection(topology_of(kIndiscrete3), HomeoKind::beta_irresolute_homeo));
  c.expect(g && g.table->order() == 6, "indiscrete three-point Sbr-h has order 6");
}

/// Class membership straight from the inequalities, using only member-scan
/// interior and closure.
inline bool naive_in_class(const SoftTopology& tau, const SoftSet& f, SetClass cls) {
  const auto in = [&](const SoftSet& s) { return interior_by_scan(tau, s); };
  const auto cl = [&](const SoftSet& s) { return closure_by_scan(tau, s); };
  switch (cls) {
    case SetClass::open: return in(f) == f;
    case SetClass::closed: return cl(f) == f;
    case SetClass::semi_open: return is_subset(f, cl(in(f)));
    case SetClass::semi_closed: return is_subset(in(cl(f)), f);
    case SetClass::pre_open: return is_subset(f, in(cl(f)));
    case SetClass::pre_closed: return is_subset(cl(in(f)), f);
    case SetClass::alpha_open: return is_subset(f, in(cl(in(f))));
    case SetClass::alpha_closed: return is_subset(cl(in(cl(f))), f);
    case SetClass::beta_open: return is_subset(f, cl(in(cl(f))));
    case SetClass::beta_closed: return is_subset(in(cl(in(f))), f);
  }
  return false;
}

inline void operator_oracle_checks(Checker& c, const std::vector<SoftTopology>& spaces) {
  for (const auto& tau : spaces) {
    const ContextRef& ctx = tau.context_ref();
    for (const SoftSet& f : enumerate_all_soft_sets(ctx)) {
      const SoftSet in_scan = interior_by_scan(tau, f);
      const SoftSet cl_scan = closure_by_scan(tau, f);
      c.expect(in_scan == complement(closure_by_scan(tau, complement(f))), "interior duality at " + to_string(f));
      c.expect(cl_scan == complement(interior_by_scan(tau, complement(f))), "closure duality at " + to_string(f));
      c.expect(in_scan == interior(tau, f), "interior table at " + to_string(f));
      c.expect(cl_scan == closure(tau, f), "closure table at " + to_string(f));
    }
    for (SetClass cls : kAllSetClasses) {
      std::vector<SoftSet> naive;
      for (const SoftSet& f : enumerate_all_soft_sets(ctx)) {
        if (naive_in_class(tau, f, cls)) naive.push_back(f);
      }
      c.expect(enumerate_class(tau, cls) == naive, "enumerate_class disagrees for " + std::string(to_string(cls)));
    }
  }
}

// ---------------------------------------------------------------------------

struct Item {
  std::string id;
  std::string description;
  std::function<void(Checker&)> run;
};

/// Runs one item, converting exceptions into failures.
inline ItemResult run_item(const Item& item) {
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  try {
    item.run(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const auto stop = std::chrono::steady_clock::now();
  return {item.id, item.description, c.ok(), c.detail(), std::chrono::duration<double, std::milli>(stop - start).count()};
}

inline std::vector<Item> items() {
  // Shared lazily so the random corpus is generated once per run.
  auto corpus = std::make_shared<std::vector<SoftTopology>>();
  auto spaces = [corpus]() -> const std::vector<SoftTopology>& {
    if (corpus->empty()) *corpus = theorem_corpus();
    return *corpus;
  };
  return {
      {"ex33-pre-not-alpha", "pre-open not alpha-open, beta-open not semi-open", ex33_checks},
      {"ex36-beta-open-intersection", "intersection of beta-open sets is not beta-open", ex36_checks},
      {"ex38-beta-closed-union", "union of beta-closed sets is not beta-closed", ex38_checks},
      {"ex43-beta-not-semi-continuous", "indiscrete to discrete swap", ex43_checks},
      {"ex44-beta-not-pre-continuous", "preimage of G2 is not pre-open", ex44_checks},
      {"ex47-composition", "composition of beta-continuous maps", ex47_checks},
      {"hierarchy", "open => alpha => semi/pre => beta on every set",
       [spaces](Checker& c) { hierarchy_checks(c, spaces()); }},
      {"beta-open-supratopology", "beta-open sets form a supratopology",
       [spaces](Checker& c) { supratopology_checks(c, spaces()); }},
      {"beta-closed-intersections", "beta-closed sets closed under intersection; complement duality",
       [spaces](Checker& c) { beta_closed_intersection_checks(c, spaces()); }},
      {"semi-closed-beta-open", "beta-open & semi-closed => semi-open, and dual",
       [spaces](Checker& c) { semi_closed_checks(c, spaces()); }},
      {"indiscrete-beta-is-pre", "indiscrete spaces: beta-open => pre-open",
       [spaces](Checker& c) { indiscrete_checks(c, spaces()); }},
      {"beta-closed-characterization", "difference criterion <=> beta-closed",
       [spaces](Checker& c) { characterization_checks(c, spaces()); }},
      {"beta-open-alpha-closed", "beta-open & alpha-closed => closed, and dual",
       [spaces](Checker& c) { closed_open_checks(c, spaces()); }},
      {"beta-continuity-criteria", "five beta-continuity criteria agree on random maps",
       [](Checker& c) { beta_continuity_equivalence_checks(c, map_instances(kMapInstanceCount, kCorpusSeed)); }},
      {"homeomorphism-groups", "Sbr-h group, S-h subgroup, inclusions, conjugation isomorphisms",
       [](Checker& c) { group_checks(c, group_corpus()); }},
      {"operator-oracles", "scan vs duality interior/closure; enumerate_class vs naive scan",
       [spaces](Checker& c) { operator_oracle_checks(c, spaces()); }},
  };
}

inline std::vector<ItemResult> run_all() {
  std::vector<ItemResult> out;
  for (const auto& item : items()) out.push_back(run_item(item));
  return out;
}

}  // namespace softtop::corpus
