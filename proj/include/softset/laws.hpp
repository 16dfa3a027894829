#ifndef SOFTSET_LAWS_HPP
#define SOFTSET_LAWS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "central_soft_set.hpp"
#include "context.hpp"
#include "enumerate.hpp"
#include "workspace.hpp"

namespace softset::laws {

/// How to drive a law check: visit every instance over the context, or
/// draw a fixed number of seeded random instances.
struct Mode {
  static Mode exhaustive() { return Mode{}; }
  static Mode sampled(std::uint64_t samples, std::uint64_t seed) {
    Mode m;
    m.sampled_mode = true;
    m.samples = samples;
    m.seed = seed;
    return m;
  }

  bool sampled_mode = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Outcome of one law over one context. Counterexamples are complete
/// workspace documents (operands as named sets, plus a system holding
/// the failing target where one applies), so a failure can be replayed
/// through the CLI.
struct LawReport {
  std::string law;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return counterexamples.empty(); }
};

inline constexpr std::array<std::string_view, 11> all_law_ids = {
    "demorgan",   "assoc",       "distrib",     "diff_chain",
    "diff_shrink", "order_partial", "order_equiv", "family_lub",
    "inf_distrib", "proj_union",  "proj_inter",
};

inline bool is_law(std::string_view id) {
  return std::find(all_law_ids.begin(), all_law_ids.end(), id) != all_law_ids.end();
}

/// Enumeration-backed least upper bound: the leq-least element among
/// all central soft sets that dominate every family member. Returns
/// nullopt when the upper bounds have no least element (which would
/// falsify the join law).
inline std::optional<CentralSoftSet> lub_oracle(
    const ContextPtr& ctx, std::span<const CentralSoftSet> family,
    std::uint64_t bound = default_enumeration_bound) {
  const auto all = enumerate_css(ctx, bound);
  std::vector<const CentralSoftSet*> upper;
  for (const auto& candidate : all) {
    bool dominates = true;
    for (const auto& m : family)
      if (!leq(m, candidate)) {
        dominates = false;
        break;
      }
    if (dominates) upper.push_back(&candidate);
  }
  if (upper.empty())
    raise(Errc::no_upper_bound, "family has no upper bound");  // the full map always qualifies
  for (const auto* u : upper) {
    bool least = true;
    for (const auto* v : upper)
      if (!leq(*u, *v)) {
        least = false;
        break;
      }
    if (least) return *u;
  }
  return std::nullopt;
}

namespace detail {

inline bool demorgan_holds(const CentralSoftSet& a, const CentralSoftSet& b) {
  return complement(intersect(a, b)) == unite(complement(a), complement(b)) &&
         complement(unite(a, b)) == intersect(complement(a), complement(b));
}

inline bool assoc_holds(const CentralSoftSet& a, const CentralSoftSet& b,
                        const CentralSoftSet& c) {
  return unite(a, unite(b, c)) == unite(unite(a, b), c) &&
         intersect(a, intersect(b, c)) == intersect(intersect(a, b), c);
}

inline bool distrib_holds(const CentralSoftSet& a, const CentralSoftSet& b,
                          const CentralSoftSet& c) {
  return intersect(a, unite(b, c)) == unite(intersect(a, b), intersect(a, c)) &&
         unite(a, intersect(b, c)) == intersect(unite(a, b), unite(a, c));
}

inline bool diff_chain_holds(const CentralSoftSet& a, const CentralSoftSet& b,
                             const CentralSoftSet& c) {
  return difference(difference(a, b), c) == difference(a, unite(b, c));
}

inline bool diff_shrink_holds(const CentralSoftSet& a, const CentralSoftSet& b) {
  return leq(difference(a, b), a);
}

inline bool order_partial_holds(const CentralSoftSet& a, const CentralSoftSet& b,
                                const CentralSoftSet& c) {
  if (!leq(a, a)) return false;
  if (leq(a, b) && leq(b, a) && !(a == b)) return false;
  if (leq(a, b) && leq(b, c) && !leq(a, c)) return false;
  return true;
}

inline bool order_equiv_holds(const CentralSoftSet& a, const CentralSoftSet& b) {
  const bool by_order = leq(a, b);
  const bool by_union = unite(a, b) == b;
  const bool by_intersection = intersect(a, b) == a;
  return by_order == by_union && by_union == by_intersection;
}

template <class F>
void for_each_subset(const ParamSet& mask, std::size_t domain, F&& f) {
  const std::uint64_t bits = mask.low_bits();
  for (std::uint64_t s = bits;; s = (s - 1) & bits) {
    f(ParamSet::from_bits(domain, s));
    if (s == 0) break;
  }
}

inline void require_projectable(const ContextPtr& ctx) {
  if (ctx->parameter_count() > 20)
    raise(Errc::enumeration_too_large,
          "projection laws quantify over parameter subsets; parameter list too large");
}

/// Returns a failing target, or nullopt when the law holds on (a, b).
inline std::optional<ParamSet> proj_union_violation(const CentralSoftSet& a,
                                                    const CentralSoftSet& b) {
  const std::size_t n = a.context()->parameter_count();
  const CentralSoftSet u = unite(a, b);
  const ParamSet both = a.central() | b.central();
  std::optional<ParamSet> bad;
  // the projected union is below the union of projections, for every S ⊆ A∪B
  for_each_subset(both, n, [&](const ParamSet& s) {
    if (bad) return;
    const CentralSoftSet lhs = project(u, s);
    const CentralSoftSet rhs = unite(project(a, s & a.central()), project(b, s & b.central()));
    if (!leq(lhs, rhs)) bad = s;
  });
  if (bad) return bad;
  // with equality whenever S = (A∪B) − D for some D ⊆ A∩B
  for_each_subset(a.central() & b.central(), n, [&](const ParamSet& d) {
    if (bad) return;
    const ParamSet s = both - d;
    const CentralSoftSet lhs = project(u, s);
    const CentralSoftSet rhs = unite(project(a, s & a.central()), project(b, s & b.central()));
    if (!(lhs == rhs)) bad = s;
  });
  return bad;
}

inline std::optional<ParamSet> proj_inter_violation(const CentralSoftSet& a,
                                                    const CentralSoftSet& b) {
  const std::size_t n = a.context()->parameter_count();
  const CentralSoftSet i = intersect(a, b);
  std::optional<ParamSet> bad;
  for_each_subset(a.central() & b.central(), n, [&](const ParamSet& s) {
    if (bad) return;
    if (!leq(intersect(project(a, s), project(b, s)), project(i, s))) bad = s;
  });
  return bad;
}

inline bool inf_distrib_holds(const ContextPtr& ctx, const CentralSoftSet& a,
                              std::span<const CentralSoftSet> members) {
  const CentralSoftSet lhs = intersect(a, unite_all(ctx, members));
  std::vector<CentralSoftSet> parts;
  parts.reserve(members.size());
  for (const auto& m : members) parts.push_back(intersect(a, m));
  return lhs == unite_all(ctx, parts);
}

inline bool family_lub_holds(const ContextPtr& ctx, std::span<const CentralSoftSet> members,
                             const std::vector<CentralSoftSet>* all, CssSampler* sampler) {
  const CentralSoftSet h = unite_all(ctx, members);
  for (const auto& m : members)
    if (!leq(m, h)) return false;
  if (members.empty()) {
    if (!(h == CentralSoftSet::bottom(ctx))) return false;
  } else {
    CentralSoftSet fold = members[0];
    for (std::size_t i = 1; i < members.size(); ++i) fold = unite(fold, members[i]);
    if (!(fold == h)) return false;
  }
  if (all != nullptr) {
    // h below every enumerated upper bound; together with the check
    // above this makes h the least one, so lub_oracle must agree.
    for (const auto& candidate : *all) {
      bool dominates = true;
      for (const auto& m : members)
        if (!leq(m, candidate)) {
          dominates = false;
          break;
        }
      if (dominates && !leq(h, candidate)) return false;
    }
  }
  if (sampler != nullptr) {
    // a randomly grown upper bound built from pointwise unions; the
    // join must stay below it
    ParamSet central = h.central() | sampler->next_params();
    std::vector<ObjectSet> map;
    map.reserve(ctx->parameter_count());
    for (std::size_t e = 0; e < ctx->parameter_count(); ++e) {
      ObjectSet v = sampler->next_objects();
      for (const auto& m : members) v = v | m.value(e);
      map.push_back(std::move(v));
    }
    const CentralSoftSet grown(ctx, std::move(central), std::move(map));
    for (const auto& m : members)
      if (!leq(m, grown)) return false;
    if (!leq(h, grown)) return false;
  }
  return true;
}

class Harness {
 public:
  Harness(ContextPtr ctx, const Mode& mode) : ctx_(std::move(ctx)), sampled_(mode.sampled_mode) {
    report_.mode = sampled_ ? "sampled" : "exhaustive";
    report_.seed = mode.seed;
    if (sampled_) {
      samples_ = mode.samples;
      sampler_.emplace(ctx_, mode.seed);
    } else {
      all_ = enumerate_css(ctx_);
    }
  }

  const std::vector<CentralSoftSet>* all() const noexcept {
    return sampled_ ? nullptr : &all_;
  }
  CssSampler* sampler() noexcept { return sampled_ ? &*sampler_ : nullptr; }

  template <class Check>
  void pairs(Check&& check) {
    if (sampled_) {
      for (std::uint64_t k = 0; k < samples_; ++k) {
        const CentralSoftSet a = sampler_->next();
        const CentralSoftSet b = sampler_->next();
        note(check(a, b), {{"a", &a}, {"b", &b}});
      }
    } else {
      for (const auto& a : all_)
        for (const auto& b : all_) note(check(a, b), {{"a", &a}, {"b", &b}});
    }
  }

  template <class Check>
  void triples(Check&& check) {
    if (sampled_) {
      for (std::uint64_t k = 0; k < samples_; ++k) {
        const CentralSoftSet a = sampler_->next();
        const CentralSoftSet b = sampler_->next();
        const CentralSoftSet c = sampler_->next();
        note(check(a, b, c), {{"a", &a}, {"b", &b}, {"c", &c}});
      }
    } else {
      for (const auto& a : all_)
        for (const auto& b : all_)
          for (const auto& c : all_) note(check(a, b, c), {{"a", &a}, {"b", &b}, {"c", &c}});
    }
  }

  /// Check yields a failing projection target, or nullopt on success.
  template <class Check>
  void projection_pairs(Check&& check) {
    auto visit = [&](const CentralSoftSet& a, const CentralSoftSet& b) {
      const std::optional<ParamSet> bad = check(a, b);
      note(!bad.has_value(), {{"a", &a}, {"b", &b}}, bad);
    };
    if (sampled_) {
      for (std::uint64_t k = 0; k < samples_; ++k) {
        const CentralSoftSet a = sampler_->next();
        const CentralSoftSet b = sampler_->next();
        visit(a, b);
      }
    } else {
      for (const auto& a : all_)
        for (const auto& b : all_) visit(a, b);
    }
  }

  /// Families of size 0 through 3 (every sequence once in exhaustive
  /// mode, a random size per draw in sampled mode).
  template <class Check>
  void families(Check&& check) {
    run_families([&](std::span<const CentralSoftSet> members) { return check(members); }, nullptr);
  }

  /// Same, with one extra distinguished operand.
  template <class Check>
  void families_with_lhs(Check&& check) {
    if (sampled_) {
      for (std::uint64_t k = 0; k < samples_; ++k) {
        const CentralSoftSet a = sampler_->next();
        std::vector<CentralSoftSet> members = sample_family();
        note(check(a, members), family_names(members, &a));
      }
    } else {
      for (const auto& a : all_)
        run_families([&](std::span<const CentralSoftSet> members) { return check(a, members); },
                     &a);
    }
  }

  LawReport finish(std::string_view id) && {
    report_.law = std::string(id);
    return std::move(report_);
  }

 private:
  using Named = std::vector<std::pair<std::string, const CentralSoftSet*>>;
  static constexpr std::size_t max_counterexamples = 8;

  std::vector<CentralSoftSet> sample_family() {
    const std::size_t size = static_cast<std::size_t>(sampler_->below(4));
    std::vector<CentralSoftSet> members;
    members.reserve(size);
    for (std::size_t i = 0; i < size; ++i) members.push_back(sampler_->next());
    return members;
  }

  static Named family_names(std::span<const CentralSoftSet> members, const CentralSoftSet* lhs) {
    Named named;
    if (lhs != nullptr) named.emplace_back("a", lhs);
    for (std::size_t i = 0; i < members.size(); ++i)
      named.emplace_back("f" + std::to_string(i + 1), &members[i]);
    return named;
  }

  template <class Visit>
  void run_families(Visit&& visit, const CentralSoftSet* lhs) {
    if (sampled_) {
      for (std::uint64_t k = 0; k < samples_; ++k) {
        std::vector<CentralSoftSet> members = sample_family();
        note(visit(members), family_names(members, lhs));
      }
      return;
    }
    std::vector<CentralSoftSet> members;
    note(visit(members), family_names(members, lhs));
    for (const auto& a : all_) {
      members.push_back(a);
      note(visit(members), family_names(members, lhs));
      for (const auto& b : all_) {
        members.push_back(b);
        note(visit(members), family_names(members, lhs));
        for (const auto& c : all_) {
          members.push_back(c);
          note(visit(members), family_names(members, lhs));
          members.pop_back();
        }
        members.pop_back();
      }
      members.pop_back();
    }
  }

  void note(bool holds, const Named& operands,
            const std::optional<ParamSet>& target = std::nullopt) {
    ++report_.checked;
    if (holds || report_.counterexamples.size() >= max_counterexamples) return;
    io::Workspace ws;
    ws.context = ctx_;
    std::vector<std::string> names;
    std::vector<CentralSoftSet> members;
    for (const auto& [name, set] : operands) {
      ws.sets.emplace(name, *set);
      names.push_back(name);
      members.push_back(*set);
    }
    if (target)
      ws.systems.emplace("instance",
                         io::SystemSpec{names, EvaluationSystem(ctx_, members, *target)});
    report_.counterexamples.push_back(io::serialize_workspace(ws));
  }

  ContextPtr ctx_;
  bool sampled_;
  std::uint64_t samples_ = 0;
  std::vector<CentralSoftSet> all_;
  std::optional<CssSampler> sampler_;
  LawReport report_;
};

}  // namespace detail

/// Runs one registered law over the context. Exhaustive mode visits
/// every instance (EnumerationTooLarge when the context is beyond the
/// enumeration bound); sampled mode is reproducible from the seed,
/// bit for bit.
inline LawReport check_law(std::string_view id, const ContextPtr& ctx, const Mode& mode) {
  if (!is_law(id)) raise(Errc::unknown_law, "no law named '" + std::string(id) + "'");
  detail::Harness h(ctx, mode);
  if (id == "demorgan") {
    h.pairs(detail::demorgan_holds);
  } else if (id == "assoc") {
    h.triples(detail::assoc_holds);
  } else if (id == "distrib") {
    h.triples(detail::distrib_holds);
  } else if (id == "diff_chain") {
    h.triples(detail::diff_chain_holds);
  } else if (id == "diff_shrink") {
    h.pairs(detail::diff_shrink_holds);
  } else if (id == "order_partial") {
    h.triples(detail::order_partial_holds);
  } else if (id == "order_equiv") {
    h.pairs(detail::order_equiv_holds);
  } else if (id == "family_lub") {
    h.families([&](std::span<const CentralSoftSet> members) {
      return detail::family_lub_holds(ctx, members, h.all(), h.sampler());
    });
  } else if (id == "inf_distrib") {
    h.families_with_lhs([&](const CentralSoftSet& a, std::span<const CentralSoftSet> members) {
      return detail::inf_distrib_holds(ctx, a, members);
    });
  } else if (id == "proj_union") {
    detail::require_projectable(ctx);
    h.projection_pairs(detail::proj_union_violation);
  } else if (id == "proj_inter") {
    detail::require_projectable(ctx);
    h.projection_pairs(detail::proj_inter_violation);
  }
  return std::move(h).finish(id);
}

inline io::json report_json(const LawReport& r) {
  io::json j = io::json::object();
  j["law"] = r.law;
  j["mode"] = r.mode;
  if (r.mode == "sampled") j["seed"] = r.seed;
  j["checked"] = r.checked;
  io::json exhibits = io::json::array();
  for (const auto& doc : r.counterexamples) exhibits.push_back(io::json::parse(doc));
  j["counterexamples"] = std::move(exhibits);
  j["status"] = r.passed() ? "pass" : "fail";
  return j;
}

inline std::string render_table(std::span<const LawReport> reports) {
  std::ostringstream out;
  out << std::left << std::setw(15) << "law" << std::setw(12) << "mode" << std::right
      << std::setw(10) << "checked" << std::setw(17) << "counterexamples"
      << "  status\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(15) << r.law << std::setw(12) << r.mode << std::right
        << std::setw(10) << r.checked << std::setw(17) << r.counterexamples.size() << "  "
        << (r.passed() ? "pass" : "FAIL") << "\n";
  }
  return out.str();
}

}  // namespace softset::laws

#endif  // SOFTSET_LAWS_HPP
