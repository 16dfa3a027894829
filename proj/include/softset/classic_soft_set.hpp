#ifndef SOFTSET_CLASSIC_SOFT_SET_HPP
#define SOFTSET_CLASSIC_SOFT_SET_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "central_soft_set.hpp"
#include "context.hpp"

namespace softset {

/// A classic soft set: a map whose parameter set is implicit — it is
/// exactly the support {e : map(e) ≠ ∅}. No separate parameter set is
/// stored, so the vanishing condition can never desynchronize.
class ClassicSoftSet {
 public:
  ClassicSoftSet(ContextPtr context, std::vector<ObjectSet> map)
      : context_(std::move(context)), map_(std::move(map)) {
    if (map_.size() != context_->parameter_count())
      raise(Errc::context_mismatch, "map must assign a value to every parameter");
    for (const auto& v : map_)
      if (v.domain_size() != context_->universe_size())
        raise(Errc::context_mismatch, "map value does not range over the context's universe");
  }

  static ClassicSoftSet make(
      const ContextPtr& context,
      const std::vector<std::pair<std::string, std::vector<std::string>>>& assignment) {
    std::vector<ObjectSet> map(context->parameter_count(), context->no_objects());
    for (const auto& [param, object_names] : assignment) {
      auto i = context->parameter_index(param);
      if (!i) raise(Errc::unknown_parameter, "no parameter named '" + param + "'");
      map[*i] = context->objects(object_names);
    }
    return ClassicSoftSet(context, std::move(map));
  }

  const ContextPtr& context() const noexcept { return context_; }
  const ObjectSet& value(std::size_t param) const { return map_.at(param); }
  const std::vector<ObjectSet>& map() const noexcept { return map_; }

  /// The parameter set: everywhere the map is nonempty.
  ParamSet support() const {
    ParamSet s = context_->no_params();
    for (std::size_t e = 0; e < map_.size(); ++e)
      if (!map_[e].empty()) s.set(e);
    return s;
  }

  bool operator==(const ClassicSoftSet& other) const {
    require_same_context(context_, other.context_);
    return map_ == other.map_;
  }

 private:
  ContextPtr context_;
  std::vector<ObjectSet> map_;
};

/// Which central set to attach when lifting a classic soft set.
enum class CentralPolicy { support, full_e, co_support };

/// Lowers a central soft set to a classic one by zeroing every value
/// outside the central set. Lossy when the map is nonempty off-central
/// or empty on-central.
inline ClassicSoftSet from_central(const CentralSoftSet& a) {
  const std::size_t n = a.context()->parameter_count();
  std::vector<ObjectSet> map;
  map.reserve(n);
  for (std::size_t e = 0; e < n; ++e)
    map.push_back(a.central().test(e) ? a.value(e) : a.context()->no_objects());
  return ClassicSoftSet(a.context(), std::move(map));
}

/// Lifts a classic soft set to a central one, choosing the central set
/// by policy; the map is copied unchanged.
inline CentralSoftSet to_central(const ClassicSoftSet& f, CentralPolicy policy) {
  ParamSet central = f.context()->no_params();
  switch (policy) {
    case CentralPolicy::support: central = f.support(); break;
    case CentralPolicy::full_e: central = f.context()->all_params(); break;
    case CentralPolicy::co_support: central = f.support().complemented(); break;
  }
  return CentralSoftSet(f.context(), std::move(central), f.map());
}

namespace detail {

template <class OnAOnly, class OnBOnly, class Elsewhere>
ClassicSoftSet classic_by_cases(const ClassicSoftSet& f, const ClassicSoftSet& g,
                                OnAOnly on_a_only, OnBOnly on_b_only, Elsewhere elsewhere) {
  require_same_context(f.context(), g.context());
  const ParamSet a_only = f.support() - g.support();
  const ParamSet b_only = g.support() - f.support();
  const std::size_t n = f.context()->parameter_count();
  std::vector<ObjectSet> map;
  map.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (a_only.test(e))
      map.push_back(on_a_only(f.value(e), g.value(e)));
    else if (b_only.test(e))
      map.push_back(on_b_only(f.value(e), g.value(e)));
    else
      map.push_back(elsewhere(f.value(e), g.value(e)));
  }
  return ClassicSoftSet(f.context(), std::move(map));
}

}  // namespace detail

/// The standard soft-set union: each operand keeps its value on its
/// exclusive region, values combine on the overlap. Recovered from the
/// central algebra by choosing the supports as central sets.
inline ClassicSoftSet molodtsov_union(const ClassicSoftSet& f, const ClassicSoftSet& g) {
  return detail::classic_by_cases(
      f, g, [](const ObjectSet& fv, const ObjectSet&) { return fv; },
      [](const ObjectSet&, const ObjectSet& gv) { return gv; },
      [](const ObjectSet& fv, const ObjectSet& gv) { return fv | gv; });
}

/// Pointwise union; the central-algebra image under the all-of-E policy.
inline ClassicSoftSet natural_union(const ClassicSoftSet& f, const ClassicSoftSet& g) {
  return detail::classic_by_cases(
      f, g, [](const ObjectSet& fv, const ObjectSet& gv) { return fv | gv; },
      [](const ObjectSet& fv, const ObjectSet& gv) { return fv | gv; },
      [](const ObjectSet& fv, const ObjectSet& gv) { return fv | gv; });
}

/// Pointwise intersection; the support shrinks to wherever the result
/// is nonempty.
inline ClassicSoftSet natural_intersect(const ClassicSoftSet& f, const ClassicSoftSet& g) {
  return detail::classic_by_cases(
      f, g, [](const ObjectSet& fv, const ObjectSet& gv) { return fv & gv; },
      [](const ObjectSet& fv, const ObjectSet& gv) { return fv & gv; },
      [](const ObjectSet& fv, const ObjectSet& gv) { return fv & gv; });
}

/// The union obtained under the complementary-central policy: each
/// operand yields to the *other* on its exclusive region (where the
/// other vanishes), values combine elsewhere.
inline ClassicSoftSet breve_union(const ClassicSoftSet& f, const ClassicSoftSet& g) {
  return detail::classic_by_cases(
      f, g, [](const ObjectSet&, const ObjectSet& gv) { return gv; },
      [](const ObjectSet& fv, const ObjectSet&) { return fv; },
      [](const ObjectSet& fv, const ObjectSet& gv) { return fv | gv; });
}

/// The extended-intersection-like operation: each operand keeps its
/// value on its exclusive region, values intersect elsewhere.
inline ClassicSoftSet hat_intersect(const ClassicSoftSet& f, const ClassicSoftSet& g) {
  return detail::classic_by_cases(
      f, g, [](const ObjectSet& fv, const ObjectSet&) { return fv; },
      [](const ObjectSet&, const ObjectSet& gv) { return gv; },
      [](const ObjectSet& fv, const ObjectSet& gv) { return fv & gv; });
}

}  // namespace softset

#endif  // SOFTSET_CLASSIC_SOFT_SET_HPP
