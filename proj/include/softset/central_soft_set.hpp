#ifndef SOFTSET_CENTRAL_SOFT_SET_HPP
#define SOFTSET_CENTRAL_SOFT_SET_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"

namespace softset {

/// A total evaluation map over the parameter list E together with a
/// central set A of parameters, the evaluator's area of expertise.
///
/// The map assigns an ObjectSet to *every* parameter, inside or outside
/// the central set. The central set never restricts the map; it decides
/// whose value survives in the case splits of the binary operations:
/// on A−B the operand that is "at home" keeps its value under union and
/// yields it under intersection, and symmetrically on B−A; everywhere
/// else the values combine pointwise.
///
/// Values are immutable after construction and every operation below is
/// a pure function of its inputs.
class CentralSoftSet {
 public:
  /// Positional constructor; `map` must have one entry per parameter of
  /// the context, in context order.
  CentralSoftSet(ContextPtr context, ParamSet central, std::vector<ObjectSet> map)
      : context_(std::move(context)), central_(std::move(central)), map_(std::move(map)) {
    if (central_.domain_size() != context_->parameter_count())
      raise(Errc::context_mismatch, "central set does not range over the context's parameters");
    if (map_.size() != context_->parameter_count())
      raise(Errc::context_mismatch, "map must assign a value to every parameter");
    for (const auto& v : map_)
      if (v.domain_size() != context_->universe_size())
        raise(Errc::context_mismatch, "map value does not range over the context's universe");
  }

  /// Name-based constructor. Parameters absent from `assignment` get the
  /// empty set, keeping the map total.
  static CentralSoftSet make(
      const ContextPtr& context, const std::vector<std::string>& central_names,
      const std::vector<std::pair<std::string, std::vector<std::string>>>& assignment) {
    ParamSet central = context->no_params();
    for (const auto& name : central_names) {
      auto i = context->parameter_index(name);
      if (!i)
        raise(Errc::central_not_subset,
              "central parameter '" + name + "' is not in the parameter list");
      central.set(*i);
    }
    std::vector<ObjectSet> map(context->parameter_count(), context->no_objects());
    ParamSet assigned = context->no_params();
    for (const auto& [param, object_names] : assignment) {
      auto i = context->parameter_index(param);
      if (!i) raise(Errc::unknown_parameter, "no parameter named '" + param + "'");
      if (assigned.test(*i)) raise(Errc::duplicate_name, "parameter '" + param + "' assigned twice");
      assigned.set(*i);
      map[*i] = context->objects(object_names);
    }
    return CentralSoftSet(context, std::move(central), std::move(map));
  }

  /// The least element: empty central set, empty value everywhere.
  static CentralSoftSet bottom(const ContextPtr& context) {
    return CentralSoftSet(context, context->no_params(),
                          std::vector<ObjectSet>(context->parameter_count(), context->no_objects()));
  }

  const ContextPtr& context() const noexcept { return context_; }
  const ParamSet& central() const noexcept { return central_; }
  const ObjectSet& value(std::size_t param) const { return map_.at(param); }
  const std::vector<ObjectSet>& map() const noexcept { return map_; }

  /// Extensional equality: same central set and same value at every
  /// parameter. Throws ContextMismatch across contexts.
  bool operator==(const CentralSoftSet& other) const {
    require_same_context(context_, other.context_);
    return central_ == other.central_ && map_ == other.map_;
  }

 private:
  ContextPtr context_;
  ParamSet central_;
  std::vector<ObjectSet> map_;
};

inline bool equal(const CentralSoftSet& a, const CentralSoftSet& b) { return a == b; }

/// Union: central set A∪B; the value of the exclusive owner on A−B and
/// B−A, the pointwise union everywhere else.
inline CentralSoftSet unite(const CentralSoftSet& a, const CentralSoftSet& b) {
  require_same_context(a.context(), b.context());
  const ParamSet a_only = a.central() - b.central();
  const ParamSet b_only = b.central() - a.central();
  const std::size_t n = a.context()->parameter_count();
  std::vector<ObjectSet> map;
  map.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (a_only.test(e))
      map.push_back(a.value(e));
    else if (b_only.test(e))
      map.push_back(b.value(e));
    else
      map.push_back(a.value(e) | b.value(e));
  }
  return CentralSoftSet(a.context(), a.central() | b.central(), std::move(map));
}

/// Intersection: central set A∩B; the value of the *other* operand on
/// each exclusive region, the pointwise intersection everywhere else.
inline CentralSoftSet intersect(const CentralSoftSet& a, const CentralSoftSet& b) {
  require_same_context(a.context(), b.context());
  const ParamSet a_only = a.central() - b.central();
  const ParamSet b_only = b.central() - a.central();
  const std::size_t n = a.context()->parameter_count();
  std::vector<ObjectSet> map;
  map.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (a_only.test(e))
      map.push_back(b.value(e));
    else if (b_only.test(e))
      map.push_back(a.value(e));
    else
      map.push_back(a.value(e) & b.value(e));
  }
  return CentralSoftSet(a.context(), a.central() & b.central(), std::move(map));
}

/// Complement: central set E−A, every value complemented in U.
inline CentralSoftSet complement(const CentralSoftSet& a) {
  const std::size_t n = a.context()->parameter_count();
  std::vector<ObjectSet> map;
  map.reserve(n);
  for (std::size_t e = 0; e < n; ++e) map.push_back(a.value(e).complemented());
  return CentralSoftSet(a.context(), a.central().complemented(), std::move(map));
}

/// Difference a − b, the intersection of a with the complement of b:
/// central set A−B; bᶜ on A∩B, a's value outside A∪B, a ∩ bᶜ elsewhere.
inline CentralSoftSet difference(const CentralSoftSet& a, const CentralSoftSet& b) {
  require_same_context(a.context(), b.context());
  const ParamSet overlap = a.central() & b.central();
  const ParamSet outside = (a.central() | b.central()).complemented();
  const std::size_t n = a.context()->parameter_count();
  std::vector<ObjectSet> map;
  map.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (overlap.test(e))
      map.push_back(b.value(e).complemented());
    else if (outside.test(e))
      map.push_back(a.value(e));
    else
      map.push_back(a.value(e) & b.value(e).complemented());
  }
  return CentralSoftSet(a.context(), a.central() - b.central(), std::move(map));
}

/// The information order: a ⊑ b iff A ⊆ B and a's value is contained in
/// b's at every parameter outside B−A. Equivalent to unite(a,b) == b and
/// to intersect(a,b) == a; a partial order.
inline bool leq(const CentralSoftSet& a, const CentralSoftSet& b) {
  require_same_context(a.context(), b.context());
  if (!a.central().subset_of(b.central())) return false;
  const ParamSet excluded = b.central() - a.central();
  const std::size_t n = a.context()->parameter_count();
  for (std::size_t e = 0; e < n; ++e) {
    if (excluded.test(e)) continue;
    if (!a.value(e).subset_of(b.value(e))) return false;
  }
  return true;
}

/// Least upper bound of a family. At each parameter the union runs over
/// the members whose central set contains it, or over all members when
/// none does. The empty family yields bottom.
inline CentralSoftSet unite_all(const ContextPtr& context,
                                std::span<const CentralSoftSet> members) {
  for (const auto& m : members) require_same_context(context, m.context());
  if (members.empty()) return CentralSoftSet::bottom(context);
  ParamSet central = context->no_params();
  for (const auto& m : members) central = central | m.central();
  const std::size_t n = context->parameter_count();
  std::vector<ObjectSet> map;
  map.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    const bool covered = central.test(e);
    ObjectSet acc = context->no_objects();
    for (const auto& m : members)
      if (!covered || m.central().test(e)) acc = acc | m.value(e);
    map.push_back(std::move(acc));
  }
  return CentralSoftSet(context, std::move(central), std::move(map));
}

/// Projection onto `target` ⊆ A: the central set shrinks to `target`,
/// the map is untouched.
inline CentralSoftSet project(const CentralSoftSet& a, const ParamSet& target) {
  if (target.domain_size() != a.context()->parameter_count())
    raise(Errc::context_mismatch, "projection target does not range over the context's parameters");
  if (!target.subset_of(a.central()))
    raise(Errc::target_not_subset_of_central, "projection target must be a subset of the central set");
  return CentralSoftSet(a.context(), target, a.map());
}

}  // namespace softset

#endif  // SOFTSET_CENTRAL_SOFT_SET_HPP
