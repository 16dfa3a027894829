#ifndef SOFTSET_CONTEXT_HPP
#define SOFTSET_CONTEXT_HPP

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"

namespace softset {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// The shared universe of objects and ordered parameter list.
///
/// Declaration order is load-bearing: it fixes the bit positions of
/// ObjectSet/ParamSet and the row/column order of incidence matrices.
/// Both orderings are immutable after construction.
class Context {
 public:
  Context(std::vector<std::string> universe, std::vector<std::string> parameters)
      : universe_(std::move(universe)), parameters_(std::move(parameters)) {
    index_names(universe_, object_index_, "object");
    index_names(parameters_, parameter_index_, "parameter");
  }

  static ContextPtr make(std::vector<std::string> universe,
                         std::vector<std::string> parameters) {
    return std::make_shared<const Context>(std::move(universe), std::move(parameters));
  }

  std::size_t universe_size() const noexcept { return universe_.size(); }
  std::size_t parameter_count() const noexcept { return parameters_.size(); }

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }

  const std::string& object_name(std::size_t i) const { return universe_.at(i); }
  const std::string& parameter_name(std::size_t i) const { return parameters_.at(i); }

  std::optional<std::size_t> object_index(std::string_view name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> parameter_index(std::string_view name) const {
    auto it = parameter_index_.find(name);
    if (it == parameter_index_.end()) return std::nullopt;
    return it->second;
  }

  ObjectSet no_objects() const { return ObjectSet(universe_.size()); }
  ObjectSet all_objects() const { return ObjectSet::full(universe_.size()); }
  ParamSet no_params() const { return ParamSet(parameters_.size()); }
  ParamSet all_params() const { return ParamSet::full(parameters_.size()); }

  template <class Range>
  ObjectSet objects(const Range& names) const {
    ObjectSet out = no_objects();
    for (const auto& name : names) {
      auto i = object_index(name);
      if (!i) raise(Errc::unknown_object, "no object named '" + std::string(name) + "'");
      out.set(*i);
    }
    return out;
  }

  ObjectSet objects(std::initializer_list<std::string_view> names) const {
    return objects<std::initializer_list<std::string_view>>(names);
  }

  template <class Range>
  ParamSet params(const Range& names) const {
    ParamSet out = no_params();
    for (const auto& name : names) {
      auto i = parameter_index(name);
      if (!i) raise(Errc::unknown_parameter, "no parameter named '" + std::string(name) + "'");
      out.set(*i);
    }
    return out;
  }

  ParamSet params(std::initializer_list<std::string_view> names) const {
    return params<std::initializer_list<std::string_view>>(names);
  }

  std::vector<std::string> object_names(const ObjectSet& s) const {
    std::vector<std::string> out;
    out.reserve(s.count());
    s.for_each([&](std::size_t i) { out.push_back(universe_[i]); });
    return out;
  }

  std::vector<std::string> parameter_names(const ParamSet& s) const {
    std::vector<std::string> out;
    out.reserve(s.count());
    s.for_each([&](std::size_t i) { out.push_back(parameters_[i]); });
    return out;
  }

  bool operator==(const Context& other) const {
    return universe_ == other.universe_ && parameters_ == other.parameters_;
  }

 private:
  static void index_names(const std::vector<std::string>& names,
                          std::map<std::string, std::size_t, std::less<>>& index,
                          const char* kind) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!index.emplace(names[i], i).second)
        raise(Errc::duplicate_name, std::string(kind) + " '" + names[i] + "' declared twice");
    }
  }

  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::map<std::string, std::size_t, std::less<>> object_index_;
  std::map<std::string, std::size_t, std::less<>> parameter_index_;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b))
    raise(Errc::context_mismatch, "operands belong to different contexts");
}

}  // namespace softset

#endif  // SOFTSET_CONTEXT_HPP
