#ifndef SOFTSET_WORKSPACE_HPP
#define SOFTSET_WORKSPACE_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "central_soft_set.hpp"
#include "context.hpp"
#include "decision.hpp"

namespace softset::io {

using json = nlohmann::ordered_json;

/// A named evaluation system together with the member names it was
/// declared with (the resolved members live in the system itself).
struct SystemSpec {
  std::vector<std::string> member_names;
  EvaluationSystem system;

  bool operator==(const SystemSpec& other) const {
    return member_names == other.member_names && system.target() == other.system.target();
  }
};

/// One context plus named central soft sets and evaluation systems.
///
/// Document schema (all object/parameter lists are arrays of strings):
///
///   {
///     "universe":   ["h1", ...],
///     "parameters": ["I", ...],
///     "sets":    { name: { "central": [...], "map": { param: [objects] } } },
///     "systems": { name: { "members": [set names], "target": [...] } }
///   }
///
/// Missing map keys mean the empty set; unknown keys anywhere are
/// errors. Names are unique across sets and systems together.
struct Workspace {
  ContextPtr context;
  std::map<std::string, CentralSoftSet> sets;
  std::map<std::string, SystemSpec> systems;

  bool operator==(const Workspace& other) const {
    if (!same_context(context, other.context)) return false;
    return sets == other.sets && systems == other.systems;
  }
};

namespace detail {

[[noreturn]] inline void bad_doc(const std::string& message) {
  raise(Errc::syntax_error, message);
}

inline std::vector<std::string> string_array(const json& j, const std::string& where) {
  if (!j.is_array()) bad_doc(where + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) bad_doc(where + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline void check_keys(const json& obj, const std::set<std::string_view>& allowed,
                       const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.contains(key)) bad_doc(where + " has unknown key '" + key + "'");
  }
}

/// Parses while rejecting duplicate keys inside any one object, which
/// the DOM alone cannot see (later entries silently win).
inline json parse_checked(std::string_view text) {
  std::vector<std::vector<std::string>> scopes;
  std::string duplicate;
  auto callback = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        scopes.emplace_back();
        break;
      case json::parse_event_t::object_end:
        scopes.pop_back();
        break;
      case json::parse_event_t::key: {
        auto& keys = scopes.back();
        const std::string key = parsed.get<std::string>();
        if (duplicate.empty())
          for (const auto& seen : keys)
            if (seen == key) duplicate = key;
        keys.push_back(key);
        break;
      }
      default:
        break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text, callback);
  } catch (const nlohmann::json::exception& e) {
    bad_doc(e.what());
  }
  if (!duplicate.empty())
    raise(Errc::duplicate_name, "key '" + duplicate + "' appears twice in one object");
  return doc;
}

}  // namespace detail

inline Workspace parse_workspace(std::string_view text) {
  const json doc = detail::parse_checked(text);
  if (!doc.is_object()) detail::bad_doc("document must be a JSON object");
  detail::check_keys(doc, {"universe", "parameters", "sets", "systems"}, "document");
  if (!doc.contains("universe") || !doc.contains("parameters"))
    detail::bad_doc("document needs 'universe' and 'parameters'");

  Workspace ws;
  ws.context = Context::make(detail::string_array(doc["universe"], "'universe'"),
                             detail::string_array(doc["parameters"], "'parameters'"));

  std::set<std::string> names;
  auto claim_name = [&](const std::string& name) {
    if (!names.insert(name).second)
      raise(Errc::duplicate_name, "name '" + name + "' is used twice");
  };

  if (doc.contains("sets")) {
    if (!doc["sets"].is_object()) detail::bad_doc("'sets' must be an object");
    for (const auto& [name, body] : doc["sets"].items()) {
      claim_name(name);
      if (!body.is_object()) detail::bad_doc("set '" + name + "' must be an object");
      detail::check_keys(body, {"central", "map"}, "set '" + name + "'");
      std::vector<std::string> central;
      if (body.contains("central"))
        central = detail::string_array(body["central"], "central of set '" + name + "'");
      std::vector<std::pair<std::string, std::vector<std::string>>> assignment;
      if (body.contains("map")) {
        if (!body["map"].is_object()) detail::bad_doc("map of set '" + name + "' must be an object");
        for (const auto& [param, objects] : body["map"].items())
          assignment.emplace_back(
              param, detail::string_array(objects, "map entry '" + param + "' of set '" + name + "'"));
      }
      ws.sets.emplace(name, CentralSoftSet::make(ws.context, central, assignment));
    }
  }

  if (doc.contains("systems")) {
    if (!doc["systems"].is_object()) detail::bad_doc("'systems' must be an object");
    for (const auto& [name, body] : doc["systems"].items()) {
      claim_name(name);
      if (!body.is_object()) detail::bad_doc("system '" + name + "' must be an object");
      detail::check_keys(body, {"members", "target"}, "system '" + name + "'");
      if (!body.contains("members")) detail::bad_doc("system '" + name + "' needs 'members'");
      const auto member_names = detail::string_array(body["members"], "members of system '" + name + "'");
      if (member_names.empty())
        detail::bad_doc("system '" + name + "' needs at least one member");
      std::vector<CentralSoftSet> members;
      members.reserve(member_names.size());
      for (const auto& member : member_names) {
        auto it = ws.sets.find(member);
        if (it == ws.sets.end())
          detail::bad_doc("system '" + name + "' references unknown set '" + member + "'");
        members.push_back(it->second);
      }
      std::vector<std::string> target_names;
      if (body.contains("target"))
        target_names = detail::string_array(body["target"], "target of system '" + name + "'");
      ws.systems.emplace(
          name, SystemSpec{member_names,
                           EvaluationSystem(ws.context, std::move(members),
                                            ws.context->params(target_names))});
    }
  }
  return ws;
}

inline json set_json(const CentralSoftSet& s) {
  const auto& ctx = *s.context();
  json body = json::object();
  body["central"] = ctx.parameter_names(s.central());
  json map = json::object();
  for (std::size_t e = 0; e < ctx.parameter_count(); ++e)
    if (!s.value(e).empty()) map[ctx.parameter_name(e)] = ctx.object_names(s.value(e));
  body["map"] = std::move(map);
  return body;
}

inline json workspace_json(const Workspace& ws) {
  json doc = json::object();
  doc["universe"] = ws.context->universe();
  doc["parameters"] = ws.context->parameters();
  json sets = json::object();
  for (const auto& [name, s] : ws.sets) sets[name] = set_json(s);
  doc["sets"] = std::move(sets);
  json systems = json::object();
  for (const auto& [name, spec] : ws.systems) {
    json body = json::object();
    body["members"] = spec.member_names;
    body["target"] = ws.context->parameter_names(spec.system.target());
    systems[name] = std::move(body);
  }
  doc["systems"] = std::move(systems);
  return doc;
}

/// Canonical form: fixed key order, names sorted, every object and
/// parameter list in context order, empty map entries omitted.
/// parse_workspace(serialize_workspace(ws)) == ws for every workspace,
/// and serialize ∘ parse is the identity on canonical documents.
inline std::string serialize_workspace(const Workspace& ws) {
  return workspace_json(ws).dump(2) + "\n";
}

}  // namespace softset::io

#endif  // SOFTSET_WORKSPACE_HPP
