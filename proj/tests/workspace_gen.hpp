// Random-but-valid workspace generator shared by the workspace suite and
// the acceptance run.
#ifndef SOFTSET_TESTS_WORKSPACE_GEN_HPP
#define SOFTSET_TESTS_WORKSPACE_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include <softset/workspace.hpp>

namespace testsupport {

inline softset::io::Workspace random_workspace(std::mt19937_64& rng) {
  using namespace softset;
  const auto size_below = [&](std::uint64_t n) { return rng() % n; };
  std::vector<std::string> universe, parameters;
  for (std::uint64_t i = 0, n = size_below(6); i < n; ++i)
    universe.push_back("o" + std::to_string(i + 1));
  for (std::uint64_t i = 0, n = size_below(6); i < n; ++i)
    parameters.push_back("p" + std::to_string(i + 1));

  io::Workspace ws;
  ws.context = Context::make(universe, parameters);
  const std::size_t m = ws.context->universe_size();
  const std::size_t n = ws.context->parameter_count();

  auto random_objects = [&] {
    ObjectSet s = ws.context->no_objects();
    for (std::size_t i = 0; i < m; ++i)
      if (rng() & 1u) s.set(i);
    return s;
  };
  auto random_params = [&] {
    ParamSet s = ws.context->no_params();
    for (std::size_t i = 0; i < n; ++i)
      if (rng() & 1u) s.set(i);
    return s;
  };

  const std::uint64_t set_count = size_below(4);
  for (std::uint64_t k = 0; k < set_count; ++k) {
    std::vector<ObjectSet> map;
    for (std::size_t e = 0; e < n; ++e) map.push_back(random_objects());
    ws.sets.emplace("s" + std::to_string(k + 1),
                    CentralSoftSet(ws.context, random_params(), std::move(map)));
  }

  if (!ws.sets.empty() && (rng() & 1u)) {
    std::vector<std::string> member_names;
    std::vector<CentralSoftSet> members;
    ParamSet covered = ws.context->no_params();
    for (const auto& [name, s] : ws.sets)
      if (rng() & 1u) {
        member_names.push_back(name);
        members.push_back(s);
        covered = covered | s.central();
      }
    if (!member_names.empty()) {
      const ParamSet target = random_params() & covered;
      ws.systems.emplace(
          "sys", io::SystemSpec{member_names,
                                EvaluationSystem(ws.context, std::move(members), target)});
    }
  }
  return ws;
}

}  // namespace testsupport

#endif  // SOFTSET_TESTS_WORKSPACE_GEN_HPP
