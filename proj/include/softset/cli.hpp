#ifndef SOFTSET_CLI_HPP
#define SOFTSET_CLI_HPP

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classic_soft_set.hpp"
#include "decision.hpp"
#include "laws.hpp"
#include "workspace.hpp"

namespace softset::cli {

namespace detail {

inline io::Workspace load_workspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::syntax_error, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return io::parse_workspace(buffer.str());
}

inline const CentralSoftSet& find_set(const io::Workspace& ws, const std::string& name) {
  auto it = ws.sets.find(name);
  if (it == ws.sets.end()) raise(Errc::unknown_name, "no set named '" + name + "'");
  return it->second;
}

inline const io::SystemSpec& find_system(const io::Workspace& ws, const std::string& name) {
  auto it = ws.systems.find(name);
  if (it == ws.systems.end()) raise(Errc::unknown_name, "no system named '" + name + "'");
  return it->second;
}

inline std::string joined_names(const std::vector<std::string>& names) {
  if (names.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) out += ' ';
    out += names[i];
  }
  return out;
}

inline std::string joined_counts(const std::vector<std::size_t>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(counts[i]);
  }
  return out;
}

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

inline void emit_result(const io::Workspace& ws, const CentralSoftSet& result,
                        const std::string& out_path, std::ostream& out) {
  io::Workspace doc;
  doc.context = ws.context;
  doc.sets.emplace("result", result);
  const std::string text = io::serialize_workspace(doc);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) raise(Errc::syntax_error, "cannot write file '" + out_path + "'");
    file << text;
  }
}

inline std::vector<std::string> object_names(const ContextPtr& ctx,
                                             const std::vector<std::size_t>& indices) {
  std::vector<std::string> names;
  names.reserve(indices.size());
  for (std::size_t j : indices) names.push_back(ctx->object_name(j));
  return names;
}

}  // namespace detail

/// Runs one CLI invocation (no program name in `args`). Exit codes:
/// 0 success, 1 usage error, 2 validation error (including law
/// counterexamples from `verify`), 3 `solve` found no winner.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"central soft set algebra and decision toolkit"};
  app.name("softset");
  app.require_subcommand(1);

  std::string file, lhs, rhs, out_path, classic, set_name, system_name, params_text, laws_text;

  auto* op = app.add_subcommand("op", "apply union/intersect/complement/diff to named sets");
  std::string op_kind;
  op->add_option("kind", op_kind, "operation to apply")
      ->required()
      ->check(CLI::IsMember({"union", "intersect", "complement", "diff"}));
  op->add_option("--file", file, "workspace document")->required();
  op->add_option("--lhs", lhs, "left operand set name")->required();
  op->add_option("--rhs", rhs, "right operand set name");
  op->add_option("--out", out_path, "write the result document here instead of stdout");
  op->add_option("--classic", classic, "route through the classic soft-set operations")
      ->check(CLI::IsMember({"molodtsov", "natural-union", "natural-intersect", "breve", "hat"}));

  auto* project_cmd = app.add_subcommand("project", "restrict a set's central parameters");
  project_cmd->add_option("--file", file)->required();
  project_cmd->add_option("--set", set_name)->required();
  project_cmd->add_option("--params", params_text, "comma-separated parameter names")->required();
  project_cmd->add_option("--out", out_path);

  auto* order_cmd = app.add_subcommand("order", "compare two sets in the information order");
  order_cmd->add_option("--file", file)->required();
  order_cmd->add_option("--lhs", lhs)->required();
  order_cmd->add_option("--rhs", rhs)->required();

  auto* matrix_cmd = app.add_subcommand("matrix", "print the 0/1 incidence matrix");
  matrix_cmd->add_option("--file", file)->required();
  matrix_cmd->add_option("--set", set_name);
  matrix_cmd->add_option("--system", system_name);

  auto* solve_cmd = app.add_subcommand("solve", "score a set or an evaluation system");
  solve_cmd->add_option("--file", file)->required();
  solve_cmd->add_option("--set", set_name);
  solve_cmd->add_option("--system", system_name);
  bool with_oracle = false;
  solve_cmd->add_flag("--oracle", with_oracle, "also print the brute-force solution set");

  auto* verify_cmd = app.add_subcommand("verify", "run the law harness over a fresh context");
  std::uint64_t universe_size = 2, param_count = 2, samples = 0, seed = 0;
  bool exhaustive = false, as_json = false;
  verify_cmd->add_option("--universe", universe_size, "number of objects");
  verify_cmd->add_option("--params", param_count, "number of parameters");
  verify_cmd->add_option("--laws", laws_text, "'all' or a comma-separated list of law ids");
  verify_cmd->add_flag("--exhaustive", exhaustive, "visit every instance");
  verify_cmd->add_option("--samples", samples, "number of seeded random instances per law");
  verify_cmd->add_option("--seed", seed, "random seed for sampled mode");
  verify_cmd->add_flag("--json", as_json, "machine-readable report");

  std::vector<const char*> argv;
  argv.push_back("softset");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "softset: " << e.what() << "\n";
    return 1;
  }

  auto usage = [&](const std::string& message) {
    err << "softset: " << message << "\n";
    return 1;
  };

  try {
    if (op->parsed()) {
      const bool binary = op_kind != "complement";
      if (binary && rhs.empty()) return usage("op " + op_kind + " needs --rhs");
      if (!binary && !rhs.empty()) return usage("op complement takes no --rhs");
      const io::Workspace ws = detail::load_workspace(file);
      const CentralSoftSet& a = detail::find_set(ws, lhs);
      if (!classic.empty()) {
        const bool union_kind = op_kind == "union";
        const bool intersect_kind = op_kind == "intersect";
        const bool union_variant =
            classic == "molodtsov" || classic == "natural-union" || classic == "breve";
        if (!union_kind && !intersect_kind)
          return usage("op " + op_kind + " has no classic variant");
        if (union_kind != union_variant)
          return usage("--classic " + classic + " does not apply to op " + op_kind);
        const ClassicSoftSet f = from_central(a);
        const ClassicSoftSet g = from_central(detail::find_set(ws, rhs));
        ClassicSoftSet result = [&] {
          if (classic == "molodtsov") return molodtsov_union(f, g);
          if (classic == "natural-union") return natural_union(f, g);
          if (classic == "natural-intersect") return natural_intersect(f, g);
          if (classic == "breve") return breve_union(f, g);
          return hat_intersect(f, g);
        }();
        const ParamSet support = result.support();
        err << "support: " << detail::joined_names(ws.context->parameter_names(support)) << "\n";
        detail::emit_result(ws, CentralSoftSet(ws.context, support, result.map()), out_path, out);
        return 0;
      }
      CentralSoftSet result = [&] {
        if (op_kind == "complement") return complement(a);
        const CentralSoftSet& b = detail::find_set(ws, rhs);
        if (op_kind == "union") return unite(a, b);
        if (op_kind == "intersect") return intersect(a, b);
        return difference(a, b);
      }();
      detail::emit_result(ws, result, out_path, out);
      return 0;
    }

    if (project_cmd->parsed()) {
      const io::Workspace ws = detail::load_workspace(file);
      const CentralSoftSet& a = detail::find_set(ws, set_name);
      const ParamSet target = ws.context->params(detail::split_commas(params_text));
      detail::emit_result(ws, project(a, target), out_path, out);
      return 0;
    }

    if (order_cmd->parsed()) {
      const io::Workspace ws = detail::load_workspace(file);
      const bool below = leq(detail::find_set(ws, lhs), detail::find_set(ws, rhs));
      out << lhs << " ⊑ " << rhs << ": " << (below ? "true" : "false") << "\n";
      return 0;
    }

    if (matrix_cmd->parsed()) {
      if (set_name.empty() == system_name.empty())
        return usage("matrix needs exactly one of --set / --system");
      const io::Workspace ws = detail::load_workspace(file);
      const CentralSoftSet subject = set_name.empty()
                                         ? joined(detail::find_system(ws, system_name).system)
                                         : detail::find_set(ws, set_name);
      out << incidence_matrix(subject).to_text();
      return 0;
    }

    if (solve_cmd->parsed()) {
      if (set_name.empty() == system_name.empty())
        return usage("solve needs exactly one of --set / --system");
      const io::Workspace ws = detail::load_workspace(file);
      const CentralSoftSet subject =
          set_name.empty()
              ? project(joined(detail::find_system(ws, system_name).system),
                        detail::find_system(ws, system_name).system.target())
              : detail::find_set(ws, set_name);
      const ScoreReport report = optional_solutions(subject);
      const auto& ctx = ws.context;
      out << "b: " << detail::joined_counts(report.central_hits) << "\n";
      out << "a: " << detail::joined_counts(report.total_hits) << "\n";
      out << "candidates: "
          << detail::joined_names(detail::object_names(ctx, report.candidates)) << "\n";
      out << "winners: " << detail::joined_names(detail::object_names(ctx, report.winners))
          << "\n";
      out << "optional: " << (report.chosen ? ctx->object_name(*report.chosen) : "none") << "\n";
      out << "perfect: "
          << detail::joined_names(ctx->object_names(perfect_solutions(subject))) << "\n";
      if (with_oracle)
        out << "oracle: "
            << detail::joined_names(ctx->object_names(oracle_optional(subject))) << "\n";
      return report.winners.empty() ? 3 : 0;
    }

    if (verify_cmd->parsed()) {
      if (exhaustive == (samples > 0))
        return usage("verify needs exactly one of --exhaustive / --samples K");
      std::vector<std::string> universe, parameters;
      for (std::uint64_t i = 1; i <= universe_size; ++i)
        universe.push_back("o" + std::to_string(i));
      for (std::uint64_t i = 1; i <= param_count; ++i)
        parameters.push_back("p" + std::to_string(i));
      const ContextPtr ctx = Context::make(std::move(universe), std::move(parameters));
      std::vector<std::string> ids;
      if (laws_text.empty() || laws_text == "all")
        ids.assign(laws::all_law_ids.begin(), laws::all_law_ids.end());
      else
        ids = detail::split_commas(laws_text);
      const laws::Mode mode =
          exhaustive ? laws::Mode::exhaustive() : laws::Mode::sampled(samples, seed);
      std::vector<laws::LawReport> reports;
      reports.reserve(ids.size());
      for (const auto& id : ids) reports.push_back(laws::check_law(id, ctx, mode));
      if (as_json) {
        io::json doc = io::json::array();
        for (const auto& r : reports) doc.push_back(laws::report_json(r));
        out << doc.dump(2) << "\n";
      } else {
        out << laws::render_table(reports);
      }
      for (const auto& r : reports)
        if (!r.passed()) return 2;
      return 0;
    }
  } catch (const Error& e) {
    err << "softset: " << e.what() << "\n";
    return 2;
  }
  return usage("no subcommand given");
}

}  // namespace softset::cli

#endif  // SOFTSET_CLI_HPP
