// Shared fixtures for the test suites: the five-house example workspace
// and small helpers around it.
#ifndef SOFTSET_TESTS_SUPPORT_HPP
#define SOFTSET_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <softset/central_soft_set.hpp>
#include <softset/context.hpp>
#include <softset/errors.hpp>

namespace testsupport {

using softset::CentralSoftSet;
using softset::ContextPtr;

using Table = std::vector<std::pair<std::string, std::vector<std::string>>>;

inline ContextPtr houses_context() {
  return softset::Context::make({"h1", "h2", "h3", "h4", "h5"},
                                {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"});
}

inline Table table_f() {
  return {{"I", {"h2", "h3", "h4", "h5"}}, {"II", {"h2", "h5"}},
          {"III", {"h2", "h3"}},           {"IV", {"h1", "h4", "h5"}},
          {"V", {"h1", "h4"}},             {"VI", {"h1", "h5"}},
          {"VII", {"h2", "h5"}},           {"VIII", {"h3", "h4", "h5"}}};
}

inline Table table_g() {
  return {{"I", {"h2", "h3", "h4"}}, {"II", {"h1", "h5"}},
          {"III", {"h3", "h4"}},     {"IV", {"h2", "h4", "h5"}},
          {"V", {"h2", "h4"}},       {"VI", {"h4", "h5"}},
          {"VII", {"h2", "h4"}},     {"VIII", {"h1", "h4", "h5"}}};
}

inline Table table_m() {
  return {{"I", {"h2", "h3", "h4"}}, {"II", {"h1", "h5"}},
          {"III", {"h3", "h4"}},     {"IV", {"h2", "h4", "h5"}},
          {"V", {"h2", "h4"}},       {"VI", {"h1"}},
          {"VII", {"h2", "h4"}},     {"VIII", {"h1", "h4", "h5"}}};
}

inline CentralSoftSet houses_f(const ContextPtr& ctx) {
  return CentralSoftSet::make(ctx, {"IV", "V"}, table_f());
}

inline CentralSoftSet houses_g(const ContextPtr& ctx) {
  return CentralSoftSet::make(ctx, {"I", "IV"}, table_g());
}

inline CentralSoftSet houses_m(const ContextPtr& ctx) {
  return CentralSoftSet::make(ctx, {"I", "IV", "VI"}, table_m());
}

// (f,A) ⊔ (g,B) from the worked example
inline Table table_h() {
  return {{"I", {"h2", "h3", "h4"}},  {"II", {"h1", "h2", "h5"}},
          {"III", {"h2", "h3", "h4"}}, {"IV", {"h1", "h2", "h4", "h5"}},
          {"V", {"h1", "h4"}},         {"VI", {"h1", "h4", "h5"}},
          {"VII", {"h2", "h4", "h5"}}, {"VIII", {"h1", "h3", "h4", "h5"}}};
}

// (f,{III,IV}) ⊔ (g,B)
inline Table table_j() {
  return {{"I", {"h2", "h3", "h4"}},   {"II", {"h1", "h2", "h5"}},
          {"III", {"h2", "h3"}},        {"IV", {"h1", "h2", "h4", "h5"}},
          {"V", {"h1", "h2", "h4"}},    {"VI", {"h1", "h4", "h5"}},
          {"VII", {"h2", "h4", "h5"}},  {"VIII", {"h1", "h3", "h4", "h5"}}};
}

// (f,A) ⊓ (g,B)
inline Table table_k() {
  return {{"I", {"h2", "h3", "h4", "h5"}}, {"II", {"h5"}},
          {"III", {"h3"}},                 {"IV", {"h4", "h5"}},
          {"V", {"h2", "h4"}},             {"VI", {"h5"}},
          {"VII", {"h2"}},                 {"VIII", {"h4", "h5"}}};
}

// (m,C) − (g,B), evaluated from the difference definition. The printed
// example's values at I, IV, VI disagree with the definition applied to
// its own tables; these are the definition-derived values.
inline Table table_n() {
  return {{"I", {"h1", "h5"}},  {"II", {"h1", "h5"}},
          {"III", {"h3", "h4"}}, {"IV", {"h1", "h3"}},
          {"V", {"h2", "h4"}},   {"VI", {"h1"}},
          {"VII", {"h2", "h4"}}, {"VIII", {"h1", "h4", "h5"}}};
}

inline const char* matrix_l_text() {
  return
      "0 1 1 1 1\n"
      "0 1 0 0 1\n"
      "0 1 1 0 0\n"
      "1 0 0 1 1\n"
      "1 0 0 1 0\n"
      "1 0 0 0 1\n"
      "0 1 0 0 1\n"
      "0 0 1 1 1\n";
}

inline const char* matrix_m_text() {
  return
      "0 1 1 1 0\n"
      "1 0 0 0 1\n"
      "0 0 1 1 0\n"
      "0 1 0 1 1\n"
      "0 1 0 1 0\n"
      "0 0 0 1 1\n"
      "0 1 0 1 0\n"
      "1 0 0 1 1\n";
}

inline const char* matrix_n_text() {
  return
      "0 1 1 1 0\n"
      "1 1 0 0 1\n"
      "0 1 1 1 0\n"
      "1 1 0 1 1\n"
      "1 0 0 1 0\n"
      "1 0 0 1 1\n"
      "0 1 0 1 1\n"
      "1 0 1 1 1\n";
}

/// Checks a set against an expected central and full value table.
inline bool matches(const CentralSoftSet& s, std::initializer_list<std::string_view> central,
                    const Table& expected) {
  const auto& ctx = *s.context();
  if (!(s.central() == ctx.params(central))) return false;
  for (const auto& [param, objects] : expected) {
    const auto i = ctx.parameter_index(param);
    if (!i || !(s.value(*i) == ctx.objects(objects))) return false;
  }
  return expected.size() == ctx.parameter_count();
}

template <class F>
std::optional<softset::Errc> thrown_errc(F&& f) {
  try {
    f();
  } catch (const softset::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testsupport

#endif  // SOFTSET_TESTS_SUPPORT_HPP
