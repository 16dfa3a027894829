#ifndef SOFTSET_DECISION_HPP
#define SOFTSET_DECISION_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "central_soft_set.hpp"
#include "context.hpp"

namespace softset {

/// 0/1 matrix with one row per parameter (context order) and one column
/// per object (universe order); entry 1 iff the object lies in the value
/// at that parameter.
class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t row_count() const noexcept { return rows_; }
  std::size_t col_count() const noexcept { return cols_; }

  std::uint8_t at(std::size_t row, std::size_t col) const {
    return cells_.at(row * cols_ + col);
  }

  void put(std::size_t row, std::size_t col, bool one) {
    cells_.at(row * cols_ + col) = one ? 1 : 0;
  }

  /// One row per line, entries separated by single spaces, every line
  /// newline-terminated.
  std::string to_text() const {
    std::string out;
    out.reserve(rows_ * (cols_ * 2 + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != 0) out += ' ';
        out += static_cast<char>('0' + at(i, j));
      }
      out += '\n';
    }
    return out;
  }

  bool operator==(const IncidenceMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> cells_;
};

inline IncidenceMatrix incidence_matrix(const CentralSoftSet& a) {
  const std::size_t n = a.context()->parameter_count();
  const std::size_t m = a.context()->universe_size();
  IncidenceMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i)
    a.value(i).for_each([&](std::size_t j) { out.put(i, j, true); });
  return out;
}

/// Column tallies of an incidence matrix and the resulting choice.
///
/// central_hits[j] counts the rows of the central set containing object
/// j, total_hits[j] all rows. candidates holds the objects passing every
/// central parameter, winners those candidates with maximal total, and
/// chosen is the lowest-index winner (absent when nothing passes).
struct ScoreReport {
  std::vector<std::size_t> central_hits;
  std::vector<std::size_t> total_hits;
  std::size_t central_size = 0;
  std::vector<std::size_t> candidates;
  std::vector<std::size_t> winners;
  std::optional<std::size_t> chosen;

  bool operator==(const ScoreReport& other) const = default;
};

inline ScoreReport scores(const IncidenceMatrix& matrix, const ParamSet& central) {
  if (central.domain_size() != matrix.row_count())
    raise(Errc::context_mismatch, "central set does not range over the matrix rows");
  ScoreReport report;
  report.central_size = central.count();
  report.central_hits.assign(matrix.col_count(), 0);
  report.total_hits.assign(matrix.col_count(), 0);
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    const bool is_central = central.test(i);
    for (std::size_t j = 0; j < matrix.col_count(); ++j) {
      if (!matrix.at(i, j)) continue;
      ++report.total_hits[j];
      if (is_central) ++report.central_hits[j];
    }
  }
  for (std::size_t j = 0; j < matrix.col_count(); ++j)
    if (report.central_hits[j] == report.central_size) report.candidates.push_back(j);
  if (!report.candidates.empty()) {
    std::size_t best = 0;
    for (std::size_t j : report.candidates) best = std::max(best, report.total_hits[j]);
    for (std::size_t j : report.candidates)
      if (report.total_hits[j] == best) report.winners.push_back(j);
    report.chosen = report.winners.front();
  }
  return report;
}

/// The matrix algorithm applied to one central soft set: winners are
/// exactly its optional solutions. An empty winner list means no object
/// passes every central parameter.
inline ScoreReport optional_solutions(const CentralSoftSet& a) {
  return scores(incidence_matrix(a), a.central());
}

/// Objects acceptable under every parameter of E.
inline ObjectSet perfect_solutions(const CentralSoftSet& a) {
  ObjectSet acc = a.context()->all_objects();
  for (std::size_t e = 0; e < a.context()->parameter_count(); ++e)
    acc = acc & a.value(e);
  return acc;
}

/// A family of central soft sets whose central sets jointly cover a
/// target parameter set.
class EvaluationSystem {
 public:
  EvaluationSystem(ContextPtr context, std::vector<CentralSoftSet> members, ParamSet target)
      : context_(std::move(context)), members_(std::move(members)), target_(std::move(target)) {
    for (const auto& m : members_) require_same_context(context_, m.context());
    if (target_.domain_size() != context_->parameter_count())
      raise(Errc::context_mismatch, "target does not range over the context's parameters");
    ParamSet covered = context_->no_params();
    for (const auto& m : members_) covered = covered | m.central();
    if (!target_.subset_of(covered))
      raise(Errc::coverage_violation,
            "target parameters are not covered by the members' central sets");
  }

  const ContextPtr& context() const noexcept { return context_; }
  std::span<const CentralSoftSet> members() const noexcept { return members_; }
  const ParamSet& target() const noexcept { return target_; }

 private:
  ContextPtr context_;
  std::vector<CentralSoftSet> members_;
  ParamSet target_;
};

/// The join of the system's members (whose incidence matrix is the one
/// the solver scores).
inline CentralSoftSet joined(const EvaluationSystem& s) {
  return unite_all(s.context(), s.members());
}

/// Optional solutions of the join projected onto the target.
inline ScoreReport solve(const EvaluationSystem& s) {
  return optional_solutions(project(joined(s), s.target()));
}

/// Brute-force solution search straight from the definition: enumerate
/// every parameter set G between the central set and E, keep those whose
/// value intersection is nonempty, and collect the intersections of the
/// largest ones. The intersection over G = ∅ is taken to be U.
///
/// Independent of the matrix algorithm; quadratic in 2^|E|, so |E| is
/// capped at 20.
inline ObjectSet oracle_optional(const CentralSoftSet& a) {
  const std::size_t n = a.context()->parameter_count();
  if (n > 20) raise(Errc::too_large_for_oracle, "parameter list too large to enumerate");
  const std::uint64_t base = a.central().low_bits();
  const std::uint64_t rest = a.context()->all_params().low_bits() & ~base;

  std::size_t best_size = 0;
  bool found = false;
  ObjectSet result = a.context()->no_objects();
  for (std::uint64_t extra = rest;; extra = (extra - 1) & rest) {
    const std::uint64_t g = base | extra;
    ObjectSet inter = a.context()->all_objects();
    for (std::size_t e = 0; e < n; ++e)
      if ((g >> e) & 1u) inter = inter & a.value(e);
    if (!inter.empty()) {
      const std::size_t size = static_cast<std::size_t>(std::popcount(g));
      if (!found || size > best_size) {
        found = true;
        best_size = size;
        result = inter;
      } else if (size == best_size) {
        result = result | inter;
      }
    }
    if (extra == 0) break;
  }
  return result;
}

}  // namespace softset

#endif  // SOFTSET_DECISION_HPP
