#ifndef SOFTSET_ENUMERATE_HPP
#define SOFTSET_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "central_soft_set.hpp"
#include "context.hpp"

namespace softset {

inline constexpr std::uint64_t default_enumeration_bound = std::uint64_t{1} << 20;

/// Number of central soft sets over the context, or nullopt when the
/// count does not fit the bound (or 64 bits).
inline std::optional<std::uint64_t> css_space_size(const Context& ctx,
                                                   std::uint64_t bound = default_enumeration_bound) {
  const std::size_t bits = ctx.parameter_count() + ctx.universe_size() * ctx.parameter_count();
  if (bits >= 64) return std::nullopt;
  const std::uint64_t count = std::uint64_t{1} << bits;
  if (count > bound) return std::nullopt;
  return count;
}

/// Every central soft set over the context, each exactly once, in a
/// deterministic order: central bit pattern outermost, map bit pattern
/// innermost.
inline std::vector<CentralSoftSet> enumerate_css(const ContextPtr& ctx,
                                                 std::uint64_t bound = default_enumeration_bound) {
  const auto total = css_space_size(*ctx, bound);
  if (!total)
    raise(Errc::enumeration_too_large, "too many central soft sets over this context");
  const std::size_t n = ctx->parameter_count();
  const std::size_t m = ctx->universe_size();
  const std::uint64_t central_count = std::uint64_t{1} << n;
  const std::uint64_t map_count = std::uint64_t{1} << (n * m);

  std::vector<CentralSoftSet> out;
  out.reserve(static_cast<std::size_t>(*total));
  for (std::uint64_t c = 0; c < central_count; ++c) {
    for (std::uint64_t code = 0; code < map_count; ++code) {
      std::vector<ObjectSet> map;
      map.reserve(n);
      for (std::size_t e = 0; e < n; ++e)
        map.push_back(ObjectSet::from_bits(m, (code >> (e * m)) & ((std::uint64_t{1} << m) - 1)));
      out.emplace_back(ctx, ParamSet::from_bits(n, c), std::move(map));
    }
  }
  return out;
}

/// Deterministic generator of uniformly random central soft sets; the
/// same seed always yields the same sequence.
class CssSampler {
 public:
  CssSampler(ContextPtr ctx, std::uint64_t seed) : ctx_(std::move(ctx)), engine_(seed) {}

  ObjectSet next_objects() {
    ObjectSet s = ctx_->no_objects();
    fill(s, ctx_->universe_size());
    return s;
  }

  ParamSet next_params() {
    ParamSet s = ctx_->no_params();
    fill(s, ctx_->parameter_count());
    return s;
  }

  CentralSoftSet next() {
    ParamSet central = next_params();
    std::vector<ObjectSet> map;
    map.reserve(ctx_->parameter_count());
    for (std::size_t e = 0; e < ctx_->parameter_count(); ++e) map.push_back(next_objects());
    return CentralSoftSet(ctx_, std::move(central), std::move(map));
  }

  /// A uniform draw from {0, ..., n-1}; n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  const ContextPtr& context() const noexcept { return ctx_; }

 private:
  template <class Tag>
  void fill(IndexSet<Tag>& s, std::size_t domain) {
    for (std::size_t i = 0; i < domain; ++i)
      if (engine_() & 1u) s.set(i);
  }

  ContextPtr ctx_;
  std::mt19937_64 engine_;
};

}  // namespace softset

#endif  // SOFTSET_ENUMERATE_HPP
