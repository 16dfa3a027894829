#ifndef SOFTSET_INDEX_SET_HPP
#define SOFTSET_INDEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace softset {

/// Subset of a fixed, ordered domain, stored as position-indexed bits.
/// ObjectSet indexes a context's universe, ParamSet its parameter list;
/// the tag parameter keeps the two axes from mixing.
///
/// Binary operations require both operands to range over the same domain
/// size and throw ContextMismatch otherwise.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(std::size_t domain)
      : domain_(domain), words_(word_count(domain), 0) {}

  static IndexSet full(std::size_t domain) {
    IndexSet s(domain);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.mask_top();
    return s;
  }

  /// Decodes the low `domain` bits of `bits` (domain must be <= 64).
  static IndexSet from_bits(std::size_t domain, std::uint64_t bits) {
    assert(domain <= 64);
    IndexSet s(domain);
    if (!s.words_.empty()) s.words_[0] = bits;
    s.mask_top();
    return s;
  }

  std::size_t domain_size() const noexcept { return domain_; }

  bool test(std::size_t i) const {
    assert(i < domain_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  IndexSet& set(std::size_t i) {
    assert(i < domain_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return *this;
  }

  IndexSet& reset(std::size_t i) {
    assert(i < domain_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    return *this;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool subset_of(const IndexSet& other) const {
    require_same_domain(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  bool intersects(const IndexSet& other) const {
    require_same_domain(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  IndexSet operator|(const IndexSet& other) const {
    require_same_domain(other);
    IndexSet out(domain_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      out.words_[k] = words_[k] | other.words_[k];
    return out;
  }

  IndexSet operator&(const IndexSet& other) const {
    require_same_domain(other);
    IndexSet out(domain_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      out.words_[k] = words_[k] & other.words_[k];
    return out;
  }

  /// Set difference: elements of *this not in `other`.
  IndexSet operator-(const IndexSet& other) const {
    require_same_domain(other);
    IndexSet out(domain_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      out.words_[k] = words_[k] & ~other.words_[k];
    return out;
  }

  IndexSet complemented() const {
    IndexSet out(domain_);
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
    out.mask_top();
    return out;
  }

  bool operator==(const IndexSet& other) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t bits = words_[k];
      while (bits != 0) {
        f((k << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// The low word of the bit pattern (domain must be <= 64).
  std::uint64_t low_bits() const {
    assert(domain_ <= 64);
    return words_.empty() ? 0 : words_[0];
  }

 private:
  static std::size_t word_count(std::size_t domain) { return (domain + 63) >> 6; }

  void mask_top() {
    if (domain_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (domain_ % 64)) - 1;
  }

  void require_same_domain(const IndexSet& other) const {
    if (domain_ != other.domain_)
      raise(Errc::context_mismatch, "index sets range over different domains");
  }

  std::size_t domain_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ObjectTag {};
struct ParamTag {};

using ObjectSet = IndexSet<ObjectTag>;
using ParamSet = IndexSet<ParamTag>;

}  // namespace softset

#endif  // SOFTSET_INDEX_SET_HPP
