#ifndef RSL_BITSET_HPP
#define RSL_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsl {

/// Thrown on contract violations (size mismatches, bad input, caps).
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A subset of a fixed finite universe, stored as a bit-vector.
/// Element i of the universe corresponds to bit i.
class SubsetMask {
 public:
  SubsetMask() = default;

  explicit SubsetMask(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static SubsetMask full(std::size_t universe_size) {
    SubsetMask m(universe_size);
    for (auto& w : m.words_) w = ~std::uint64_t{0};
    m.trim();
    return m;
  }

  static SubsetMask singleton(std::size_t universe_size, std::size_t i) {
    SubsetMask m(universe_size);
    m.set(i);
    return m;
  }

  /// Low 64 subset bits from an integer; used by exhaustive subset sweeps.
  static SubsetMask from_bits(std::size_t universe_size, std::uint64_t bits) {
    if (universe_size > 64) throw error("from_bits: universe too large");
    SubsetMask m(universe_size);
    if (!m.words_.empty()) m.words_[0] = bits;
    m.trim();
    return m;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void set(std::size_t i) {
    check_index(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void reset(std::size_t i) {
    check_index(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !none(); }

  SubsetMask operator&(const SubsetMask& o) const {
    SubsetMask r = checked_copy(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  SubsetMask operator|(const SubsetMask& o) const {
    SubsetMask r = checked_copy(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  SubsetMask& operator&=(const SubsetMask& o) { return *this = *this & o; }
  SubsetMask& operator|=(const SubsetMask& o) { return *this = *this | o; }

  SubsetMask complement() const {
    SubsetMask r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  SubsetMask minus(const SubsetMask& o) const {
    SubsetMask r = checked_copy(o);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  bool is_subset_of(const SubsetMask& o) const {
    check_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const SubsetMask& o) const {
    check_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const SubsetMask& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const SubsetMask& o) const { return !(*this == o); }

  /// Lexicographic on the element sequence b0,b1,... with 0 < 1, so the
  /// earliest element acts as the most significant digit. Canonical order
  /// for bases, lattice elements, and CLI output.
  int compare(const SubsetMask& o) const {
    check_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(diff));
        return ((words_[i] >> bit) & 1u) ? 1 : -1;
      }
    }
    return 0;
  }

  bool operator<(const SubsetMask& o) const { return compare(o) < 0; }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> v;
    for_each([&](std::size_t i) { v.push_back(i); });
    return v;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * 64 + bit);
        w &= w - 1;
      }
    }
  }

  /// Smallest member, or size() if empty.
  std::size_t first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return size_;
  }

 private:
  void trim() {
    std::size_t rem = size_ % 64;
    if (rem && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  void check_index(std::size_t i) const {
    if (i >= size_) throw error("SubsetMask: index " + std::to_string(i) + " out of range");
  }

  void check_size(const SubsetMask& o) const {
    if (size_ != o.size_) throw error("SubsetMask: universe size mismatch");
  }

  SubsetMask checked_copy(const SubsetMask& o) const {
    check_size(o);
    return SubsetMask(size_);
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rsl

#endif
