#pragma once

#include <cstdint>
#include <vector>

namespace gnc {

/* Subset of {0, ..., 63} packed into a word.  Faces, facets and cores are
   all index sets; keeping them as bitmasks makes the lattice operations
   (meet, containment, enumeration) cheap enough that nothing downstream
   has to think about them. */
class IndexSet {
 public:
  constexpr IndexSet() : bits_(0) {}
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet single(int i) { return IndexSet(std::uint64_t{1} << i); }
  static constexpr IndexSet all_below(int n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static IndexSet from_indices(const std::vector<int>& idx) {
    IndexSet s;
    for (int i : idx) s = s.with(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr IndexSet with(int i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr IndexSet without(int i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }

  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool operator==(const IndexSet&) const = default;
  constexpr bool operator<(IndexSet o) const { return bits_ < o.bits_; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  /* iteration over set bits, lowest first */
  class iterator {
   public:
    explicit iterator(std::uint64_t b) : b_(b) {}
    int operator*() const { return __builtin_ctzll(b_); }
    iterator& operator++() { b_ &= b_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return b_ != o.b_; }
   private:
    std::uint64_t b_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_;
};

}  // namespace gnc
