#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "semiring_lab/errors.hpp"

namespace semiring_lab {

/// A subset of one structure's carrier, stored as a 64-bit mask.
/// Bit i set means element i is a member, so carriers are capped at
/// order 64. A subset remembers which structure it belongs to; the
/// operations that consume subsets reject foreign owners.
class SubsetHandle {
 public:
  SubsetHandle() = default;
  SubsetHandle(const void* owner, std::uint64_t bits) : owner_(owner), bits_(bits) {}

  static SubsetHandle of(const void* owner, std::initializer_list<int> elements) {
    SubsetHandle s(owner, 0);
    for (int e : elements) s.insert(e);
    return s;
  }
  static SubsetHandle of(const void* owner, const std::vector<int>& elements) {
    SubsetHandle s(owner, 0);
    for (int e : elements) s.insert(e);
    return s;
  }
  static SubsetHandle full(const void* owner, int size) {
    return SubsetHandle(owner, size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
  }
  static SubsetHandle single(const void* owner, int element) {
    return SubsetHandle(owner, std::uint64_t{1} << element);
  }

  const void* owner() const { return owner_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int x) const { return (bits_ >> x) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  void insert(int x) { bits_ |= std::uint64_t{1} << x; }
  bool subset_of(const SubsetHandle& other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(const SubsetHandle& other) const { return (bits_ & other.bits_) != 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Renders as "{0,2,4}"; the empty subset renders as "{}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += '}';
    return out;
  }

  friend bool operator==(const SubsetHandle& a, const SubsetHandle& b) {
    return a.owner_ == b.owner_ && a.bits_ == b.bits_;
  }

 private:
  const void* owner_ = nullptr;
  std::uint64_t bits_ = 0;
};

/// Calls f(i) for every set bit of `bits`, ascending.
template <typename F>
void for_each_bit(std::uint64_t bits, F&& f) {
  for (std::uint64_t b = bits; b; b &= b - 1) f(std::countr_zero(b));
}

inline void require_owner(const SubsetHandle& s, const void* owner, const char* what) {
  if (s.owner() != owner)
    throw OwnerMismatch(std::string(what) + ": subset belongs to a different structure");
}

}  // namespace semiring_lab
