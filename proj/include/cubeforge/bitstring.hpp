#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubeforge/graph.hpp"

namespace cubeforge {

/// Fixed-width binary string. Position 0 is the leftmost character of the
/// textual form, and ordering is lexicographic over positions.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t width) : bits_(width, false) {}

  /// Parses a string over {0,1}; throws InputError on anything else.
  static BitString parse(std::string_view text);

  std::size_t width() const { return bits_.size(); }
  bool test(std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value = true) { bits_[i] = value; }
  void flip(std::size_t i) { bits_[i] = !bits_[i]; }
  std::size_t count() const;
  bool none() const { return count() == 0; }

  /// Coordinatewise order: every set position of *this is set in other.
  bool le(const BitString& other) const;

  std::string str() const;

  friend BitString operator^(const BitString& a, const BitString& b);
  friend std::size_t hamming(const BitString& a, const BitString& b);
  friend auto operator<=>(const BitString&, const BitString&) = default;
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<bool> bits_;
};

/// One bit string per vertex, all of the same width.
struct BinaryLabeling {
  int width = 0;
  std::vector<BitString> labels;

  bool le(Vertex a, Vertex b) const { return labels[a].le(labels[b]); }
  /// Vertex carrying the given label, if any.
  std::optional<Vertex> find(const BitString& label) const;
};

}  // namespace cubeforge
