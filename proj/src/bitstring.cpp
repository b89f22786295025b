#include "cubeforge/bitstring.hpp"

#include <algorithm>

#include "cubeforge/error.hpp"

namespace cubeforge {

BitString BitString::parse(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.bits_[i] = true;
    } else if (text[i] != '0') {
      throw InputError("not a binary string: " + std::string(text));
    }
  }
  return out;
}

std::size_t BitString::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool BitString::le(const BitString& other) const {
  if (width() != other.width()) throw InputError("bit strings of different width");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

std::string BitString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

BitString operator^(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) throw InputError("bit strings of different width");
  BitString out(a.width());
  for (std::size_t i = 0; i < a.width(); ++i) out.bits_[i] = a.bits_[i] != b.bits_[i];
  return out;
}

std::size_t hamming(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) throw InputError("bit strings of different width");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.width(); ++i) d += a.bits_[i] != b.bits_[i] ? 1 : 0;
  return d;
}

std::optional<Vertex> BinaryLabeling::find(const BitString& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

}  // namespace cubeforge
