#pragma once

// Shared vocabulary: integer vectors, the type A Cartan matrix, and errors.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crystal {

using IntVec = std::vector<int>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cartan matrix entry c_{i,j} of sl_n (colors are 1-based).
constexpr int cartan(int i, int j) noexcept {
  if (i == j) return 2;
  if (i - j == 1 || j - i == 1) return -1;
  return 0;
}

inline long dot(const IntVec& lhs, const IntVec& rhs) {
  if (lhs.size() != rhs.size()) throw Error("dot: length mismatch");
  long acc = 0;
  for (std::size_t k = 0; k < lhs.size(); ++k) acc += static_cast<long>(lhs[k]) * rhs[k];
  return acc;
}

inline IntVec add(IntVec lhs, const IntVec& rhs) {
  if (lhs.size() != rhs.size()) throw Error("add: length mismatch");
  for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] += rhs[k];
  return lhs;
}

inline IntVec sub(IntVec lhs, const IntVec& rhs) {
  if (lhs.size() != rhs.size()) throw Error("sub: length mismatch");
  for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
  return lhs;
}

inline IntVec unit_vector(std::size_t length, std::size_t position) {
  IntVec v(length, 0);
  v.at(position) = 1;
  return v;
}

inline bool nonnegative(const IntVec& v) {
  for (int c : v)
    if (c < 0) return false;
  return true;
}

inline std::string join(const IntVec& v, std::string_view sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

/// Parses "2,1,-3" (whitespace tolerated). An empty string yields an empty vector.
inline IntVec parse_int_list(std::string_view text) {
  IntVec out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(pos, comma - pos));
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw Error("cannot parse integer list '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = v.size();
    for (int c : v) h ^= std::hash<int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace crystal
