#pragma once

// Indices k = (k_1, ..., k_r) and their weight / depth / height grading.

#include <compare>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmhs {

class Index {
 public:
  /// The empty index (depth 0); nested sums over it are 1 by convention.
  Index() = default;
  explicit Index(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int k : parts_)
      if (k < 1) throw std::invalid_argument("index parts must be positive");
  }
  Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

  /// Parses "k1,k2,...". The empty string is rejected.
  static Index parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    if (text.empty()) throw std::invalid_argument("empty index");
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = text.substr(pos, comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok.empty() || tok.size() > 6) throw std::invalid_argument("malformed index: '" + std::string(text) + "'");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed index: '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
      }
      parts.push_back(v);
      pos = comma + 1;
    }
    return Index(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  int weight() const {
    int w = 0;
    for (int k : parts_) w += k;
    return w;
  }
  int depth() const { return static_cast<int>(parts_.size()); }
  int height() const {
    int h = 0;
    for (int k : parts_) h += k >= 2 ? 1 : 0;
    return h;
  }
  /// Admissible means k_1 >= 2.
  bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

  /// (k_2, ..., k_r).
  Index tail() const { return parts_.empty() ? Index{} : Index(std::vector<int>(parts_.begin() + 1, parts_.end())); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

/// {k}^r.
inline Index repeated(int k, int r) { return Index(std::vector<int>(static_cast<std::size_t>(r), k)); }

/// Concatenation.
inline Index concat(const Index& a, const Index& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  return Index(std::move(p));
}

/// Weight k, depth r, height s. Non-empty iff r >= s >= 0 and k >= r + s
/// (and, for r = 0, k = s = 0).
struct IndexProfile {
  int weight = 0;
  int depth = 0;
  int height = 0;

  bool admits_indices() const {
    if (depth == 0) return weight == 0 && height == 0;
    return depth >= height && height >= 0 && weight >= depth + height;
  }
  friend bool operator==(const IndexProfile&, const IndexProfile&) = default;
};

/// All compositions of k into r positive parts, optionally filtered by height
/// and admissibility, in descending lexicographic order. |I(k, r)| = C(k-1, r-1).
inline std::vector<Index> enumerate(int k, int r, std::optional<int> height = std::nullopt, bool admissible = false) {
  std::vector<Index> out;
  if (k < 0 || r < 0) return out;
  if (r == 0) {
    if (k == 0 && height.value_or(0) == 0 && !admissible) out.emplace_back();
    return out;
  }
  std::vector<int> parts(static_cast<std::size_t>(r), 1);
  auto emit = [&]() {
    Index idx(parts);
    if (height && idx.height() != *height) return;
    if (admissible && !idx.admissible()) return;
    out.push_back(std::move(idx));
  };
  // Depth-first, largest first part first.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    const int slots_after = r - static_cast<int>(pos) - 1;
    if (slots_after == 0) {
      parts[pos] = remaining;
      emit();
      return;
    }
    for (int v = remaining - slots_after; v >= 1; --v) {
      parts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (k >= r) rec(rec, 0, k);
  return out;
}

inline std::vector<Index> enumerate(const IndexProfile& p, bool admissible = false) {
  return enumerate(p.weight, p.depth, p.height, admissible);
}

}  // namespace qmhs
