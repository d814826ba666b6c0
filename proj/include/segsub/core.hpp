#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace segsub {

/// Immutable byte string. Positions in the public API are 1-based (position
/// 1 is the first symbol); operator[] is the raw 0-based accessor used by the
/// solvers.
class Text {
 public:
  Text() = default;
  Text(std::string symbols) : symbols_(std::move(symbols)) {}
  Text(std::string_view symbols) : symbols_(symbols) {}
  Text(const char* symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  unsigned char operator[](std::size_t offset) const noexcept {
    return static_cast<unsigned char>(symbols_[offset]);
  }

  /// Symbol at 1-based position `pos`; throws std::out_of_range.
  unsigned char at(std::size_t pos) const;

  /// T[i..j], 1-based inclusive. Empty when i > j.
  std::string_view slice(std::size_t i, std::size_t j) const;

  std::string_view view() const noexcept { return symbols_; }
  const std::string& str() const noexcept { return symbols_; }
  Text reversed() const;

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::string symbols_;
};

/// Segment budget f >= 1.
class Budget {
 public:
  explicit Budget(long long f) : value_(checked(f)) {}
  std::size_t value() const noexcept { return value_; }

 private:
  static std::size_t checked(long long f) {
    if (f < 1) throw std::invalid_argument("segment budget must be positive, got " + std::to_string(f));
    return static_cast<std::size_t>(f);
  }
  std::size_t value_;
};

struct Segmentation {
  std::vector<std::string> segments;

  std::size_t size() const noexcept { return segments.size(); }
  std::string concatenation() const;
  std::size_t length() const noexcept;
};

/// A segmentation together with the 1-based start of every segment in some
/// text. Empty segments carry the position where they would start.
struct Embedding {
  Segmentation segmentation;
  std::vector<std::size_t> starts;
};

/// True iff `e` describes an exact decomposition t = p u1 g1 ... u_f s.
/// Malformed inputs (length mismatch, out-of-range or overlapping positions)
/// yield false.
bool verify_embedding(const Text& t, const Embedding& e);

/// Whether p has an f-segmentation that embeds into t.
bool is_segmental_subsequence(const Text& t, const Text& p, Budget f);

}  // namespace segsub
