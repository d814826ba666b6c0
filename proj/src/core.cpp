#include "segsub/core.hpp"

#include <algorithm>

#include "segsub/segmatch.hpp"

namespace segsub {

unsigned char Text::at(std::size_t pos) const {
  if (pos < 1 || pos > symbols_.size())
    throw std::out_of_range("text position " + std::to_string(pos) + " outside 1.." +
                            std::to_string(symbols_.size()));
  return static_cast<unsigned char>(symbols_[pos - 1]);
}

std::string_view Text::slice(std::size_t i, std::size_t j) const {
  if (i > j) return {};
  if (i < 1 || j > symbols_.size()) throw std::out_of_range("slice outside text");
  return std::string_view(symbols_).substr(i - 1, j - i + 1);
}

Text Text::reversed() const { return Text(std::string(symbols_.rbegin(), symbols_.rend())); }

std::string Segmentation::concatenation() const {
  std::string out;
  out.reserve(length());
  for (const auto& u : segments) out += u;
  return out;
}

std::size_t Segmentation::length() const noexcept {
  std::size_t total = 0;
  for (const auto& u : segments) total += u.size();
  return total;
}

bool verify_embedding(const Text& t, const Embedding& e) {
  const auto& segments = e.segmentation.segments;
  if (segments.empty() || segments.size() != e.starts.size()) return false;

  const std::size_t n = t.size();
  std::size_t next_free = 1;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const std::size_t start = e.starts[k];
    const std::string& u = segments[k];
    if (start < next_free || start > n + 1) return false;
    if (u.size() > n + 1 - start) return false;
    if (t.view().substr(start - 1, u.size()) != u) return false;
    next_free = start + u.size();
  }
  return true;
}

bool is_segmental_subsequence(const Text& t, const Text& p, Budget f) {
  const auto needed = min_segments(t, p);
  return needed.has_value() && *needed <= f.value();
}

}  // namespace segsub
