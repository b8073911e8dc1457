#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tangent {

/// A right move (crossing a vertical grid line) is 0, an up move is 1.
using Letter = unsigned;

/// Finite binary word. Stored as its ASCII interchange form, so slicing and
/// factor search reduce to string operations and ordering is lexicographic.
class Word {
 public:
  Word() = default;

  /// Throws InvalidCharacter for anything other than '0' and '1'.
  static Word parse(std::string_view text);

  static Word repeat(Letter letter, std::size_t count);

  std::size_t size() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }

  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>(text_[i] - '0');
  }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return (*this)[size() - 1]; }

  const std::string& str() const noexcept { return text_; }
  std::string_view view() const noexcept { return text_; }

  /// Factor of length `len` starting at `pos` (clamped like substr).
  Word slice(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(text_.substr(pos, len));
  }

  std::size_t count(Letter letter) const noexcept;
  bool contains(std::string_view factor) const noexcept {
    return text_.find(factor) != std::string::npos;
  }

  Word reversed() const;
  Word complemented() const;

  void push_back(Letter letter) { text_.push_back(static_cast<char>('0' + letter)); }
  Word& operator+=(const Word& other) {
    text_ += other.text_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::string text) : text_(std::move(text)) {}

  std::string text_;
};

inline Word parse_word(std::string_view text) { return Word::parse(text); }

std::ostream& operator<<(std::ostream& os, const Word& w);

struct Run {
  Letter letter;
  std::size_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs in order. Runs other than the first and last are inner runs.
using RunDecomposition = std::vector<Run>;

RunDecomposition runs(const Word& w);
Word concatenate(const RunDecomposition& decomposition);

inline bool is_inner_run(std::size_t index, std::size_t run_count) noexcept {
  return index > 0 && index + 1 < run_count;
}

/// Distinct length-n factors, sorted. Throws LengthOutOfRange if n > |w|.
std::set<Word> factors(const Word& w, std::size_t n);

/// Any two equal-length factors differ in their number of 1s by at most k.
bool is_k_balanced(const Word& w, unsigned k);

}  // namespace tangent

template <>
struct std::hash<tangent::Word> {
  std::size_t operator()(const tangent::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
