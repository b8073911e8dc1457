#include "tangent/word.hpp"

#include <algorithm>

#include "tangent/error.hpp"

namespace tangent {

Word Word::parse(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw InvalidCharacter(i);
  }
  return Word(std::string(text));
}

Word Word::repeat(Letter letter, std::size_t count) {
  return Word(std::string(count, static_cast<char>('0' + letter)));
}

std::size_t Word::count(Letter letter) const noexcept {
  return static_cast<std::size_t>(
      std::count(text_.begin(), text_.end(), static_cast<char>('0' + letter)));
}

Word Word::reversed() const { return Word(std::string(text_.rbegin(), text_.rend())); }

Word Word::complemented() const {
  std::string out = text_;
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return Word(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

RunDecomposition runs(const Word& w) {
  RunDecomposition out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (out.empty() || out.back().letter != w[i]) {
      out.push_back({w[i], 1});
    } else {
      ++out.back().length;
    }
  }
  return out;
}

Word concatenate(const RunDecomposition& decomposition) {
  Word out;
  for (const Run& r : decomposition) out += Word::repeat(r.letter, r.length);
  return out;
}

std::set<Word> factors(const Word& w, std::size_t n) {
  if (n > w.size()) {
    throw Error(Errc::LengthOutOfRange, "factor length " + std::to_string(n) +
                                            " exceeds word length " +
                                            std::to_string(w.size()));
  }
  std::set<Word> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.slice(i, n));
  return out;
}

bool is_k_balanced(const Word& w, unsigned k) {
  const std::size_t n = w.size();
  std::vector<std::size_t> ones(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + w[i];
  // For every window length m, the ones-count over all windows must span at
  // most k.
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t lo = ones[m], hi = ones[m];
    for (std::size_t i = 1; i + m <= n; ++i) {
      const std::size_t c = ones[i + m] - ones[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > k) return false;
  }
  return true;
}

}  // namespace tangent
