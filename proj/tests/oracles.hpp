#pragma once

// Brute-force reference routes used only by the tests. Nothing here calls
// the library's algorithms beyond Word construction.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tangent/automata.hpp"
#include "tangent/word.hpp"

namespace oracle {

using tangent::Word;

inline Word word_from_bits(std::uint64_t bits, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) s[i] = ((bits >> (n - 1 - i)) & 1) ? '1' : '0';
  return Word::parse(s);
}

/// All 2^n words of length n in lexicographic order.
inline std::vector<Word> all_words(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(word_from_bits(b, n));
  return out;
}

/// Every word of length 0..n_max.
template <class F>
void for_all_words_up_to(std::size_t n_max, F&& f) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) f(word_from_bits(b, n));
  }
}

inline Word random_word(std::mt19937_64& rng, std::size_t n) {
  std::string s(n, '0');
  for (auto& c : s) c = (rng() & 1) ? '1' : '0';
  return Word::parse(s);
}

/// Pairwise comparison of all equal-length factors.
inline bool k_balanced_by_pairs(const Word& w, unsigned k) {
  const std::string& s = w.str();
  for (std::size_t m = 1; m <= s.size(); ++m) {
    for (std::size_t i = 0; i + m <= s.size(); ++i) {
      for (std::size_t j = 0; j + m <= s.size(); ++j) {
        long a = 0, b = 0;
        for (std::size_t t = 0; t < m; ++t) {
          a += s[i + t] == '1';
          b += s[j + t] == '1';
        }
        if (std::labs(a - b) > static_cast<long>(k)) return false;
      }
    }
  }
  return true;
}

/// Tries each start state separately.
inline bool recognizes_by_runs(const tangent::PartialDFA& a, const Word& w) {
  for (tangent::State s = 0; s < a.state_count(); ++s) {
    tangent::State cur = s;
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) {
      const auto next = a.step(cur, w[i]);
      ok = next.has_value();
      if (ok) cur = *next;
    }
    if (ok) return true;
  }
  return false;
}

inline std::uint64_t phi_by_gcd(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

/// Coding of the open segment to (p,q) from floating-point crossing
/// parameters; reliable for small coprime p, q.
inline Word segment_coding_by_events(std::uint64_t p, std::uint64_t q) {
  std::vector<std::pair<double, char>> events;
  for (std::uint64_t i = 1; i < p; ++i) events.push_back({double(i) / double(p), '0'});
  for (std::uint64_t j = 1; j < q; ++j) events.push_back({double(j) / double(q), '1'});
  std::sort(events.begin(), events.end());
  std::string s;
  for (const auto& e : events) s += e.second;
  return Word::parse(s);
}

}  // namespace oracle
