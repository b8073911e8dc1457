#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangent/word.hpp"

namespace tangent {

/// One of the factorial languages handled by the toolkit.
class LanguageId {
 public:
  enum class Kind { Balanced, Analytic, Tangent, KBalanced };

  static LanguageId balanced() { return LanguageId(Kind::Balanced, 1); }
  static LanguageId analytic() { return LanguageId(Kind::Analytic, 0); }
  static LanguageId tangent() { return LanguageId(Kind::Tangent, 0); }
  /// Throws DomainError for k = 0.
  static LanguageId k_balanced(unsigned k);

  /// Accepts "balanced", "analytic", "tangent" and "<k>balanced".
  static LanguageId parse(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  unsigned k() const noexcept { return k_; }
  std::string name() const;

  friend bool operator==(const LanguageId&, const LanguageId&) = default;

 private:
  LanguageId(Kind kind, unsigned k) : kind_(kind), k_(k) {}

  Kind kind_;
  unsigned k_;
};

bool member(const LanguageId& language, const Word& w);

struct EnumerationConfig {
  static constexpr std::size_t kDefaultCap = 24;

  std::size_t cap = kDefaultCap;

  /// Default cap, overridden by the TW_ENUM_CAP environment variable.
  static EnumerationConfig from_env();
};

/// Members of length n in lexicographic order, grown by prefix extension.
/// Throws CapExceeded if n > config.cap.
std::vector<Word> enumerate_words(const LanguageId& language, std::size_t n,
                                  const EnumerationConfig& config = {});

/// Levels 0..n_max of the same search.
std::vector<std::vector<Word>> enumerate_levels(const LanguageId& language, std::size_t n_max,
                                                const EnumerationConfig& config = {});

struct ComplexityProfile {
  LanguageId language;
  std::vector<std::uint64_t> p;  // p_0..p_N
  std::vector<std::int64_t> s;   // s_n = p_{n+1} - p_n
};

ComplexityProfile complexity_profile(const LanguageId& language, std::size_t n_max,
                                     const EnumerationConfig& config = {});

enum class BispecialClass { NotBispecial, Weak, Ordinary, Strong };

std::string_view class_name(BispecialClass c) noexcept;

BispecialClass classify_bispecial(const LanguageId& language, const Word& w);

struct BispecialCensus {
  LanguageId language;
  std::size_t length;
  std::vector<Word> weak;
  std::vector<Word> ordinary;
  std::vector<Word> strong;

  std::size_t wb() const noexcept { return weak.size(); }
  std::size_t ob() const noexcept { return ordinary.size(); }
  std::size_t sb() const noexcept { return strong.size(); }
};

/// Classifies every member of length n. Requires n + 2 <= config.cap.
BispecialCensus bispecial_census(const LanguageId& language, std::size_t n,
                                 const EnumerationConfig& config = {});

/// Classes of the thin-diagonal bispecials found by a census.
struct ThinDiagonalObservation {
  std::size_t length;
  std::size_t weak = 0;
  std::size_t ordinary = 0;
  std::size_t strong = 0;
};

ThinDiagonalObservation observe_thin_diagonal(const BispecialCensus& census);

struct InclusionCheck {
  LanguageId smaller;
  LanguageId larger;
  /// Lexicographically least among the shortest words of larger \ smaller.
  std::optional<Word> witness;
  std::size_t members_checked = 0;
};

struct InclusionAudit {
  std::size_t n_max;
  std::vector<InclusionCheck> checks;
};

/// Checks balanced ⊆ analytic ⊆ tangent ⊆ 2-balanced on every member up to
/// n_max. Throws ChainViolation if some member of a smaller class is missing
/// from the next one.
InclusionAudit inclusion_audit(std::size_t n_max, const EnumerationConfig& config = {});

/// Smallest i such that w[0, i) and w[i, |w|) are both balanced.
std::optional<std::size_t> splits_into_two_balanced(const Word& w);

}  // namespace tangent
