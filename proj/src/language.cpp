#include "tangent/language.hpp"

#include <charconv>
#include <cstdlib>

#include "tangent/automata.hpp"
#include "tangent/derivation.hpp"
#include "tangent/error.hpp"

namespace tangent {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(Errc::CapExceeded, "length " + std::to_string(n) +
                                       " exceeds the enumeration cap " + std::to_string(cap));
  }
}

}  // namespace

LanguageId LanguageId::k_balanced(unsigned k) {
  if (k == 0) throw Error(Errc::DomainError, "k-balanced needs k >= 1");
  return LanguageId(Kind::KBalanced, k);
}

LanguageId LanguageId::parse(std::string_view name) {
  if (name == "balanced") return balanced();
  if (name == "analytic") return analytic();
  if (name == "tangent") return tangent();
  constexpr std::string_view suffix = "balanced";
  if (name.size() > suffix.size() && name.ends_with(suffix)) {
    const std::string_view digits = name.substr(0, name.size() - suffix.size());
    unsigned k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1) {
      return k_balanced(k);
    }
  }
  throw Error(Errc::DomainError, "unknown language '" + std::string(name) + "'");
}

std::string LanguageId::name() const {
  switch (kind_) {
    case Kind::Balanced: return "balanced";
    case Kind::Analytic: return "analytic";
    case Kind::Tangent: return "tangent";
    case Kind::KBalanced: return std::to_string(k_) + "balanced";
  }
  return "?";
}

bool member(const LanguageId& language, const Word& w) {
  switch (language.kind()) {
    case LanguageId::Kind::Balanced: return is_balanced(w);
    case LanguageId::Kind::Analytic: return is_analytic_tangent(w);
    case LanguageId::Kind::Tangent: return is_tangent(w);
    case LanguageId::Kind::KBalanced: return is_k_balanced(w, language.k());
  }
  return false;
}

EnumerationConfig EnumerationConfig::from_env() {
  EnumerationConfig config;
  if (const char* value = std::getenv("TW_ENUM_CAP")) {
    const std::string_view text(value);
    std::size_t cap = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw Error(Errc::DomainError, "TW_ENUM_CAP must be a nonnegative integer");
    }
    config.cap = cap;
  }
  return config;
}

namespace {

// Grows the language tree level by level; `visit(n, level)` returns false to
// stop early.
template <class Visit>
void grow_levels(const LanguageId& language, std::size_t n_max, Visit&& visit) {
  std::vector<Word> level{Word()};
  if (!visit(std::size_t{0}, level)) return;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Word> next;
    // Extending a sorted level letter by letter keeps the next level sorted.
    for (const Word& w : level) {
      for (Letter letter : {0u, 1u}) {
        Word candidate = w;
        candidate.push_back(letter);
        if (member(language, candidate)) next.push_back(std::move(candidate));
      }
    }
    level = std::move(next);
    if (!visit(n, level)) return;
  }
}

}  // namespace

std::vector<std::vector<Word>> enumerate_levels(const LanguageId& language, std::size_t n_max,
                                                const EnumerationConfig& config) {
  check_cap(n_max, config.cap);
  std::vector<std::vector<Word>> levels;
  grow_levels(language, n_max, [&](std::size_t, const std::vector<Word>& level) {
    levels.push_back(level);
    return true;
  });
  return levels;
}

std::vector<Word> enumerate_words(const LanguageId& language, std::size_t n,
                                  const EnumerationConfig& config) {
  auto levels = enumerate_levels(language, n, config);
  return std::move(levels.back());
}

ComplexityProfile complexity_profile(const LanguageId& language, std::size_t n_max,
                                     const EnumerationConfig& config) {
  const auto levels = enumerate_levels(language, n_max, config);
  ComplexityProfile profile{language, {}, {}};
  for (const auto& level : levels) profile.p.push_back(level.size());
  for (std::size_t n = 0; n + 1 < profile.p.size(); ++n) {
    profile.s.push_back(static_cast<std::int64_t>(profile.p[n + 1]) -
                        static_cast<std::int64_t>(profile.p[n]));
  }
  return profile;
}

std::string_view class_name(BispecialClass c) noexcept {
  switch (c) {
    case BispecialClass::NotBispecial: return "not_bispecial";
    case BispecialClass::Weak: return "weak";
    case BispecialClass::Ordinary: return "ordinary";
    case BispecialClass::Strong: return "strong";
  }
  return "?";
}

BispecialClass classify_bispecial(const LanguageId& language, const Word& w) {
  const Word zero = Word::parse("0"), one = Word::parse("1");
  if (!member(language, zero + w) || !member(language, one + w) ||
      !member(language, w + zero) || !member(language, w + one)) {
    return BispecialClass::NotBispecial;
  }
  int extensions = 0;
  for (const Word* a : {&zero, &one}) {
    for (const Word* b : {&zero, &one}) {
      if (member(language, *a + w + *b)) ++extensions;
    }
  }
  switch (extensions) {
    case 2: return BispecialClass::Weak;
    case 3: return BispecialClass::Ordinary;
    case 4: return BispecialClass::Strong;
    default:
      // Fewer than two extensions cannot happen in an extendable language.
      throw Error(Errc::DomainError, "word " + w.str() + " has " + std::to_string(extensions) +
                                         " two-sided extensions in " + language.name());
  }
}

BispecialCensus bispecial_census(const LanguageId& language, std::size_t n,
                                 const EnumerationConfig& config) {
  check_cap(n + 2, config.cap);
  BispecialCensus census{language, n, {}, {}, {}};
  for (const Word& w : enumerate_words(language, n, config)) {
    switch (classify_bispecial(language, w)) {
      case BispecialClass::Weak: census.weak.push_back(w); break;
      case BispecialClass::Ordinary: census.ordinary.push_back(w); break;
      case BispecialClass::Strong: census.strong.push_back(w); break;
      case BispecialClass::NotBispecial: break;
    }
  }
  return census;
}

ThinDiagonalObservation observe_thin_diagonal(const BispecialCensus& census) {
  ThinDiagonalObservation obs{census.length};
  for (const Word& w : census.weak) obs.weak += is_thin_diagonal(w);
  for (const Word& w : census.ordinary) obs.ordinary += is_thin_diagonal(w);
  for (const Word& w : census.strong) obs.strong += is_thin_diagonal(w);
  return obs;
}

InclusionAudit inclusion_audit(std::size_t n_max, const EnumerationConfig& config) {
  check_cap(n_max, config.cap);
  const LanguageId chain[] = {LanguageId::balanced(), LanguageId::analytic(),
                              LanguageId::tangent(), LanguageId::k_balanced(2)};
  InclusionAudit audit{n_max, {}};
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
    const LanguageId& smaller = chain[i];
    const LanguageId& larger = chain[i + 1];
    InclusionCheck check{smaller, larger, std::nullopt, 0};
    grow_levels(smaller, n_max, [&](std::size_t, const std::vector<Word>& level) {
      for (const Word& w : level) {
        ++check.members_checked;
        if (!member(larger, w)) {
          throw Error(Errc::ChainViolation, w.str() + " is in " + smaller.name() +
                                                " but not in " + larger.name());
        }
      }
      return true;
    });
    grow_levels(larger, n_max, [&](std::size_t, const std::vector<Word>& level) {
      for (const Word& w : level) {
        if (!member(smaller, w)) {
          check.witness = w;
          return false;
        }
      }
      return true;
    });
    audit.checks.push_back(std::move(check));
  }
  return audit;
}

std::optional<std::size_t> splits_into_two_balanced(const Word& w) {
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (is_balanced(w.slice(0, i)) && is_balanced(w.slice(i))) return i;
  }
  return std::nullopt;
}

}  // namespace tangent
