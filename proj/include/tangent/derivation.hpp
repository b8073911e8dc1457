#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tangent/word.hpp"

namespace tangent {

enum class RemovalRule { RemovedZeros, RemovedOnes };

std::string_view rule_name(RemovalRule rule) noexcept;
inline Letter removed_letter(RemovalRule rule) noexcept {
  return rule == RemovalRule::RemovedZeros ? 0u : 1u;
}

struct Desubstitution {
  Word word;
  RemovalRule rule;
};

/// Rule that δ applies to `w`: zeros when 00 occurs, ones when 11 occurs,
/// and zeros-if-any-zero otherwise. Empty when w is ε or contains both.
std::optional<RemovalRule> desubstitution_rule(const Word& w) noexcept;

/// One step of δ: remove one letter from every run of the non-isolated
/// letter. Throws EmptyWord on ε and NotDesubstitutable when both 00 and 11
/// occur.
Desubstitution desubstitute(const Word& w);

/// δ with the removal rule imposed. Removing zeros requires that 11 does not
/// occur and removing ones that 00 does not occur (NotDesubstitutable).
Word desubstitute(const Word& w, RemovalRule rule);

struct AcceleratedDesubstitution {
  Word word;
  RemovalRule rule;
  std::size_t shortest_inner_run;
};

/// Removes m letters (or the whole run, if shorter) from every run of the
/// non-isolated letter, where m is the length of its shortest inner run.
/// Throws NoInnerRun when that letter has no inner run.
AcceleratedDesubstitution desubstitute_accelerated(const Word& w);

struct DerivationStep {
  Word input;
  RemovalRule rule;
  Word output;
};

struct DerivationTrace {
  std::vector<DerivationStep> steps;
  Word final;
};

enum class DerivationMode { Plain, Accelerated };

/// Iterates δ until the word is ε or contains both 00 and 11. Accelerated
/// mode takes accelerated steps, falling back to δ when there is no inner run.
DerivationTrace derive(const Word& w, DerivationMode mode = DerivationMode::Plain);

/// The derivated word d(w) without recording the trace.
Word derivated_word(const Word& w);

enum class MorphismId { Sigma0, Sigma1 };

/// SIGMA0 = (0 -> 0, 1 -> 10), SIGMA1 = (0 -> 01, 1 -> 1).
Word apply_morphism(MorphismId m, const Word& w);

bool is_balanced(const Word& w);
bool is_tangent(const Word& w);
bool is_analytic_tangent(const Word& w);

}  // namespace tangent
