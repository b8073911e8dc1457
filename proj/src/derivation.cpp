#include "tangent/derivation.hpp"

#include <algorithm>
#include <limits>

#include "tangent/automata.hpp"
#include "tangent/error.hpp"

namespace tangent {

namespace {

bool has_both_squares(const Word& w) noexcept {
  return w.contains("00") && w.contains("11");
}

bool rule_permitted(const Word& w, RemovalRule rule) noexcept {
  return rule == RemovalRule::RemovedZeros ? !w.contains("11") : !w.contains("00");
}

// Removes up to `amount` letters from every run of `letter`.
Word shorten_runs(const Word& w, Letter letter, std::size_t amount) {
  RunDecomposition rs = runs(w);
  for (Run& r : rs) {
    if (r.letter == letter) r.length -= std::min(amount, r.length);
  }
  std::erase_if(rs, [](const Run& r) { return r.length == 0; });
  return concatenate(rs);
}

}  // namespace

std::string_view rule_name(RemovalRule rule) noexcept {
  return rule == RemovalRule::RemovedZeros ? "RemovedZeros" : "RemovedOnes";
}

std::optional<RemovalRule> desubstitution_rule(const Word& w) noexcept {
  if (w.empty()) return std::nullopt;
  const bool zeros = w.contains("00");
  const bool ones = w.contains("11");
  if (zeros && ones) return std::nullopt;
  if (zeros) return RemovalRule::RemovedZeros;
  if (ones) return RemovalRule::RemovedOnes;
  return w.count(0) > 0 ? RemovalRule::RemovedZeros : RemovalRule::RemovedOnes;
}

Desubstitution desubstitute(const Word& w) {
  if (w.empty()) throw Error(Errc::EmptyWord, "cannot desubstitute the empty word");
  const auto rule = desubstitution_rule(w);
  if (!rule) throw Error(Errc::NotDesubstitutable, w.str() + " contains both 00 and 11");
  return {shorten_runs(w, removed_letter(*rule), 1), *rule};
}

Word desubstitute(const Word& w, RemovalRule rule) {
  if (w.empty()) throw Error(Errc::EmptyWord, "cannot desubstitute the empty word");
  if (!rule_permitted(w, rule)) {
    throw Error(Errc::NotDesubstitutable,
                std::string(rule_name(rule)) + " is not allowed on " + w.str());
  }
  return shorten_runs(w, removed_letter(rule), 1);
}

AcceleratedDesubstitution desubstitute_accelerated(const Word& w) {
  if (w.empty()) throw Error(Errc::EmptyWord, "cannot desubstitute the empty word");
  const auto rule = desubstitution_rule(w);
  if (!rule) throw Error(Errc::NotDesubstitutable, w.str() + " contains both 00 and 11");
  const Letter letter = removed_letter(*rule);
  const RunDecomposition rs = runs(w);
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].letter == letter && is_inner_run(i, rs.size())) {
      shortest = std::min(shortest, rs[i].length);
    }
  }
  if (shortest == std::numeric_limits<std::size_t>::max()) {
    throw Error(Errc::NoInnerRun, w.str() + " has no inner run of the non-isolated letter");
  }
  return {shorten_runs(w, letter, shortest), *rule, shortest};
}

DerivationTrace derive(const Word& w, DerivationMode mode) {
  DerivationTrace trace;
  Word current = w;
  while (!current.empty() && !has_both_squares(current)) {
    Desubstitution step;
    if (mode == DerivationMode::Accelerated) {
      try {
        auto acc = desubstitute_accelerated(current);
        step = {std::move(acc.word), acc.rule};
      } catch (const Error& e) {
        if (e.code() != Errc::NoInnerRun) throw;
        step = desubstitute(current);
      }
    } else {
      step = desubstitute(current);
    }
    trace.steps.push_back({current, step.rule, step.word});
    current = std::move(step.word);
  }
  trace.final = std::move(current);
  return trace;
}

Word derivated_word(const Word& w) {
  Word current = w;
  while (const auto rule = desubstitution_rule(current)) {
    current = shorten_runs(current, removed_letter(*rule), 1);
  }
  return current;
}

Word apply_morphism(MorphismId m, const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (m == MorphismId::Sigma0) {
      if (w[i] == 1) out.push_back(1);
      out.push_back(0);
    } else {
      if (w[i] == 0) out.push_back(0);
      out.push_back(1);
    }
  }
  return out;
}

bool is_balanced(const Word& w) { return derivated_word(w).empty(); }

bool is_tangent(const Word& w) { return is_diagonal(derivated_word(w)); }

bool is_analytic_tangent(const Word& w) {
  return is_non_oscillating_diagonal(derivated_word(w));
}

}  // namespace tangent
