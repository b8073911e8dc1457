#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tangent/word.hpp"

namespace tangent {

using State = std::size_t;

/// Outcome of following one start state along a word.
struct RunRecord {
  State start_state = 0;
  std::set<State> visited_states;
  bool accepted = false;
};

/// Partially defined deterministic automaton over {0,1} in which every state
/// is initial and accepting: a word is recognized iff some start state admits
/// a fully defined path labelled by it.
class PartialDFA {
 public:
  explicit PartialDFA(std::size_t state_count, std::vector<std::string> names = {});

  /// Throws DomainError on an out-of-range state or a second target for the
  /// same (state, letter).
  PartialDFA& add_transition(State from, Letter letter, State to);

  std::size_t state_count() const noexcept { return table_.size(); }
  std::optional<State> step(State from, Letter letter) const noexcept {
    return table_[from][letter];
  }
  const std::string& state_name(State s) const { return names_.at(s); }

  RunRecord run_from(State start, const Word& w) const;

 private:
  std::vector<std::array<std::optional<State>, 2>> table_;
  std::vector<std::string> names_;
};

/// Surviving-set simulation from all states at once.
bool recognizes(const PartialDFA& automaton, const Word& w);

namespace diagonal_state {
inline constexpr State D1 = 0, D2 = 1, D3 = 2;
}

// Upper row U1..U4 left to right, lower row L1..L4; L1 is bottom left.
namespace non_oscillating_state {
inline constexpr State U1 = 0, U2 = 1, U3 = 2, U4 = 3;
inline constexpr State L1 = 4, L2 = 5, L3 = 6, L4 = 7;
}

/// D1 -0-> D2 -0-> D3 and back along 1.
const PartialDFA& diagonal_automaton();

const PartialDFA& non_oscillating_automaton();

bool is_diagonal(const Word& w);

/// Some accepting run of the diagonal automaton visits at most two states.
bool is_thin_diagonal(const Word& w);

bool is_non_oscillating_diagonal(const Word& w);

}  // namespace tangent
