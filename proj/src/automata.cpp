#include "tangent/automata.hpp"

#include "tangent/error.hpp"

namespace tangent {

PartialDFA::PartialDFA(std::size_t state_count, std::vector<std::string> names)
    : table_(state_count), names_(std::move(names)) {
  if (state_count == 0) throw Error(Errc::DomainError, "automaton needs at least one state");
  if (names_.empty()) {
    for (std::size_t s = 0; s < state_count; ++s) names_.push_back("q" + std::to_string(s));
  } else if (names_.size() != state_count) {
    throw Error(Errc::DomainError, "state name count does not match state count");
  }
}

PartialDFA& PartialDFA::add_transition(State from, Letter letter, State to) {
  if (from >= state_count() || to >= state_count() || letter > 1) {
    throw Error(Errc::DomainError, "transition out of range");
  }
  auto& slot = table_[from][letter];
  if (slot && *slot != to) {
    throw Error(Errc::DomainError, "nondeterministic transition from " + names_[from]);
  }
  slot = to;
  return *this;
}

RunRecord PartialDFA::run_from(State start, const Word& w) const {
  RunRecord record;
  record.start_state = start;
  record.visited_states.insert(start);
  State current = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto next = step(current, w[i]);
    if (!next) return record;
    current = *next;
    record.visited_states.insert(current);
  }
  record.accepted = true;
  return record;
}

bool recognizes(const PartialDFA& automaton, const Word& w) {
  const std::size_t n = automaton.state_count();
  std::vector<State> alive(n), next;
  for (State s = 0; s < n; ++s) alive[s] = s;
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < w.size() && !alive.empty(); ++i) {
    next.clear();
    std::fill(seen.begin(), seen.end(), 0);
    for (State s : alive) {
      if (const auto t = automaton.step(s, w[i]); t && !seen[*t]) {
        seen[*t] = 1;
        next.push_back(*t);
      }
    }
    alive.swap(next);
  }
  return !alive.empty();
}

const PartialDFA& diagonal_automaton() {
  using namespace diagonal_state;
  static const PartialDFA automaton = [] {
    PartialDFA a(3, {"D1", "D2", "D3"});
    a.add_transition(D1, 0, D2)
        .add_transition(D2, 1, D1)
        .add_transition(D2, 0, D3)
        .add_transition(D3, 1, D2);
    return a;
  }();
  return automaton;
}

const PartialDFA& non_oscillating_automaton() {
  using namespace non_oscillating_state;
  static const PartialDFA automaton = [] {
    PartialDFA a(8, {"U1", "U2", "U3", "U4", "L1", "L2", "L3", "L4"});
    a.add_transition(L1, 0, U1)
        .add_transition(U1, 1, L1)
        .add_transition(U1, 0, U2)
        .add_transition(U2, 1, U3)
        .add_transition(U3, 0, U2)
        .add_transition(U3, 1, U4)
        .add_transition(U4, 0, L4)
        .add_transition(L4, 1, U4)
        .add_transition(L1, 1, L2)
        .add_transition(L2, 0, L3)
        .add_transition(L3, 1, L2)
        .add_transition(L3, 0, L4);
    return a;
  }();
  return automaton;
}

bool is_diagonal(const Word& w) { return recognizes(diagonal_automaton(), w); }

bool is_thin_diagonal(const Word& w) {
  const PartialDFA& a = diagonal_automaton();
  for (State s = 0; s < a.state_count(); ++s) {
    const RunRecord r = a.run_from(s, w);
    if (r.accepted && r.visited_states.size() <= 2) return true;
  }
  return false;
}

bool is_non_oscillating_diagonal(const Word& w) {
  return recognizes(non_oscillating_automaton(), w);
}

}  // namespace tangent
