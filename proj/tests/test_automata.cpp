#include "doctest.h"
#include "oracles.hpp"
#include "tangent/automata.hpp"
#include "tangent/error.hpp"

using namespace tangent;

namespace {
Word w(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("diagonal automaton shape") {
  const auto& a = diagonal_automaton();
  using namespace diagonal_state;
  CHECK(a.state_count() == 3);
  CHECK(a.step(D1, 0) == D2);
  CHECK(a.step(D2, 1) == D1);
  CHECK(a.step(D2, 0) == D3);
  CHECK(a.step(D3, 1) == D2);
  CHECK_FALSE(a.step(D1, 1));
  CHECK_FALSE(a.step(D3, 0));
  CHECK(a.state_name(D2) == "D2");
}

TEST_CASE("recognizes on the diagonal automaton") {
  const auto& a = diagonal_automaton();
  CHECK(recognizes(a, Word()));
  CHECK(recognizes(a, w("0011")));
  CHECK_FALSE(recognizes(a, w("000")));

  using namespace diagonal_state;
  const RunRecord r = a.run_from(D1, w("0011"));
  CHECK(r.accepted);
  CHECK(r.visited_states == std::set<State>{D1, D2, D3});
  CHECK_FALSE(a.run_from(D2, w("0011")).accepted);
}

TEST_CASE("is_diagonal") {
  CHECK(is_diagonal(w("0110100110")));
  CHECK(is_diagonal(w("1100")));
  CHECK_FALSE(is_diagonal(w("00100")));
  CHECK(diagonal_automaton().run_from(diagonal_state::D2, w("0110100110")).accepted);
  CHECK(diagonal_automaton().run_from(diagonal_state::D3, w("1100")).accepted);
}

TEST_CASE("is_thin_diagonal") {
  CHECK(is_thin_diagonal(w("0101")));
  CHECK_FALSE(is_thin_diagonal(w("0011")));
  CHECK(is_thin_diagonal(Word()));
  CHECK(is_thin_diagonal(w("0")));
  CHECK_FALSE(is_thin_diagonal(w("000")));
}

TEST_CASE("is_non_oscillating_diagonal") {
  using namespace non_oscillating_state;
  const auto& a = non_oscillating_automaton();
  CHECK(is_non_oscillating_diagonal(w("01100")));
  const RunRecord r = a.run_from(L1, w("01100"));
  CHECK(r.accepted);
  CHECK(r.visited_states == std::set<State>{L1, U1, L2, L3, L4});

  CHECK_FALSE(is_non_oscillating_diagonal(w("0110100110")));
  for (State s = 0; s < 8; ++s) CHECK_FALSE(a.run_from(s, w("0110100110")).accepted);

  CHECK(is_non_oscillating_diagonal(w("1001010110")));
  CHECK(a.run_from(U1, w("1001010110")).accepted);
  CHECK(a.run_from(L1, w("0011")).accepted);
}

TEST_CASE("PartialDFA construction") {
  PartialDFA a(2);
  a.add_transition(0, 1, 1).add_transition(1, 0, 0);
  a.add_transition(0, 1, 1);  // repeating the same edge is fine
  CHECK_THROWS_AS(a.add_transition(0, 1, 0), Error);
  CHECK_THROWS_AS(a.add_transition(0, 0, 5), Error);
  CHECK_THROWS_AS(PartialDFA(0), Error);
  CHECK_THROWS_AS(PartialDFA(2, {"only one"}), Error);

  CHECK(recognizes(a, w("10101")));
  CHECK(recognizes(a, w("0")));
  CHECK_FALSE(recognizes(a, w("11")));

  // No transitions at all: only the empty word.
  PartialDFA empty(1);
  CHECK(recognizes(empty, Word()));
  CHECK_FALSE(recognizes(empty, w("0")));
}

TEST_CASE("subset simulation equals per-start enumeration") {
  PartialDFA chain(4);
  chain.add_transition(0, 0, 1).add_transition(1, 0, 2).add_transition(2, 1, 3).add_transition(3, 1, 0);
  const PartialDFA* automata[] = {&diagonal_automaton(), &non_oscillating_automaton(), &chain};
  oracle::for_all_words_up_to(12, [&](const Word& x) {
    for (const PartialDFA* a : automata) REQUIRE(recognizes(*a, x) == oracle::recognizes_by_runs(*a, x));
  });
}

TEST_CASE("automaton language properties up to length 14") {
  oracle::for_all_words_up_to(14, [](const Word& x) {
    const bool diag = is_diagonal(x);
    if (is_non_oscillating_diagonal(x)) REQUIRE(diag);
    if (is_thin_diagonal(x)) REQUIRE(diag);
    REQUIRE(diag == is_diagonal(x.reversed()));
    if (diag) {
      REQUIRE_FALSE(x.contains("000"));
      REQUIRE_FALSE(x.contains("111"));
    }
  });
}
