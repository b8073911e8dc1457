#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "tangent/counting.hpp"
#include "tangent/error.hpp"

using namespace tangent;

namespace {
constexpr auto kPaper = ClosedFormVariant::PaperAsPrinted;
constexpr auto kCandidate = ClosedFormVariant::GeometricCandidate;

// Direct transcription of the double sum, written without the cumulative
// trick used by the library.
BigInt double_sum_reference(const std::vector<BigInt>& sb, std::size_t n) {
  BigInt total = 1 + BigInt(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) total += sb[j];
  }
  return total;
}
}  // namespace

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(10) == 4);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK_THROWS_AS(totient(0), Error);
  for (std::uint64_t n = 1; n <= 1000; ++n) REQUIRE(totient(n) == oracle::phi_by_gcd(n));
}

TEST_CASE("totient identities") {
  for (std::uint64_t a = 1; a <= 1000; ++a) {
    for (std::uint64_t b = 1; b <= 30; ++b) {
      if (std::gcd(a, b) == 1) REQUIRE(totient(a * b) == totient(a) * totient(b));
    }
  }
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::uint64_t total = 0;
    for (auto d : divisors(n)) total += totient(d);
    REQUIRE(total == n);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
  CHECK_THROWS_AS(divisors(0), Error);
}

TEST_CASE("lipatov_balanced") {
  CHECK(lipatov_balanced(0) == 1);
  CHECK(lipatov_balanced(4) == 14);
  CHECK(lipatov_balanced(10) == 136);
}

TEST_CASE("lipatov formula matches enumeration") {
  const auto prof = complexity_profile(LanguageId::balanced(), 16);
  for (std::size_t n = 0; n <= 16; ++n) CHECK(lipatov_balanced(n) == prof.p[n]);
}

TEST_CASE("prop3_analytic") {
  CHECK(prop3_analytic(2, kPaper) == 5);
  CHECK(prop3_analytic(2, kCandidate) == 4);
  CHECK(prop3_analytic(4, kCandidate) == 16);
  CHECK(prop3_analytic(0, kPaper) == 1);
  const std::vector<int> printed = {1, 2, 5, 11, 22};
  for (std::size_t n = 0; n < printed.size(); ++n) CHECK(prop3_analytic(n, kPaper) == printed[n]);
}

TEST_CASE("prop3_tangent") {
  CHECK(prop3_tangent(4, kPaper) == 18);
  CHECK(prop3_tangent(4, kCandidate) == 16);
  CHECK(prop3_tangent(0, kPaper) == 1);
  CHECK(prop3_tangent(0, kCandidate) == 1);
  for (std::size_t n = 0; n <= 60; ++n) CHECK_NOTHROW(prop3_tangent(n, kCandidate));
}

TEST_CASE("candidate_sb") {
  CHECK(candidate_sb(LanguageId::tangent(), 4) == 10);
  CHECK(candidate_sb(LanguageId::analytic(), 3) == 4);
  CHECK(candidate_sb(LanguageId::tangent(), 0) == 1);
  CHECK(candidate_sb(LanguageId::analytic(), 4) == 8);
  CHECK_THROWS_AS(candidate_sb(LanguageId::balanced(), 3), Error);
}

TEST_CASE("candidate_sb matches the census") {
  for (const auto& lang : {LanguageId::tangent(), LanguageId::analytic()}) {
    for (std::size_t n = 0; n <= 12; ++n) {
      CHECK(candidate_sb(lang, n) == bispecial_census(lang, n).sb());
    }
  }
}

TEST_CASE("complexity_from_sb") {
  std::vector<BigInt> analytic, tangent;
  for (std::size_t j = 0; j <= 12; ++j) {
    analytic.push_back(bispecial_census(LanguageId::analytic(), j).sb());
    tangent.push_back(bispecial_census(LanguageId::tangent(), j).sb());
  }
  CHECK(complexity_from_sb(analytic, 5) == 28);
  CHECK(complexity_from_sb(tangent, 4) == 16);
  CHECK(complexity_from_sb({}, 1) == 2);
  CHECK(complexity_from_sb({}, 0) == 1);
  CHECK_THROWS_AS(complexity_from_sb(std::vector<BigInt>{1}, 4), Error);

  const auto pa = complexity_profile(LanguageId::analytic(), 12);
  const auto pt = complexity_profile(LanguageId::tangent(), 12);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(complexity_from_sb(analytic, n) == pa.p[n]);
    CHECK(complexity_from_sb(tangent, n) == pt.p[n]);
    CHECK(complexity_from_sb(analytic, n) == double_sum_reference(analytic, n));
  }
}

TEST_CASE("geometric closed forms equal the integrated candidate counts") {
  std::vector<BigInt> analytic, tangent;
  for (std::size_t j = 0; j <= 40; ++j) {
    analytic.push_back(candidate_sb(LanguageId::analytic(), j));
    tangent.push_back(candidate_sb(LanguageId::tangent(), j));
  }
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(prop3_analytic(n, kCandidate) == complexity_from_sb(analytic, n));
    CHECK(prop3_tangent(n, kCandidate) == complexity_from_sb(tangent, n));
  }
}

TEST_CASE("reconcile") {
  const auto six = reconcile(6);
  REQUIRE(six.rows.size() == 7);
  for (const auto& r : six.rows) {
    CHECK(r.flags.cand_analytic);
    CHECK(r.flags.cand_tangent);
    CHECK(r.flags.cand_sb_analytic == true);
    CHECK(r.flags.cand_sb_tangent == true);
  }

  const auto four = reconcile(4);
  std::vector<BigInt> paper, enumerated;
  for (const auto& r : four.rows) {
    paper.push_back(r.paper_analytic);
    enumerated.push_back(r.enum_analytic);
  }
  CHECK(paper == std::vector<BigInt>{1, 2, 5, 11, 22});
  CHECK(enumerated == std::vector<BigInt>{1, 2, 4, 8, 16});
  CHECK(four.rows[2].mismatches() == std::vector<std::string>{"paper_analytic"});
  CHECK(four.rows[4].mismatches() == std::vector<std::string>{"paper_analytic", "paper_tangent"});

  const auto zero = reconcile(0);
  REQUIRE(zero.rows.size() == 1);
  const auto& r = zero.rows[0];
  CHECK(r.enum_analytic == 1);
  CHECK(r.enum_tangent == 1);
  CHECK(r.paper_analytic == 1);
  CHECK(r.paper_tangent == 1);
  CHECK(r.cand_analytic == 1);
  CHECK(r.cand_tangent == 1);
  CHECK(r.enum_sb_analytic == 1u);
  CHECK(r.enum_sb_tangent == 1u);
  CHECK(r.mismatches().empty());

  // Sb cells beyond the census range stay empty.
  const auto capped = reconcile(4, EnumerationConfig{4});
  CHECK(capped.rows[2].enum_sb_tangent.has_value());
  CHECK_FALSE(capped.rows[3].enum_sb_tangent.has_value());
  CHECK_FALSE(capped.rows[3].flags.cand_sb_tangent.has_value());
  CHECK_THROWS_AS(reconcile(999), Error);
}
