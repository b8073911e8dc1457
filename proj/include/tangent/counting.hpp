#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tangent/language.hpp"

namespace tangent {

using BigInt = boost::multiprecision::cpp_int;

/// Euler totient by trial-division factorization. Throws DomainError for 0.
std::uint64_t totient(std::uint64_t n);

/// Sorted divisors of n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// 1 + sum_{i=1..n} (n - i + 1) phi(i): the number of balanced words of length n.
BigInt lipatov_balanced(std::size_t n);

enum class ClosedFormVariant { PaperAsPrinted, GeometricCandidate };

/// 1 + n + sum_{i=1..n} sum_{j=2..i} (2j - phi(j) - c), c = 1 as printed,
/// c = 2 for the geometric count.
BigInt prop3_analytic(std::size_t n, ClosedFormVariant variant);

/// 1 + n + (1/2) sum_{i=1..n} sum_{j=2..i} sum_{d | j, d != 1} w(j, d) 2^{j/d},
/// w = phi(j) as printed, w = phi(d) for the geometric count. Throws
/// ParityViolation if the triple sum is odd.
BigInt prop3_tangent(std::size_t n, ClosedFormVariant variant);

/// Strong bispecial count predicted by the lattice-segment picture:
/// tangent: sum_{d | n+2, d >= 2} phi(d) 2^{(n+2)/d - 1};
/// analytic: phi(n+2) + 2 #{p + q = n+2 : gcd(p, q) > 1}.
/// Throws DomainError for any other language.
BigInt candidate_sb(const LanguageId& language, std::size_t n);

/// 1 + n + sum_{i=0..n-1} sum_{j=0..i-1} sb_j, assuming no weak bispecials.
/// Throws InsufficientData unless sb covers indices 0..n-2.
BigInt complexity_from_sb(std::span<const BigInt> sb, std::size_t n);

struct ReconciliationRow {
  std::size_t n;
  std::uint64_t enum_analytic;
  std::uint64_t enum_tangent;
  BigInt paper_analytic;
  BigInt paper_tangent;
  BigInt cand_analytic;
  BigInt cand_tangent;
  // Empty where the census precondition n + 2 <= cap does not hold.
  std::optional<std::uint64_t> enum_sb_analytic;
  std::optional<std::uint64_t> enum_sb_tangent;
  BigInt cand_sb_analytic;
  BigInt cand_sb_tangent;

  struct Flags {
    bool paper_analytic;
    bool paper_tangent;
    bool cand_analytic;
    bool cand_tangent;
    std::optional<bool> cand_sb_analytic;
    std::optional<bool> cand_sb_tangent;
  } flags;

  /// Names of the closed-form columns that disagree with enumeration.
  std::vector<std::string> mismatches() const;
};

struct ReconciliationReport {
  std::size_t n_max;
  std::vector<ReconciliationRow> rows;
};

/// Enumerated columns are the reference; closed forms are compared to them.
ReconciliationReport reconcile(std::size_t n_max, const EnumerationConfig& config = {});

}  // namespace tangent
