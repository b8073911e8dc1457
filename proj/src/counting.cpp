#include "tangent/counting.hpp"

#include <algorithm>
#include <numeric>

#include "tangent/error.hpp"

namespace tangent {

std::uint64_t totient(std::uint64_t n) {
  if (n < 1) throw Error(Errc::DomainError, "totient is defined for n >= 1");
  std::uint64_t result = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n < 1) throw Error(Errc::DomainError, "divisors are defined for n >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt lipatov_balanced(std::size_t n) {
  BigInt total = 1;
  for (std::size_t i = 1; i <= n; ++i) total += BigInt(n - i + 1) * totient(i);
  return total;
}

BigInt prop3_analytic(std::size_t n, ClosedFormVariant variant) {
  const int offset = variant == ClosedFormVariant::PaperAsPrinted ? 1 : 2;
  BigInt total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 2; j <= i; ++j) {
      total += BigInt(2 * j) - BigInt(totient(j)) - offset;
    }
  }
  return 1 + BigInt(n) + total;
}

namespace {

// Inner divisor sum of the tangent formula for one j.
BigInt tangent_summand(std::size_t j, ClosedFormVariant variant) {
  BigInt total = 0;
  const std::uint64_t phi_j = totient(j);
  for (std::uint64_t d : divisors(j)) {
    if (d == 1) continue;
    const std::uint64_t weight = variant == ClosedFormVariant::PaperAsPrinted ? phi_j : totient(d);
    total += BigInt(weight) << static_cast<unsigned>(j / d);
  }
  return total;
}

}  // namespace

BigInt prop3_tangent(std::size_t n, ClosedFormVariant variant) {
  std::vector<BigInt> summands(n + 1);
  for (std::size_t j = 2; j <= n; ++j) summands[j] = tangent_summand(j, variant);
  BigInt total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 2; j <= i; ++j) total += summands[j];
  }
  if (total % 2 != 0) {
    throw Error(Errc::ParityViolation,
                "triple sum is odd at n = " + std::to_string(n));
  }
  return 1 + BigInt(n) + total / 2;
}

BigInt candidate_sb(const LanguageId& language, std::size_t n) {
  const std::uint64_t length = n + 2;
  switch (language.kind()) {
    case LanguageId::Kind::Analytic: {
      std::uint64_t non_coprime = 0;
      for (std::uint64_t p = 1; p < length; ++p) {
        if (std::gcd(p, length - p) > 1) ++non_coprime;
      }
      return BigInt(totient(length)) + 2 * BigInt(non_coprime);
    }
    case LanguageId::Kind::Tangent: {
      BigInt total = 0;
      for (std::uint64_t d : divisors(length)) {
        if (d == 1) continue;
        total += BigInt(totient(d)) << static_cast<unsigned>(length / d - 1);
      }
      return total;
    }
    default:
      throw Error(Errc::DomainError, "no candidate strong-bispecial count for " + language.name());
  }
}

BigInt complexity_from_sb(std::span<const BigInt> sb, std::size_t n) {
  if (n >= 2 && sb.size() < n - 1) {
    throw Error(Errc::InsufficientData, "need " + std::to_string(n - 1) +
                                            " strong-bispecial counts, got " +
                                            std::to_string(sb.size()));
  }
  BigInt total = 1 + BigInt(n);
  BigInt inner = 0;  // sum_{j < i} sb_j
  for (std::size_t i = 0; i < n; ++i) {
    total += inner;
    if (i < sb.size()) inner += sb[i];
  }
  return total;
}

std::vector<std::string> ReconciliationRow::mismatches() const {
  std::vector<std::string> out;
  if (!flags.paper_analytic) out.emplace_back("paper_analytic");
  if (!flags.paper_tangent) out.emplace_back("paper_tangent");
  if (!flags.cand_analytic) out.emplace_back("cand_analytic");
  if (!flags.cand_tangent) out.emplace_back("cand_tangent");
  if (flags.cand_sb_analytic == false) out.emplace_back("cand_sb_analytic");
  if (flags.cand_sb_tangent == false) out.emplace_back("cand_sb_tangent");
  return out;
}

ReconciliationReport reconcile(std::size_t n_max, const EnumerationConfig& config) {
  const auto analytic = complexity_profile(LanguageId::analytic(), n_max, config);
  const auto tangent = complexity_profile(LanguageId::tangent(), n_max, config);
  ReconciliationReport report{n_max, {}};
  for (std::size_t n = 0; n <= n_max; ++n) {
    ReconciliationRow row{};
    row.n = n;
    row.enum_analytic = analytic.p[n];
    row.enum_tangent = tangent.p[n];
    row.paper_analytic = prop3_analytic(n, ClosedFormVariant::PaperAsPrinted);
    row.paper_tangent = prop3_tangent(n, ClosedFormVariant::PaperAsPrinted);
    row.cand_analytic = prop3_analytic(n, ClosedFormVariant::GeometricCandidate);
    row.cand_tangent = prop3_tangent(n, ClosedFormVariant::GeometricCandidate);
    row.cand_sb_analytic = candidate_sb(LanguageId::analytic(), n);
    row.cand_sb_tangent = candidate_sb(LanguageId::tangent(), n);
    if (n + 2 <= config.cap) {
      row.enum_sb_analytic = bispecial_census(LanguageId::analytic(), n, config).sb();
      row.enum_sb_tangent = bispecial_census(LanguageId::tangent(), n, config).sb();
      row.flags.cand_sb_analytic = row.cand_sb_analytic == *row.enum_sb_analytic;
      row.flags.cand_sb_tangent = row.cand_sb_tangent == *row.enum_sb_tangent;
    }
    row.flags.paper_analytic = row.paper_analytic == row.enum_analytic;
    row.flags.paper_tangent = row.paper_tangent == row.enum_tangent;
    row.flags.cand_analytic = row.cand_analytic == row.enum_analytic;
    row.flags.cand_tangent = row.cand_tangent == row.enum_tangent;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace tangent
