#include "tangent/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <type_traits>

#include "tangent/derivation.hpp"
#include "tangent/error.hpp"

namespace tangent {

std::uint64_t LatticeSegment::gcd() const noexcept { return std::gcd(p, q); }

Word segment_coding(std::uint64_t p, std::uint64_t q) {
  if (p == 0 || q == 0) throw Error(Errc::DomainError, "segment endpoint must be positive");
  if (std::gcd(p, q) != 1) {
    throw Error(Errc::NotPrimitive, "(" + std::to_string(p) + ", " + std::to_string(q) +
                                        ") is not primitive");
  }
  // Vertical line x = i is met at parameter i/p, horizontal y = j at j/q;
  // compare i*q with j*p exactly.
  Word out;
  std::uint64_t i = 1, j = 1;
  while (i < p || j < q) {
    if (j >= q || (i < p && i * q < j * p)) {
      out.push_back(0);
      ++i;
    } else {
      out.push_back(1);
      ++j;
    }
  }
  return out;
}

Word mechanical_prefix(double alpha, double rho, std::size_t n) {
  Word out;
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const auto next = std::floor((kd + 1) * alpha + rho);
    const auto here = std::floor(kd * alpha + rho);
    out.push_back(static_cast<Letter>(next - here));
  }
  return out;
}

Word slalom_word(std::uint64_t p, std::uint64_t q, const std::vector<SlalomSide>& sides) {
  if (p == 0 || q == 0) throw Error(Errc::DomainError, "segment endpoint must be positive");
  const std::uint64_t g = std::gcd(p, q);
  if (g == 1) {
    throw Error(Errc::NoInteriorPoint, "(" + std::to_string(p) + ", " + std::to_string(q) +
                                           ") has no interior lattice point");
  }
  if (sides.size() != g - 1) {
    throw Error(Errc::DomainError, "expected " + std::to_string(g - 1) + " slalom choices");
  }
  const Word piece = segment_coding(p / g, q / g);
  const Word under = Word::parse("01"), above = Word::parse("10");
  Word out = piece;
  for (SlalomSide side : sides) {
    out += side == SlalomSide::Above ? above : under;
    out += piece;
  }
  return out;
}

std::vector<Word> slalom_bispecials(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t g = std::gcd(p, q);
  if (g <= 1) {
    throw Error(Errc::NoInteriorPoint, "(" + std::to_string(p) + ", " + std::to_string(q) +
                                           ") has no interior lattice point");
  }
  if (g - 1 >= 63) throw Error(Errc::DomainError, "too many interior points to enumerate");
  std::vector<Word> out;
  std::vector<SlalomSide> sides(g - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (g - 1)); ++mask) {
    for (std::size_t i = 0; i < sides.size(); ++i) {
      sides[i] = (mask >> i) & 1 ? SlalomSide::Above : SlalomSide::Under;
    }
    out.push_back(slalom_word(p, q, sides));
  }
  return out;
}

std::pair<Word, Word> analytic_slalom_pair(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t g = std::gcd(p, q);
  if (g <= 1) {
    throw Error(Errc::NoInteriorPoint, "(" + std::to_string(p) + ", " + std::to_string(q) +
                                           ") has no interior lattice point");
  }
  return {slalom_word(p, q, std::vector<SlalomSide>(g - 1, SlalomSide::Above)),
          slalom_word(p, q, std::vector<SlalomSide>(g - 1, SlalomSide::Under))};
}

double CurveSpec::value(double x) const {
  return std::visit(
      [x](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Line>) {
          return k.slope * x + k.intercept;
        } else if constexpr (std::is_same_v<K, Parabola>) {
          return (k.a * x + k.b) * x + k.c;
        } else {
          return k.scale * std::pow(k.base, x);
        }
      },
      kind);
}

void CurveSpec::validate() const {
  if (!std::isfinite(x0) || !std::isfinite(x1) || !(x0 < x1)) {
    throw Error(Errc::DomainError, "curve domain must satisfy x0 < x1");
  }
  const bool increasing = std::visit(
      [this](const auto& k) -> bool {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Line>) {
          return k.slope > 0;
        } else if constexpr (std::is_same_v<K, Parabola>) {
          // a > 0 makes the derivative increasing, so its minimum is at x0.
          return k.a > 0 && 2 * k.a * x0 + k.b > 0;
        } else {
          return k.base > 1 && k.scale > 0;
        }
      },
      kind);
  if (!increasing) throw Error(Errc::NonMonotone, kind_name() + " is not increasing on its domain");
}

std::string CurveSpec::kind_name() const {
  switch (kind.index()) {
    case 0: return "line";
    case 1: return "parabola";
    default: return "exp";
  }
}

std::vector<double> CurveSpec::parameters() const {
  return std::visit(
      [](const auto& k) -> std::vector<double> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Line>) {
          return {k.slope, k.intercept};
        } else if constexpr (std::is_same_v<K, Parabola>) {
          return {k.a, k.b, k.c};
        } else {
          return {k.base, k.scale};
        }
      },
      kind);
}

namespace {

struct Event {
  double x;
  Letter letter;
};

// Abscissa where the increasing curve reaches `level`, with f(lo) < level < f(hi).
double solve_level(const CurveSpec& curve, double level, double lo, double hi, double tolerance) {
  while (hi - lo > tolerance) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (curve.value(mid) < level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

// Grid coordinates origin + i * mesh strictly inside (lo, hi).
std::vector<double> grid_lines_between(double origin, double mesh, double lo, double hi) {
  std::vector<double> out;
  for (auto i = static_cast<long long>(std::floor((lo - origin) / mesh));; ++i) {
    const double v = origin + static_cast<double>(i) * mesh;
    if (v >= hi) break;
    if (v > lo) out.push_back(v);
  }
  return out;
}

}  // namespace

Word cutting_sequence(const CurveSpec& curve, const GridPlacement& grid,
                      const GeometryTolerances& tolerances) {
  curve.validate();
  if (!(grid.mesh > 0)) throw Error(Errc::DomainError, "mesh must be positive");
  std::vector<Event> events;
  for (double x : grid_lines_between(grid.offset_x, grid.mesh, curve.x0, curve.x1)) {
    events.push_back({x, 0});
  }
  const double y0 = curve.value(curve.x0), y1 = curve.value(curve.x1);
  for (double y : grid_lines_between(grid.offset_y, grid.mesh, y0, y1)) {
    events.push_back({solve_level(curve, y, curve.x0, curve.x1, tolerances.bisection), 1});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].x - events[i - 1].x < tolerances.corner_separation) {
      throw Error(Errc::CornerHit, "curve passes too close to a grid vertex near x = " +
                                       std::to_string(events[i].x));
    }
  }
  Word out;
  for (const Event& e : events) out.push_back(e.letter);
  return out;
}

double halton(std::uint64_t index, std::uint64_t base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

FactorReport multigrid_factor_scan(const CurveSpec& curve, const std::vector<double>& meshes,
                                   std::size_t offsets_per_mesh, std::size_t max_factor_len,
                                   const ScanOptions& options) {
  curve.validate();
  FactorReport report{curve, {}};
  for (double mesh : meshes) {
    if (!(mesh > 0)) throw Error(Errc::DomainError, "mesh must be positive");
    std::uint64_t next_index = ScanOptions::kHaltonStart;
    for (std::size_t k = 0; k < offsets_per_mesh; ++k) {
      std::optional<FactorEntry> entry;
      for (std::size_t attempt = 0; attempt < ScanOptions::kMaxAttempts && !entry; ++attempt) {
        const std::uint64_t index = next_index++;
        const GridPlacement grid{mesh, halton(index, 2) * mesh, halton(index, 3) * mesh};
        try {
          entry = FactorEntry{mesh, grid.offset_x, grid.offset_y,
                              cutting_sequence(curve, grid, options.tolerances), {}};
        } catch (const Error& e) {
          if (e.code() != Errc::CornerHit) throw;
        }
      }
      if (!entry) {
        throw Error(Errc::TooManyCornerHits,
                    "no generic grid placement found for mesh " + std::to_string(mesh));
      }
      const std::size_t longest = std::min(max_factor_len, entry->word.size());
      for (std::size_t len = 1; len <= longest; ++len) {
        for (const Word& f : factors(entry->word, len)) {
          entry->factors.push_back({f, is_tangent(f), is_analytic_tangent(f)});
        }
      }
      report.entries.push_back(std::move(*entry));
    }
  }
  return report;
}

}  // namespace tangent
