#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tangent/word.hpp"

namespace tangent {

/// Segment from (0,0) to (p,q); its open interior meets gcd(p,q) - 1 lattice
/// points and its coding has length p + q - 2.
struct LatticeSegment {
  std::uint64_t p;
  std::uint64_t q;

  std::uint64_t gcd() const noexcept;
  std::uint64_t interior_points() const noexcept { return gcd() - 1; }
  std::uint64_t coding_length() const noexcept { return p + q - 2; }
};

/// Crossings of the open segment to coprime (p,q): vertical lines give 0,
/// horizontal lines give 1. Throws NotPrimitive if gcd(p,q) != 1 and
/// DomainError if p or q is zero.
Word segment_coding(std::uint64_t p, std::uint64_t q);

/// s_k = floor((k+1) alpha + rho) - floor(k alpha + rho), k = 0..n-1.
Word mechanical_prefix(double alpha, double rho, std::size_t n);

/// Passing over an interior lattice point reads "10", under it "01".
enum class SlalomSide { Under, Above };

/// c x_1 c x_2 ... x_{g-1} c with c the coding of (p/g, q/g) and x_i chosen by
/// `sides`. Throws NoInteriorPoint if gcd(p,q) = 1 and DomainError if
/// `sides` does not have g - 1 entries.
Word slalom_word(std::uint64_t p, std::uint64_t q, const std::vector<SlalomSide>& sides);

/// All 2^{g-1} slalom words; bit i of the index selects Above at point i.
std::vector<Word> slalom_bispecials(std::uint64_t p, std::uint64_t q);

/// (all above, all under).
std::pair<Word, Word> analytic_slalom_pair(std::uint64_t p, std::uint64_t q);

struct GridPlacement {
  double mesh = 1.0;
  double offset_x = 0.0;
  double offset_y = 0.0;
};

struct Line {
  double slope;
  double intercept;
};

/// a x^2 + b x + c
struct Parabola {
  double a;
  double b;
  double c;
};

/// scale * base^x
struct Exponential {
  double base;
  double scale;
};

/// Graph of a strictly increasing C^1 function over [x0, x1].
struct CurveSpec {
  std::variant<Line, Parabola, Exponential> kind;
  double x0;
  double x1;

  double value(double x) const;
  /// Throws DomainError for a malformed domain and NonMonotone when the
  /// curve is not strictly increasing on it.
  void validate() const;
  std::string kind_name() const;
  std::vector<double> parameters() const;
};

struct GeometryTolerances {
  double bisection = 1e-12;
  double corner_separation = 1e-9;
};

/// Merged vertical (0) and horizontal (1) crossings in order of abscissa;
/// domain endpoints are not events. Throws CornerHit when two events are
/// closer than the corner separation.
Word cutting_sequence(const CurveSpec& curve, const GridPlacement& grid,
                      const GeometryTolerances& tolerances = {});

struct FactorVerdict {
  Word w;
  bool tangent;
  bool analytic;
};

struct FactorEntry {
  double mesh;
  double offset_x;
  double offset_y;
  Word word;
  std::vector<FactorVerdict> factors;  // lengths 1..max, shortlex order
};

/// Empirical approximation of the asymptotic language of a curve.
struct FactorReport {
  CurveSpec curve;
  std::vector<FactorEntry> entries;
};

/// Generic grid offsets: Halton points (bases 2 and 3) scaled by the mesh,
/// starting from a fixed index; a CornerHit moves on to the next point.
struct ScanOptions {
  static constexpr std::size_t kMaxAttempts = 100;
  static constexpr std::uint64_t kHaltonStart = 1;

  GeometryTolerances tolerances;
};

double halton(std::uint64_t index, std::uint64_t base);

/// Entries are ordered by mesh, then offset index. Throws TooManyCornerHits
/// if an offset cannot be placed generically within 100 attempts.
FactorReport multigrid_factor_scan(const CurveSpec& curve, const std::vector<double>& meshes,
                                   std::size_t offsets_per_mesh, std::size_t max_factor_len,
                                   const ScanOptions& options = {});

}  // namespace tangent
