#ifndef CUBEPERIM_SECTIONS_HPP
#define CUBEPERIM_SECTIONS_HPP

// Central hyperplane sections of the unit-volume cube [-1/2,1/2]^n and of the
// polydisc {max |z_k| <= 1/sqrt(pi)} in C^n: the parallel section function
// A(a,t), the facet integrals D_k, the perimeter P, closed forms for n=3,4,
// and the Hoelder / projection / offset bounds.

#include <optional>
#include <stdexcept>
#include <vector>

#include "cubeperim/oscint.hpp"

namespace cubeperim {

enum class Field { real, complex };

/// Scalar-field multiplier: sections of the real cube are (n-1)-dimensional,
/// of the polydisc 2(n-1)-dimensional.
inline int field_multiplier(Field f) { return f == Field::real ? 1 : 2; }

struct Direction {
  std::vector<double> coords;  // canonical: nonincreasing, nonnegative, unit norm
  Field field = Field::real;

  int n() const { return (int)coords.size(); }

  /// Sort |entries| nonincreasing and normalize to unit Euclidean norm.
  /// Throws std::invalid_argument for fewer than 2 entries or all zeros.
  static Direction canonicalize(std::vector<double> raw, Field field = Field::real);

  /// (1,1,0,...,0)/sqrt(2): the perimeter maximizer.
  static Direction a_max(int n, Field field = Field::real);
  /// (1,0,...,0): the section-volume minimizer.
  static Direction a_min(int n, Field field = Field::real);
};

struct SectionProfile {
  double A = 0.0;                        // A(a, 0)
  std::vector<double> D;                 // D_1..D_n
  double P = 0.0;                        // perimeter
  std::optional<double> holder_bound;    // present when a_1 <= 1/sqrt(2), real
  std::optional<double> projection_bound;  // present when a_1 > 1/sqrt(2)
  int l = 1;
};

struct OffsetSection {
  Direction direction;
  double t = 0.0;
  double value = 0.0;
};

/// A(a,t): volume of the section at normalized distance t.
double section_volume(const Direction& a, double t,
                      const oscint::QuadratureSpec& spec = {});

/// D_k(a), 1-based k.  For a_k = 0 this equals A(a,0) exactly.
double dk(const Direction& a, int k, const oscint::QuadratureSpec& spec = {});

/// P(a) = 2 sum sqrt(1-a_k^2) D_k (real), 2 pi sum (1-a_k^2) D_k (complex).
/// Requires n >= 3.
double perimeter(const Direction& a, const oscint::QuadratureSpec& spec = {});

/// Closed form for n=3, real: rectangle branch (a1 >= a2+a3) or hexagon.
double perimeter_n3_closed(const Direction& a);

/// Closed form for n=4, real: the three-case formula.
double perimeter_n4_closed(const Direction& a);

/// sqrt(2) * prod f(a_k^{-2})^{a_k^2} (real field, a1 <= 1/sqrt(2)).
double holder_bound(const Direction& a);

/// 1/a1 (real) or 1/a1^2 (complex); requires a1 > 1/sqrt(2).
double projection_bound(const Direction& a);

/// (2/(1+t^2))^{l/2}: the offset-section bound.
double cor5_bound(double t, int l);

/// Bundle A, all D_k, P and the applicable bounds.
SectionProfile section_profile(const Direction& a,
                               const oscint::QuadratureSpec& spec = {});

/// Thrown when quadrature fails to converge within its period budget.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cubeperim

#endif
