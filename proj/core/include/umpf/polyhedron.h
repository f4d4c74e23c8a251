#pragma once

#include <optional>
#include <vector>

#include "umpf/interval.h"
#include "umpf/rational.h"

namespace umpf {

using Point = std::vector<Rational>;

/// normal . x >= offset, or > offset when strict.
struct HalfSpace {
  Point normal;
  Rational offset;
  bool strict = false;
};

/// Affine function w . x + c.
struct AffineForm {
  Point w;
  Rational c;
  Rational operator()(const Point& x) const;
};

/// A pointed polyhedron in dimension 1 to 3 given by possibly strict
/// half-spaces. Vertices and extreme rays are those of the closure.
class Polyhedron {
 public:
  explicit Polyhedron(size_t dim) : dim_(dim) {}

  size_t dim() const { return dim_; }
  void add(HalfSpace h) { constraints_.push_back(std::move(h)); }
  /// coeffs . x lies in `range`.
  void add_membership(const Point& coeffs, const Interval& range);

  bool contains(const Point& x) const;
  std::vector<Point> vertices() const;
  std::vector<Point> rays() const;
  /// A point of the relative interior, or nothing when the set is empty.
  std::optional<Point> interior_point() const;

 private:
  bool in_closure(const Point& x) const;
  size_t dim_;
  std::vector<HalfSpace> constraints_;
};

/// Some point of P where g > 0, or nothing when sup_P g <= 0 (including an
/// empty P). Complete: the supremum over P equals the supremum over its
/// closure, which is decided by vertices and recession rays.
std::optional<Point> find_positive_point(const Polyhedron& p, const AffineForm& g);

}  // namespace umpf
