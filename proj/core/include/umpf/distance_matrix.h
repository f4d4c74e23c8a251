#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umpf/rational.h"

namespace umpf {

/// Symmetric n x n matrix of nonnegative rationals with zero diagonal. The
/// metric axioms are not assumed; validators in finspace.h check them.
class DistanceMatrix {
 public:
  /// n x n zero matrix.
  explicit DistanceMatrix(size_t n = 1);
  /// Row-major entries; throws MatrixFormatError on container violations.
  explicit DistanceMatrix(std::vector<std::vector<Rational>> rows);

  size_t size() const { return n_; }
  const Rational& operator()(size_t i, size_t j) const { return d_[i * n_ + j]; }
  /// Sets d(i, j) and d(j, i). Throws MatrixFormatError for a negative value
  /// or a nonzero diagonal entry.
  void set(size_t i, size_t j, const Rational& value);

  std::vector<std::vector<Rational>> rows() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  size_t n_;
  std::vector<Rational> d_;
};

DistanceMatrix parse_matrix_csv(std::string_view text);
DistanceMatrix load_matrix_csv(const std::filesystem::path& path);
/// One row per line, entries "p" or "p/q" separated by commas.
std::string to_csv(const DistanceMatrix& d);

/// Ordered triple of nonnegative rationals with its triangle classifications.
struct Triplet {
  enum class Shape { kABeqC, kBCeqA, kCABeqB, kNone };  // a<=b=c, b<=c=a, c<=a=b

  Rational a, b, c;
  bool in_delta = false;
  bool in_delta_inf = false;
  Shape shape = Shape::kNone;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Throws std::invalid_argument for a negative component.
Triplet make_triplet(const Rational& a, const Rational& b, const Rational& c);
std::string to_string(Triplet::Shape shape);

enum class Axiom { kM1, kM2, kM3, kU3 };
std::string to_string(Axiom axiom);
Axiom parse_axiom(std::string_view text);

/// A violated axiom instance. For M1, lhs = d(i, j) = 0 = rhs with i != j
/// (or, for a nonzero image of the diagonal, i = j and lhs = f(0)). For M3
/// and U3, lhs = d(i, j) and rhs = d(i, k) + d(k, j) or max(d(i, k), d(k, j)).
struct AxiomViolation {
  Axiom axiom = Axiom::kM1;
  size_t i = 0;
  size_t j = 0;
  std::optional<size_t> k;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

std::string to_string(const AxiomViolation& v);

}  // namespace umpf
