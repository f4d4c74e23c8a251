#include "umpf/polyhedron.h"

#include <algorithm>
#include <stdexcept>

namespace umpf {
namespace {

Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Unique solution of the square system rows . x = rhs, if any.
std::optional<Point> solve(std::vector<Point> rows, Point rhs) {
  size_t n = rows.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[pivot], rows[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || sgn(rows[r][col]) == 0) continue;
      Rational factor = rows[r][col] / rows[col][col];
      for (size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  Point x(n);
  for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / rows[i][i];
  return x;
}

Point normalized(Point v) {
  Rational scale = 0;
  for (const auto& c : v) scale = std::max(scale, Rational(abs(c)));
  for (auto& c : v) c /= scale;
  return v;
}

bool is_zero(const Point& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
}

}  // namespace

Rational AffineForm::operator()(const Point& x) const { return dot(w, x) + c; }

void Polyhedron::add_membership(const Point& coeffs, const Interval& range) {
  add({coeffs, range.lo, !range.lo_closed});
  if (range.hi) {
    Point neg = coeffs;
    for (auto& c : neg) c = -c;
    add({neg, -*range.hi, !range.hi_closed});
  }
}

bool Polyhedron::contains(const Point& x) const {
  for (const auto& h : constraints_) {
    Rational v = dot(h.normal, x);
    if (h.strict ? !(v > h.offset) : !(v >= h.offset)) return false;
  }
  return true;
}

bool Polyhedron::in_closure(const Point& x) const {
  for (const auto& h : constraints_) {
    if (dot(h.normal, x) < h.offset) return false;
  }
  return true;
}

std::vector<Point> Polyhedron::vertices() const {
  std::vector<Point> out;
  size_t m = constraints_.size();
  if (m < dim_) return out;
  std::vector<size_t> pick(dim_);
  for (size_t i = 0; i < dim_; ++i) pick[i] = i;
  while (true) {
    std::vector<Point> rows;
    Point rhs;
    for (size_t i : pick) {
      rows.push_back(constraints_[i].normal);
      rhs.push_back(constraints_[i].offset);
    }
    if (auto x = solve(rows, rhs); x && in_closure(*x) &&
                                   std::find(out.begin(), out.end(), *x) == out.end()) {
      out.push_back(*x);
    }
    // Next dim_-subset of the m constraints in lexicographic order.
    size_t i = dim_;
    while (i > 0 && pick[i - 1] == m - dim_ + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (size_t j = i; j < dim_; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<Point> Polyhedron::rays() const {
  std::vector<Point> candidates;
  if (dim_ == 1) {
    candidates = {{Rational(1)}, {Rational(-1)}};
  } else if (dim_ == 2) {
    for (const auto& h : constraints_) {
      candidates.push_back({-h.normal[1], h.normal[0]});
      candidates.push_back({h.normal[1], -h.normal[0]});
    }
  } else if (dim_ == 3) {
    for (size_t i = 0; i < constraints_.size(); ++i) {
      for (size_t j = i + 1; j < constraints_.size(); ++j) {
        const Point& u = constraints_[i].normal;
        const Point& v = constraints_[j].normal;
        Point x{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        candidates.push_back(x);
        for (auto& c : x) c = -c;
        candidates.push_back(x);
      }
    }
  } else {
    throw std::invalid_argument("polyhedron dimension must be 1, 2 or 3");
  }
  std::vector<Point> out;
  for (auto& r : candidates) {
    if (is_zero(r)) continue;
    bool recedes = std::all_of(constraints_.begin(), constraints_.end(),
                               [&](const HalfSpace& h) { return sgn(dot(h.normal, r)) >= 0; });
    if (!recedes) continue;
    Point n = normalized(r);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  return out;
}

std::optional<Point> Polyhedron::interior_point() const {
  auto verts = vertices();
  if (verts.empty()) return std::nullopt;
  Point p(dim_, Rational(0));
  for (const auto& v : verts) {
    for (size_t i = 0; i < dim_; ++i) p[i] += v[i];
  }
  for (auto& c : p) c /= static_cast<long>(verts.size());
  for (const auto& r : rays()) {
    for (size_t i = 0; i < dim_; ++i) p[i] += r[i];
  }
  if (!contains(p)) return std::nullopt;
  return p;
}

std::optional<Point> find_positive_point(const Polyhedron& p, const AffineForm& g) {
  auto verts = p.vertices();
  if (verts.empty()) return std::nullopt;
  auto inner = p.interior_point();
  if (!inner) return std::nullopt;
  std::optional<Point> base;
  for (const auto& v : verts) {
    if (sgn(g(v)) > 0) {
      base = v;
      break;
    }
  }
  if (!base) {
    for (const auto& r : p.rays()) {
      Rational slope = dot(g.w, r);
      if (sgn(slope) <= 0) continue;
      Rational t = std::max(Rational(0), Rational(-g(verts.front()))) / slope + 1;
      Point x = verts.front();
      for (size_t i = 0; i < x.size(); ++i) x[i] += t * r[i];
      base = x;
      break;
    }
  }
  if (!base) return std::nullopt;
  // Points between base (closure, g > 0) and the interior point lie in P.
  Rational s = 1;
  for (int k = 0; k < 4096; ++k) {
    Point q = *base;
    for (size_t i = 0; i < q.size(); ++i) q[i] += s * ((*inner)[i] - q[i]);
    if (sgn(g(q)) > 0 && p.contains(q)) return q;
    s /= 2;
  }
  throw std::logic_error("find_positive_point: no interior approach found");
}

}  // namespace umpf
