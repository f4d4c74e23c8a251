#include "umpf/real_roots.h"

#include <stdexcept>

namespace umpf {

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("Sturm sequence of zero polynomial");
  chain_.push_back(squarefree);
  Polynomial d = squarefree.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    auto rem = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (rem.is_zero()) break;
    // Positive rescaling keeps sign variations intact and coefficients small.
    Rational lead = abs(rem.leading());
    chain_.push_back(-(rem * Rational(1 / lead)));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sgn(p(x)));
  return count_variations(signs);
}

int SturmSequence::variations_at_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at_infinity());
  return count_variations(signs);
}

int SturmSequence::count_roots(const Rational& a, const std::optional<Rational>& b) const {
  return variations_at(a) - (b ? variations_at(*b) : variations_at_infinity());
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& value) {
  AlgebraicNumber n;
  n.poly_ = Polynomial::linear(-value, 1);
  n.lo_ = value;
  n.hi_ = value;
  n.exact_ = true;
  return n;
}

AlgebraicNumber AlgebraicNumber::isolated(const Polynomial& squarefree, const Rational& lo,
                                          const Rational& hi) {
  AlgebraicNumber n;
  n.poly_ = squarefree;
  n.lo_ = lo;
  n.hi_ = hi;
  if (squarefree.degree() == 1) {
    return rational(-squarefree.coefficient(0) / squarefree.coefficient(1));
  }
  // A rational root p/s of the primitive integer form has s | lead, so it is
  // a multiple of 1/lead; once the interval is narrower than 1/lead at most
  // one such multiple remains to be tested.
  Integer lead = squarefree.primitive_integer_coefficients().back();
  Rational step = make_rational(Integer(1), lead);
  n.refine_below(step);
  if (n.exact_) return n;
  Integer k = floor(Rational(n.lo_ * lead)) + 1;
  Rational candidate = make_rational(k, lead);
  if (candidate < n.hi_ && squarefree(candidate) == 0) return rational(candidate);
  return n;
}

const Rational& AlgebraicNumber::value() const {
  if (!exact_) throw std::logic_error("AlgebraicNumber::value() on an irrational number");
  return lo_;
}

void AlgebraicNumber::refine() {
  if (exact_) return;
  Rational mid = (lo_ + hi_) / 2;
  Rational at_mid = poly_(mid);
  if (at_mid == 0) {
    *this = rational(mid);
    return;
  }
  if (sgn(poly_(lo_)) != sgn(at_mid)) {
    hi_ = mid;
  } else {
    lo_ = mid;
  }
}

void AlgebraicNumber::refine_below(const Rational& width) {
  while (!exact_ && hi_ - lo_ >= width) refine();
}

int AlgebraicNumber::compare(const Rational& r) const {
  if (exact_) return cmp(lo_, r) < 0 ? -1 : (cmp(lo_, r) > 0 ? 1 : 0);
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  Rational at_r = poly_(r);
  if (at_r == 0) return 0;
  return sgn(poly_(lo_)) == sgn(at_r) ? 1 : -1;
}

int AlgebraicNumber::compare(const AlgebraicNumber& other) const {
  if (exact_) return -other.compare(lo_);
  if (other.exact_) return compare(other.lo_);
  // Both intervals hold exactly one root of any common factor g, and their
  // ends are not roots of g; the numbers coincide iff g vanishes inside the
  // overlap.
  Polynomial g = gcd(poly_, other.poly_);
  if (g.degree() >= 1) {
    Rational lo = lo_ > other.lo_ ? lo_ : other.lo_;
    Rational hi = hi_ < other.hi_ ? hi_ : other.hi_;
    if (lo < hi && SturmSequence(g).count_roots(lo, hi) >= 1) return 0;
  }
  AlgebraicNumber a = *this;
  AlgebraicNumber b = other;
  while (true) {
    if (a.exact_) return -b.compare(a.lo_);
    if (b.exact_) return a.compare(b.lo_);
    if (a.hi_ <= b.lo_) return -1;
    if (b.hi_ <= a.lo_) return 1;
    a.refine();
    b.refine();
  }
}

int AlgebraicNumber::sign_of(const Polynomial& p) const {
  if (p.is_zero()) return 0;
  if (exact_) return sgn(p(lo_));
  Polynomial g = gcd(poly_, p);
  if (g.degree() >= 1 && sgn(g(lo_)) != sgn(g(hi_))) return 0;
  // p does not vanish at this number: shrink until p has no root inside the
  // isolating interval, then p has one sign across it.
  Polynomial sq = squarefree_part(p);
  if (sq.degree() <= 0) return sgn(p.leading());
  SturmSequence sturm(sq);
  AlgebraicNumber a = *this;
  while (true) {
    if (a.exact_) return sgn(p(a.lo_));
    int inside = sturm.count_roots(a.lo_, a.hi_) - (sq(a.hi_) == 0 ? 1 : 0);
    if (inside == 0) return sgn(p((a.lo_ + a.hi_) / 2));
    a.refine();
  }
}

Rational AlgebraicNumber::approximation() const {
  if (exact_) return lo_;
  return (lo_ + hi_) / 2;
}

std::string AlgebraicNumber::to_string() const {
  if (exact_) return umpf::to_string(lo_);
  return "root of " + poly_.to_string() + " in (" + umpf::to_string(lo_) + ", " +
         umpf::to_string(hi_) + ")";
}

namespace {

Rational cauchy_bound(const Polynomial& p) {
  Rational bound = 0;
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficient(i) / lead);
    if (r > bound) bound = r;
  }
  return bound + 1;
}

class Isolator {
 public:
  explicit Isolator(const Polynomial& squarefree) : poly_(squarefree), sturm_(squarefree) {}

  void run(const Rational& a, const Rational& b, int n, std::vector<AlgebraicNumber>& out) {
    if (n <= 0) return;
    if (n == 1 && poly_(a) != 0 && poly_(b) != 0) {
      out.push_back(AlgebraicNumber::isolated(poly_, a, b));
      return;
    }
    Rational m = (a + b) / 2;
    if (poly_(m) == 0) {
      int left = sturm_.count_roots(a, m) - 1;
      run(a, m, left, out);
      out.push_back(AlgebraicNumber::rational(m));
      run(m, b, n - left - 1, out);
    } else {
      int left = sturm_.count_roots(a, m);
      run(a, m, left, out);
      run(m, b, n - left, out);
    }
  }

  const SturmSequence& sturm() const { return sturm_; }

 private:
  const Polynomial& poly_;
  SturmSequence sturm_;
};

}  // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p, const Interval& interval) {
  std::vector<AlgebraicNumber> roots;
  if (p.degree() <= 0 || interval.is_point() || interval.empty()) return roots;
  Polynomial q = squarefree_part(p);
  if (q.degree() <= 0) return roots;
  Rational hi;
  if (interval.hi) {
    hi = *interval.hi;
  } else {
    hi = cauchy_bound(q);
    if (hi <= interval.lo) hi = interval.lo + 1;
  }
  Isolator iso(q);
  int n = iso.sturm().count_roots(interval.lo, hi);
  if (q(hi) == 0) --n;
  iso.run(interval.lo, hi, n, roots);
  return roots;
}

std::vector<Rational> rationals_between(AlgebraicNumber left,
                                        std::optional<AlgebraicNumber> right, int count) {
  std::vector<Rational> out;
  if (count <= 0) return out;
  if (right) {
    while (!(left.upper() < right->lower())) {
      if (left.is_rational() && right->is_rational()) {
        throw std::invalid_argument("rationals_between: empty range");
      }
      left.refine();
      right->refine();
    }
  }
  std::optional<Rational> hi;
  if (right) hi = right->lower();
  Rational lo = left.upper();
  for (int i = 0; i < count; ++i) {
    Rational next = simplest_rational_in(lo, false, hi, false);
    out.push_back(next);
    lo = next;
  }
  return out;
}

bool SignSummary::nonnegative() const {
  for (int s : piece_signs) {
    if (s < 0) return false;
  }
  return true;
}

bool SignSummary::nonpositive() const {
  for (int s : piece_signs) {
    if (s > 0) return false;
  }
  return true;
}

std::optional<size_t> SignSummary::first_piece_with_sign(int s) const {
  for (size_t k = 0; k < piece_signs.size(); ++k) {
    if (piece_signs[k] == s) return k;
  }
  return std::nullopt;
}

std::vector<Rational> SignSummary::points_in_piece(size_t k, int count) const {
  if (interval.is_point()) return std::vector<Rational>(count, interval.lo);
  AlgebraicNumber left =
      k == 0 ? AlgebraicNumber::rational(interval.lo) : roots[k - 1];
  std::optional<AlgebraicNumber> right;
  if (k < roots.size()) {
    right = roots[k];
  } else if (interval.hi) {
    right = AlgebraicNumber::rational(*interval.hi);
  }
  return rationals_between(std::move(left), std::move(right), count);
}

SignSummary poly_sign_on_interval(const Polynomial& p, const Interval& interval) {
  SignSummary s;
  s.interval = interval;
  if (p.is_zero()) {
    s.kind = SignSummary::Kind::kZero;
    s.piece_signs = {0};
    return s;
  }
  if (interval.is_point()) {
    int v = sgn(p(interval.lo));
    s.piece_signs = {v};
    s.kind = v > 0 ? SignSummary::Kind::kPositive
                   : (v < 0 ? SignSummary::Kind::kNegative : SignSummary::Kind::kZero);
    return s;
  }
  s.roots = isolate_real_roots(p, interval);
  s.piece_signs.reserve(s.roots.size() + 1);
  for (size_t k = 0; k <= s.roots.size(); ++k) {
    s.piece_signs.push_back(sgn(p(s.points_in_piece(k, 1).front())));
  }
  if (!s.roots.empty()) {
    s.kind = SignSummary::Kind::kMixed;
  } else {
    s.kind = s.piece_signs.front() > 0 ? SignSummary::Kind::kPositive
                                       : SignSummary::Kind::kNegative;
  }
  return s;
}

std::string to_string(SignSummary::Kind kind) {
  switch (kind) {
    case SignSummary::Kind::kPositive: return "always+";
    case SignSummary::Kind::kNegative: return "always-";
    case SignSummary::Kind::kZero: return "always0";
    case SignSummary::Kind::kMixed: return "mixed";
  }
  return "?";
}

}  // namespace umpf
