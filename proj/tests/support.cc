#include "support.h"

#include <algorithm>
#include <sstream>

namespace umpf::test {

std::filesystem::path functions_dir() { return UMPF_FUNCTIONS_DIR; }
std::filesystem::path data_dir() { return UMPF_TEST_DATA_DIR; }

PiecewiseFunction fixture(const std::string& stem) {
  return load_function(functions_dir() / (stem + ".fn"));
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(functions_dir())) {
    if (e.path().extension() == ".fn") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational q(long num, long den) { return make_rational(num, den); }

std::string c_variant_source(const Rational& c) {
  return "piecewise\n[0, 1]: x\n(1, inf): " + to_string(c) + "\n";
}

namespace {

std::string affine_text(const Rational& slope, const Rational& intercept) {
  std::ostringstream s;
  s << to_string(intercept);
  if (sgn(slope) >= 0) {
    s << " + " << to_string(slope) << "*x";
  } else {
    s << " - " << to_string(Rational(-slope)) << "*x";
  }
  return s.str();
}

// Nonnegative value, occasionally zero.
Rational draw_value(Lcg& rng, bool allow_zero) {
  if (allow_zero && rng.below(8) == 0) return 0;
  return make_rational(static_cast<long>(1 + rng.below(12)), static_cast<long>(1 + rng.below(4)));
}

}  // namespace

std::string random_affine_source(std::uint64_t seed, const AffineOptions& options) {
  Lcg rng(seed);
  int pieces = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(options.max_pieces)));
  std::vector<Rational> knots{0};
  for (int i = 1; i < pieces; ++i) {
    knots.push_back(knots.back() + make_rational(static_cast<long>(1 + rng.below(8)),
                                                 static_cast<long>(1 + rng.below(3))));
  }
  bool amenable = options.amenable_bias && rng.below(10) != 0;

  std::ostringstream out;
  out << "piecewise\n";
  // Optional isolated value at 0, which makes a jump there possible.
  bool point_at_zero = rng.below(4) == 0;
  if (point_at_zero) {
    Rational v0 = amenable ? Rational(0) : draw_value(rng, true);
    out << "[0, 0]: " << to_string(v0) << "\n";
  }
  bool lo_closed = !point_at_zero;
  Rational level = 0;
  for (int i = 0; i < pieces; ++i) {
    const Rational& lo = knots[i];
    bool last = i + 1 == pieces;
    Rational left = draw_value(rng, !amenable);
    if (options.increasing) left = level + (rng.below(2) == 0 ? Rational(0) : left / 4);
    if (i == 0 && lo_closed && amenable) left = 0;
    if (i == 0 && !lo_closed && amenable && sgn(left) == 0) left = 1;
    Rational slope;
    std::string hi_text;
    bool hi_closed = false;
    if (last) {
      slope = make_rational(static_cast<long>(rng.below(4)), static_cast<long>(1 + rng.below(3)));
      if (sgn(left) == 0 && amenable && sgn(slope) == 0) slope = 1;
      hi_text = "inf)";
    } else {
      const Rational& hi = knots[i + 1];
      Rational right = draw_value(rng, !amenable);
      if (options.increasing) right = left + right / 4;
      level = right;
      slope = (right - left) / (hi - lo);
      hi_closed = rng.below(2) == 0;
      hi_text = to_string(hi) + (hi_closed ? "]" : ")");
    }
    Rational intercept = left - slope * lo;
    out << (lo_closed ? "[" : "(") << to_string(lo) << ", " << hi_text << ": "
        << affine_text(slope, intercept) << "\n";
    lo_closed = !hi_closed;
  }
  return out.str();
}

Rational random_point(Lcg& rng, long bound) {
  long den = static_cast<long>(1 + rng.below(12));
  long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(bound * den + 1)));
  return make_rational(num, den);
}

bool image_is_triangle(const PiecewiseFunction& f, const Rational& a, const Rational& b,
                       const Rational& c) {
  Rational fa = f(a), fb = f(b), fc = f(c);
  return fa <= fb + fc && fb <= fa + fc && fc <= fa + fb;
}

void random_triangle(Lcg& rng, long bound, Rational& a, Rational& b, Rational& c) {
  for (;;) {
    a = random_point(rng, bound);
    b = random_point(rng, bound);
    c = random_point(rng, bound);
    if (a <= b + c && b <= a + c && c <= a + b) return;
  }
}

}  // namespace umpf::test
