#include "umpf/distance_matrix.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "umpf/errors.h"

namespace umpf {

DistanceMatrix::DistanceMatrix(size_t n) : n_(n), d_(n * n) {
  if (n == 0) throw MatrixFormatError("a distance matrix needs at least one point");
}

DistanceMatrix::DistanceMatrix(std::vector<std::vector<Rational>> rows)
    : DistanceMatrix(rows.size()) {
  for (size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw MatrixFormatError("row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(n_));
    }
  }
  for (size_t i = 0; i < n_; ++i) {
    if (rows[i][i] != 0) {
      throw MatrixFormatError("nonzero diagonal entry at " + std::to_string(i + 1));
    }
    for (size_t j = i + 1; j < n_; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw MatrixFormatError("asymmetric entries at (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ")");
      }
      set(i, j, rows[i][j]);
    }
  }
}

void DistanceMatrix::set(size_t i, size_t j, const Rational& value) {
  if (sgn(value) < 0) throw MatrixFormatError("negative distance " + to_string(value));
  if (i == j && value != 0) throw MatrixFormatError("nonzero diagonal entry");
  d_[i * n_ + j] = value;
  d_[j * n_ + i] = value;
}

std::vector<std::vector<Rational>> DistanceMatrix::rows() const {
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

DistanceMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      size_t b = cell.find_first_not_of(" \t");
      size_t e = cell.find_last_not_of(" \t");
      std::string trimmed = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
      try {
        row.push_back(parse_rational(trimmed));
      } catch (const std::invalid_argument&) {
        throw MatrixFormatError("line " + std::to_string(line_no) + ": bad entry '" +
                                trimmed + "'");
      }
    }
    if (!line.empty() && line.back() == ',') {
      throw MatrixFormatError("line " + std::to_string(line_no) + ": trailing comma");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw MatrixFormatError("empty matrix");
  return DistanceMatrix(std::move(rows));
}

DistanceMatrix load_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_matrix_csv(os.str());
}

std::string to_csv(const DistanceMatrix& d) {
  std::string out;
  for (size_t i = 0; i < d.size(); ++i) {
    for (size_t j = 0; j < d.size(); ++j) {
      if (j) out += ',';
      out += to_string(d(i, j));
    }
    out += '\n';
  }
  return out;
}

Triplet make_triplet(const Rational& a, const Rational& b, const Rational& c) {
  if (sgn(a) < 0 || sgn(b) < 0 || sgn(c) < 0) {
    throw std::invalid_argument("triplet components must be nonnegative");
  }
  Triplet t{a, b, c};
  t.in_delta = a <= b + c && b <= c + a && c <= a + b;
  t.in_delta_inf = a <= std::max(b, c) && b <= std::max(c, a) && c <= std::max(a, b);
  if (a <= b && b == c) {
    t.shape = Triplet::Shape::kABeqC;
  } else if (b <= c && c == a) {
    t.shape = Triplet::Shape::kBCeqA;
  } else if (c <= a && a == b) {
    t.shape = Triplet::Shape::kCABeqB;
  }
  return t;
}

std::string to_string(Triplet::Shape shape) {
  switch (shape) {
    case Triplet::Shape::kABeqC: return "a<=b=c";
    case Triplet::Shape::kBCeqA: return "b<=c=a";
    case Triplet::Shape::kCABeqB: return "c<=a=b";
    case Triplet::Shape::kNone: return "none";
  }
  return "none";
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kM1: return "M1";
    case Axiom::kM2: return "M2";
    case Axiom::kM3: return "M3";
    case Axiom::kU3: return "U3";
  }
  return "?";
}

Axiom parse_axiom(std::string_view text) {
  if (text == "M1") return Axiom::kM1;
  if (text == "M2") return Axiom::kM2;
  if (text == "M3") return Axiom::kM3;
  if (text == "U3") return Axiom::kU3;
  throw std::invalid_argument("unknown axiom " + std::string(text));
}

std::string to_string(const AxiomViolation& v) {
  std::string where = "(" + std::to_string(v.i + 1) + ", " + std::to_string(v.j + 1);
  if (v.k) where += "; via " + std::to_string(*v.k + 1);
  where += ")";
  switch (v.axiom) {
    case Axiom::kM1:
      if (v.i == v.j) return "M1 at " + where + ": f(0) = " + to_string(v.lhs) + " != 0";
      return "M1 at " + where + ": distinct points at distance 0";
    case Axiom::kM3:
      return "M3 at " + where + ": " + to_string(v.lhs) + " > " + to_string(v.rhs);
    case Axiom::kU3:
      return "U3 at " + where + ": " + to_string(v.lhs) + " > max = " + to_string(v.rhs);
    case Axiom::kM2:
      return "M2 at " + where;
  }
  return "?";
}

}  // namespace umpf
