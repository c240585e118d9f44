#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathhom/rational.hpp"

namespace pathhom {

using Vertex = int;

// Elementary path: a vertex sequence. Its grade is size() - 1, so the empty
// sequence is the grade -1 path.
using Path = std::vector<Vertex>;

inline int grade_of(const Path& p) { return static_cast<int>(p.size()) - 1; }

// No two consecutive vertices equal.
bool is_regular(std::span<const Vertex> p);

enum class Regularity { regular, nonregular };
enum class Augmentation { truncated, augmented };

struct BoundaryMode {
  Regularity regularity = Regularity::regular;
  Augmentation augmentation = Augmentation::truncated;
  friend bool operator==(const BoundaryMode&, const BoundaryMode&) = default;
};

// Homogeneous formal linear combination of elementary paths. The same type
// holds forms, with e^x dual to e_x. Terms are kept in lexicographic order
// and never store zero coefficients.
class Chain {
 public:
  using Terms = std::map<Path, Rational>;

  explicit Chain(int grade = 0);
  static Chain of(Path p, const Rational& c = 1);

  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Path& p, const Rational& c);
  Rational coefficient(const Path& p) const;
  Rational l1_norm() const;
  // First nonzero coefficient, or zero for the zero chain.
  Rational leading_coefficient() const;

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Rational& c);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& c, Chain a) { return a *= c; }
  friend Chain operator-(Chain a) { return a *= -1; }
  friend bool operator==(const Chain& a, const Chain& b);

 private:
  int grade_;
  Terms terms_;
};

// Grade drops by one. Regular mode rejects non-regular input terms and
// drops non-regular output terms. Grade 0 maps to the empty path under
// augmentation and to zero otherwise; grade -1 maps to zero.
Chain boundary(const Chain& c, BoundaryMode mode = {});

// e_x e_y = e_{xy}; grade(u) + grade(v) + 1.
Chain join_paths(const Chain& u, const Chain& v, Regularity r = Regularity::regular);

// Text form "coef * v0.v1.v2 + ..." with labels when given, else integers.
// The empty path prints as "()" and the zero chain as "0".
std::string format_chain(const Chain& c, std::span<const std::string> labels = {});

// Inverse of format_chain. Vertices are looked up in labels, or read as
// integers when labels is empty. zero_grade is used for "0".
Chain parse_chain(std::string_view text, std::span<const std::string> labels = {}, int zero_grade = 0);

}  // namespace pathhom
