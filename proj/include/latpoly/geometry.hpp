#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latpoly/numeric.hpp"

namespace latpoly {

struct Point {
  Rat x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rat& s, const Point& p);

// Lexicographic order, x before y.
bool lex_less(const Point& a, const Point& b);

// (b - a) x (c - a). Positive iff a,b,c make a strict left turn.
Rat cross(const Point& a, const Point& b, const Point& c);
Rat cross(const Point& u, const Point& v);

// Integer vector, used both for primitive ray generators and for dual
// directions (x, y) acting as the functional p -> x*p.x + y*p.y.
struct IntVec {
  Int x, y;
  bool operator==(const IntVec& o) const { return x == o.x && y == o.y; }
  bool operator!=(const IntVec& o) const { return !(*this == o); }
  bool operator<(const IntVec& o) const { return x != o.x ? x < o.x : y < o.y; }
  IntVec operator-() const { return {-x, -y}; }
};

using DualVector = IntVec;

Int cross(const IntVec& u, const IntVec& v);
Rat eval(const IntVec& v, const Point& p);

// v divided by gcd(|x|,|y|). Throws on the zero vector.
IntVec primitive(const IntVec& v);

// Representative with x > 0, or x == 0 and y > 0.
IntVec lex_positive(const IntVec& v);

// Segment with endpoints in lexicographic order.
struct Segment {
  Point a, b;
  bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
};

// Strictly convex vertex cycle, counterclockwise, rotated so the
// lexicographically smallest vertex comes first. Immutable after
// construction; equality is structural.
class Polygon {
 public:
  // Validates the cycle: at least three distinct vertices, strictly convex
  // (no three consecutive collinear), positive area after orientation fix.
  static Polygon make(std::vector<Point> cycle);

  const std::vector<Point>& verts() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  const Point& vert(std::size_t i) const { return verts_[i % verts_.size()]; }

  bool operator==(const Polygon& o) const { return verts_ == o.verts_; }
  bool operator!=(const Polygon& o) const { return !(*this == o); }

  // Stable text key "x0,y0;x1,y1;...", used for ordering and dedup.
  std::string key() const;

 private:
  explicit Polygon(std::vector<Point> verts) : verts_(std::move(verts)) {}
  std::vector<Point> verts_;
};

// Convex hull of a point set: a point, a segment or a polygon.
struct Hull {
  int dim = 0;
  std::variant<Point, Segment, Polygon> shape;

  const Point& point() const { return std::get<Point>(shape); }
  const Segment& segment() const { return std::get<Segment>(shape); }
  const Polygon& polygon() const { return std::get<Polygon>(shape); }
  bool operator==(const Hull& o) const;
};

// Exact convex hull. Throws on an empty input ("empty point set").
Hull convex_hull(const std::vector<Point>& points);

// Integer affine map x -> Ax + b with |det A| = 1. Preserves the lattice,
// areas and all lattice point counts.
struct UnimodularMap {
  Int a11, a12, a21, a22;
  Int b1, b2;

  static UnimodularMap make(Int a11, Int a12, Int a21, Int a22, Int b1 = 0,
                            Int b2 = 0);
  static UnimodularMap identity();

  Int det() const { return a11 * a22 - a12 * a21; }
  Point apply(const Point& p) const;
  IntVec apply_linear(const IntVec& v) const;
  UnimodularMap inverse() const;
  // (*this)(inner(x)).
  UnimodularMap after(const UnimodularMap& inner) const;
  // Image of a dual direction w under this map: w' = w * A^{-1}.
  IntVec transport_direction(const IntVec& w) const;
};

Rat area(const Polygon& p);
Polygon apply_map(const UnimodularMap& u, const Polygon& p);
Hull apply_map(const UnimodularMap& u, const Hull& h);
Polygon translate(const Polygon& p, const Rat& dx, const Rat& dy);
Polygon scale(const Polygon& p, const Rat& s);

// Least common multiple of the vertex coordinate denominators.
Int denominator(const Polygon& p);
bool is_lattice(const Polygon& p);

// Canonical representative of the affine unimodular class of a lattice
// polygon: among the images under basis maps derived from ordered pairs of
// (signed) primitive edge directions, each translated so the bounding box
// corner sits at the origin, the one with the smallest vertex encoding.
// Equal output for equivalent inputs. Throws on non-lattice vertices.
Polygon canonical_form(const Polygon& p);

}  // namespace latpoly
