#pragma once

// Exact projective-plane kernel. Points and lines of P^2 are stored as
// primitive integer triples; complex lines carry Gaussian-rational
// coefficients. Nothing in here touches floating point.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "campedelli/error.hpp"

namespace campedelli {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vec3 = std::array<BigInt, 3>;

/// Parses "p", "-p" or "p/q" (no decimal point). Throws Error{ParseError}.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& r);

int sign(const BigInt& v);
int sign(const Rational& v);

BigInt dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
BigInt det3(const Vec3& a, const Vec3& b, const Vec3& c);

/// Scales a nonzero triple to its primitive representative: gcd 1, first
/// nonzero entry positive. Throws DegenerateArrangement on the zero triple.
Vec3 make_primitive(const Vec3& v);
/// Clears denominators, then makes primitive.
Vec3 make_primitive(const std::array<Rational, 3>& v);

/// Primitive integer triple; Tag separates points from lines.
template <class Tag>
class ProjTriple {
 public:
  ProjTriple() : coords_{BigInt(0), BigInt(0), BigInt(1)} {}
  explicit ProjTriple(const Vec3& v) : coords_(make_primitive(v)) {}
  explicit ProjTriple(const std::array<Rational, 3>& v) : coords_(make_primitive(v)) {}
  ProjTriple(long long a, long long b, long long c) : ProjTriple(Vec3{BigInt(a), BigInt(b), BigInt(c)}) {}

  const Vec3& coords() const noexcept { return coords_; }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjTriple& a, const ProjTriple& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjTriple& a, const ProjTriple& b) { return a.coords_ < b.coords_; }

  std::string str() const {
    return "(" + coords_[0].str() + "," + coords_[1].str() + "," + coords_[2].str() + ")";
  }

 private:
  Vec3 coords_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = ProjTriple<PointTag>;
using ProjLine = ProjTriple<LineTag>;

template <class Tag>
std::ostream& operator<<(std::ostream& os, const ProjTriple<Tag>& t) {
  return os << t.str();
}

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);
ProjLine join(const ProjPoint& p1, const ProjPoint& p2);
bool on_line(const ProjPoint& p, const ProjLine& l);
/// Sign of det of the three covectors: zero iff concurrent or repeated.
int orientation(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3);
/// Value of the linear form at the given representative (sign depends on
/// the representative for odd degree).
BigInt evaluate(const ProjLine& l, const Vec3& point);

struct GaussRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRational conj() const { return {re, -im}; }

  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

GaussRational operator+(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a, const GaussRational& b);
GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational operator/(const GaussRational& a, const GaussRational& b);
/// "a", "a+bi", "bi" style; used by the equation emitter.
std::string format_gauss(const GaussRational& g);

using GaussVec3 = std::array<GaussRational, 3>;

GaussVec3 cross(const GaussVec3& a, const GaussVec3& b);
GaussRational det3(const GaussVec3& a, const GaussVec3& b, const GaussVec3& c);

/// Complex line with its first nonzero coefficient scaled to 1.
class ComplexProjLine {
 public:
  ComplexProjLine() : coeffs_{GaussRational{1, 0}, GaussRational{0, 0}, GaussRational{0, 0}} {}
  explicit ComplexProjLine(const GaussVec3& coeffs);
  static ComplexProjLine from_real(const ProjLine& l);

  const GaussVec3& coeffs() const noexcept { return coeffs_; }
  bool is_real() const;

  friend bool operator==(const ComplexProjLine&, const ComplexProjLine&) = default;

 private:
  GaussVec3 coeffs_;
};

ComplexProjLine conjugate_line(const ComplexProjLine& l);

/// Real intersection point of a non-real line with its conjugate.
/// Throws IdenticalLines when the line is real.
ProjPoint conjugate_pair_vertex(const ComplexProjLine& l);

/// True iff the point (real) satisfies the complex linear equation.
bool on_line(const ProjPoint& p, const ComplexProjLine& l);

}  // namespace campedelli

template <class Tag>
struct std::hash<campedelli::ProjTriple<Tag>> {
  std::size_t operator()(const campedelli::ProjTriple<Tag>& t) const noexcept {
    std::size_t h = 0;
    for (const auto& c : t.coords()) {
      h = h * 1000003u ^ std::hash<std::string>{}(c.str());
    }
    return h;
  }
};
