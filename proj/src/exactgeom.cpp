#include "campedelli/exactgeom.hpp"

#include <cctype>

namespace campedelli {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::IdenticalLines: return "IdenticalLines";
    case Errc::DuplicateLine: return "DuplicateLine";
    case Errc::DegenerateArrangement: return "DegenerateArrangement";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotCampedelli: return "NotCampedelli";
    case Errc::InconsistentEquipment: return "InconsistentEquipment";
    case Errc::MalformedGluing: return "MalformedGluing";
    case Errc::CannotPerturb: return "CannotPerturb";
    case Errc::NotATriangle: return "NotATriangle";
    case Errc::DependentSides: return "DependentSides";
    case Errc::Concurrent: return "Concurrent";
    case Errc::Degenerate: return "Degenerate";
    case Errc::InvalidMultiplicity: return "InvalidMultiplicity";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_int(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  BigInt d = parse_int(den);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(num), d);
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int sign(const BigInt& v) { return v.sign(); }
int sign(const Rational& v) { return v.sign(); }

BigInt dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

BigInt det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

Vec3 make_primitive(const Vec3& v) {
  BigInt g = 0;
  for (const auto& c : v) g = boost::multiprecision::gcd(g, abs(c));
  if (g == 0) throw Error(Errc::DegenerateArrangement, "zero projective triple");
  Vec3 out{v[0] / g, v[1] / g, v[2] / g};
  for (const auto& c : out) {
    if (c != 0) {
      if (c < 0) {
        for (auto& d : out) d = -d;
      }
      break;
    }
  }
  return out;
}

Vec3 make_primitive(const std::array<Rational, 3>& v) {
  BigInt l = 1;
  for (const auto& c : v) {
    const BigInt d = boost::multiprecision::denominator(c);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
  }
  return make_primitive(out);
}

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
  const Vec3 c = cross(l1.coords(), l2.coords());
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
    throw Error(Errc::IdenticalLines, "lines " + l1.str() + " and " + l2.str() + " coincide");
  }
  return ProjPoint(c);
}

ProjLine join(const ProjPoint& p1, const ProjPoint& p2) {
  const Vec3 c = cross(p1.coords(), p2.coords());
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
    throw Error(Errc::DegenerateArrangement, "points " + p1.str() + " and " + p2.str() + " coincide");
  }
  return ProjLine(c);
}

bool on_line(const ProjPoint& p, const ProjLine& l) { return dot(p.coords(), l.coords()) == 0; }

int orientation(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
  return sign(det3(l1.coords(), l2.coords(), l3.coords()));
}

BigInt evaluate(const ProjLine& l, const Vec3& point) { return dot(l.coords(), point); }

GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRational operator/(const GaussRational& a, const GaussRational& b) {
  const Rational n = b.re * b.re + b.im * b.im;
  if (n == 0) throw Error(Errc::DegenerateArrangement, "division by zero Gaussian rational");
  const GaussRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

std::string format_gauss(const GaussRational& g) {
  if (g.im == 0) return format_rational(g.re);
  std::string im;
  if (g.im == 1) {
    im = "i";
  } else if (g.im == -1) {
    im = "-i";
  } else {
    im = format_rational(g.im) + "i";
  }
  if (g.re == 0) return im;
  if (im[0] != '-') im = "+" + im;
  return format_rational(g.re) + im;
}

GaussVec3 cross(const GaussVec3& a, const GaussVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

GaussRational det3(const GaussVec3& a, const GaussVec3& b, const GaussVec3& c) {
  const GaussVec3 x = cross(b, c);
  return a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
}

ComplexProjLine::ComplexProjLine(const GaussVec3& coeffs) : coeffs_(coeffs) {
  const GaussRational* lead = nullptr;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) {
      lead = &c;
      break;
    }
  }
  if (lead == nullptr) throw Error(Errc::DegenerateArrangement, "zero complex line");
  const GaussRational scale = *lead;
  for (auto& c : coeffs_) c = c / scale;
}

ComplexProjLine ComplexProjLine::from_real(const ProjLine& l) {
  GaussVec3 v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = {Rational(l[i]), Rational(0)};
  return ComplexProjLine(v);
}

bool ComplexProjLine::is_real() const {
  for (const auto& c : coeffs_) {
    if (!c.is_real()) return false;
  }
  return true;
}

ComplexProjLine conjugate_line(const ComplexProjLine& l) {
  const auto& c = l.coeffs();
  return ComplexProjLine(GaussVec3{c[0].conj(), c[1].conj(), c[2].conj()});
}

ProjPoint conjugate_pair_vertex(const ComplexProjLine& l) {
  if (l.is_real()) throw Error(Errc::IdenticalLines, "line is real; it coincides with its conjugate");
  const GaussVec3 x = cross(l.coeffs(), conjugate_line(l).coeffs());
  // x is purely imaginary: conj(a x abar) = abar x a = -(a x abar).
  return ProjPoint(std::array<Rational, 3>{x[0].im, x[1].im, x[2].im});
}

bool on_line(const ProjPoint& p, const ComplexProjLine& l) {
  GaussRational acc{0, 0};
  for (std::size_t i = 0; i < 3; ++i) acc = acc + l.coeffs()[i] * GaussRational{Rational(p[i]), 0};
  return acc.is_zero();
}

}  // namespace campedelli
