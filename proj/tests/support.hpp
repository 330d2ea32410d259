#pragma once

// Shared test helpers: fixture paths, random arrangements and the
// reference face numbering of the move-chain family.

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "campedelli/arrangement_file.hpp"
#include "campedelli/census.hpp"
#include "campedelli/mixedreal.hpp"
#include "campedelli/report.hpp"
#include "campedelli/singularities.hpp"

namespace testing {

using namespace campedelli;

inline std::string fixture(const std::string& name) { return std::string(CAMPEDELLI_FIXTURES) + "/" + name; }

inline ProjLine random_line(std::mt19937_64& rng, int bound = 30) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    const int a = d(rng), b = d(rng), c = d(rng);
    if (a || b || c) return ProjLine(a, b, c);
  }
}

inline Labeling random_labeling(std::mt19937_64& rng) {
  std::vector<Label> labs{1, 2, 3, 4, 5, 6, 7};
  std::shuffle(labs.begin(), labs.end(), rng);
  return Labeling{labs};
}

/// Seven random lines with small coefficients, redrawn until simple.
inline std::vector<ProjLine> random_simple_lines(std::mt19937_64& rng) {
  for (;;) {
    std::vector<ProjLine> ls;
    for (int i = 0; i < 7; ++i) ls.push_back(random_line(rng));
    bool ok = true;
    for (int i = 0; i < 7 && ok; ++i) {
      for (int j = i + 1; j < 7 && ok; ++j) {
        ok = !(ls[i] == ls[j]);
        for (int k = j + 1; k < 7 && ok; ++k) ok = orientation(ls[i], ls[j], ls[k]) != 0;
      }
    }
    if (ok) return ls;
  }
}

inline LabeledArrangement random_campedelli(std::mt19937_64& rng) {
  const auto ls = random_simple_lines(rng);
  return make_labeled(ls, random_labeling(rng));
}

/// Lines through a common point: `through` of them meet at one random
/// point, the rest are random. Redrawn until no other coincidences occur
/// among the extra lines.
inline std::vector<ProjLine> random_concurrent_lines(std::mt19937_64& rng, int through) {
  for (;;) {
    const ProjPoint p(random_line(rng, 5).coords());
    std::vector<ProjLine> ls;
    for (int i = 0; i < through; ++i) {
      const ProjPoint q(random_line(rng, 9).coords());
      if (q == p) break;
      ls.push_back(join(p, q));
    }
    if (static_cast<int>(ls.size()) != through) continue;
    while (ls.size() < 7) ls.push_back(random_line(rng));
    bool distinct = true;
    for (std::size_t i = 0; i < ls.size() && distinct; ++i) {
      for (std::size_t j = i + 1; j < ls.size() && distinct; ++j) distinct = !(ls[i] == ls[j]);
    }
    if (distinct) return ls;
  }
}

/// Face id -> reference polygon number (0 when unnamed) for a loaded
/// state, through the numbering sidecar of its base arrangement.
inline std::vector<int> reference_numbers(const LabeledArrangement& base, const LoadedState& st, const FaceNumbering& n) {
  std::vector<int> out;
  for (int b : st.origin) out.push_back(n.number_of(base.complex.face(b).tope));
  return out;
}

inline int face_numbered(const std::vector<int>& numbers, int k) {
  const auto it = std::find(numbers.begin(), numbers.end(), k);
  return it == numbers.end() ? -1 : static_cast<int>(it - numbers.begin());
}

// Independent automorphism count: line permutations preserving the
// chirotope up to reorienting some lines.
inline int chirotope_automorphisms(const CellComplex& c) {
  const auto& ls = c.lines();
  int chi[7][7][7] = {};
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      for (int k = 0; k < 7; ++k) {
        if (i != j && j != k && i != k) chi[i][j][k] = orientation(ls[static_cast<std::size_t>(i)], ls[static_cast<std::size_t>(j)], ls[static_cast<std::size_t>(k)]);
      }
    }
  }
  std::array<int, 7> p{0, 1, 2, 3, 4, 5, 6};
  int count = 0;
  do {
    bool found = false;
    for (int flips = 0; flips < 128 && !found; ++flips) {
      bool ok = true;
      for (int i = 0; i < 7 && ok; ++i) {
        for (int j = i + 1; j < 7 && ok; ++j) {
          for (int k = j + 1; k < 7 && ok; ++k) {
            const int odd = ((flips >> i) ^ (flips >> j) ^ (flips >> k)) & 1;
            ok = chi[p[static_cast<std::size_t>(i)]][p[static_cast<std::size_t>(j)]][p[static_cast<std::size_t>(k)]] == (odd ? -1 : 1) * chi[i][j][k];
          }
        }
      }
      found = ok;
    }
    count += found;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Random mixed real arrangements and quadrant counts.

inline GaussVec3 complexify(const Vec3& re, const Vec3& im) {
  GaussVec3 out;
  for (int k = 0; k < 3; ++k) out[static_cast<std::size_t>(k)] = GaussRational{Rational(re[static_cast<std::size_t>(k)]), Rational(im[static_cast<std::size_t>(k)])};
  return out;
}

// A non-real line through the real point p: u + iv with u, v independent
// forms vanishing at p.
inline ComplexProjLine pair_line_through(std::mt19937_64& rng, const Vec3& p) {
  for (;;) {
    const Vec3 u = cross(p, random_line(rng, 6).coords());
    const Vec3 v = cross(p, random_line(rng, 6).coords());
    if (cross(u, v) == Vec3{0, 0, 0}) continue;
    return ComplexProjLine(complexify(u, v));
  }
}

inline std::optional<MixedArrangement> random_mixed(std::mt19937_64& rng) {
  MixedArrangement m;
  m.l110 = random_line(rng, 9);
  m.l111 = random_line(rng, 9);
  m.l001 = random_line(rng, 9);
  m.l100 = pair_line_through(rng, random_line(rng, 9).coords());
  m.l101 = pair_line_through(rng, random_line(rng, 9).coords());
  try {
    validate(m);
    classify_type(m);
  } catch (const Error&) {
    return std::nullopt;
  }
  return m;
}

inline int sgn(const BigInt& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// Quadrant in the raw coordinates: signs of z1/z0 and z2/z0.
inline int raw_quadrant(const MixedArrangement& m, const ProjPoint& p) {
  const int s0 = sgn(dot(m.l110.coords(), p.coords()));
  const int s1 = sgn(dot(m.l111.coords(), p.coords())) * s0;
  const int s2 = sgn(dot(m.l001.coords(), p.coords())) * s0;
  if (s1 > 0) return s2 > 0 ? 1 : 2;
  return s2 < 0 ? 3 : 4;
}

// Euler characteristics over the four quadrants, from the raw vertex
// positions alone.
inline std::vector<int> quadrant_eulers(const MixedArrangement& m) {
  std::array<int, 5> n{};
  ++n[static_cast<std::size_t>(raw_quadrant(m, m.p1()))];
  ++n[static_cast<std::size_t>(raw_quadrant(m, m.p2()))];
  std::vector<int> out;
  for (int q = 1; q <= 4; ++q) out.push_back(1 - 2 * n[static_cast<std::size_t>(q)]);
  std::sort(out.begin(), out.end());
  return out;
}

// The case table restated by pattern: pairs by equality, triples by the
// number of repeated members and the label sum.
inline Singularity singularity_table(const std::vector<Label>& ls) {
  if (ls.size() == 2) return ls[0] == ls[1] ? Singularity::FourA1 : Singularity::Smooth;
  if (ls.size() >= 4) return Singularity::NonCanonical;
  const Label a = ls[0], b = ls[1], c = ls[2];
  if ((a ^ b ^ c) == 0) return Singularity::NonCanonical;
  if (a == b && b == c) return Singularity::FourD4;
  if (a == b || b == c || a == c) return Singularity::TwoA3;
  return Singularity::OneA1;
}

}  // namespace testing
