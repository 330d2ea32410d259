#include "campedelli/mixedreal.hpp"

#include <algorithm>
#include <map>

namespace campedelli {

namespace {

GaussRational gdot(const GaussVec3& a, const Vec3& b) {
  GaussRational acc{0, 0};
  for (int i = 0; i < 3; ++i) acc = acc + a[i] * GaussRational{Rational(b[i]), 0};
  return acc;
}

// Covector in the new coordinates z' = M z, up to the factor det M.
Vec3 pull_back(const Vec3& a, const IntMatrix3& M) {
  Vec3 out;
  for (int j = 0; j < 3; ++j) out[j] = dot(a, cross(M[(j + 1) % 3], M[(j + 2) % 3]));
  return out;
}

GaussVec3 pull_back(const GaussVec3& a, const IntMatrix3& M) {
  GaussVec3 out;
  for (int j = 0; j < 3; ++j) out[j] = gdot(a, cross(M[(j + 1) % 3], M[(j + 2) % 3]));
  return out;
}

int count_in(const MixedArrangement& m, int q) {
  return (quadrant(m.p1()) == q) + (quadrant(m.p2()) == q);
}

}  // namespace

ComplexProjLine MixedArrangement::line(Label a) const {
  switch (a) {
    case 6: return ComplexProjLine::from_real(l110);
    case 7: return ComplexProjLine::from_real(l111);
    case 1: return ComplexProjLine::from_real(l001);
    case 4: return l100;
    case 2: return l010();
    case 5: return l101;
    case 3: return l011();
    default: throw Error(Errc::InvalidLabel, "label must be nonzero");
  }
}

void validate(const MixedArrangement& m) {
  if (m.l110 == m.l111 || m.l110 == m.l001 || m.l111 == m.l001) {
    throw Error(Errc::DuplicateLine, "real lines must be distinct");
  }
  if (orientation(m.l110, m.l111, m.l001) == 0) throw Error(Errc::Concurrent, "the three real lines are concurrent");
  if (m.l100.is_real() || m.l101.is_real()) {
    throw Error(Errc::IdenticalLines, "a conjugate pair member is real and coincides with its partner");
  }
  for (Label a = 1; a < 8; ++a) {
    for (Label b = a + 1; b < 8; ++b) {
      if (m.line(a) == m.line(b)) throw Error(Errc::DuplicateLine, "lines " + label_str(a) + " and " + label_str(b) + " coincide");
    }
  }
}

int quadrant(const ProjPoint& p) {
  const int sx = sign(p[0]) * sign(p[1]);
  const int sy = sign(p[0]) * sign(p[2]);
  if (sx == 0 || sy == 0) return 0;
  if (sx > 0) return sy > 0 ? 1 : 2;
  return sy < 0 ? 3 : 4;
}

NormalizedMixed normalize(const MixedArrangement& m) {
  validate(m);
  IntMatrix3 M{m.l110.coords(), m.l111.coords(), m.l001.coords()};
  const ProjPoint p1 = m.p1();
  const int s0 = sign(dot(M[0], p1.coords()));
  if (s0 == 0 || sign(dot(M[1], p1.coords())) == 0 || sign(dot(M[2], p1.coords())) == 0) {
    throw Error(Errc::Degenerate, "vertex p1 " + p1.str() + " lies on a real line");
  }
  for (int r : {1, 2}) {
    if (sign(dot(M[r], p1.coords())) != s0) {
      for (auto& x : M[r]) x = -x;
    }
  }
  NormalizedMixed out;
  auto apply = [&](const IntMatrix3& T) {
    MixedArrangement a;
    a.l110 = ProjLine(pull_back(m.l110.coords(), T));
    a.l111 = ProjLine(pull_back(m.l111.coords(), T));
    a.l001 = ProjLine(pull_back(m.l001.coords(), T));
    a.l100 = ComplexProjLine(pull_back(m.l100.coeffs(), T));
    a.l101 = ComplexProjLine(pull_back(m.l101.coeffs(), T));
    return a;
  };
  out.transform = M;
  out.arr = apply(M);
  if (quadrant(out.arr.p2()) == 4) {
    std::swap(M[1], M[2]);
    out.transform = M;
    out.arr = apply(M);
    // z1 <-> z2 exchanges the lines at z1 = 0 and z2 = 0; relabel so that
    // z1 = 0 is again 111 (renumbering 001 <-> 111, 101 <-> 011).
    out.arr.l111 = ProjLine(0, 1, 0);
    out.arr.l001 = ProjLine(0, 0, 1);
    out.arr.l101 = conjugate_line(out.arr.l101);
    out.renumbered = true;
  }
  return out;
}

const char* mixed_type_str(MixedTypeTag t) {
  switch (t) {
    case MixedTypeTag::I: return "I";
    case MixedTypeTag::II: return "II";
    case MixedTypeTag::III: return "III";
  }
  return "?";
}

MixedTypeTag classify_type(const MixedArrangement& m) {
  const NormalizedMixed n = normalize(m);
  // Concurrent triples of the complexified arrangement. A conjugate pair
  // of non-real triple points with nonzero label sum only adds A1 points
  // and is accepted; zero-sum, real or fourfold concurrence is not.
  for (Label a = 1; a < 8; ++a) {
    for (Label b = a + 1; b < 8; ++b) {
      for (Label c = b + 1; c < 8; ++c) {
        if (!det3(n.arr.line(a).coeffs(), n.arr.line(b).coeffs(), n.arr.line(c).coeffs()).is_zero()) continue;
        const std::string names = label_str(a) + ", " + label_str(b) + ", " + label_str(c);
        const GaussVec3 pt = cross(n.arr.line(a).coeffs(), n.arr.line(b).coeffs());
        const GaussVec3 cj{pt[0].conj(), pt[1].conj(), pt[2].conj()};
        const GaussVec3 x = cross(pt, cj);
        const bool real = x[0].is_zero() && x[1].is_zero() && x[2].is_zero();
        if ((a ^ b ^ c) == 0) throw Error(Errc::Degenerate, "lines " + names + " meet with label sum 000");
        if (real) throw Error(Errc::Degenerate, "lines " + names + " meet at a real point");
        for (Label d = 1; d < 8; ++d) {
          if (d == a || d == b || d == c) continue;
          const auto& l = n.arr.line(d).coeffs();
          if ((l[0] * pt[0] + l[1] * pt[1] + l[2] * pt[2]).is_zero()) {
            throw Error(Errc::Degenerate, "lines " + names + ", " + label_str(d) + " are concurrent");
          }
        }
      }
    }
  }
  switch (quadrant(n.arr.p2())) {
    case 1: return MixedTypeTag::I;
    case 2: return MixedTypeTag::II;
    case 3: return MixedTypeTag::III;
    default: throw Error(Errc::Degenerate, "vertex p2 " + n.arr.p2().str() + " lies on a real line");
  }
}

const char* real_structure_str(RealStructure s) {
  switch (s) {
    case RealStructure::PlusPlus: return "c++";
    case RealStructure::MinusPlus: return "c-+";
    case RealStructure::PlusMinus: return "c+-";
    case RealStructure::MinusMinus: return "c--";
  }
  return "?";
}

bool is_plus_class(RealStructure s) { return s == RealStructure::PlusPlus || s == RealStructure::MinusPlus; }

std::vector<SurfaceTopology> fix_topology(const MixedArrangement& m, RealStructure s) {
  classify_type(m);
  const NormalizedMixed n = normalize(m);
  std::vector<SurfaceTopology> out;
  for (int q : is_plus_class(s) ? std::array<int, 2>{1, 3} : std::array<int, 2>{2, 4}) {
    out.push_back(SurfaceTopology{1, 1 - 2 * count_in(n.arr, q), false});
  }
  return out;
}

std::vector<SurfaceTopology> fix_topology_oracle(const MixedArrangement& m, RealStructure s) {
  classify_type(m);
  const NormalizedMixed n = normalize(m);
  std::vector<SurfaceTopology> out;
  for (int q : is_plus_class(s) ? std::array<int, 2>{1, 3} : std::array<int, 2>{2, 4}) {
    GluedSurface g;
    g.side_labels = {6, 7, 1};
    g.branch_monodromy.assign(static_cast<std::size_t>(count_in(n.arr, q)), Label{6});
    const SurfaceTopology whole = glue_oracle(g);
    if (whole.components != 2) throw Error(Errc::MalformedGluing, "quadrant preimage is not two components");
    out.push_back(SurfaceTopology{1, whole.euler_per_component, whole.orientable});
  }
  return out;
}

const char* def_class_str(MixedDefClass c) {
  switch (c) {
    case MixedDefClass::IPlus: return "I+";
    case MixedDefClass::IMinus: return "I-";
    case MixedDefClass::II: return "II";
    case MixedDefClass::IIIPlus: return "III+";
    case MixedDefClass::IIIMinus: return "III-";
  }
  return "?";
}

MixedDefClass def_class(MixedTypeTag type, bool plus_class) {
  switch (type) {
    case MixedTypeTag::I: return plus_class ? MixedDefClass::IPlus : MixedDefClass::IMinus;
    case MixedTypeTag::II: return MixedDefClass::II;
    case MixedTypeTag::III: return plus_class ? MixedDefClass::IIIPlus : MixedDefClass::IIIMinus;
  }
  return MixedDefClass::II;
}

MixedDefClass def_class(const MixedArrangement& m, RealStructure s) {
  return def_class(classify_type(m), is_plus_class(s));
}

std::vector<int> fix_euler(MixedTypeTag type, bool plus_class) {
  // Quadrants of p1 and p2 for each type.
  const int q2 = type == MixedTypeTag::I ? 1 : type == MixedTypeTag::II ? 2 : 3;
  std::vector<int> out;
  for (int q : plus_class ? std::array<int, 2>{1, 3} : std::array<int, 2>{2, 4}) {
    out.push_back(1 - 2 * ((q == 1) + (q == q2)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassInvariant class_invariant(MixedDefClass c) {
  switch (c) {
    case MixedDefClass::IPlus: return {fix_euler(MixedTypeTag::I, true), fix_euler(MixedTypeTag::I, false)};
    case MixedDefClass::IMinus: return {fix_euler(MixedTypeTag::I, false), fix_euler(MixedTypeTag::I, true)};
    case MixedDefClass::II: return {fix_euler(MixedTypeTag::II, true), fix_euler(MixedTypeTag::II, false)};
    case MixedDefClass::IIIPlus: return {fix_euler(MixedTypeTag::III, true), fix_euler(MixedTypeTag::III, false)};
    case MixedDefClass::IIIMinus: return {fix_euler(MixedTypeTag::III, false), fix_euler(MixedTypeTag::III, true)};
  }
  return {};
}

DifReport dif_report(const std::vector<MixedDefClass>& classes) {
  DifReport rep;
  std::map<std::vector<int>, std::size_t> group_of;
  std::vector<MixedDefClass> sorted = classes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (MixedDefClass c : sorted) {
    const auto own = class_invariant(c).own;
    auto it = group_of.find(own);
    if (it == group_of.end()) {
      group_of.emplace(own, rep.groups.size());
      rep.groups.push_back({c});
    } else {
      rep.groups[it->second].push_back(c);
    }
  }
  rep.claimed_dif_classes = 4;
  rep.claim_note =
      "documented claim: four diffeomorphism classes, with I- and III+ diffeomorphic; "
      "computed grouping uses fixed-set topology only";
  return rep;
}

}  // namespace campedelli
