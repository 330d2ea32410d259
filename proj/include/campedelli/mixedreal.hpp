#pragma once

// Mixed real arrangements: three real lines labeled 110, 111, 001 and two
// conjugate pairs (100, 010) and (101, 011).

#include <array>
#include <string>
#include <vector>

#include "campedelli/covering.hpp"

namespace campedelli {

struct MixedArrangement {
  ProjLine l110, l111, l001;
  ComplexProjLine l100;  // partner 010 is the conjugate
  ComplexProjLine l101;  // partner 011 is the conjugate

  ComplexProjLine l010() const { return conjugate_line(l100); }
  ComplexProjLine l011() const { return conjugate_line(l101); }
  /// Real vertex of the pair (100, 010).
  ProjPoint p1() const { return conjugate_pair_vertex(l100); }
  /// Real vertex of the pair (101, 011).
  ProjPoint p2() const { return conjugate_pair_vertex(l101); }
  /// Line of a label, as a complex line.
  ComplexProjLine line(Label a) const;
};

/// Throws Concurrent when the real lines meet in a point, DuplicateLine
/// for repeated lines, IdenticalLines when a pair member is real.
void validate(const MixedArrangement& m);

using IntMatrix3 = std::array<Vec3, 3>;

struct NormalizedMixed {
  MixedArrangement arr;  // z0 = l110, z1 = l111, z2 = l001
  IntMatrix3 transform;  // rows: new coordinates as forms in the old ones
  bool renumbered = false;  // labels 111 <-> 001 and 101 <-> 011 swapped
};

/// Coordinates with the real lines as z0, z1, z2, p1 in quadrant P1 and
/// p2 outside P4. Throws Concurrent, or Degenerate when p1 is on a real
/// line.
NormalizedMixed normalize(const MixedArrangement& m);

/// Quadrant 1..4 of an affine point (x, y) = (z1/z0, z2/z0): P1 (+,+),
/// P2 (+,-), P3 (-,-), P4 (-,+). Zero when on a real line.
int quadrant(const ProjPoint& p);

enum class MixedTypeTag { I, II, III };
const char* mixed_type_str(MixedTypeTag t);

/// Throws Degenerate when p2 lies on a real line.
MixedTypeTag classify_type(const MixedArrangement& m);

enum class RealStructure { PlusPlus, MinusPlus, PlusMinus, MinusMinus };
const char* real_structure_str(RealStructure s);
/// c++ and c-+ form the class c+; c+- and c-- form c-.
bool is_plus_class(RealStructure s);

/// Both components of the fixed set: over P1 and P3 for c+, over P2 and
/// P4 for c-. Each has chi = 1 - 2n with n the number of vertices p1, p2
/// inside the quadrant.
std::vector<SurfaceTopology> fix_topology(const MixedArrangement& m, RealStructure s);
/// The same components computed by the gluing oracle.
std::vector<SurfaceTopology> fix_topology_oracle(const MixedArrangement& m, RealStructure s);

enum class MixedDefClass { IPlus, IMinus, II, IIIPlus, IIIMinus };
const char* def_class_str(MixedDefClass c);
MixedDefClass def_class(MixedTypeTag type, bool plus_class);
MixedDefClass def_class(const MixedArrangement& m, RealStructure s);

/// Euler characteristics of one fixed-set component per vertex count.
std::vector<int> fix_euler(MixedTypeTag type, bool plus_class);

struct ClassInvariant {
  std::vector<int> own;      // sorted Euler characteristics
  std::vector<int> partner;  // of the other conjugacy class
  friend bool operator==(const ClassInvariant&, const ClassInvariant&) = default;
};

ClassInvariant class_invariant(MixedDefClass c);

struct DifReport {
  std::vector<std::vector<MixedDefClass>> groups;  // equal fixed-set topology
  int claimed_dif_classes = 4;
  std::string claim_note;
};

DifReport dif_report(const std::vector<MixedDefClass>& classes);

}  // namespace campedelli
