#pragma once

// Canonical class keys of equipped arrangements, deformation invariants
// and orbit counting of (labeling, equipment) states.

#include <string>
#include <vector>

#include "campedelli/equipment.hpp"

namespace campedelli {

/// "cek1:" followed by the SHA-256 of the canonical encoding, minimized
/// over starting flags and renumberings.
std::string class_key(const LabeledArrangement& arr, const SignEquipment& eq);
/// The canonical encoding itself, before hashing.
std::string canonical_encoding(const LabeledArrangement& arr, const SignEquipment& eq);

bool equivalent(const LabeledArrangement& a, const SignEquipment& ea, const LabeledArrangement& b,
                const SignEquipment& eb);

struct DefInvariant {
  bool purely_real = true;
  TypeVector type;
  AdjacencyProfile profile;

  std::string str() const;
  friend bool operator==(const DefInvariant&, const DefInvariant&) = default;
  friend auto operator<=>(const DefInvariant&, const DefInvariant&) = default;
};

DefInvariant def_invariant(const LabeledArrangement& arr, const SignEquipment& eq);

struct ClassCount {
  long long states = 0;        // 7! * 8
  int automorphisms = 0;       // combinatorial automorphisms of the complex
  int group_order = 0;         // automorphisms * 168
  long long orbits = 0;        // direct enumeration
  long long burnside_sum = 0;  // sum of fixed-state counts over the group
  long long burnside() const { return group_order ? burnside_sum / group_order : 0; }
};

/// Orbits of the group action on (bijective labeling, equipment) states
/// of a simple 7-line complex. Throws NotSimple.
ClassCount count_classes(const CellComplex& c);

}  // namespace campedelli
