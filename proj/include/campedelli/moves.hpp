#pragma once

// Triangle moves on equipped purely real arrangements and the search for
// arrangements joined by good moves but separated by deformation
// invariants.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "campedelli/equipment.hpp"

namespace campedelli {

struct TriangleInfo {
  int face = -1;
  std::array<int, 3> lines{};     // side k of the face
  std::array<Label, 3> labels{};
  bool dependent = false;
  /// The face, then edge-neighbor across side k and vertex-neighbor at
  /// corner k, for k = 0, 1, 2.
  std::array<int, 7> star{};

  Label label_sum() const { return static_cast<Label>(labels[0] ^ labels[1] ^ labels[2]); }
};

std::vector<TriangleInfo> find_triangles(const LabeledArrangement& arr);
/// Throws NotATriangle.
TriangleInfo triangle_info(const LabeledArrangement& arr, int face);

/// One step of the move journal: line `line` becomes line + t * mu.
struct MoveStep {
  Tope triangle = 0;  // tope of the reversed triangle before the move
  int line = -1;
  Vec3 mu;
  Rational t;
};

struct MoveRecord {
  MoveStep step;
  int triangle_face = -1;  // in the source numbering
  LabeledArrangement result;
  SignEquipment equipment;
  /// Source face id -> result face id.
  std::vector<int> face_map;
  bool good = false;
};

/// Reverses a triangle by pushing one of its sides across the opposite
/// corner. Throws NotATriangle or CannotPerturb.
MoveRecord reverse_triangle(const LabeledArrangement& arr, const SignEquipment& eq, int face);

/// Applies a recorded step and re-derives the equipment. Throws
/// CannotPerturb when the step does not reverse exactly that triangle.
MoveRecord replay_step(const LabeledArrangement& arr, const SignEquipment& eq, const MoveStep& step);

/// No (+,+,+) among the triangle and its three vertex-neighbors.
/// Throws DependentSides for a dependent triangle.
bool local_euler_zero(const SignEquipment& eq, const TriangleInfo& t);

/// Dependent sides and no (+,+,+) in the seven-face star.
bool is_good_move(const SignEquipment& eq, const TriangleInfo& t);

struct EquippedArrangement {
  LabeledArrangement arr;
  SignEquipment eq;
};

struct SearchMember {
  EquippedArrangement state;
  std::vector<MoveStep> path;
  TypeVector type;
  AdjacencyProfile profile;
  std::string key;  // class key
};

struct WitnessReport {
  std::vector<SearchMember> members;  // one per equivalence class
  /// Members bucketed by (type, profile); more than one bucket is a witness.
  std::vector<std::vector<int>> buckets;

  bool is_witness() const { return buckets.size() > 1; }
};

/// Breadth-first search over good moves up to `depth`, deduplicated by
/// equivalence class.
WitnessReport witness_search(const LabeledArrangement& arr, const SignEquipment& eq, int depth);

}  // namespace campedelli
