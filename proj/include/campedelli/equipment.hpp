#pragma once

// Sign-equipments of purely real arrangements and adjacency types.

#include <cstdint>
#include <string>
#include <vector>

#include "campedelli/labeling.hpp"

namespace campedelli {

/// Sign triple packed like a label: bit set means '-', first sign is the
/// high bit. Crossing a line labeled a turns g into g ^ a.
using SignTriple = std::uint8_t;

inline constexpr SignTriple kAllPositive = 0;

/// "(+,-,+)".
std::string sign_str(SignTriple g);
/// "+-+" or "(+,-,+)". Throws ParseError.
SignTriple parse_signs(std::string_view text);

struct SignEquipment {
  std::vector<SignTriple> g;  // indexed by face id

  SignTriple operator[](int face) const { return g.at(static_cast<std::size_t>(face)); }
  friend bool operator==(const SignEquipment&, const SignEquipment&) = default;
  friend auto operator<=>(const SignEquipment&, const SignEquipment&) = default;
};

/// Breadth-first fill of the dual graph from one anchor, then a check of
/// the transition rule across every edge. Throws InconsistentEquipment.
SignEquipment propagate(const LabeledArrangement& arr, int anchor_face, SignTriple anchor);

/// Global flip by eps: every triple is multiplied componentwise.
SignEquipment flip(const SignEquipment& eq, SignTriple eps);

/// The eight equipments, obtained from `propagate(arr, 0, +++)` by flips
/// eps = 000..111 in that order.
std::vector<SignEquipment> all_equipments(const LabeledArrangement& arr);

/// Signs of the three quartic products at the face's interior sample.
/// Product k multiplies the forms of the lines whose label has bit k set.
SignTriple signs_from_quartics(const LabeledArrangement& arr, int face);

/// Equipment induced by the quartic rule on every face.
SignEquipment quartic_equipment(const LabeledArrangement& arr);

std::vector<int> positive_faces(const SignEquipment& eq);

int distinct_triples(const SignEquipment& eq);

/// Alternating sequence (edge-neighbor size, vertex-neighbor size, ...)
/// read around a polygon, in canonical form.
struct AdjacencyType {
  std::vector<int> seq;

  /// "(4,4',5,3',5,4')".
  std::string str() const;
  friend bool operator==(const AdjacencyType&, const AdjacencyType&) = default;
  friend auto operator<=>(const AdjacencyType&, const AdjacencyType&) = default;
};

/// Lexicographically least representative under rotations by two places
/// and the reversal that keeps edge-neighbors in even positions.
AdjacencyType canonical_adjacency(const std::vector<int>& raw);
/// Parses "(4,4',5,3',5,4')" and canonicalizes. Throws ParseError.
AdjacencyType parse_adjacency(std::string_view text);

/// Raw sequence starting at side 0 of the face.
std::vector<int> adjacency_sequence(const CellComplex& c, int face);
AdjacencyType adjacency_type(const CellComplex& c, int face);

struct AdjacencyProfile {
  std::vector<AdjacencyType> types;  // sorted

  /// "((4,4',5,3',5,4'),(5,3',5,3',6,3'))".
  std::string str() const;
  friend bool operator==(const AdjacencyProfile&, const AdjacencyProfile&) = default;
  friend auto operator<=>(const AdjacencyProfile&, const AdjacencyProfile&) = default;
};

AdjacencyProfile adjacency_profile(const LabeledArrangement& arr, const SignEquipment& eq);
/// Parses the printed profile shape; members are canonicalized.
AdjacencyProfile parse_profile(std::string_view text);

}  // namespace campedelli
