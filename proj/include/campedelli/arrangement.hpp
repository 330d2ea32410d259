#pragma once

// Cell decomposition of RP^2 cut by an arrangement of real lines.
//
// The complex is built on the double cover S^2: every line is a great
// circle, intersection directions are sorted exactly along each circle,
// faces are traced as half-edge cycles and then paired antipodally.
// Faces are numbered by their canonical boundary word (cyclic sequence of
// side line indices, minimized over rotation and reversal), ties broken
// by tope.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "campedelli/exactgeom.hpp"

namespace campedelli {

/// Sign vector of a face w.r.t. all lines, as a bitmask of lines whose
/// form is negative, normalized so that line 0 is positive.
using Tope = std::uint64_t;

struct MultiplePoint {
  ProjPoint point;
  std::vector<int> lines;  // sorted

  int multiplicity() const { return static_cast<int>(lines.size()); }
};

struct Edge {
  int line = -1;
  std::array<int, 2> ends{-1, -1};  // vertex ids
  int arc = -1;                     // position along the line
  std::array<int, 2> faces{-1, -1};
};

/// A face of the complex. Side k runs from corner k-1 to corner k; the
/// edge-neighbor across side k is edge_neighbors[k] and the face opposite
/// at corner k is vertex_neighbors[k].
struct Polygon {
  int id = -1;
  std::vector<int> sides;    // edge ids, cyclic
  std::vector<int> corners;  // vertex ids, cyclic
  std::vector<int> edge_neighbors;
  std::vector<int> vertex_neighbors;
  ProjPoint interior_sample;
  Vec3 sphere_sample;  // same point, on the hemisphere of the traced face
  Tope tope = 0;

  int size() const { return static_cast<int>(sides.size()); }
};

struct TypeVector {
  std::array<int, 5> counts{};  // m3..m7

  int operator[](int n) const { return counts.at(static_cast<std::size_t>(n - 3)); }
  std::string str() const;
  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;
};

class CellComplex {
 public:
  /// Throws DuplicateLine, or DegenerateArrangement for fewer than three
  /// lines or all lines through one point.
  static CellComplex build(std::span<const ProjLine> lines);

  const std::vector<ProjLine>& lines() const noexcept { return lines_; }
  const std::vector<MultiplePoint>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Polygon>& faces() const noexcept { return faces_; }
  const Polygon& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }

  int line_count() const { return static_cast<int>(lines_.size()); }
  /// Line index carried by side k of a face.
  int side_line(int face, int k) const;
  std::vector<int> side_lines(int face) const;

  /// Points of multiplicity >= 3.
  std::vector<MultiplePoint> multiple_points() const;
  bool is_simple() const;

  Tope tope_of(const Vec3& point) const;  // point off every line
  std::optional<int> face_of_tope(Tope t) const;
  /// Face containing a point that lies on no line. Throws Degenerate otherwise.
  int locate(const ProjPoint& p) const;
  std::string tope_string(int face) const;

 private:
  std::vector<ProjLine> lines_;
  std::vector<MultiplePoint> vertices_;
  std::vector<Edge> edges_;
  std::vector<Polygon> faces_;
};

/// Throws NotSimple when a point of multiplicity >= 3 exists.
TypeVector type_vector(const CellComplex& c);

ProjPoint interior_point(const Polygon& face);

/// Flag (face, side position, end) permutation induced by a combinatorial
/// automorphism, together with the induced maps on cells and lines.
struct ComplexAutomorphism {
  std::vector<int> face_map;
  std::vector<int> edge_map;
  std::vector<int> vertex_map;
  std::vector<int> line_map;

  bool is_identity() const;
};

/// Flags (face, side position, end) with the three reflections: r0 swaps
/// the end, r1 moves to the other side at the same corner, r2 crosses the
/// edge into the neighboring face.
struct FlagGraph {
  std::vector<int> face, side, end;
  std::vector<std::array<int, 3>> step;

  int size() const { return static_cast<int>(face.size()); }
  int edge(const CellComplex& c, int flag) const;
  int vertex(const CellComplex& c, int flag) const;
};

FlagGraph flag_graph(const CellComplex& c);

/// All incidence-preserving permutations of the flags of the face complex.
/// The identity is always first.
std::vector<ComplexAutomorphism> combinatorial_automorphisms(const CellComplex& c);

/// Canonical cyclic word of a polygon's side lines.
std::vector<int> canonical_boundary_word(const std::vector<int>& cyclic);

}  // namespace campedelli
