#pragma once

// Reports in the shape of the reference tables, and symbolic emission of
// the covering equations.

#include <string>
#include <utility>
#include <vector>

#include "campedelli/arrangement_file.hpp"

namespace campedelli {

struct AdjacencyRow {
  std::string face;  // "P3"
  std::string row;   // "(5_9,4_10',5_11,3_17',5_16,3_15')"
};

struct Report {
  TypeVector type;
  /// Name of each current face: "P<k>" from a numbering sidecar, otherwise
  /// "F<id>" with the id of the face in the base arrangement.
  std::vector<std::string> names;
  /// All other faces, by number.
  std::vector<std::pair<std::string, int>> side_counts;
  /// Faces that were triangles with dependent side labels in the base
  /// arrangement (the candidates for good moves), by number.
  std::vector<AdjacencyRow> adjacency_rows;
  std::vector<std::string> positive;
  std::string profile;
  std::vector<std::pair<std::string, SurfaceTopology>> real_part;
  BettiSummary betti;
  SmithThomReport smith_thom;
};

/// `base` is the arrangement before the journal. Throws NotSimple.
Report build_report(const LabeledArrangement& base, const LoadedState& state, const FaceNumbering* numbering);

/// Two-row blocks of eight: names, then side counts.
std::string side_count_table(const Report& r);
std::string format_report(const Report& r);

/// Seven squared equations and four relations with the arrangement's
/// linear forms substituted.
std::string emit_equations(const LabeledArrangement& arr);
/// Mixed shape in normalized coordinates z0 = l110, z1 = l111, z2 = l001,
/// with q1 and q2 expanded as real quadratic forms.
std::string emit_equations(const MixedArrangement& m);

/// "199*z0 - z2".
std::string format_linear(const ProjLine& l);
std::string format_linear(const ComplexProjLine& l);
/// |l|^2 for a complex line, as a real quadratic form in z0, z1, z2.
std::string format_norm_form(const ComplexProjLine& l);

}  // namespace campedelli
