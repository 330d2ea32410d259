#pragma once

// Topology of the (Z/2)^3-covering over a polygon: closed forms and an
// independent gluing oracle, real parts and Betti sums.

#include <string>
#include <utility>
#include <vector>

#include "campedelli/equipment.hpp"

namespace campedelli {

struct SurfaceTopology {
  int components = 0;
  int euler_per_component = 0;
  bool orientable = false;

  int total_euler() const { return components * euler_per_component; }
  /// "2x(chi=1, non-orientable)".
  std::string str() const;
  friend bool operator==(const SurfaceTopology&, const SurfaceTopology&) = default;
  friend auto operator<=>(const SurfaceTopology&, const SurfaceTopology&) = default;
};

/// Closed form over an n-gon whose sides carry the given labels.
SurfaceTopology preimage_topology(const std::vector<Label>& side_labels);
SurfaceTopology preimage_topology(const LabeledArrangement& arr, int face);

/// Eight copies of a polygon disk, indexed by the group, with sides glued
/// (a, b) ~ (a, b + alpha). Each branch point is joined to side 0 by a slit
/// whose two banks are glued with a shift by the monodromy.
struct GluedSurface {
  std::vector<Label> side_labels;
  std::vector<Label> branch_monodromy;
};

/// Builds the quotient CW complex and reads off components, Euler
/// characteristic and orientability. Throws MalformedGluing.
SurfaceTopology glue_oracle(const GluedSurface& g);

std::vector<std::pair<int, SurfaceTopology>> real_part(const LabeledArrangement& arr, const SignEquipment& eq);

struct BettiSummary {
  int z2_total = 0;
  int q_total = 0;
};

BettiSummary betti(const std::vector<SurfaceTopology>& parts);

struct SmithThomReport {
  int z2_total = 0;
  int q_total = 0;
  bool z2_within_bound = true;  // z2_total <= 22
  bool q_exceeds_complex = false;  // q_total > 10
};

inline constexpr int kComplexZ2Total = 22;
inline constexpr int kComplexQTotal = 10;

SmithThomReport smith_thom_report(const BettiSummary& b);

}  // namespace campedelli
