#pragma once

// Points of the covering over multiple points of a labeled arrangement.

#include <map>
#include <string>
#include <vector>

#include "campedelli/labeling.hpp"

namespace campedelli {

enum class Singularity { Smooth, FourA1, OneA1, TwoA3, FourD4, NonCanonical };

/// "smooth", "4xA1", "A1", "2xA3", "4xD4", "non-canonical".
const char* singularity_str(Singularity s);

struct PointLabelData {
  std::vector<Label> labels;  // repetitions allowed

  int r() const { return static_cast<int>(labels.size()); }
  Label sum() const;
  /// Members equal to the total sum.
  int s() const;
  bool branch() const { return sum() != 0; }
  int span_dimension() const;
};

/// Throws InvalidMultiplicity for r < 2, InvalidLabel for a zero label.
Singularity classify_point(const PointLabelData& d);

/// Three concurrent lines whose labels sum to zero.
bool is_t4_germ(const PointLabelData& d);

struct ArrangementSingularities {
  std::vector<std::pair<MultiplePoint, Singularity>> points;
  bool all_canonical = true;
};

/// Verdict for each point of multiplicity >= 3. The labeling may repeat
/// labels.
ArrangementSingularities classify_arrangement(const CellComplex& c, const Labeling& lab);

}  // namespace campedelli
