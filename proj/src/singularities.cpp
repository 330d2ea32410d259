#include "campedelli/singularities.hpp"

#include <algorithm>

namespace campedelli {

const char* singularity_str(Singularity s) {
  switch (s) {
    case Singularity::Smooth: return "smooth";
    case Singularity::FourA1: return "4xA1";
    case Singularity::OneA1: return "A1";
    case Singularity::TwoA3: return "2xA3";
    case Singularity::FourD4: return "4xD4";
    case Singularity::NonCanonical: return "non-canonical";
  }
  return "?";
}

Label PointLabelData::sum() const {
  Label acc = 0;
  for (Label a : labels) acc ^= a;
  return acc;
}

int PointLabelData::s() const {
  const Label total = sum();
  return static_cast<int>(std::count(labels.begin(), labels.end(), total));
}

int PointLabelData::span_dimension() const { return span(labels).dimension; }

Singularity classify_point(const PointLabelData& d) {
  if (d.r() < 2) throw Error(Errc::InvalidMultiplicity, "need at least two lines, got " + std::to_string(d.r()));
  for (Label a : d.labels) {
    if (a == 0 || a > 7) throw Error(Errc::InvalidLabel, "label must be nonzero");
  }
  if (d.r() == 2) return d.labels[0] == d.labels[1] ? Singularity::FourA1 : Singularity::Smooth;
  if (d.r() >= 4) return Singularity::NonCanonical;
  if (!d.branch()) return Singularity::NonCanonical;
  switch (d.s()) {
    case 0: return Singularity::OneA1;
    case 1: return Singularity::TwoA3;
    default: return Singularity::FourD4;
  }
}

bool is_t4_germ(const PointLabelData& d) { return d.r() == 3 && !d.branch(); }

ArrangementSingularities classify_arrangement(const CellComplex& c, const Labeling& lab) {
  ArrangementSingularities out;
  for (const auto& mp : c.multiple_points()) {
    PointLabelData d;
    for (int l : mp.lines) d.labels.push_back(lab[l]);
    const Singularity s = classify_point(d);
    if (s == Singularity::NonCanonical) out.all_canonical = false;
    out.points.emplace_back(mp, s);
  }
  return out;
}

}  // namespace campedelli
