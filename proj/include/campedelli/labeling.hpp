#pragma once

// Labels in (Z/2)^3, labelings of line arrangements and the renumbering
// group GL(3,2).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "campedelli/arrangement.hpp"

namespace campedelli {

/// Nonzero vector of (Z/2)^3 packed into 3 bits; the first coordinate is
/// the high bit, so "100" is 4 and "001" is 1.
using Label = std::uint8_t;

/// Coordinate k (0..2) of a label.
inline int label_bit(Label a, int k) { return (a >> (2 - k)) & 1; }

std::string label_str(Label a);
/// Accepts a 3-character bitstring. Throws InvalidLabel.
Label parse_label(std::string_view text);

/// All seven nonzero labels in increasing order 001..111.
std::array<Label, 7> all_labels();

/// Line index -> label.
struct Labeling {
  std::vector<Label> of_line;

  Label operator[](int line) const { return of_line.at(static_cast<std::size_t>(line)); }
  int line_of(Label a) const;  // -1 when absent
  bool bijective() const;      // seven lines, all nonzero labels used once
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Invertible linear map of (Z/2)^3 given by the images of 100, 010, 001.
struct Renumbering {
  std::array<Label, 3> images{4, 2, 1};

  Label apply(Label a) const;
  Renumbering inverse() const;
  friend bool operator==(const Renumbering&, const Renumbering&) = default;
};

/// The 168 elements of GL(3,2), identity first.
const std::vector<Renumbering>& all_renumberings();

Labeling apply_renumbering(const Labeling& lab, const Renumbering& tau);

struct SpanInfo {
  int dimension = 0;
  std::vector<Label> elements;  // sorted, including 0
};

SpanInfo span(std::span<const Label> labels);

struct Violation {
  MultiplePoint point;
  std::string reason;
};

struct CampedelliCheck {
  bool valid = true;
  std::vector<Violation> violations;
};

/// No point of multiplicity >= 4 and no triple point with label sum 0.
CampedelliCheck is_campedelli(const CellComplex& c, const Labeling& lab);

struct LabeledArrangement {
  CellComplex complex;
  Labeling labeling;

  /// Line carrying a label.
  int line(Label a) const { return labeling.line_of(a); }
};

/// Builds the complex and checks validity. Throws NotCampedelli.
LabeledArrangement make_labeled(std::span<const ProjLine> lines, const Labeling& lab);

}  // namespace campedelli
