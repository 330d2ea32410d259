#include "campedelli/labeling.hpp"

#include <algorithm>

namespace campedelli {

std::string label_str(Label a) {
  std::string s(3, '0');
  for (int k = 0; k < 3; ++k) s[k] = label_bit(a, k) ? '1' : '0';
  return s;
}

Label parse_label(std::string_view text) {
  if (text.size() != 3) throw Error(Errc::InvalidLabel, "label must have three bits: '" + std::string(text) + "'");
  Label a = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw Error(Errc::InvalidLabel, "bad label '" + std::string(text) + "'");
    a = static_cast<Label>((a << 1) | (ch - '0'));
  }
  if (a == 0) throw Error(Errc::InvalidLabel, "label 000 is not allowed");
  return a;
}

std::array<Label, 7> all_labels() { return {1, 2, 3, 4, 5, 6, 7}; }

int Labeling::line_of(Label a) const {
  for (std::size_t i = 0; i < of_line.size(); ++i) {
    if (of_line[i] == a) return static_cast<int>(i);
  }
  return -1;
}

bool Labeling::bijective() const {
  if (of_line.size() != 7) return false;
  unsigned seen = 0;
  for (Label a : of_line) {
    if (a == 0 || a > 7) return false;
    seen |= 1u << a;
  }
  return seen == 0xFEu;
}

Label Renumbering::apply(Label a) const {
  Label out = 0;
  for (int k = 0; k < 3; ++k) {
    if (label_bit(a, k)) out ^= images[static_cast<std::size_t>(k)];
  }
  return out;
}

Renumbering Renumbering::inverse() const {
  for (const auto& r : all_renumberings()) {
    if (r.apply(apply(4)) == 4 && r.apply(apply(2)) == 2 && r.apply(apply(1)) == 1) return r;
  }
  throw Error(Errc::InvalidLabel, "renumbering is not invertible");
}

const std::vector<Renumbering>& all_renumberings() {
  static const std::vector<Renumbering> group = [] {
    std::vector<Renumbering> g;
    for (Label a = 1; a < 8; ++a) {
      for (Label b = 1; b < 8; ++b) {
        for (Label c = 1; c < 8; ++c) {
          if (b == a || (a ^ b ^ c) == 0 || c == a || c == b) continue;
          g.push_back(Renumbering{{a, b, c}});
        }
      }
    }
    std::stable_partition(g.begin(), g.end(), [](const Renumbering& r) { return r == Renumbering{}; });
    return g;
  }();
  return group;
}

Labeling apply_renumbering(const Labeling& lab, const Renumbering& tau) {
  Labeling out = lab;
  for (auto& a : out.of_line) a = tau.apply(a);
  return out;
}

SpanInfo span(std::span<const Label> labels) {
  std::vector<Label> elems{0};
  for (Label a : labels) {
    if (std::find(elems.begin(), elems.end(), a) != elems.end()) continue;
    const std::size_t n = elems.size();
    for (std::size_t i = 0; i < n; ++i) elems.push_back(static_cast<Label>(elems[i] ^ a));
  }
  std::sort(elems.begin(), elems.end());
  int dim = 0;
  while ((std::size_t{1} << dim) < elems.size()) ++dim;
  return SpanInfo{dim, elems};
}

CampedelliCheck is_campedelli(const CellComplex& c, const Labeling& lab) {
  CampedelliCheck out;
  for (const auto& mp : c.multiple_points()) {
    if (mp.multiplicity() >= 4) {
      out.violations.push_back({mp, std::to_string(mp.multiplicity()) + "-fold point"});
      continue;
    }
    Label sum = 0;
    for (int l : mp.lines) sum ^= lab[l];
    if (sum == 0) out.violations.push_back({mp, "triple point with label sum 000"});
  }
  out.valid = out.violations.empty();
  return out;
}

LabeledArrangement make_labeled(std::span<const ProjLine> lines, const Labeling& lab) {
  if (lab.of_line.size() != lines.size()) {
    throw Error(Errc::InvalidLabel, "labeling size does not match line count");
  }
  LabeledArrangement arr{CellComplex::build(lines), lab};
  const auto check = is_campedelli(arr.complex, lab);
  if (!check.valid) {
    throw Error(Errc::NotCampedelli,
                check.violations.front().reason + " at " + check.violations.front().point.point.str());
  }
  return arr;
}

}  // namespace campedelli
