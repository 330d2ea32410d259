#include "campedelli/covering.hpp"

#include <numeric>

namespace campedelli {

std::string SurfaceTopology::str() const {
  return std::to_string(components) + "x(chi=" + std::to_string(euler_per_component) + ", " +
         (orientable ? "orientable" : "non-orientable") + ")";
}

SurfaceTopology preimage_topology(const std::vector<Label>& side_labels) {
  const int n = static_cast<int>(side_labels.size());
  const SpanInfo sp = span(side_labels);
  SurfaceTopology t;
  t.components = 8 / static_cast<int>(sp.elements.size());
  t.euler_per_component = (8 - 2 * n) / t.components;
  if (n == 3) {
    t.orientable = sp.dimension == 3;
  } else if (n == 4) {
    t.orientable = (side_labels[0] ^ side_labels[1] ^ side_labels[2] ^ side_labels[3]) == 0;
  } else {
    t.orientable = false;
  }
  return t;
}

SurfaceTopology preimage_topology(const LabeledArrangement& arr, int face) {
  std::vector<Label> labels;
  for (int l : arr.complex.side_lines(face)) labels.push_back(arr.labeling[l]);
  return preimage_topology(labels);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SurfaceTopology glue_oracle(const GluedSurface& g) {
  const int n = static_cast<int>(g.side_labels.size());
  const int m = static_cast<int>(g.branch_monodromy.size());
  if (n < 2) throw Error(Errc::MalformedGluing, "polygon needs at least two sides");
  for (Label a : g.side_labels) {
    if (a == 0 || a > 7) throw Error(Errc::MalformedGluing, "side label must be nonzero");
  }
  for (Label a : g.branch_monodromy) {
    if (a == 0 || a > 7) throw Error(Errc::MalformedGluing, "branch monodromy must be nonzero");
  }

  // Local cell structure of one copy. Side k runs from corner k-1 to
  // corner k; side 0 is split by the slit feet, and slit j rises from its
  // foot to branch point j. Vertices are counted as classes of face
  // corners, so a slit foot never pinches sectors of different sheets.
  struct LocalEdge {
    int kind;   // 0 side, 1 left bank, 2 right bank
    int index;  // side number or slit number
    int from_corner = -1, to_corner = -1;
  };
  std::vector<LocalEdge> edges;
  // Boundary walk: sides 1..n-1, then side 0 interleaved with the slits.
  std::vector<std::pair<int, bool>> walk;  // (edge, forward)
  auto add = [&](int kind, int index, bool forward) {
    edges.push_back({kind, index});
    walk.emplace_back(static_cast<int>(edges.size()) - 1, forward);
  };
  for (int k = 1; k < n; ++k) add(0, k, true);
  for (int j = 0; j < m; ++j) {
    add(0, 0, true);
    add(1, j, true);
    add(2, j, false);
  }
  add(0, 0, true);
  // Corner i sits between walk step i-1 and walk step i.
  const int nc = static_cast<int>(walk.size());
  for (int i = 0; i < nc; ++i) {
    auto& e = edges[static_cast<std::size_t>(walk[static_cast<std::size_t>(i)].first)];
    const int start = i, end = (i + 1) % nc;
    if (walk[static_cast<std::size_t>(i)].second) {
      e.from_corner = start;
      e.to_corner = end;
    } else {
      e.from_corner = end;
      e.to_corner = start;
    }
  }
  const int ne = static_cast<int>(edges.size());
  auto cid = [&](int beta, int c) { return beta * nc + c; };

  UnionFind verts(8 * nc);
  UnionFind sheets(8);
  // Orientation constraints between sheets: parity 1 means opposite.
  std::vector<std::vector<std::pair<int, int>>> constraints(8);
  int glued_pairs = 0;
  for (int beta = 0; beta < 8; ++beta) {
    for (int e = 0; e < ne; ++e) {
      const LocalEdge& le = edges[static_cast<std::size_t>(e)];
      int other = -1;
      int parity = 0;
      if (le.kind == 0) {
        other = beta ^ g.side_labels[static_cast<std::size_t>(le.index)];
        parity = 1;
      } else if (le.kind == 1) {
        other = beta ^ g.branch_monodromy[static_cast<std::size_t>(le.index)];
        parity = 0;
      } else {
        continue;  // right banks are reached from left banks
      }
      const int partner_edge = le.kind == 1 ? e + 1 : e;
      if (le.kind == 0 && other < beta) continue;
      ++glued_pairs;
      const LocalEdge& pe = edges[static_cast<std::size_t>(partner_edge)];
      verts.unite(cid(beta, le.from_corner), cid(other, pe.from_corner));
      verts.unite(cid(beta, le.to_corner), cid(other, pe.to_corner));
      sheets.unite(beta, other);
      constraints[static_cast<std::size_t>(beta)].push_back({other, parity});
      constraints[static_cast<std::size_t>(other)].push_back({beta, parity});
    }
  }
  if (glued_pairs * 2 != 8 * ne) throw Error(Errc::MalformedGluing, "not every edge is glued exactly once");

  int V = 0;
  for (int x = 0; x < 8 * nc; ++x) {
    if (verts.find(x) == x) ++V;
  }
  const int E = 8 * ne / 2;
  const int F = 8;
  const int chi = V - E + F;

  int comps = 0;
  for (int b = 0; b < 8; ++b) {
    if (sheets.find(b) == b) ++comps;
  }
  std::vector<int> color(8, -1);
  bool orientable = true;
  for (int s = 0; s < 8 && orientable; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty() && orientable) {
      const int x = stack.back();
      stack.pop_back();
      for (auto [y, par] : constraints[x]) {
        const int want = color[x] ^ par;
        if (color[y] < 0) {
          color[y] = want;
          stack.push_back(y);
        } else if (color[y] != want) {
          orientable = false;
        }
      }
    }
  }
  if (chi % comps != 0) throw Error(Errc::MalformedGluing, "components are not homogeneous");
  return SurfaceTopology{comps, chi / comps, orientable};
}

std::vector<std::pair<int, SurfaceTopology>> real_part(const LabeledArrangement& arr, const SignEquipment& eq) {
  std::vector<std::pair<int, SurfaceTopology>> out;
  for (int f : positive_faces(eq)) out.emplace_back(f, preimage_topology(arr, f));
  return out;
}

BettiSummary betti(const std::vector<SurfaceTopology>& parts) {
  BettiSummary b;
  for (const auto& t : parts) {
    b.z2_total += t.components * (4 - t.euler_per_component);
    b.q_total += t.components * ((t.orientable ? 4 : 2) - t.euler_per_component);
  }
  return b;
}

SmithThomReport smith_thom_report(const BettiSummary& b) {
  return SmithThomReport{b.z2_total, b.q_total, b.z2_total <= kComplexZ2Total, b.q_total > kComplexQTotal};
}

}  // namespace campedelli
