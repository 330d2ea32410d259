#include "campedelli/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace campedelli {

std::string TypeVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(counts[i]);
  }
  return out + ")";
}

std::vector<int> canonical_boundary_word(const std::vector<int>& cyclic) {
  const std::size_t n = cyclic.size();
  std::vector<int> best = cyclic;
  std::vector<int> cand(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        cand[k] = dir == 0 ? cyclic[(r + k) % n] : cyclic[(r + n - k) % n];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

namespace {

Vec3 negate(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

// Sorts vectors lying in the plane orthogonal to `axis` counterclockwise
// (viewed from the tip of `axis`), starting at the first element.
template <class Key>
void angular_sort(const Vec3& axis, std::vector<Key>& items, const std::vector<Vec3>& dirs) {
  if (items.empty()) return;
  const Vec3 ref = dirs[static_cast<std::size_t>(items.front())];
  auto half = [&](const Vec3& x) {
    const int d = sign(det3(axis, ref, x));
    if (d > 0) return 0;
    if (d == 0 && sign(dot(ref, x)) > 0) return 0;
    return 1;
  };
  std::stable_sort(items.begin(), items.end(), [&](Key a, Key b) {
    const Vec3& va = dirs[static_cast<std::size_t>(a)];
    const Vec3& vb = dirs[static_cast<std::size_t>(b)];
    const int ha = half(va), hb = half(vb);
    if (ha != hb) return ha < hb;
    return sign(det3(axis, va, vb)) > 0;
  });
}

Tope normalize_tope(Tope t, int n) {
  const Tope mask = n >= 64 ? ~Tope{0} : ((Tope{1} << n) - 1);
  if (t & 1) t = ~t & mask;
  return t;
}

}  // namespace

CellComplex CellComplex::build(std::span<const ProjLine> input) {
  const int n = static_cast<int>(input.size());
  if (n < 3) throw Error(Errc::DegenerateArrangement, "need at least three lines");
  if (n > 63) throw Error(Errc::DegenerateArrangement, "at most 63 lines supported");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (input[i] == input[j]) {
        throw Error(Errc::DuplicateLine,
                    "lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide: " + input[i].str());
      }
    }
  }
  bool pencil = true;
  for (int k = 2; k < n && pencil; ++k) {
    if (orientation(input[0], input[1], input[k]) != 0) pencil = false;
  }
  if (pencil) throw Error(Errc::DegenerateArrangement, "all lines pass through one point");

  CellComplex cx;
  cx.lines_.assign(input.begin(), input.end());

  // Vertices: group pairwise intersections by point.
  std::map<ProjPoint, std::vector<int>> incidence;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto& v = incidence[intersect(input[i], input[j])];
      v.push_back(i);
      v.push_back(j);
    }
  }
  for (auto& [pt, ls] : incidence) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    cx.vertices_.push_back(MultiplePoint{pt, ls});
  }
  std::sort(cx.vertices_.begin(), cx.vertices_.end(),
            [](const MultiplePoint& a, const MultiplePoint& b) { return a.lines < b.lines; });

  // Spherical points: 2v is +vertex, 2v+1 is -vertex.
  const int nv = static_cast<int>(cx.vertices_.size());
  std::vector<Vec3> sphere_pts(static_cast<std::size_t>(2 * nv));
  for (int v = 0; v < nv; ++v) {
    sphere_pts[2 * v] = cx.vertices_[v].point.coords();
    sphere_pts[2 * v + 1] = negate(cx.vertices_[v].point.coords());
  }

  // Arcs along each great circle.
  struct Arc {
    int line;
    int from, to;  // spherical points
    int rp2_edge;
  };
  std::vector<Arc> arcs;
  for (int l = 0; l < n; ++l) {
    std::vector<int> pts;
    for (int v = 0; v < nv; ++v) {
      const auto& ls = cx.vertices_[v].lines;
      if (std::binary_search(ls.begin(), ls.end(), l)) {
        pts.push_back(2 * v);
        pts.push_back(2 * v + 1);
      }
    }
    angular_sort(input[l].coords(), pts, sphere_pts);
    const int m = static_cast<int>(pts.size());
    const int k = m / 2;
    for (int j = 0; j < m; ++j) {
      if ((pts[j] ^ 1) != pts[(j + k) % m]) {
        throw Error(Errc::DegenerateArrangement, "internal: antipodal order broken on line " + std::to_string(l));
      }
    }
    const int base = static_cast<int>(cx.edges_.size());
    for (int j = 0; j < k; ++j) {
      Edge e;
      e.line = l;
      e.arc = j;
      e.ends = {pts[j] / 2, pts[(j + 1) % m] / 2};
      cx.edges_.push_back(e);
    }
    for (int j = 0; j < m; ++j) arcs.push_back(Arc{l, pts[j], pts[(j + 1) % m], base + (j % k)});
  }

  // Half-edges: 2a runs along arc a, 2a+1 against it.
  const int nh = static_cast<int>(arcs.size()) * 2;
  std::vector<int> origin(static_cast<std::size_t>(nh));
  std::vector<Vec3> tangent(static_cast<std::size_t>(nh));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const Vec3& nrm = input[arcs[a].line].coords();
    origin[2 * a] = arcs[a].from;
    tangent[2 * a] = cross(nrm, sphere_pts[arcs[a].from]);
    origin[2 * a + 1] = arcs[a].to;
    tangent[2 * a + 1] = negate(cross(nrm, sphere_pts[arcs[a].to]));
  }
  std::vector<std::vector<int>> outgoing(sphere_pts.size());
  for (int h = 0; h < nh; ++h) outgoing[origin[h]].push_back(h);
  std::vector<int> pos_in_outgoing(static_cast<std::size_t>(nh));
  for (std::size_t p = 0; p < outgoing.size(); ++p) {
    angular_sort(sphere_pts[p], outgoing[p], tangent);
    for (std::size_t i = 0; i < outgoing[p].size(); ++i) pos_in_outgoing[outgoing[p][i]] = static_cast<int>(i);
  }
  auto dest = [&](int h) { return origin[h ^ 1]; };
  auto next = [&](int h) {
    const auto& out = outgoing[dest(h)];
    const int deg = static_cast<int>(out.size());
    return out[(pos_in_outgoing[h ^ 1] + deg - 1) % deg];
  };

  // Trace spherical faces; keep the representative of each antipodal pair
  // whose sample has a positive leading coordinate.
  struct Raw {
    std::vector<int> sides, corners;
    Vec3 sample;
    Tope tope;
  };
  std::vector<Raw> raw;
  std::vector<char> seen(static_cast<std::size_t>(nh), 0);
  for (int h0 = 0; h0 < nh; ++h0) {
    if (seen[h0]) continue;
    std::vector<int> cycle;
    for (int h = h0; !seen[h]; h = next(h)) {
      seen[h] = 1;
      cycle.push_back(h);
    }
    Vec3 sample{BigInt(0), BigInt(0), BigInt(0)};
    for (int h : cycle) {
      const Vec3& p = sphere_pts[origin[h]];
      for (int c = 0; c < 3; ++c) sample[c] += p[c];
    }
    bool representative = false;
    for (int c = 0; c < 3; ++c) {
      if (sample[c] != 0) {
        representative = sample[c] > 0;
        break;
      }
    }
    if (!representative) continue;
    Raw r;
    for (int h : cycle) {
      r.sides.push_back(arcs[static_cast<std::size_t>(h / 2)].rp2_edge);
      r.corners.push_back(dest(h) / 2);
    }
    r.sample = sample;
    r.tope = cx.tope_of(sample);
    raw.push_back(std::move(r));
  }

  // Canonical numbering and canonical start of each boundary.
  struct Keyed {
    std::vector<int> word;
    Tope tope;
    std::size_t raw_index;
    std::vector<int> sides, corners;
  };
  std::vector<Keyed> keyed;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Raw& r = raw[i];
    const std::size_t m = r.sides.size();
    Keyed best;
    bool first = true;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t s = 0; s < m; ++s) {
        std::vector<int> sides(m), corners(m), word(m);
        for (std::size_t k = 0; k < m; ++k) {
          if (dir == 0) {
            sides[k] = r.sides[(s + k) % m];
            corners[k] = r.corners[(s + k) % m];
          } else {
            sides[k] = r.sides[(s + m - k) % m];
            corners[k] = r.corners[(s + 2 * m - k - 1) % m];
          }
          word[k] = cx.edges_[static_cast<std::size_t>(sides[k])].line;
        }
        if (first || word < best.word) {
          best = Keyed{word, r.tope, i, sides, corners};
          first = false;
        }
      }
    }
    keyed.push_back(std::move(best));
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.tope < b.tope;
  });

  for (std::size_t f = 0; f < keyed.size(); ++f) {
    Polygon poly;
    poly.id = static_cast<int>(f);
    poly.sides = keyed[f].sides;
    poly.corners = keyed[f].corners;
    poly.sphere_sample = raw[keyed[f].raw_index].sample;
    poly.interior_sample = ProjPoint(poly.sphere_sample);
    poly.tope = keyed[f].tope;
    cx.faces_.push_back(std::move(poly));
  }

  for (auto& poly : cx.faces_) {
    for (int e : poly.sides) {
      auto& ef = cx.edges_[static_cast<std::size_t>(e)].faces;
      if (ef[0] < 0) {
        ef[0] = poly.id;
      } else if (ef[1] < 0) {
        ef[1] = poly.id;
      } else {
        throw Error(Errc::DegenerateArrangement, "internal: edge bordered by more than two faces");
      }
    }
  }
  for (const auto& e : cx.edges_) {
    if (e.faces[0] < 0 || e.faces[1] < 0 || e.faces[0] == e.faces[1]) {
      throw Error(Errc::DegenerateArrangement, "internal: edge not bordered by two faces");
    }
  }
  for (auto& poly : cx.faces_) {
    const int m = poly.size();
    poly.edge_neighbors.resize(static_cast<std::size_t>(m));
    poly.vertex_neighbors.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      const auto& e = cx.edges_[static_cast<std::size_t>(poly.sides[k])];
      poly.edge_neighbors[k] = e.faces[0] == poly.id ? e.faces[1] : e.faces[0];
      Tope flipped = poly.tope;
      for (int l : cx.vertices_[static_cast<std::size_t>(poly.corners[k])].lines) flipped ^= Tope{1} << l;
      const auto opp = cx.face_of_tope(normalize_tope(flipped, n));
      if (!opp) throw Error(Errc::DegenerateArrangement, "internal: missing vertex-opposite face");
      poly.vertex_neighbors[k] = *opp;
    }
  }

  const long long V = nv, E = static_cast<long long>(cx.edges_.size()), F = static_cast<long long>(cx.faces_.size());
  if (V - E + F != 1) throw Error(Errc::DegenerateArrangement, "internal: Euler characteristic is not 1");
  return cx;
}

int CellComplex::side_line(int face, int k) const {
  const Polygon& p = this->face(face);
  return edges_[static_cast<std::size_t>(p.sides[static_cast<std::size_t>(k)])].line;
}

std::vector<int> CellComplex::side_lines(int face) const {
  std::vector<int> out;
  for (int k = 0; k < this->face(face).size(); ++k) out.push_back(side_line(face, k));
  return out;
}

std::vector<MultiplePoint> CellComplex::multiple_points() const {
  std::vector<MultiplePoint> out;
  for (const auto& v : vertices_) {
    if (v.multiplicity() >= 3) out.push_back(v);
  }
  return out;
}

bool CellComplex::is_simple() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const MultiplePoint& v) { return v.multiplicity() == 2; });
}

Tope CellComplex::tope_of(const Vec3& point) const {
  Tope t = 0;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const int s = sign(evaluate(lines_[i], point));
    if (s == 0) throw Error(Errc::Degenerate, "point lies on line " + std::to_string(i));
    if (s < 0) t |= Tope{1} << i;
  }
  return normalize_tope(t, line_count());
}

std::optional<int> CellComplex::face_of_tope(Tope t) const {
  for (const auto& f : faces_) {
    if (f.tope == t) return f.id;
  }
  return std::nullopt;
}

int CellComplex::locate(const ProjPoint& p) const {
  const auto f = face_of_tope(tope_of(p.coords()));
  if (!f) throw Error(Errc::Degenerate, "point " + p.str() + " is not inside any face");
  return *f;
}

std::string CellComplex::tope_string(int face) const {
  std::string s;
  const Tope t = this->face(face).tope;
  for (int i = 0; i < line_count(); ++i) s += (t >> i) & 1 ? '-' : '+';
  return s;
}

TypeVector type_vector(const CellComplex& c) {
  if (!c.is_simple()) throw Error(Errc::NotSimple, "arrangement has a point of multiplicity >= 3");
  TypeVector tv;
  for (const auto& f : c.faces()) {
    if (f.size() < 3 || f.size() > 7) {
      throw Error(Errc::DegenerateArrangement, "type vector covers 3..7-gons only");
    }
    ++tv.counts[static_cast<std::size_t>(f.size() - 3)];
  }
  return tv;
}

ProjPoint interior_point(const Polygon& face) { return face.interior_sample; }

bool ComplexAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < face_map.size(); ++i) {
    if (face_map[i] != static_cast<int>(i)) return false;
  }
  for (std::size_t i = 0; i < edge_map.size(); ++i) {
    if (edge_map[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int FlagGraph::edge(const CellComplex& c, int flag) const { return c.face(face[flag]).sides[side[flag]]; }

int FlagGraph::vertex(const CellComplex& c, int flag) const {
  const Polygon& p = c.face(face[flag]);
  const int m = p.size();
  const int k = side[flag];
  return end[flag] == 1 ? p.corners[k] : p.corners[(k + m - 1) % m];
}

FlagGraph flag_graph(const CellComplex& c) {
  const auto& faces = c.faces();
  std::vector<int> offset(faces.size() + 1, 0);
  for (std::size_t f = 0; f < faces.size(); ++f) offset[f + 1] = offset[f] + 2 * faces[f].size();
  FlagGraph fg;
  const int nflags = offset.back();
  fg.face.resize(static_cast<std::size_t>(nflags));
  fg.side.resize(static_cast<std::size_t>(nflags));
  fg.end.resize(static_cast<std::size_t>(nflags));
  fg.step.resize(static_cast<std::size_t>(nflags));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int k = 0; k < faces[f].size(); ++k) {
      for (int e = 0; e < 2; ++e) {
        const int id = offset[f] + 2 * k + e;
        fg.face[id] = static_cast<int>(f);
        fg.side[id] = k;
        fg.end[id] = e;
      }
    }
  }
  for (int x = 0; x < nflags; ++x) {
    const int f = fg.face[x], k = fg.side[x], e = fg.end[x];
    const int m = faces[static_cast<std::size_t>(f)].size();
    fg.step[x][0] = offset[f] + 2 * k + (1 - e);
    fg.step[x][1] = e == 1 ? offset[f] + 2 * ((k + 1) % m) : offset[f] + 2 * ((k + m - 1) % m) + 1;
    const int g = faces[static_cast<std::size_t>(f)].edge_neighbors[k];
    const int edge = fg.edge(c, x);
    const int vert = fg.vertex(c, x);
    int found = -1;
    const Polygon& pg = faces[static_cast<std::size_t>(g)];
    for (int kk = 0; kk < pg.size(); ++kk) {
      if (pg.sides[kk] != edge) continue;
      for (int ee = 0; ee < 2; ++ee) {
        const int cand = offset[g] + 2 * kk + ee;
        if (fg.vertex(c, cand) == vert) found = cand;
      }
    }
    if (found < 0) throw Error(Errc::DegenerateArrangement, "internal: flag structure broken");
    fg.step[x][2] = found;
  }
  return fg;
}

std::vector<ComplexAutomorphism> combinatorial_automorphisms(const CellComplex& c) {
  const auto& faces = c.faces();
  const FlagGraph fg = flag_graph(c);
  const int nflags = fg.size();
  const auto& step = fg.step;
  const auto& flag_face = fg.face;
  auto edge_of = [&](int x) { return fg.edge(c, x); };
  auto vertex_of = [&](int x) { return fg.vertex(c, x); };

  std::vector<ComplexAutomorphism> out;
  std::vector<int> image(static_cast<std::size_t>(nflags));
  std::vector<char> used(static_cast<std::size_t>(nflags));
  for (int target = 0; target < nflags; ++target) {
    std::fill(image.begin(), image.end(), -1);
    std::fill(used.begin(), used.end(), 0);
    image[0] = target;
    used[target] = 1;
    std::vector<int> stack{0};
    bool ok = true;
    while (!stack.empty() && ok) {
      const int x = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3 && ok; ++i) {
        const int nx = step[x][i], ny = step[image[x]][i];
        if (image[nx] < 0) {
          if (used[ny]) {
            ok = false;
          } else {
            image[nx] = ny;
            used[ny] = 1;
            stack.push_back(nx);
          }
        } else if (image[nx] != ny) {
          ok = false;
        }
      }
    }
    if (!ok || std::find(image.begin(), image.end(), -1) != image.end()) continue;

    ComplexAutomorphism a;
    a.face_map.assign(faces.size(), -1);
    a.edge_map.assign(c.edges().size(), -1);
    a.vertex_map.assign(c.vertices().size(), -1);
    a.line_map.assign(static_cast<std::size_t>(c.line_count()), -1);
    bool consistent = true;
    auto set = [&](std::vector<int>& m, int from, int to) {
      auto& slot = m[static_cast<std::size_t>(from)];
      if (slot >= 0 && slot != to) consistent = false;
      slot = to;
    };
    for (int x = 0; x < nflags; ++x) {
      const int y = image[x];
      set(a.face_map, flag_face[x], flag_face[y]);
      set(a.edge_map, edge_of(x), edge_of(y));
      set(a.vertex_map, vertex_of(x), vertex_of(y));
      set(a.line_map, c.edges()[static_cast<std::size_t>(edge_of(x))].line,
          c.edges()[static_cast<std::size_t>(edge_of(y))].line);
    }
    if (consistent) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace campedelli
