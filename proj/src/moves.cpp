#include "campedelli/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "campedelli/census.hpp"

namespace campedelli {

TriangleInfo triangle_info(const LabeledArrangement& arr, int face) {
  const CellComplex& c = arr.complex;
  if (face < 0 || face >= static_cast<int>(c.faces().size())) {
    throw Error(Errc::NotATriangle, "face " + std::to_string(face) + " does not exist");
  }
  const Polygon& p = c.face(face);
  if (p.size() != 3) throw Error(Errc::NotATriangle, "face " + std::to_string(face) + " has " + std::to_string(p.size()) + " sides");
  TriangleInfo t;
  t.face = face;
  t.star[0] = face;
  for (int k = 0; k < 3; ++k) {
    t.lines[k] = c.side_line(face, k);
    t.labels[k] = arr.labeling[t.lines[k]];
    t.star[1 + 2 * k] = p.edge_neighbors[k];
    t.star[2 + 2 * k] = p.vertex_neighbors[k];
  }
  t.dependent = t.label_sum() == 0;
  return t;
}

std::vector<TriangleInfo> find_triangles(const LabeledArrangement& arr) {
  std::vector<TriangleInfo> out;
  for (const auto& f : arr.complex.faces()) {
    if (f.size() == 3) out.push_back(triangle_info(arr, f.id));
  }
  return out;
}

bool local_euler_zero(const SignEquipment& eq, const TriangleInfo& t) {
  if (t.dependent) throw Error(Errc::DependentSides, "triangle " + std::to_string(t.face) + " has dependent sides");
  for (int k : {0, 2, 4, 6}) {
    if (eq[t.star[k]] == kAllPositive) return false;
  }
  return true;
}

bool is_good_move(const SignEquipment& eq, const TriangleInfo& t) {
  if (!t.dependent) return false;
  return std::none_of(t.star.begin(), t.star.end(), [&](int f) { return eq[f] == kAllPositive; });
}

namespace {

BigInt floor_div(const Rational& r) {
  const BigInt n = boost::multiprecision::numerator(r);
  const BigInt d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

// Simplest rational strictly inside (lo, hi), 0 <= lo < hi; hi may be
// absent (infinity).
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  const BigInt fl = floor_div(lo);
  const Rational next(fl + 1);
  if (!hi || next < *hi) return next;
  const Rational a = lo - Rational(fl);
  const Rational b = *hi - Rational(fl);
  // a in [0,1), b in (a,1]; x = fl + 1/y with y in (1/b, 1/a).
  std::optional<Rational> top;
  if (a != 0) top = Rational(1) / a;
  return Rational(fl) + Rational(1) / simplest_between(Rational(1) / b, top);
}

Tope raw_tope(const std::vector<Vec3>& covectors, const Vec3& x) {
  Tope t = 0;
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    if (sign(dot(covectors[i], x)) < 0) t |= Tope{1} << i;
  }
  if (t & 1) t = ~t & ((Tope{1} << covectors.size()) - 1);
  return t;
}

struct Candidate {
  int side = -1;
  Vec3 mu;
  Rational margin;
  std::optional<Rational> t_next;
};

// Corner of a triangle as a vector on the same side of the opposite side
// as the interior.
Vec3 corner_rep(const CellComplex& c, const Polygon& p, int corner) {
  Vec3 v = c.vertices()[static_cast<std::size_t>(p.corners[corner])].point.coords();
  // Side corner+2 (mod 3) is opposite to corner `corner`.
  const ProjLine& opp = c.lines()[static_cast<std::size_t>(c.side_line(p.id, (corner + 2) % 3))];
  if (sign(evaluate(opp, v)) != sign(evaluate(opp, p.sphere_sample))) {
    for (auto& x : v) x = -x;
  }
  return v;
}

// Pivots on the side's line: weighted points of every arc between
// consecutive arrangement vertices, except the triangle's own side.
std::vector<Vec3> pivot_candidates(const CellComplex& c, const Polygon& p, int side) {
  const int li = c.side_line(p.id, side);
  const Vec3& n = c.lines()[static_cast<std::size_t>(li)].coords();
  const Vec3 A = corner_rep(c, p, (side + 2) % 3);
  const Vec3 B = corner_rep(c, p, side);
  std::vector<Vec3> pts;
  for (const auto& w : c.vertices()) {
    if (std::binary_search(w.lines.begin(), w.lines.end(), li)) {
      pts.push_back(w.point.coords());
      Vec3 neg = w.point.coords();
      for (auto& x : neg) x = -x;
      pts.push_back(neg);
    }
  }
  auto half = [&](const Vec3& x) {
    const int d = sign(det3(n, A, x));
    return (d > 0 || (d == 0 && sign(dot(A, x)) > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Vec3& a, const Vec3& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sign(det3(n, a, b)) > 0;
  });
  static const int weights[][2] = {{1, 1}, {1, 3}, {3, 1}, {1, 20}, {20, 1}};
  std::vector<Vec3> out;
  std::set<ProjPoint> seen;
  const ProjPoint pa(A), pb(B);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const Vec3& P = pts[j];
    const Vec3& Q = pts[(j + 1) % pts.size()];
    const ProjPoint pp(P), pq(Q);
    if ((pp == pa && pq == pb) || (pp == pb && pq == pa)) continue;
    for (const auto& w : weights) {
      Vec3 x;
      for (int i = 0; i < 3; ++i) x[i] = P[i] * w[0] + Q[i] * w[1];
      if (seen.insert(ProjPoint(x)).second) out.push_back(x);
    }
  }
  return out;
}

std::optional<Candidate> evaluate_pivot(const CellComplex& c, const Polygon& p, int side, const Vec3& piv) {
  const int li = c.side_line(p.id, side);
  const Vec3& ell = c.lines()[static_cast<std::size_t>(li)].coords();
  const Vec3 v = corner_rep(c, p, (side + 1) % 3);
  for (int l = 0; l < c.line_count(); ++l) {
    if (l != li && dot(c.lines()[static_cast<std::size_t>(l)].coords(), piv) == 0) return std::nullopt;
  }
  Vec3 ellv = cross(piv, v);
  const Vec3& sample = p.sphere_sample;
  if (sign(dot(ellv, sample)) == sign(dot(ell, sample))) {
    for (auto& x : ellv) x = -x;
  }
  Vec3 mu;
  for (int i = 0; i < 3; ++i) mu[i] = ellv[i] - ell[i];
  const ProjPoint vp(v);
  std::optional<Rational> t_next;
  for (const auto& w : c.vertices()) {
    if (w.point == vp) continue;
    const BigInt lw = dot(ell, w.point.coords());
    if (lw == 0) continue;
    const BigInt den = lw - dot(ellv, w.point.coords());
    if (den == 0) continue;
    const Rational tw = den < 0 ? Rational(-lw, -den) : Rational(lw, den);
    if (tw > 0 && tw <= 1) return std::nullopt;
    if (tw > 1 && (!t_next || tw < *t_next)) t_next = tw;
  }
  Rational cap(2);
  if (t_next && *t_next < cap) cap = *t_next;
  return Candidate{side, mu, cap - 1, t_next};
}

}  // namespace

MoveRecord replay_step(const LabeledArrangement& arr, const SignEquipment& eq, const MoveStep& step) {
  const CellComplex& c = arr.complex;
  const auto face = c.face_of_tope(step.triangle);
  if (!face) throw Error(Errc::NotATriangle, "no face with the recorded tope");
  const TriangleInfo tri = triangle_info(arr, *face);
  if (std::find(tri.lines.begin(), tri.lines.end(), step.line) == tri.lines.end()) {
    throw Error(Errc::CannotPerturb, "moved line is not a side of the triangle");
  }
  const int n = c.line_count();
  std::vector<Vec3> old_cov, new_cov;
  for (const auto& l : c.lines()) old_cov.push_back(l.coords());
  new_cov = old_cov;
  const BigInt tn = boost::multiprecision::numerator(step.t);
  const BigInt td = boost::multiprecision::denominator(step.t);
  for (int i = 0; i < 3; ++i) new_cov[step.line][i] = old_cov[step.line][i] * td + step.mu[i] * tn;

  // Exactly the triangle's orientation triple may change.
  std::array<int, 3> tl = tri.lines;
  std::sort(tl.begin(), tl.end());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const int before = sign(det3(old_cov[i], old_cov[j], old_cov[k]));
        const int after = sign(det3(new_cov[i], new_cov[j], new_cov[k]));
        const bool is_tri = i == tl[0] && j == tl[1] && k == tl[2];
        if (after == 0 || (before != after) != is_tri) {
          throw Error(Errc::CannotPerturb, "move changes more than the reversed triangle");
        }
      }
    }
  }

  std::vector<ProjLine> lines(c.lines());
  lines[step.line] = ProjLine(new_cov[step.line]);
  MoveRecord rec;
  rec.step = step;
  rec.triangle_face = *face;
  rec.result = make_labeled(lines, arr.labeling);
  rec.good = is_good_move(eq, tri);
  const CellComplex& nc = rec.result.complex;

  Tope flipped = step.triangle;
  for (int l : tri.lines) flipped ^= Tope{1} << l;
  if (flipped & 1) flipped = ~flipped & ((Tope{1} << n) - 1);

  std::map<Tope, int> old_by_tope;
  for (const auto& f : c.faces()) old_by_tope[f.tope] = f.id;
  rec.face_map.assign(c.faces().size(), -1);
  rec.equipment.g.assign(nc.faces().size(), 0);
  for (const auto& f : nc.faces()) {
    const Tope t = raw_tope(new_cov, f.sphere_sample);
    int src = -1;
    SignTriple g = 0;
    if (t == flipped) {
      src = *face;
      g = static_cast<SignTriple>(eq[src] ^ tri.label_sum());
    } else {
      const auto it = old_by_tope.find(t);
      if (it == old_by_tope.end() || it->second == *face) {
        throw Error(Errc::CannotPerturb, "result has a face absent from the source");
      }
      src = it->second;
      g = eq[src];
    }
    if (rec.face_map[src] >= 0) throw Error(Errc::CannotPerturb, "two result faces map to one source face");
    rec.face_map[src] = f.id;
    rec.equipment.g[f.id] = g;
  }
  if (propagate(rec.result, 0, rec.equipment[0]) != rec.equipment) {
    throw Error(Errc::InconsistentEquipment, "moved equipment violates the transition rule");
  }
  return rec;
}

MoveRecord reverse_triangle(const LabeledArrangement& arr, const SignEquipment& eq, int face) {
  const CellComplex& c = arr.complex;
  const TriangleInfo tri = triangle_info(arr, face);
  const Polygon& p = c.face(face);
  std::optional<Candidate> best;
  std::vector<int> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return tri.lines[a] < tri.lines[b]; });
  for (int side : order) {
    for (const Vec3& piv : pivot_candidates(c, p, side)) {
      const auto cand = evaluate_pivot(c, p, side, piv);
      if (cand && (!best || cand->margin > best->margin)) best = cand;
    }
  }
  if (!best) throw Error(Errc::CannotPerturb, "no admissible pivot for triangle " + std::to_string(face));
  const Rational m = best->margin;
  MoveStep step;
  step.triangle = p.tope;
  step.line = tri.lines[best->side];
  step.mu = best->mu;
  step.t = simplest_between(1 + m / 4, Rational(1) + 3 * m / 4);
  return replay_step(arr, eq, step);
}

WitnessReport witness_search(const LabeledArrangement& arr, const SignEquipment& eq, int depth) {
  WitnessReport rep;
  std::set<std::string> seen;
  std::deque<std::pair<int, int>> frontier;  // member index, depth
  auto add = [&](EquippedArrangement st, std::vector<MoveStep> path) -> int {
    std::string key = class_key(st.arr, st.eq);
    if (!seen.insert(key).second) return -1;
    SearchMember m;
    m.type = type_vector(st.arr.complex);
    m.profile = adjacency_profile(st.arr, st.eq);
    m.state = std::move(st);
    m.path = std::move(path);
    m.key = std::move(key);
    rep.members.push_back(std::move(m));
    return static_cast<int>(rep.members.size()) - 1;
  };
  frontier.emplace_back(add({arr, eq}, {}), 0);
  while (!frontier.empty()) {
    const auto [idx, d] = frontier.front();
    frontier.pop_front();
    if (d >= depth) continue;
    const EquippedArrangement cur = rep.members[static_cast<std::size_t>(idx)].state;
    const std::vector<MoveStep> path = rep.members[static_cast<std::size_t>(idx)].path;
    for (const auto& t : find_triangles(cur.arr)) {
      if (!is_good_move(cur.eq, t)) continue;
      MoveRecord rec;
      try {
        rec = reverse_triangle(cur.arr, cur.eq, t.face);
      } catch (const Error& e) {
        if (e.code() != Errc::CannotPerturb && e.code() != Errc::NotCampedelli) throw;
        continue;
      }
      auto next_path = path;
      next_path.push_back(rec.step);
      const int ni = add({std::move(rec.result), std::move(rec.equipment)}, std::move(next_path));
      if (ni >= 0) frontier.emplace_back(ni, d + 1);
    }
  }
  std::map<std::pair<TypeVector, AdjacencyProfile>, int> bucket_of;
  for (std::size_t i = 0; i < rep.members.size(); ++i) {
    const auto key = std::make_pair(rep.members[i].type, rep.members[i].profile);
    auto it = bucket_of.find(key);
    if (it == bucket_of.end()) {
      bucket_of.emplace(key, static_cast<int>(rep.buckets.size()));
      rep.buckets.push_back({static_cast<int>(i)});
    } else {
      rep.buckets[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }
  }
  return rep;
}

}  // namespace campedelli
