#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace campedelli;
using testing::fixture;

namespace {

// Independent oracle: the sign of the product over lines whose label has
// bit k set, evaluated with exact integers at the face sample.
SignTriple quartic_oracle(const LabeledArrangement& arr, int face) {
  SignTriple g = 0;
  const Vec3& x = arr.complex.face(face).sphere_sample;
  for (int k = 0; k < 3; ++k) {
    BigInt prod = 1;
    for (int l = 0; l < 7; ++l) {
      if (label_bit(arr.labeling[l], k)) prod *= dot(arr.complex.lines()[static_cast<std::size_t>(l)].coords(), x);
    }
    if (prod < 0) g |= static_cast<SignTriple>(4 >> k);
  }
  return g;
}

}  // namespace

TEST_CASE("sign text") {
  CHECK(sign_str(0) == "(+,+,+)");
  CHECK(sign_str(5) == "(-,+,-)");
  CHECK(parse_signs("-+-") == 5);
  CHECK(parse_signs("(+,-,-)") == 3);
  CHECK_THROWS_AS(parse_signs("++"), Error);
}

TEST_CASE("propagation, quartics and flips on random arrangements") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 25; ++it) {
    const auto arr = testing::random_campedelli(rng);
    const auto q = quartic_equipment(arr);
    for (const auto& p : arr.complex.faces()) {
      CHECK(q[p.id] == quartic_oracle(arr, p.id));
      CHECK(signs_from_quartics(arr, p.id) == q[p.id]);
    }
    // Propagation from any face seeded by the quartic rule reproduces it.
    CHECK(propagate(arr, 0, q[0]) == q);
    CHECK(propagate(arr, 13, q[13]) == q);
    // Transition rule across every edge.
    for (const auto& e : arr.complex.edges()) {
      CHECK((q[e.faces[0]] ^ q[e.faces[1]]) == arr.labeling[e.line]);
    }
    const auto all = all_equipments(arr);
    REQUIRE(all.size() == 8);
    std::set<SignEquipment> distinct(all.begin(), all.end());
    CHECK(distinct.size() == 8);
    CHECK(distinct.count(q) == 1);
    int empty = 0;
    for (const auto& eq : all) {
      CHECK(distinct_triples(eq) >= 7);
      empty += positive_faces(eq).empty();
      CHECK(flip(flip(eq, 5), 5) == eq);
    }
    CHECK(empty <= 1);
    // Negating the covector of a line flips, on every face, the signs
    // selected by its label: a global flip, so the set of eight is stable.
    for (const auto& eq : all) CHECK(distinct.count(flip(eq, arr.labeling[2])) == 1);
  }
}

TEST_CASE("re-anchoring reproduces the equipment") {
  std::mt19937_64 rng(23);
  const auto arr = testing::random_campedelli(rng);
  const auto eq = propagate(arr, 4, 6);
  for (const auto& p : arr.complex.faces()) CHECK(propagate(arr, p.id, eq[p.id]) == eq);
}

TEST_CASE("adjacency types") {
  CHECK(parse_adjacency("(4,4',5,3',5,4')").str() == "(4,4',5,3',5,4')");
  // Rotation by two places and the parity-preserving reversal.
  CHECK(parse_adjacency("(5,3',5,4',4,4')") == parse_adjacency("(4,4',5,3',5,4')"));
  CHECK(parse_adjacency("(4,4',5,3',6,3')") == parse_adjacency("(4,3',6,3',5,4')"));
  CHECK(canonical_adjacency({5, 3, 6, 3, 5, 3}).str() == "(5,3',5,3',6,3')");
  CHECK_THROWS_AS(parse_adjacency("(4,4,5)"), Error);
  // Invariance under the starting side on random faces.
  std::mt19937_64 rng(29);
  const auto arr = testing::random_campedelli(rng);
  for (const auto& p : arr.complex.faces()) {
    const auto raw = adjacency_sequence(arr.complex, p.id);
    const auto canon = canonical_adjacency(raw);
    for (std::size_t r = 0; r < raw.size(); r += 2) {
      std::vector<int> rot(raw.begin() + static_cast<long>(r), raw.end());
      rot.insert(rot.end(), raw.begin(), raw.begin() + static_cast<long>(r));
      CHECK(canonical_adjacency(rot) == canon);
    }
  }
}

TEST_CASE("chain base arrangement") {
  const auto file = load_arrangement(fixture("chain_base.arr"));
  const auto base = base_arrangement(file);
  const auto st = load_state(file);
  const auto numbering = load_numbering(fixture("chain_base.numbering"));
  const auto num = testing::reference_numbers(base, st, numbering);
  std::vector<int> pos;
  for (int f : positive_faces(st.eq)) pos.push_back(num[static_cast<std::size_t>(f)]);
  CHECK(pos.size() == 2);
  CHECK(std::count(pos.begin(), pos.end(), 1) == 1);
  CHECK(std::count(pos.begin(), pos.end(), 2) == 1);
  const int p1 = testing::face_numbered(num, 1);
  const int p2 = testing::face_numbered(num, 2);
  CHECK(adjacency_type(base.complex, p1).str() == "(4,4',5,3',5,4')");
  CHECK(adjacency_type(base.complex, p2).str() == "(5,3',5,3',6,3')");
  const auto prof = adjacency_profile(st.arr, st.eq);
  CHECK(prof.str() == "((4,4',5,3',5,4'),(5,3',5,3',6,3'))");
  CHECK(parse_profile(prof.str()) == prof);
  // Profiles do not see renumberings.
  for (const auto& t : all_renumberings()) {
    const LabeledArrangement r{st.arr.complex, apply_renumbering(st.arr.labeling, t)};
    const auto eq = propagate(r, p1, kAllPositive);
    CHECK(adjacency_profile(r, eq) == prof);
  }
}

TEST_CASE("pre-maximal arrangement has three positive polygons") {
  const auto st = load_state(load_arrangement(fixture("premaximal.arr")));
  CHECK(positive_faces(st.eq).size() == 3);
  const int p1 = st.arr.complex.locate(ProjPoint(1, 170, 200));
  CHECK(st.arr.complex.face(p1).size() == 7);
  CHECK(st.eq[p1] == kAllPositive);
}

TEST_CASE("heptagon seed") {
  // Triangle across the 110 side of the 7-gon, anchored (-,-,-).
  const auto file = load_arrangement(fixture("heptagon.arr"));
  const auto st = load_state(file);
  const int t = st.arr.complex.locate(file.anchor->point);
  CHECK(st.eq[t] == 7);
  const auto info = triangle_info(st.arr, t);
  std::multiset<Label> sides(info.labels.begin(), info.labels.end());
  CHECK(sides == std::multiset<Label>{2, 4, 6});
  // Across each side the signs change by that side's label.
  for (int k = 0; k < 3; ++k) {
    CHECK(st.eq[info.star[static_cast<std::size_t>(1 + 2 * k)]] == (7 ^ info.labels[static_cast<std::size_t>(k)]));
  }
  // Across the 110 side lies the 7-gon, signed (+,+,-).
  const int k110 = static_cast<int>(std::find(info.labels.begin(), info.labels.end(), Label{6}) - info.labels.begin());
  const int hept = info.star[static_cast<std::size_t>(1 + 2 * k110)];
  CHECK(st.arr.complex.face(hept).size() == 7);
  CHECK(st.eq[hept] == parse_signs("++-"));
}
