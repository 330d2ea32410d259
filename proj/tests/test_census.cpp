#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "support.hpp"

using namespace campedelli;
using testing::fixture;

namespace {

LoadedState after_first_chain_move() {
  const auto file = load_arrangement(fixture("chain_base.arr"));
  const auto base = base_arrangement(file);
  const auto st = load_state(file);
  const auto num = testing::reference_numbers(base, st, load_numbering(fixture("chain_base.numbering")));
  const auto rec = reverse_triangle(st.arr, st.eq, testing::face_numbered(num, 3));
  LoadedState out = st;
  out.arr = rec.result;
  out.eq = rec.equipment;
  return out;
}

// The same arrangement seen through a change of coordinates, a
// permutation of the lines, a renumbering and a re-signed equipment.
EquippedArrangement disguise(const LabeledArrangement& arr, const SignEquipment& eq, std::mt19937_64& rng,
                             const Renumbering& t) {
  std::array<Vec3, 3> a;
  do {
    for (auto& row : a) row = testing::random_line(rng, 3).coords();
  } while (det3(a[0], a[1], a[2]) == 0);
  std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<ProjLine> ls;
  Labeling lab;
  lab.of_line.resize(7);
  for (int i = 0; i < 7; ++i) {
    const Vec3& l = arr.complex.lines()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].coords();
    ls.emplace_back(Vec3{dot(a[0], l), dot(a[1], l), dot(a[2], l)});
    lab.of_line[static_cast<std::size_t>(i)] = t.apply(arr.labeling[perm[static_cast<std::size_t>(i)]]);
  }
  const auto moved = make_labeled(ls, lab);
  // Carry the signs of one face across and propagate.
  const int f0 = 0;
  const auto sample = arr.complex.face(f0).interior_sample.coords();
  // Points move by the inverse transpose, whose rows are proportional to
  // these cross products.
  const Vec3 p{dot(cross(a[1], a[2]), sample), dot(cross(a[2], a[0]), sample), dot(cross(a[0], a[1]), sample)};
  const int g0 = moved.complex.locate(ProjPoint(p));
  SignTriple s = 0;
  for (int k = 0; k < 3; ++k) {
    if (eq[static_cast<std::size_t>(f0)] & (4 >> k)) s = static_cast<SignTriple>(s ^ t.apply(static_cast<Label>(4 >> k)));
  }
  return EquippedArrangement{moved, propagate(moved, g0, s)};
}

}  // namespace

TEST_CASE("class count on the chain base") {
  const auto st = load_state(load_arrangement(fixture("chain_base.arr")));
  const auto c = count_classes(st.arr.complex);
  CHECK(c.states == 5040 * 8);
  CHECK(c.automorphisms == 2);
  CHECK(testing::chirotope_automorphisms(st.arr.complex) == 2);
  CHECK(c.group_order == 336);
  CHECK(c.orbits == 120);
  CHECK(c.burnside() == 120);
  CHECK(c.burnside_sum % c.group_order == 0);
}

TEST_CASE("class count after the first move") {
  const auto st = after_first_chain_move();
  CHECK(type_vector(st.arr.complex).str() == "(9,9,3,1,0)");
  const auto c = count_classes(st.arr.complex);
  // This type has a single isotopy class, with six automorphisms rather
  // than two, so the action is not free and fewer than 120 classes exist.
  CHECK(c.automorphisms == 6);
  CHECK(testing::chirotope_automorphisms(st.arr.complex) == 6);
  CHECK(c.orbits == 44);
  CHECK(c.burnside() == c.orbits);
}

TEST_CASE("class count on the heptagon arrangement") {
  const auto st = load_state(load_arrangement(fixture("heptagon.arr")));
  const auto c = count_classes(st.arr.complex);
  CHECK(c.automorphisms == 14);
  CHECK(testing::chirotope_automorphisms(st.arr.complex) == 14);
  CHECK(c.burnside() == c.orbits);
  // Orbit-stabilizer: with a group of order 14 * 168 = 2352 acting on 40320
  // states, there are at least 40320 / 2352 orbits.
  CHECK(c.orbits * c.group_order >= c.states);
  CHECK(c.orbits == 18);
}

TEST_CASE("keys survive coordinates, line order and renumbering") {
  std::mt19937_64 rng(67);
  for (int it = 0; it < 6; ++it) {
    const auto arr = testing::random_campedelli(rng);
    const auto eq = quartic_equipment(arr);
    const auto key = class_key(arr, eq);
    CHECK(key.rfind("cek1:", 0) == 0);
    CHECK(key.size() == 5 + 64);
    const auto& g = all_renumberings();
    const auto t = g[static_cast<std::size_t>(it * 17 % 168)];
    const auto d = disguise(arr, eq, rng, t);
    CHECK(class_key(d.arr, d.eq) == key);
    CHECK(equivalent(arr, eq, d.arr, d.eq));
    CHECK(def_invariant(d.arr, d.eq) == def_invariant(arr, eq));
    // Other equipments of the same arrangement generally differ.
    std::set<std::string> keys;
    for (const auto& e : all_equipments(arr)) keys.insert(class_key(arr, e));
    CHECK(keys.size() >= 1);
    CHECK(keys.count(key) == 1);
  }
}

TEST_CASE("def invariant text") {
  const auto st = load_state(load_arrangement(fixture("chain_base.arr")));
  const auto inv = def_invariant(st.arr, st.eq);
  CHECK(inv.purely_real);
  CHECK(inv.type.str() == "(11,5,5,1,0)");
  CHECK(inv.profile.str() == "((4,4',5,3',5,4'),(5,3',5,3',6,3'))");
}
