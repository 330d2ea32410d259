#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace campedelli;
using testing::fixture;

namespace {

// The rule restated from scratch: 8 / |span| components, total chi 8 - 2n,
// orientability by polygon size and label sum.
SurfaceTopology expected(const std::vector<Label>& sides) {
  std::set<int> span{0};
  for (Label a : sides) {
    std::set<int> next = span;
    for (int x : span) next.insert(x ^ a);
    span = next;
  }
  const int n = static_cast<int>(sides.size());
  const int comps = 8 / static_cast<int>(span.size());
  Label sum = 0;
  for (Label a : sides) sum ^= a;
  bool orientable = false;
  if (n == 3) orientable = span.size() == 8;
  if (n == 4) orientable = sum == 0;
  return SurfaceTopology{comps, (8 - 2 * n) / comps, orientable};
}

SurfaceTopology surf(int c, int chi, bool o) { return SurfaceTopology{c, chi, o}; }

}  // namespace

TEST_CASE("closed form examples") {
  CHECK(preimage_topology(std::vector<Label>{4, 2, 6}) == surf(2, 1, false));
  CHECK(preimage_topology(std::vector<Label>{4, 2, 1}) == surf(1, 2, true));
  CHECK(preimage_topology(std::vector<Label>{4, 2, 1, 7}) == surf(1, 0, true));
  CHECK(preimage_topology(std::vector<Label>{4, 2, 1, 6}) == surf(1, 0, false));
  CHECK(preimage_topology(std::vector<Label>{4, 6, 2, 1, 5, 3, 7}) == surf(1, -6, false));
  CHECK(surf(2, 1, false).str() == "2x(chi=1, non-orientable)");
}

TEST_CASE("gluing oracle on label sequences") {
  // Sides with pairwise distinct labels in random order: five or more
  // always contain three summing to zero, so the rule applies to all.
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int it = 0; it < 40; ++it) {
      std::vector<Label> labs{1, 2, 3, 4, 5, 6, 7};
      std::shuffle(labs.begin(), labs.end(), rng);
      const std::vector<Label> sides(labs.begin(), labs.begin() + n);
      const auto want = expected(sides);
      CHECK(glue_oracle(GluedSurface{sides, {}}) == want);
      CHECK(preimage_topology(sides) == want);
      ++checked;
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("oracle agrees on all faces of random arrangements") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 20; ++it) {
    const auto arr = testing::random_campedelli(rng);
    for (const auto& p : arr.complex.faces()) {
      std::vector<Label> sides;
      for (int l : arr.complex.side_lines(p.id)) sides.push_back(arr.labeling[l]);
      const auto closed = preimage_topology(arr, p.id);
      CHECK(closed == glue_oracle(GluedSurface{sides, {}}));
      CHECK(closed == expected(sides));
      CHECK(closed.total_euler() == 8 - 2 * p.size());
    }
  }
}

TEST_CASE("branched quadrant") {
  // One interior branch point over a triangle with dependent sides.
  const auto t = glue_oracle(GluedSurface{{6, 7, 1}, {6}});
  CHECK(t == surf(2, -1, false));
  // Two branch points: chi drops by two more per component.
  CHECK(glue_oracle(GluedSurface{{6, 7, 1}, {6, 7}}).total_euler() == -6);
  CHECK_THROWS_AS(glue_oracle(GluedSurface{{6, 0, 1}, {}}), Error);
}

TEST_CASE("betti sums") {
  CHECK(betti({surf(1, 0, true)}).z2_total == 4);
  CHECK(betti({surf(1, 0, true)}).q_total == 4);
  const auto rp2 = betti({surf(2, 1, false)});
  CHECK(rp2.z2_total == 6);
  CHECK(rp2.q_total == 2);
  CHECK(betti({}).z2_total == 0);
}

TEST_CASE("pre-maximal real part") {
  const auto st = load_state(load_arrangement(fixture("premaximal.arr")));
  const auto parts = real_part(st.arr, st.eq);
  REQUIRE(parts.size() == 3);
  std::multiset<SurfaceTopology> got;
  std::vector<SurfaceTopology> ts;
  for (const auto& [f, t] : parts) {
    got.insert(t);
    ts.push_back(t);
  }
  CHECK(got == std::multiset<SurfaceTopology>{surf(1, -6, false), surf(1, 0, false), surf(1, 0, true)});
  const auto b = betti(ts);
  CHECK(b.z2_total == 18);
  CHECK(b.q_total == 14);
  const auto st_report = smith_thom_report(b);
  CHECK(st_report.z2_within_bound);
  CHECK(st_report.q_exceeds_complex);
}

TEST_CASE("Smith-Thom bound over all equipments") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 20; ++it) {
    const auto arr = testing::random_campedelli(rng);
    int nonempty = 0;
    for (const auto& eq : all_equipments(arr)) {
      const auto parts = real_part(arr, eq);
      nonempty += !parts.empty();
      std::vector<SurfaceTopology> ts;
      for (const auto& [f, t] : parts) {
        CHECK(eq[f] == kAllPositive);
        ts.push_back(t);
      }
      CHECK(betti(ts).z2_total <= kComplexZ2Total);
    }
    CHECK(nonempty >= 7);
  }
}
