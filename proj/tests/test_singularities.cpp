#include <doctest.h>

#include "support.hpp"

using namespace campedelli;

TEST_CASE("named examples") {
  auto cls = [](std::vector<Label> ls) { return classify_point(PointLabelData{std::move(ls)}); };
  CHECK(cls({4, 2}) == Singularity::Smooth);
  CHECK(cls({6, 6}) == Singularity::FourA1);
  CHECK(cls({4, 2, 6}) == Singularity::NonCanonical);
  CHECK(cls({4, 4, 2}) == Singularity::TwoA3);
  CHECK(cls({4, 4, 4}) == Singularity::FourD4);
  CHECK(cls({4, 2, 1}) == Singularity::OneA1);
  CHECK(is_t4_germ(PointLabelData{{4, 2, 6}}));
  CHECK_FALSE(is_t4_germ(PointLabelData{{4, 2, 1}}));
  CHECK(std::string(singularity_str(Singularity::TwoA3)) == "2xA3");
}

TEST_CASE("exhaustive multisets of size two and three") {
  int n = 0;
  for (Label a = 1; a < 8; ++a) {
    for (Label b = a; b < 8; ++b) {
      CHECK(classify_point(PointLabelData{{a, b}}) == testing::singularity_table({a, b}));
      ++n;
      for (Label c = b; c < 8; ++c) {
        // Every ordering of the multiset.
        std::vector<Label> ls{a, b, c};
        do {
          CHECK(classify_point(PointLabelData{ls}) == testing::singularity_table(ls));
        } while (std::next_permutation(ls.begin(), ls.end()));
        ++n;
      }
    }
  }
  CHECK(n == 28 + 84);
}

TEST_CASE("four or more lines and errors") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> d(1, 7);
  for (int it = 0; it < 50; ++it) {
    std::vector<Label> ls(static_cast<std::size_t>(4 + it % 4));
    for (auto& l : ls) l = static_cast<Label>(d(rng));
    CHECK(classify_point(PointLabelData{ls}) == Singularity::NonCanonical);
  }
  CHECK_THROWS_AS(classify_point(PointLabelData{{4}}), Error);
  CHECK_THROWS_AS(classify_point(PointLabelData{{4, 0}}), Error);
}

TEST_CASE("renumbering invariance") {
  for (Label a = 1; a < 8; ++a) {
    for (Label b = 1; b < 8; ++b) {
      for (Label c = 1; c < 8; ++c) {
        const auto v = classify_point(PointLabelData{{a, b, c}});
        for (const auto& t : all_renumberings()) {
          CHECK(classify_point(PointLabelData{{t.apply(a), t.apply(b), t.apply(c)}}) == v);
        }
      }
    }
  }
}

TEST_CASE("all canonical iff Campedelli on degenerate arrangements") {
  std::mt19937_64 rng(61);
  int agree = 0, valid = 0;
  for (int it = 0; it < 120; ++it) {
    const auto ls = testing::random_concurrent_lines(rng, it % 5 == 0 ? 4 : 3);
    const auto c = CellComplex::build(ls);
    const auto lab = testing::random_labeling(rng);
    const auto s = classify_arrangement(c, lab);
    const bool ok = is_campedelli(c, lab).valid;
    CHECK(s.all_canonical == ok);
    agree += s.all_canonical == ok;
    valid += ok;
    CHECK(s.points.size() == c.multiple_points().size());
  }
  CHECK(agree == 120);
  CHECK(valid > 0);
  CHECK(valid < 120);
}

TEST_CASE("repeated labels") {
  // Two lines sharing a label meet in 4xA1 points; through a triple point
  // the pattern (a, a, b) gives 2xA3.
  const auto ls = std::vector<ProjLine>{ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0), ProjLine(0, 0, 1),
                                        ProjLine(1, 2, 3), ProjLine(2, -1, 5), ProjLine(3, 1, -7)};
  const auto c = CellComplex::build(ls);
  const auto s = classify_arrangement(c, Labeling{{4, 4, 2, 1, 3, 5, 7}});
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].second == Singularity::TwoA3);
  CHECK(s.all_canonical);
}
