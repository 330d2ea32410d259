#pragma once

// Comparison of computed complexes against the reference tables.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "campedelli/arrangement.hpp"
#include "reference_tables.hpp"

namespace reference {

/// Cyclic token list of a triangle read from its side 0, with polygon
/// numbers taken from `number` (face id -> P index).
inline std::vector<Token> face_tokens(const campedelli::CellComplex& c, int face, const std::vector<int>& number) {
  std::vector<Token> out;
  const auto& p = c.face(face);
  for (int k = 0; k < p.size(); ++k) {
    const int e = p.edge_neighbors[k], v = p.vertex_neighbors[k];
    out.push_back(Token{c.face(e).size(), number[e], false});
    out.push_back(Token{c.face(v).size(), number[v], true});
  }
  return out;
}

inline bool same_token(const Token& a, const Token& b) {
  return a.sides == b.sides && a.polygon == b.polygon && a.primed == b.primed;
}

/// Equal up to rotation and reversal of the cyclic sequence (reversal
/// keeps each token attached to its own neighbor).
inline bool same_cycle(const std::vector<Token>& a, const std::vector<Token>& b) {
  const std::size_t m = a.size();
  if (m != b.size()) return false;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < m; ++r) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        const std::size_t j = dir == 0 ? (r + i) % m : (r + m - i) % m;
        ok = same_token(a[j], b[i]);
      }
      if (ok) return true;
    }
  }
  return false;
}

/// Every face id -> polygon number map (P1..P22) reproducing the side
/// counts and all six adjacency rows of a table.
inline std::vector<std::vector<int>> match_numberings(const campedelli::CellComplex& c, const ChainTable& table) {
  const int nf = static_cast<int>(c.faces().size());
  std::vector<int> triangles;
  for (const auto& f : c.faces()) {
    if (f.size() == 3) triangles.push_back(f.id);
  }
  std::vector<int> number(static_cast<std::size_t>(nf), 0);
  std::vector<int> face_of(23, -1);
  std::vector<std::vector<int>> found;

  auto assign = [&](int face, int p, std::vector<std::pair<int, int>>& undo) {
    if (number[face] == p && face_of[p] == face) return true;
    if (number[face] != 0 || face_of[p] != -1) return false;
    number[face] = p;
    face_of[p] = face;
    undo.emplace_back(face, p);
    return true;
  };
  auto rollback = [&](std::vector<std::pair<int, int>>& undo) {
    for (auto [f, p] : undo) {
      number[f] = 0;
      face_of[p] = -1;
    }
    undo.clear();
  };

  // Row i (P_{i+1}) placed on a triangle with one of six alignments.
  auto rec = [&](auto&& self, int row) -> void {
    if (row == 6) {
      for (int f = 0; f < nf; ++f) {
        const int p = number[f];
        if (p == 0) return;
        if (p >= 7 && table.sides_7_to_22[static_cast<std::size_t>(p - 7)] != c.face(f).size()) return;
      }
      found.push_back(number);
      return;
    }
    const auto& toks = table.rows[static_cast<std::size_t>(row)];
    for (int t : triangles) {
      const auto& poly = c.face(t);
      std::vector<int> ring;
      for (int k = 0; k < 3; ++k) {
        ring.push_back(poly.edge_neighbors[k]);
        ring.push_back(poly.vertex_neighbors[k]);
      }
      for (int dir = 0; dir < 2; ++dir) {
        for (int r = 0; r < 6; ++r) {
          std::vector<std::pair<int, int>> undo;
          bool ok = assign(t, row + 1, undo);
          for (int i = 0; i < 6 && ok; ++i) {
            const int j = dir == 0 ? (r + i) % 6 : (r + 6 - i) % 6;
            const int f = ring[static_cast<std::size_t>(j)];
            const bool primed = j % 2 == 1;
            ok = primed == toks[static_cast<std::size_t>(i)].primed && c.face(f).size() == toks[static_cast<std::size_t>(i)].sides &&
                 assign(f, toks[static_cast<std::size_t>(i)].polygon, undo);
          }
          if (ok) self(self, row + 1);
          rollback(undo);
        }
      }
    }
  };
  rec(rec, 0);
  return found;
}

/// Checks the side counts and the six rows under a given numbering.
inline bool table_matches(const campedelli::CellComplex& c, const ChainTable& table, const std::vector<int>& number,
                          std::string* why = nullptr) {
  std::vector<int> face_of(23, -1);
  for (std::size_t f = 0; f < number.size(); ++f) face_of[static_cast<std::size_t>(number[f])] = static_cast<int>(f);
  for (int p = 7; p <= 22; ++p) {
    if (c.face(face_of[p]).size() != table.sides_7_to_22[static_cast<std::size_t>(p - 7)]) {
      if (why) *why = "side count of P" + std::to_string(p);
      return false;
    }
  }
  for (int p = 1; p <= 6; ++p) {
    if (!same_cycle(face_tokens(c, face_of[p], number), table.rows[static_cast<std::size_t>(p - 1)])) {
      if (why) *why = "adjacency row of P" + std::to_string(p);
      return false;
    }
  }
  return true;
}

}  // namespace reference
