#include "campedelli/equipment.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace campedelli {

std::string sign_str(SignTriple g) {
  std::string s = "(";
  for (int k = 0; k < 3; ++k) {
    if (k) s += ",";
    s += label_bit(g, k) ? '-' : '+';
  }
  return s + ")";
}

SignTriple parse_signs(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      compact += ch;
    } else if (ch != '(' && ch != ')' && ch != ',' && ch != ' ') {
      throw Error(Errc::ParseError, "bad sign triple '" + std::string(text) + "'");
    }
  }
  if (compact.size() != 3) throw Error(Errc::ParseError, "sign triple needs three signs: '" + std::string(text) + "'");
  SignTriple g = 0;
  for (char ch : compact) g = static_cast<SignTriple>((g << 1) | (ch == '-' ? 1 : 0));
  return g;
}

SignEquipment propagate(const LabeledArrangement& arr, int anchor_face, SignTriple anchor) {
  const CellComplex& c = arr.complex;
  const int nf = static_cast<int>(c.faces().size());
  if (anchor_face < 0 || anchor_face >= nf) {
    throw Error(Errc::InconsistentEquipment, "anchor face " + std::to_string(anchor_face) + " out of range");
  }
  std::vector<int> g(static_cast<std::size_t>(nf), -1);
  g[anchor_face] = anchor;
  std::deque<int> queue{anchor_face};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    const Polygon& p = c.face(f);
    for (int k = 0; k < p.size(); ++k) {
      const int nb = p.edge_neighbors[k];
      if (g[nb] < 0) {
        g[nb] = g[f] ^ arr.labeling[c.side_line(f, k)];
        queue.push_back(nb);
      }
    }
  }
  SignEquipment eq;
  for (int x : g) eq.g.push_back(static_cast<SignTriple>(x));
  for (const auto& e : c.edges()) {
    if ((eq[e.faces[0]] ^ eq[e.faces[1]]) != arr.labeling[e.line]) {
      throw Error(Errc::InconsistentEquipment, "transition rule fails across line " + std::to_string(e.line));
    }
  }
  return eq;
}

SignEquipment flip(const SignEquipment& eq, SignTriple eps) {
  SignEquipment out = eq;
  for (auto& g : out.g) g ^= eps;
  return out;
}

std::vector<SignEquipment> all_equipments(const LabeledArrangement& arr) {
  const SignEquipment base = propagate(arr, 0, kAllPositive);
  std::vector<SignEquipment> out;
  for (SignTriple eps = 0; eps < 8; ++eps) out.push_back(flip(base, eps));
  return out;
}

SignTriple signs_from_quartics(const LabeledArrangement& arr, int face) {
  const CellComplex& c = arr.complex;
  const Vec3& x = c.face(face).sphere_sample;
  SignTriple g = 0;
  for (int k = 0; k < 3; ++k) {
    int s = 1;
    for (int l = 0; l < c.line_count(); ++l) {
      if (label_bit(arr.labeling[l], k)) s *= sign(evaluate(c.lines()[l], x));
    }
    if (s < 0) g |= static_cast<SignTriple>(1 << (2 - k));
  }
  return g;
}

SignEquipment quartic_equipment(const LabeledArrangement& arr) {
  SignEquipment eq;
  for (std::size_t f = 0; f < arr.complex.faces().size(); ++f) eq.g.push_back(signs_from_quartics(arr, static_cast<int>(f)));
  return eq;
}

std::vector<int> positive_faces(const SignEquipment& eq) {
  std::vector<int> out;
  for (std::size_t f = 0; f < eq.g.size(); ++f) {
    if (eq.g[f] == kAllPositive) out.push_back(static_cast<int>(f));
  }
  return out;
}

int distinct_triples(const SignEquipment& eq) {
  return static_cast<int>(std::set<SignTriple>(eq.g.begin(), eq.g.end()).size());
}

std::string AdjacencyType::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(seq[i]);
    if (i % 2 == 1) s += "'";
  }
  return s + ")";
}

AdjacencyType canonical_adjacency(const std::vector<int>& raw) {
  const std::size_t m = raw.size();
  const std::size_t n = m / 2;
  // Reversal: s_n, t_{n-1}, s_{n-1}, ..., s_1, t_n (1-based, s at even slots).
  std::vector<int> rev(m);
  for (std::size_t k = 0; k < n; ++k) {
    rev[2 * k] = raw[2 * ((n - 1 - k) % n)];
    rev[2 * k + 1] = raw[2 * ((2 * n - 2 - k) % n) + 1];
  }
  std::vector<int> best = raw;
  for (const std::vector<int>* src : std::array<const std::vector<int>*, 2>{&raw, &rev}) {
    for (std::size_t r = 0; r < m; r += 2) {
      std::vector<int> cand(m);
      for (std::size_t i = 0; i < m; ++i) cand[i] = (*src)[(r + i) % m];
      if (cand < best) best = cand;
    }
  }
  return AdjacencyType{best};
}

namespace {

std::vector<int> parse_tuple_body(std::string_view body, std::string_view whole) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < body.size()) {
    std::size_t j = body.find(',', i);
    if (j == std::string_view::npos) j = body.size();
    std::string tok(body.substr(i, j - i));
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    const bool primed = !tok.empty() && tok.back() == '\'';
    if (primed) tok.pop_back();
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        primed != (out.size() % 2 == 1)) {
      throw Error(Errc::ParseError, "bad adjacency type '" + std::string(whole) + "'");
    }
    out.push_back(std::stoi(tok));
    i = j + 1;
  }
  if (out.empty() || out.size() % 2) throw Error(Errc::ParseError, "bad adjacency type '" + std::string(whole) + "'");
  return out;
}

}  // namespace

AdjacencyType parse_adjacency(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw Error(Errc::ParseError, "bad adjacency type '" + std::string(text) + "'");
  }
  return canonical_adjacency(parse_tuple_body(text.substr(1, text.size() - 2), text));
}

std::vector<int> adjacency_sequence(const CellComplex& c, int face) {
  const Polygon& p = c.face(face);
  std::vector<int> raw;
  for (int k = 0; k < p.size(); ++k) {
    raw.push_back(c.face(p.edge_neighbors[k]).size());
    raw.push_back(c.face(p.vertex_neighbors[k]).size());
  }
  return raw;
}

AdjacencyType adjacency_type(const CellComplex& c, int face) {
  return canonical_adjacency(adjacency_sequence(c, face));
}

std::string AdjacencyProfile::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += ",";
    s += types[i].str();
  }
  return s + ")";
}

AdjacencyProfile adjacency_profile(const LabeledArrangement& arr, const SignEquipment& eq) {
  AdjacencyProfile out;
  for (int f : positive_faces(eq)) out.types.push_back(adjacency_type(arr.complex, f));
  std::sort(out.types.begin(), out.types.end());
  return out;
}

AdjacencyProfile parse_profile(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ') compact += ch;
  }
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') {
    throw Error(Errc::ParseError, "bad adjacency profile '" + std::string(text) + "'");
  }
  AdjacencyProfile out;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == ',') {
      ++i;
      continue;
    }
    const std::size_t close = body.find(')', i);
    if (body[i] != '(' || close == std::string_view::npos) {
      throw Error(Errc::ParseError, "bad adjacency profile '" + std::string(text) + "'");
    }
    out.types.push_back(parse_adjacency(body.substr(i, close - i + 1)));
    i = close + 1;
  }
  std::sort(out.types.begin(), out.types.end());
  return out;
}

}  // namespace campedelli
