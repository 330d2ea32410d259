#include "campedelli/census.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>

namespace campedelli {

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

// Discovery order of flags, faces and lines from a start flag.
struct Traversal {
  std::vector<int> structure;  // per discovered flag: images under r0,r1,r2
  std::vector<int> faces;      // face ids by discovery
  std::vector<int> lines;      // line ids by discovery
};

Traversal traverse(const CellComplex& c, const FlagGraph& fg, int start) {
  const int n = fg.size();
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{start};
  order[start] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (int i = 0; i < 3; ++i) {
      const int y = fg.step[x][i];
      if (order[y] < 0) {
        order[y] = static_cast<int>(queue.size());
        queue.push_back(y);
      }
    }
  }
  Traversal t;
  std::vector<char> face_seen(c.faces().size()), line_seen(static_cast<std::size_t>(c.line_count()));
  for (int x : queue) {
    for (int i = 0; i < 3; ++i) t.structure.push_back(order[fg.step[x][i]]);
    if (!face_seen[fg.face[x]]) {
      face_seen[fg.face[x]] = 1;
      t.faces.push_back(fg.face[x]);
    }
    const int l = c.edges()[static_cast<std::size_t>(fg.edge(c, x))].line;
    if (!line_seen[l]) {
      line_seen[l] = 1;
      t.lines.push_back(l);
    }
  }
  return t;
}

}  // namespace

std::string canonical_encoding(const LabeledArrangement& arr, const SignEquipment& eq) {
  const CellComplex& c = arr.complex;
  const FlagGraph fg = flag_graph(c);
  std::vector<Traversal> best;
  for (int x = 0; x < fg.size(); ++x) {
    Traversal t = traverse(c, fg, x);
    if (best.empty() || t.structure < best.front().structure) {
      best.clear();
      best.push_back(std::move(t));
    } else if (t.structure == best.front().structure) {
      best.push_back(std::move(t));
    }
  }
  std::vector<int> best_tail;
  for (const auto& t : best) {
    for (const auto& tau : all_renumberings()) {
      std::vector<int> tail;
      for (int l : t.lines) tail.push_back(tau.apply(arr.labeling[l]));
      for (int f : t.faces) tail.push_back(tau.apply(eq[f]));
      if (best_tail.empty() || tail < best_tail) best_tail = std::move(tail);
    }
  }
  std::string enc = "cek1;" + std::to_string(c.line_count()) + ";" + std::to_string(fg.size()) + ";";
  for (int v : best.front().structure) enc += std::to_string(v) + ",";
  enc += ";";
  for (int v : best_tail) enc += std::to_string(v) + ",";
  return enc;
}

std::string class_key(const LabeledArrangement& arr, const SignEquipment& eq) {
  return "cek1:" + sha256_hex(canonical_encoding(arr, eq));
}

bool equivalent(const LabeledArrangement& a, const SignEquipment& ea, const LabeledArrangement& b,
                const SignEquipment& eb) {
  return canonical_encoding(a, ea) == canonical_encoding(b, eb);
}

std::string DefInvariant::str() const {
  return std::string(purely_real ? "purely_real" : "mixed_real") + " " + type.str() + " " + profile.str();
}

DefInvariant def_invariant(const LabeledArrangement& arr, const SignEquipment& eq) {
  return DefInvariant{true, type_vector(arr.complex), adjacency_profile(arr, eq)};
}

ClassCount count_classes(const CellComplex& c) {
  if (!c.is_simple()) throw Error(Errc::NotSimple, "orbit count needs a simple arrangement");
  if (c.line_count() != 7) throw Error(Errc::NotSimple, "orbit count needs seven lines");
  const auto autos = combinatorial_automorphisms(c);
  const auto& taus = all_renumberings();

  // States: permutation index * 8 + g of face 0. A permutation assigns
  // all_labels()[perm[l]] to line l.
  std::vector<std::array<int, 7>> perms;
  std::array<int, 7> p{};
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto perm_index = [&](const std::array<int, 7>& q) {
    int idx = 0;
    for (int i = 0; i < 7; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < 7; ++j) smaller += q[j] < q[i];
      idx = idx * (7 - i) + smaller;
    }
    return idx;
  };

  // Lines separating face f from face 0.
  const int nf = static_cast<int>(c.faces().size());
  std::vector<Tope> sep(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) sep[f] = c.face(f).tope ^ c.face(0).tope;

  ClassCount out;
  out.states = static_cast<long long>(perms.size()) * 8;
  out.automorphisms = static_cast<int>(autos.size());
  out.group_order = out.automorphisms * static_cast<int>(taus.size());

  auto act = [&](int state, const ComplexAutomorphism& a, const Renumbering& tau) {
    const auto& q = perms[static_cast<std::size_t>(state / 8)];
    const int g0 = state % 8;
    std::array<int, 7> img{};
    for (int l = 0; l < 7; ++l) img[a.line_map[l]] = tau.apply(static_cast<Label>(q[l] + 1)) - 1;
    // New g at face 0 is tau(g(pre)), pre = preimage of face 0.
    int pre = 0;
    for (int f = 0; f < nf; ++f) {
      if (a.face_map[f] == 0) pre = f;
    }
    int g = g0;
    for (int l = 0; l < 7; ++l) {
      if ((sep[pre] >> l) & 1) g ^= q[l] + 1;
    }
    return perm_index(img) * 8 + tau.apply(static_cast<Label>(g));
  };

  std::vector<char> seen(static_cast<std::size_t>(out.states), 0);
  for (int s = 0; s < out.states; ++s) {
    if (seen[s]) continue;
    ++out.orbits;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& a : autos) {
        for (const auto& tau : taus) {
          const int y = act(x, a, tau);
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
  }
  for (const auto& a : autos) {
    for (const auto& tau : taus) {
      for (int s = 0; s < out.states; ++s) out.burnside_sum += act(s, a, tau) == s;
    }
  }
  return out;
}

}  // namespace campedelli
