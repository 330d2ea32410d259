#include "campedelli/report.hpp"

#include <algorithm>
#include <sstream>

namespace campedelli {

namespace {

// Order of the weight-2 variables in the emitted system.
constexpr std::array<Label, 7> kEquationOrder{4, 2, 1, 6, 5, 3, 7};

int parity_dot(Label a, Label b) { return __builtin_popcount(static_cast<unsigned>(a & b)) & 1; }

std::string u(Label a) { return "u" + label_str(a); }

// Appends "c*term" with sign handling; `coef` is already formatted without
// its sign.
void add_term(std::string& out, bool negative, const std::string& coef, const std::string& term) {
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (coef == "1") {
    out += term;
  } else {
    out += coef + "*" + term;
  }
}

std::string rational_abs(const Rational& r) { return format_rational(r < 0 ? Rational(-r) : r); }

}  // namespace

std::string format_linear(const ProjLine& l) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    const BigInt& c = l[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    add_term(out, c < 0, (c < 0 ? BigInt(-c) : c).str(), "z" + std::to_string(i));
  }
  return out;
}

std::string format_linear(const ComplexProjLine& l) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    const GaussRational& c = l.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const std::string z = "z" + std::to_string(i);
    if (c.is_real()) {
      add_term(out, c.re < 0, rational_abs(c.re), z);
    } else if (c.re == 0) {
      const std::string im = rational_abs(c.im);
      add_term(out, c.im < 0, im == "1" ? "i" : im + "i", z);
    } else {
      add_term(out, false, "(" + format_gauss(c) + ")", z);
    }
  }
  return out;
}

std::string format_norm_form(const ComplexProjLine& l) {
  const auto& a = l.coeffs();
  std::string out;
  auto emit = [&](const Rational& c, const std::string& term) {
    if (c != 0) add_term(out, c < 0, rational_abs(c), term);
  };
  for (int i = 0; i < 3; ++i) {
    const auto& ai = a[static_cast<std::size_t>(i)];
    emit(ai.re * ai.re + ai.im * ai.im, "z" + std::to_string(i) + "^2");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto& ai = a[static_cast<std::size_t>(i)];
      const auto& aj = a[static_cast<std::size_t>(j)];
      // 2 Re(a_i conj(a_j))
      emit(2 * (ai.re * aj.re + ai.im * aj.im), "z" + std::to_string(i) + "*z" + std::to_string(j));
    }
  }
  return out.empty() ? "0" : out;
}

std::string emit_equations(const LabeledArrangement& arr) {
  std::ostringstream out;
  auto form = [&](Label b) { return "(" + format_linear(arr.complex.lines()[static_cast<std::size_t>(arr.line(b))]) + ")"; };
  auto product = [&](const std::vector<Label>& ls) {
    std::string s;
    for (Label b : ls) s += (s.empty() ? "" : "*") + form(b);
    return s;
  };
  out << "# linear forms\n";
  for (Label a : kEquationOrder) out << "# l" << label_str(a) << " = " << form(a) << "\n";
  for (Label a : kEquationOrder) {
    std::vector<Label> factors;
    for (Label b : kEquationOrder) {
      if (parity_dot(a, b)) factors.push_back(b);
    }
    out << u(a) << "^2 = " << product(factors) << "\n";
  }
  // u_{sum} = prod u_{a_i} / prod l_b^{e_b}, e_b = (sum_i <a_i,b> - <sum,b>) / 2.
  const std::vector<std::vector<Label>> relations{{4, 2}, {4, 1}, {2, 1}, {4, 2, 1}};
  for (const auto& parts : relations) {
    Label sum = 0;
    std::string num;
    for (Label a : parts) {
      sum ^= a;
      num += (num.empty() ? "" : "*") + u(a);
    }
    std::vector<Label> den;
    for (Label b : kEquationOrder) {
      int e = -parity_dot(sum, b);
      for (Label a : parts) e += parity_dot(a, b);
      for (int k = 0; k < e / 2; ++k) den.push_back(b);
    }
    out << u(sum) << " = " << num << "/(" << product(den) << ")\n";
  }
  return out.str();
}

std::string emit_equations(const MixedArrangement& m) {
  const NormalizedMixed n = normalize(m);
  const MixedArrangement& a = n.arr;
  std::ostringstream out;
  out << "# normalized coordinates (x0, x1, x2 are the file's coordinates)\n";
  const char* names[3] = {"z0", "z1", "z2"};
  for (int i = 0; i < 3; ++i) {
    std::string row = format_linear(ProjLine(n.transform[static_cast<std::size_t>(i)]));
    const Vec3& r = n.transform[static_cast<std::size_t>(i)];
    // format_linear normalizes the sign; restore it for the printout.
    const bool flipped = std::find_if(r.begin(), r.end(), [](const BigInt& v) { return v != 0; })->sign() < 0;
    std::replace(row.begin(), row.end(), 'z', 'x');
    out << "# " << names[i] << " = " << (flipped ? "-(" + row + ")" : row) << "\n";
  }
  if (n.renumbered) out << "# labels renumbered: 111 <-> 001, 101 <-> 011\n";
  out << "# l100 = " << format_linear(a.l100) << "\n";
  out << "# l010 = " << format_linear(a.l010()) << "\n";
  out << "# l101 = " << format_linear(a.l101) << "\n";
  out << "# l011 = " << format_linear(a.l011()) << "\n";
  const std::string q1 = "(" + format_norm_form(a.l100) + ")";
  const std::string q2 = "(" + format_norm_form(a.l101) + ")";
  out << "# q1 = l100*l010 = " << q1 << "\n";
  out << "# q2 = l101*l011 = " << q2 << "\n";
  auto f = [](const ComplexProjLine& l) { return "(" + format_linear(l) + ")"; };
  out << "u100^2 = " << f(a.l100) << "*" << f(a.l101) << "*z0*z1\n";
  out << "u010^2 = " << f(a.l010()) << "*" << f(a.l011()) << "*z0*z1\n";
  out << "u001^2 = " << q2 << "*z1*z2\n";
  out << "u110^2 = " << q1 << "*" << q2 << "\n";
  out << "u101^2 = " << f(a.l100) << "*" << f(a.l011()) << "*z0*z2\n";
  out << "u011^2 = " << f(a.l010()) << "*" << f(a.l101) << "*z0*z2\n";
  out << "u111^2 = " << q1 << "*z1*z2\n";
  return out.str();
}

namespace {

int name_number(const std::string& name) { return std::stoi(name.substr(1)); }

// Tokens "size_number" around a face, vertex-neighbors primed, starting at
// the edge-neighbor with the least number and heading toward the smaller
// of its two primed neighbors.
std::string adjacency_row(const CellComplex& c, int face, const std::vector<std::string>& names) {
  const Polygon& p = c.face(face);
  struct Tok {
    int size, number;
    bool primed;
  };
  std::vector<Tok> toks;
  for (int k = 0; k < p.size(); ++k) {
    const int e = p.edge_neighbors[static_cast<std::size_t>(k)];
    const int v = p.vertex_neighbors[static_cast<std::size_t>(k)];
    toks.push_back({c.face(e).size(), name_number(names[static_cast<std::size_t>(e)]), false});
    toks.push_back({c.face(v).size(), name_number(names[static_cast<std::size_t>(v)]), true});
  }
  const int m = static_cast<int>(toks.size());
  int start = 0;
  for (int i = 2; i < m; i += 2) {
    if (toks[static_cast<std::size_t>(i)].number < toks[static_cast<std::size_t>(start)].number) start = i;
  }
  const int fwd = toks[static_cast<std::size_t>((start + 1) % m)].number;
  const int back = toks[static_cast<std::size_t>((start + m - 1) % m)].number;
  const int dir = fwd <= back ? 1 : -1;
  std::string out = "(";
  for (int i = 0; i < m; ++i) {
    const Tok& t = toks[static_cast<std::size_t>(((start + dir * i) % m + m) % m)];
    if (i) out += ",";
    out += std::to_string(t.size) + "_" + std::to_string(t.number) + (t.primed ? "'" : "");
  }
  return out + ")";
}

}  // namespace

Report build_report(const LabeledArrangement& base, const LoadedState& state, const FaceNumbering* numbering) {
  const CellComplex& c = state.arr.complex;
  const int nf = static_cast<int>(c.faces().size());
  Report r;
  r.type = type_vector(c);
  r.names.resize(static_cast<std::size_t>(nf));
  std::vector<int> order(static_cast<std::size_t>(nf));
  std::vector<int> key(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) {
    const int b = state.origin[static_cast<std::size_t>(f)];
    const int k = numbering ? numbering->number_of(base.complex.face(b).tope) : 0;
    r.names[static_cast<std::size_t>(f)] = k ? "P" + std::to_string(k) : "F" + std::to_string(b);
    key[static_cast<std::size_t>(f)] = k ? k : 1000 + b;
    order[static_cast<std::size_t>(f)] = f;
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) { return key[static_cast<std::size_t>(x)] < key[static_cast<std::size_t>(y)]; });
  std::vector<bool> designated(base.complex.faces().size(), false);
  for (const auto& t : find_triangles(base)) designated[static_cast<std::size_t>(t.face)] = t.dependent;
  for (int f : order) {
    const std::string& name = r.names[static_cast<std::size_t>(f)];
    if (designated[static_cast<std::size_t>(state.origin[static_cast<std::size_t>(f)])]) {
      r.adjacency_rows.push_back({name, adjacency_row(c, f, r.names)});
    } else {
      r.side_counts.emplace_back(name, c.face(f).size());
    }
  }
  for (int f : order) {
    if (state.eq[f] == kAllPositive) r.positive.push_back(r.names[static_cast<std::size_t>(f)]);
  }
  r.profile = adjacency_profile(state.arr, state.eq).str();
  std::vector<SurfaceTopology> parts;
  for (const auto& [f, t] : real_part(state.arr, state.eq)) {
    r.real_part.emplace_back(r.names[static_cast<std::size_t>(f)], t);
    parts.push_back(t);
  }
  std::sort(r.real_part.begin(), r.real_part.end(), [](const auto& x, const auto& y) {
    return (x.first[0] == y.first[0] ? name_number(x.first) < name_number(y.first) : x.first < y.first);
  });
  r.betti = betti(parts);
  r.smith_thom = smith_thom_report(r.betti);
  return r;
}

std::string side_count_table(const Report& r) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.side_counts.size(); i += 8) {
    const std::size_t end = std::min(i + 8, r.side_counts.size());
    for (std::size_t j = i; j < end; ++j) out << (j > i ? " " : "") << r.side_counts[j].first;
    out << "\n";
    for (std::size_t j = i; j < end; ++j) out << (j > i ? " " : "") << r.side_counts[j].second;
    out << "\n";
  }
  return out.str();
}

std::string format_report(const Report& r) {
  std::ostringstream out;
  out << "type " << r.type.str() << "\n";
  out << "side counts\n" << side_count_table(r);
  out << "adjacency types\n";
  for (const auto& row : r.adjacency_rows) out << row.face << " " << row.row << "\n";
  out << "positive";
  for (const auto& p : r.positive) out << " " << p;
  out << "\n";
  out << "profile " << r.profile << "\n";
  out << "real part\n";
  for (const auto& [name, t] : r.real_part) out << name << " " << t.str() << "\n";
  out << "betti z2 " << r.betti.z2_total << " (complex " << kComplexZ2Total << ", "
      << (r.smith_thom.z2_within_bound ? "within" : "exceeds") << " bound)\n";
  out << "betti q " << r.betti.q_total << " (complex " << kComplexQTotal << ", "
      << (r.smith_thom.q_exceeds_complex ? "exceeds" : "at most") << ")\n";
  return out.str();
}

}  // namespace campedelli
