#include "campedelli/arrangement_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace campedelli {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void fail(int line, int column, const std::string& msg) {
  throw Error(Errc::ParseError, std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

Rational rational_at(const Token& t, int line) {
  try {
    return parse_rational(t.text);
  } catch (const Error&) {
    fail(line, t.column, "malformed rational '" + t.text + "'");
  }
}

BigInt integer_at(const Token& t, int line) {
  const Rational r = rational_at(t, line);
  if (denominator(r) != 1) fail(line, t.column, "expected an integer, got '" + t.text + "'");
  return numerator(r);
}

GaussRational gauss_at(const Token& t, int line) {
  const std::string& s = t.text;
  if (s.empty() || s.front() != '(') return {rational_at(t, line), 0};
  const auto comma = s.find(',');
  if (s.back() != ')' || comma == std::string::npos) fail(line, t.column, "malformed complex coefficient '" + s + "'");
  const Token re{s.substr(1, comma - 1), t.column + 1};
  const Token im{s.substr(comma + 1, s.size() - comma - 2), t.column + static_cast<int>(comma) + 1};
  return {rational_at(re, line), rational_at(im, line)};
}

std::string gauss_token(const GaussRational& g) { return "(" + format_rational(g.re) + "," + format_rational(g.im) + ")"; }

}  // namespace

const char* file_kind_str(FileKind k) { return k == FileKind::PurelyReal ? "purely_real" : "mixed_real"; }

std::string format_tope(Tope t, int lines) {
  std::string s;
  for (int i = 0; i < lines; ++i) s += (t >> i) & 1 ? '-' : '+';
  return s;
}

Tope parse_tope(std::string_view text) {
  if (text.empty() || text.size() > 63) throw Error(Errc::ParseError, "bad tope '" + std::string(text) + "'");
  Tope t = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-') {
      t |= Tope{1} << i;
    } else if (text[i] != '+') {
      throw Error(Errc::ParseError, "bad tope '" + std::string(text) + "'");
    }
  }
  return t;
}

ArrangementFile parse_arrangement(std::string_view text) {
  ArrangementFile f;
  bool header = false, have_kind = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = tokenize(raw);
    if (toks.empty() || toks[0].text.front() == '#') continue;
    const std::string& key = toks[0].text;
    if (!header) {
      if (key != "campedelli/1" || toks.size() != 1) fail(line_no, toks[0].column, "expected header 'campedelli/1'");
      header = true;
      continue;
    }
    auto need = [&](std::size_t n) {
      if (toks.size() != n) {
        const int col = toks.size() > n ? toks[n].column : static_cast<int>(raw.size()) + 1;
        fail(line_no, col, "'" + key + "' takes " + std::to_string(n - 1) + " fields");
      }
    };
    if (key == "kind") {
      need(2);
      if (have_kind) fail(line_no, toks[0].column, "repeated 'kind'");
      if (!f.labels.empty()) fail(line_no, toks[0].column, "'kind' must precede the lines");
      if (toks[1].text == "purely_real") {
        f.kind = FileKind::PurelyReal;
      } else if (toks[1].text == "mixed_real") {
        f.kind = FileKind::MixedReal;
      } else {
        fail(line_no, toks[1].column, "unknown kind '" + toks[1].text + "'");
      }
      have_kind = true;
    } else if (key == "line") {
      if (!have_kind) fail(line_no, toks[0].column, "'kind' must come first");
      need(5);
      Label a = 0;
      try {
        a = parse_label(toks[1].text);
      } catch (const Error&) {
        fail(line_no, toks[1].column, "bad label '" + toks[1].text + "'");
      }
      f.labels.push_back(a);
      try {
        if (f.kind == FileKind::PurelyReal) {
          f.real_lines.emplace_back(std::array<Rational, 3>{rational_at(toks[2], line_no), rational_at(toks[3], line_no),
                                                            rational_at(toks[4], line_no)});
        } else {
          f.complex_lines.emplace_back(
              GaussVec3{gauss_at(toks[2], line_no), gauss_at(toks[3], line_no), gauss_at(toks[4], line_no)});
        }
      } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw;
        fail(line_no, toks[2].column, "zero line");
      }
    } else if (key == "anchor") {
      need(5);
      if (f.anchor) fail(line_no, toks[0].column, "repeated 'anchor'");
      Anchor a;
      try {
        a.point = ProjPoint(std::array<Rational, 3>{rational_at(toks[1], line_no), rational_at(toks[2], line_no),
                                                    rational_at(toks[3], line_no)});
      } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw;
        fail(line_no, toks[1].column, "zero point");
      }
      try {
        a.signs = parse_signs(toks[4].text);
      } catch (const Error&) {
        fail(line_no, toks[4].column, "bad signs '" + toks[4].text + "'");
      }
      f.anchor = a;
    } else if (key == "move") {
      need(7);
      MoveStep s;
      try {
        s.triangle = parse_tope(toks[1].text);
      } catch (const Error&) {
        fail(line_no, toks[1].column, "bad tope '" + toks[1].text + "'");
      }
      const BigInt l = integer_at(toks[2], line_no);
      if (l < 0 || l > 63) fail(line_no, toks[2].column, "bad line index");
      s.line = static_cast<int>(l);
      for (int i = 0; i < 3; ++i) s.mu[static_cast<std::size_t>(i)] = integer_at(toks[3 + static_cast<std::size_t>(i)], line_no);
      s.t = rational_at(toks[6], line_no);
      f.journal.push_back(s);
    } else {
      fail(line_no, toks[0].column, "unknown directive '" + key + "'");
    }
  }
  if (!header) fail(line_no + 1, 1, "missing header 'campedelli/1'");
  if (!have_kind) fail(line_no + 1, 1, "missing 'kind'");
  if (f.labels.empty()) fail(line_no + 1, 1, "no lines");
  if (f.kind == FileKind::MixedReal && (f.anchor || !f.journal.empty())) {
    fail(line_no + 1, 1, "anchors and moves apply to purely real files only");
  }
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ArrangementFile load_arrangement(const std::string& path) { return parse_arrangement(read_text_file(path)); }

std::string print_arrangement(const ArrangementFile& f) {
  std::ostringstream out;
  out << "campedelli/1\nkind " << file_kind_str(f.kind) << "\n";
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    out << "line " << label_str(f.labels[i]);
    if (f.kind == FileKind::PurelyReal) {
      for (const auto& c : f.real_lines[i].coords()) out << " " << c;
    } else {
      for (const auto& c : f.complex_lines[i].coeffs()) out << " " << gauss_token(c);
    }
    out << "\n";
  }
  if (f.anchor) {
    out << "anchor";
    for (const auto& c : f.anchor->point.coords()) out << " " << c;
    std::string s = sign_str(f.anchor->signs);
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch != '+' && ch != '-'; }), s.end());
    out << " " << s << "\n";
  }
  const int n = static_cast<int>(f.labels.size());
  for (const auto& s : f.journal) {
    out << "move " << format_tope(s.triangle, n) << " " << s.line;
    for (const auto& c : s.mu) out << " " << c;
    out << " " << format_rational(s.t) << "\n";
  }
  return out.str();
}

LabeledArrangement base_arrangement(const ArrangementFile& f) {
  if (f.kind != FileKind::PurelyReal) throw Error(Errc::ParseError, "expected a purely real file");
  return make_labeled(f.real_lines, Labeling{f.labels});
}

MixedArrangement mixed_arrangement(const ArrangementFile& f) {
  if (f.kind != FileKind::MixedReal) throw Error(Errc::ParseError, "expected a mixed real file");
  std::vector<Label> sorted = f.labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<Label>{1, 4, 5, 6, 7}) {
    throw Error(Errc::ParseError, "mixed files list the lines 110, 111, 001, 100, 101 once each");
  }
  auto get = [&](Label a) -> const ComplexProjLine& {
    return f.complex_lines[static_cast<std::size_t>(std::find(f.labels.begin(), f.labels.end(), a) - f.labels.begin())];
  };
  auto real = [&](Label a) {
    const ComplexProjLine& l = get(a);
    if (!l.is_real()) throw Error(Errc::ParseError, "line " + label_str(a) + " must be real");
    return ProjLine(std::array<Rational, 3>{l.coeffs()[0].re, l.coeffs()[1].re, l.coeffs()[2].re});
  };
  MixedArrangement m;
  m.l110 = real(6);
  m.l111 = real(7);
  m.l001 = real(1);
  m.l100 = get(4);
  m.l101 = get(5);
  return m;
}

LoadedState load_state(const ArrangementFile& f, std::optional<std::pair<int, SignTriple>> anchor_override) {
  LoadedState s{base_arrangement(f), {}, {}, {}};
  int face = 0;
  SignTriple g = kAllPositive;
  if (anchor_override) {
    face = anchor_override->first;
    g = anchor_override->second;
    if (face < 0 || face >= static_cast<int>(s.arr.complex.faces().size())) {
      throw Error(Errc::ParseError, "anchor face " + std::to_string(face) + " out of range");
    }
  } else if (f.anchor) {
    face = s.arr.complex.locate(f.anchor->point);
    g = f.anchor->signs;
  }
  s.eq = propagate(s.arr, face, g);
  s.origin.resize(s.arr.complex.faces().size());
  for (std::size_t i = 0; i < s.origin.size(); ++i) s.origin[i] = static_cast<int>(i);
  for (const auto& step : f.journal) {
    MoveRecord rec = replay_step(s.arr, s.eq, step);
    std::vector<int> origin(s.origin.size());
    for (std::size_t x = 0; x < s.origin.size(); ++x) origin[static_cast<std::size_t>(rec.face_map[x])] = s.origin[x];
    s.origin = std::move(origin);
    s.arr = rec.result;
    s.eq = rec.equipment;
    s.moves.push_back(std::move(rec));
  }
  return s;
}

int FaceNumbering::number_of(Tope t) const {
  for (const auto& [k, tope] : entries) {
    if (tope == t) return k;
  }
  return 0;
}

FaceNumbering parse_numbering(std::string_view text) {
  FaceNumbering n;
  bool header = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = tokenize(raw);
    if (toks.empty() || toks[0].text.front() == '#') continue;
    if (!header) {
      if (toks[0].text != "campedelli-numbering/1") fail(line_no, toks[0].column, "expected header 'campedelli-numbering/1'");
      header = true;
      continue;
    }
    if (toks.size() != 2 || toks[0].text.size() < 2 || toks[0].text[0] != 'P') {
      fail(line_no, toks[0].column, "expected 'P<k> <tope>'");
    }
    int k = 0;
    try {
      k = std::stoi(toks[0].text.substr(1));
    } catch (const std::exception&) {
      fail(line_no, toks[0].column + 1, "bad polygon number");
    }
    Tope t = 0;
    try {
      t = parse_tope(toks[1].text);
    } catch (const Error&) {
      fail(line_no, toks[1].column, "bad tope '" + toks[1].text + "'");
    }
    n.entries.emplace_back(k, t);
  }
  if (!header) fail(line_no + 1, 1, "missing header 'campedelli-numbering/1'");
  return n;
}

FaceNumbering load_numbering(const std::string& path) { return parse_numbering(read_text_file(path)); }

std::string print_numbering(const FaceNumbering& n, int lines) {
  std::string out = "campedelli-numbering/1\n";
  for (const auto& [k, t] : n.entries) out += "P" + std::to_string(k) + " " + format_tope(t, lines) + "\n";
  return out;
}

}  // namespace campedelli
