// Command-line front end. Exit codes: 0 success, 2 validation failure,
// 3 parse error, 4 degenerate input, 1 anything else.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "campedelli/arrangement_file.hpp"
#include "campedelli/census.hpp"
#include "campedelli/report.hpp"
#include "campedelli/singularities.hpp"

using namespace campedelli;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitDegenerate = 4;

struct Options {
  std::string file;
  std::string format = "text";
  std::string anchor;
  std::string numbering;
  std::string journal;
  int depth = 1;
  std::vector<std::string> triangles;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const std::string& text, const Json& j) {
  if (json_out(o)) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::optional<std::pair<int, SignTriple>> parse_anchor_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(Errc::ParseError, "--anchor expects FACE:SIGNS");
  int face = 0;
  try {
    face = std::stoi(s.substr(0, colon));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "--anchor face '" + s.substr(0, colon) + "' is not an integer");
  }
  return std::make_pair(face, parse_signs(s.substr(colon + 1)));
}

struct Loaded {
  ArrangementFile file;
  LabeledArrangement base;
  LoadedState state;
  std::optional<FaceNumbering> numbering;
};

Loaded load_real(const Options& o) {
  ArrangementFile f = load_arrangement(o.file);
  LabeledArrangement base = base_arrangement(f);
  LoadedState st = load_state(f, parse_anchor_flag(o.anchor));
  std::optional<FaceNumbering> n;
  if (!o.numbering.empty()) n = load_numbering(o.numbering);
  return {std::move(f), std::move(base), std::move(st), std::move(n)};
}

std::vector<std::string> face_names(const Loaded& l) {
  std::vector<std::string> names;
  for (int b : l.state.origin) {
    const int k = l.numbering ? l.numbering->number_of(l.base.complex.face(b).tope) : 0;
    names.push_back(k ? "P" + std::to_string(k) : "F" + std::to_string(b));
  }
  return names;
}

// Current face from "P<k>", "F<base id>" or a plain current face id.
int resolve_face(const Loaded& l, const std::string& ref) {
  if (!ref.empty() && (ref[0] == 'P' || ref[0] == 'F')) {
    const auto names = face_names(l);
    for (std::size_t f = 0; f < names.size(); ++f) {
      if (names[f] == ref) return static_cast<int>(f);
    }
    throw Error(Errc::NotATriangle, "no face named " + ref);
  }
  try {
    return std::stoi(ref);
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad face reference '" + ref + "'");
  }
}

Json topology_json(const SurfaceTopology& t) {
  return Json{{"components", t.components}, {"euler_per_component", t.euler_per_component}, {"orientable", t.orientable}};
}

std::string signs_plain(SignTriple g) {
  std::string s = sign_str(g);
  std::erase_if(s, [](char c) { return c != '+' && c != '-'; });
  return s;
}

// ---- subcommands ----

int cmd_validate(const Options& o) {
  const ArrangementFile f = load_arrangement(o.file);
  std::ostringstream out;
  Json j{{"kind", file_kind_str(f.kind)}};
  if (f.kind == FileKind::MixedReal) {
    const MixedArrangement m = mixed_arrangement(f);
    validate(m);
    const MixedTypeTag t = classify_type(m);
    out << "valid mixed real arrangement, type " << mixed_type_str(t) << "\n";
    out << "p1 " << m.p1() << "\np2 " << m.p2() << "\n";
    j["valid"] = true;
    j["type"] = mixed_type_str(t);
    j["p1"] = m.p1().str();
    j["p2"] = m.p2().str();
    emit(o, out.str(), j);
    return 0;
  }
  const CellComplex c = CellComplex::build(f.real_lines);
  const Labeling lab{f.labels};
  const CampedelliCheck check = is_campedelli(c, lab);
  const ArrangementSingularities sing = classify_arrangement(c, lab);
  const bool bijective = lab.bijective();
  const bool valid = bijective && check.valid;
  out << (valid ? "valid" : "invalid") << ", " << (c.is_simple() ? "simple" : "not simple") << "\n";
  if (!bijective) out << "labeling is not a bijection onto the seven nonzero labels\n";
  Json points = Json::array();
  for (const auto& [p, s] : sing.points) {
    std::string ls;
    for (int i : p.lines) ls += (ls.empty() ? "" : ",") + label_str(lab[i]);
    out << "point " << p.point << " multiplicity " << p.multiplicity() << " labels " << ls << " -> " << singularity_str(s)
        << "\n";
    points.push_back({{"point", p.point.str()}, {"multiplicity", p.multiplicity()}, {"labels", ls}, {"singularity", singularity_str(s)}});
  }
  Json viol = Json::array();
  for (const auto& v : check.violations) {
    out << "violation at " << v.point.point << ": " << v.reason << "\n";
    viol.push_back({{"point", v.point.point.str()}, {"reason", v.reason}});
  }
  j["valid"] = valid;
  j["simple"] = c.is_simple();
  j["bijective"] = bijective;
  j["multiple_points"] = points;
  j["violations"] = viol;
  j["all_canonical"] = sing.all_canonical;
  emit(o, out.str(), j);
  return valid ? 0 : kExitValidation;
}

int cmd_cells(const Options& o) {
  const Loaded l = load_real(o);
  const CellComplex& c = l.state.arr.complex;
  const auto names = face_names(l);
  std::ostringstream out;
  Json faces = Json::array();
  out << "vertices " << c.vertices().size() << " edges " << c.edges().size() << " faces " << c.faces().size() << "\n";
  if (c.is_simple()) out << "type " << type_vector(c).str() << "\n";
  for (const auto& p : c.faces()) {
    const auto sl = c.side_lines(p.id);
    std::string sides;
    for (int s : sl) sides += (sides.empty() ? "" : ",") + label_str(l.state.arr.labeling[s]);
    out << p.id << " " << names[static_cast<std::size_t>(p.id)] << " " << p.size() << "-gon tope " << c.tope_string(p.id)
        << " sides " << sides << " sample " << p.interior_sample << "\n";
    faces.push_back({{"id", p.id}, {"name", names[static_cast<std::size_t>(p.id)]}, {"sides", p.size()},
                     {"tope", c.tope_string(p.id)}, {"side_labels", sides}, {"sample", p.interior_sample.str()}});
  }
  Json j{{"vertices", c.vertices().size()}, {"edges", c.edges().size()}, {"faces", faces}};
  if (c.is_simple()) j["type"] = type_vector(c).str();
  emit(o, out.str(), j);
  return 0;
}

int cmd_report(const Options& o) {
  const Loaded l = load_real(o);
  const Report r = build_report(l.base, l.state, l.numbering ? &*l.numbering : nullptr);
  Json sc = Json::array();
  for (const auto& [n, s] : r.side_counts) sc.push_back({{"face", n}, {"sides", s}});
  Json rows = Json::array();
  for (const auto& row : r.adjacency_rows) rows.push_back({{"face", row.face}, {"row", row.row}});
  Json rp = Json::array();
  for (const auto& [n, t] : r.real_part) rp.push_back({{"face", n}, {"topology", topology_json(t)}, {"text", t.str()}});
  Json j{{"type", r.type.str()},
         {"side_counts", sc},
         {"adjacency_rows", rows},
         {"positive", r.positive},
         {"profile", r.profile},
         {"real_part", rp},
         {"betti_z2", r.betti.z2_total},
         {"betti_q", r.betti.q_total},
         {"z2_within_bound", r.smith_thom.z2_within_bound},
         {"q_exceeds_complex", r.smith_thom.q_exceeds_complex}};
  emit(o, format_report(r), j);
  return 0;
}

int cmd_signs(const Options& o) {
  const Loaded l = load_real(o);
  const auto names = face_names(l);
  const SignEquipment& eq = l.state.eq;
  const SignEquipment quartic = quartic_equipment(l.state.arr);
  std::ostringstream out;
  Json faces = Json::array();
  for (const auto& p : l.state.arr.complex.faces()) {
    out << p.id << " " << names[static_cast<std::size_t>(p.id)] << " " << sign_str(eq[p.id]) << "\n";
    faces.push_back({{"id", p.id}, {"name", names[static_cast<std::size_t>(p.id)]}, {"signs", signs_plain(eq[p.id])}});
  }
  // Which global flip of the quartic equipment this one is.
  SignTriple eps = static_cast<SignTriple>(eq[0] ^ quartic[0]);
  out << "distinct triples " << distinct_triples(eq) << "\n";
  out << "quartic flip " << sign_str(eps) << "\n";
  emit(o, out.str(), Json{{"faces", faces}, {"distinct_triples", distinct_triples(eq)}, {"quartic_flip", signs_plain(eps)}});
  return 0;
}

int cmd_topology(const Options& o) {
  const Loaded l = load_real(o);
  const auto names = face_names(l);
  std::ostringstream out;
  Json faces = Json::array();
  std::vector<SurfaceTopology> parts;
  for (const auto& p : l.state.arr.complex.faces()) {
    const SurfaceTopology t = preimage_topology(l.state.arr, p.id);
    const bool real = l.state.eq[p.id] == kAllPositive;
    if (real) parts.push_back(t);
    out << names[static_cast<std::size_t>(p.id)] << " " << t.str() << (real ? " real" : "") << "\n";
    faces.push_back({{"face", names[static_cast<std::size_t>(p.id)]}, {"topology", topology_json(t)}, {"real", real}});
  }
  const BettiSummary b = betti(parts);
  out << "betti z2 " << b.z2_total << " q " << b.q_total << "\n";
  emit(o, out.str(), Json{{"faces", faces}, {"betti_z2", b.z2_total}, {"betti_q", b.q_total}});
  return 0;
}

// Applies the listed reversals in order. With one triangle --journal names
// the output file; with several it names a directory receiving
// step_0.arr (the input) through step_k.arr.
int cmd_move(const Options& o) {
  Loaded l = load_real(o);
  if (o.triangles.empty()) throw Error(Errc::NotATriangle, "no triangle given");
  std::ostringstream out;
  Json steps = Json::array();
  std::vector<ArrangementFile> files{l.file};
  bool all_good = true;
  for (const auto& ref : o.triangles) {
    const int face = resolve_face(l, ref);
    MoveRecord rec = reverse_triangle(l.state.arr, l.state.eq, face);
    l.file.journal.push_back(rec.step);
    std::vector<int> origin(l.state.origin.size());
    for (std::size_t x = 0; x < origin.size(); ++x) origin[static_cast<std::size_t>(rec.face_map[x])] = l.state.origin[x];
    l.state.origin = std::move(origin);
    l.state.arr = rec.result;
    l.state.eq = rec.equipment;
    all_good = all_good && rec.good;
    const DefInvariant inv = def_invariant(l.state.arr, l.state.eq);
    out << "reversed " << ref << ": type " << inv.type.str() << " profile " << inv.profile.str()
        << (rec.good ? " good" : " WARNING NotGoodMove (not diffeomorphism-certified)") << "\n";
    steps.push_back({{"triangle", ref}, {"good", rec.good}, {"type", inv.type.str()}, {"profile", inv.profile.str()}});
    files.push_back(l.file);
  }
  if (!o.journal.empty()) {
    if (o.triangles.size() == 1) {
      std::ofstream(o.journal) << print_arrangement(l.file);
    } else {
      std::filesystem::create_directories(o.journal);
      for (std::size_t i = 0; i < files.size(); ++i) {
        std::ofstream(std::filesystem::path(o.journal) / ("step_" + std::to_string(i) + ".arr")) << print_arrangement(files[i]);
      }
    }
  } else if (!json_out(o)) {
    out << print_arrangement(l.file);
  }
  emit(o, out.str(), Json{{"steps", steps}, {"all_good", all_good}, {"file", print_arrangement(l.file)}});
  return 0;
}

int cmd_search(const Options& o) {
  const Loaded l = load_real(o);
  const WitnessReport w = witness_search(l.state.arr, l.state.eq, o.depth);
  std::ostringstream out;
  Json members = Json::array();
  out << "classes " << w.members.size() << " invariant buckets " << w.buckets.size() << (w.is_witness() ? " witness" : "") << "\n";
  for (std::size_t b = 0; b < w.buckets.size(); ++b) {
    for (int i : w.buckets[b]) {
      const SearchMember& m = w.members[static_cast<std::size_t>(i)];
      out << "bucket " << b << " moves " << m.path.size() << " type " << m.type.str() << " profile " << m.profile.str() << " "
          << m.key << "\n";
      members.push_back({{"bucket", b}, {"moves", m.path.size()}, {"type", m.type.str()}, {"profile", m.profile.str()}, {"key", m.key}});
    }
  }
  if (!o.journal.empty()) {
    std::filesystem::create_directories(o.journal);
    for (std::size_t i = 0; i < w.members.size(); ++i) {
      ArrangementFile f = l.file;
      for (const auto& s : w.members[i].path) f.journal.push_back(s);
      std::ofstream(std::filesystem::path(o.journal) / ("member_" + std::to_string(i) + ".arr")) << print_arrangement(f);
    }
  }
  emit(o, out.str(), Json{{"classes", w.members.size()}, {"buckets", w.buckets.size()}, {"witness", w.is_witness()}, {"members", members}});
  return 0;
}

int cmd_classify_mixed(const Options& o) {
  const MixedArrangement m = mixed_arrangement(load_arrangement(o.file));
  validate(m);
  const MixedTypeTag type = classify_type(m);
  std::ostringstream out;
  out << "type " << mixed_type_str(type) << "\n";
  Json structs = Json::array();
  std::vector<MixedDefClass> classes;
  for (RealStructure s : {RealStructure::PlusPlus, RealStructure::MinusPlus, RealStructure::PlusMinus, RealStructure::MinusMinus}) {
    const MixedDefClass dc = def_class(m, s);
    classes.push_back(dc);
    const auto fix = fix_topology(m, s);
    const auto oracle = fix_topology_oracle(m, s);
    std::string fs;
    Json fj = Json::array();
    for (const auto& t : fix) {
      fs += (fs.empty() ? "" : " + ") + t.str();
      fj.push_back(topology_json(t));
    }
    out << real_structure_str(s) << " (" << (is_plus_class(s) ? "c+" : "c-") << ") class " << def_class_str(dc) << " fixed set " << fs
        << (fix == oracle ? " [oracle agrees]" : " [ORACLE MISMATCH]") << "\n";
    structs.push_back({{"structure", real_structure_str(s)}, {"class", def_class_str(dc)}, {"fixed_set", fj}, {"oracle_agrees", fix == oracle}});
  }
  emit(o, out.str(), Json{{"type", mixed_type_str(type)}, {"structures", structs}});
  return 0;
}

int cmd_count_classes(const Options& o) {
  const Loaded l = load_real(o);
  const ClassCount cc = count_classes(l.state.arr.complex);
  std::ostringstream out;
  out << "classes " << cc.orbits << "\nautomorphisms " << cc.automorphisms << "\ngroup order " << cc.group_order
      << "\nstates " << cc.states << "\nburnside " << cc.burnside() << "\n";
  emit(o, out.str(),
       Json{{"classes", cc.orbits}, {"automorphisms", cc.automorphisms}, {"group_order", cc.group_order}, {"states", cc.states},
            {"burnside", cc.burnside()}});
  return 0;
}

int cmd_emit_equations(const Options& o) {
  const ArrangementFile f = load_arrangement(o.file);
  std::string text;
  if (f.kind == FileKind::MixedReal) {
    const MixedArrangement m = mixed_arrangement(f);
    validate(m);
    text = emit_equations(m);
  } else {
    text = emit_equations(load_state(f).arr);
  }
  emit(o, text, Json{{"equations", text}});
  return 0;
}

int cmd_oracle_check(const Options& o) {
  const ArrangementFile f = load_arrangement(o.file);
  std::ostringstream out;
  Json rows = Json::array();
  int mismatches = 0;
  if (f.kind == FileKind::MixedReal) {
    const MixedArrangement m = mixed_arrangement(f);
    validate(m);
    for (RealStructure s : {RealStructure::PlusPlus, RealStructure::PlusMinus}) {
      const auto a = fix_topology(m, s);
      const auto b = fix_topology_oracle(m, s);
      const std::array<int, 2> quads = is_plus_class(s) ? std::array<int, 2>{1, 3} : std::array<int, 2>{2, 4};
      for (std::size_t i = 0; i < 2; ++i) {
        const bool ok = a[i] == b[i];
        mismatches += !ok;
        out << "P" << quads[i] << " closed " << a[i].str() << " oracle " << b[i].str() << (ok ? "" : " MISMATCH") << "\n";
        rows.push_back({{"quadrant", quads[i]}, {"closed", a[i].str()}, {"oracle", b[i].str()}, {"match", ok}});
      }
    }
  } else {
    const Loaded l = load_real(o);
    const auto names = face_names(l);
    const LabeledArrangement& arr = l.state.arr;
    for (const auto& p : arr.complex.faces()) {
      GluedSurface g;
      for (int s : arr.complex.side_lines(p.id)) g.side_labels.push_back(arr.labeling[s]);
      const SurfaceTopology a = preimage_topology(arr, p.id);
      const SurfaceTopology b = glue_oracle(g);
      const bool ok = a == b;
      mismatches += !ok;
      out << names[static_cast<std::size_t>(p.id)] << " closed " << a.str() << " oracle " << b.str() << (ok ? "" : " MISMATCH") << "\n";
      rows.push_back({{"face", names[static_cast<std::size_t>(p.id)]}, {"closed", a.str()}, {"oracle", b.str()}, {"match", ok}});
    }
  }
  out << "mismatches " << mismatches << "\n";
  emit(o, out.str(), Json{{"rows", rows}, {"mismatches", mismatches}});
  return mismatches ? kExitValidation : 0;
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::ParseError: return kExitParse;
    case Errc::Degenerate:
    case Errc::DegenerateArrangement:
    case Errc::NotSimple:
    case Errc::Concurrent: return kExitDegenerate;
    default: return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real Campedelli line arrangements: cells, signs, coverings, moves, classes"};
  app.require_subcommand(1);
  Options o;
  using Fn = int (*)(const Options&);
  const std::vector<std::tuple<std::string, std::string, Fn>> commands{
      {"validate", "Campedelli validity and multiple-point verdicts", cmd_validate},
      {"cells", "Faces of the cell complex", cmd_cells},
      {"report", "Type, tables, positive polygons, real part", cmd_report},
      {"signs", "Sign-equipment from the anchor", cmd_signs},
      {"topology", "Covering topology over every face", cmd_topology},
      {"move", "Reverse triangles and journal the result", cmd_move},
      {"search", "Good-move search for Dif/Def witnesses", cmd_search},
      {"classify-mixed", "Type and deformation classes of a mixed arrangement", cmd_classify_mixed},
      {"count-classes", "Orbits of labelings and equipments", cmd_count_classes},
      {"emit-equations", "Covering equations with the linear forms substituted", cmd_emit_equations},
      {"oracle-check", "Closed-form topology against the gluing oracle", cmd_oracle_check},
  };
  std::map<CLI::App*, Fn> handlers;
  for (const auto& [name, help, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Arrangement file")->required();
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (name != "validate" && name != "classify-mixed" && name != "emit-equations") {
      sub->add_option("--anchor", o.anchor, "FACE:SIGNS, e.g. 0:+++");
      sub->add_option("--numbering", o.numbering, "Face numbering sidecar");
    }
    if (name == "move") {
      sub->add_option("triangles", o.triangles, "Triangles to reverse in order (face id, P<k> or F<k>)")->required();
      sub->add_option("--journal", o.journal, "Output file, or directory for several moves");
    }
    if (name == "search") {
      sub->add_option("--depth", o.depth, "Number of moves")->check(CLI::NonNegativeNumber);
      sub->add_option("--journal", o.journal, "Directory receiving one file per class");
    }
    handlers[sub] = fn;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }
  try {
    for (auto& [sub, fn] : handlers) {
      if (sub->parsed()) return fn(o);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
