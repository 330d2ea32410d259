#pragma once

// The "campedelli/1" text format.
//
//   campedelli/1
//   kind purely_real
//   line 100 199 0 -1
//   ...
//   anchor 1 150 100 +++
//   move +--+-+- 0 1 -3 2 3/2
//
// Coefficients are rationals ("p" or "p/q"); mixed files write complex
// coefficients as "(re,im)". Lines starting with '#' are comments. Parse
// failures throw ParseError with "line:column" in the message.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "campedelli/mixedreal.hpp"
#include "campedelli/moves.hpp"

namespace campedelli {

enum class FileKind { PurelyReal, MixedReal };
const char* file_kind_str(FileKind k);

struct Anchor {
  ProjPoint point;
  SignTriple signs = kAllPositive;
  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct ArrangementFile {
  FileKind kind = FileKind::PurelyReal;
  std::vector<Label> labels;             // file order
  std::vector<ProjLine> real_lines;      // purely real: one per label
  std::vector<ComplexProjLine> complex_lines;  // mixed: one per label
  std::optional<Anchor> anchor;
  std::vector<MoveStep> journal;
};

ArrangementFile parse_arrangement(std::string_view text);
/// Reads and parses a file. Throws ParseError when unreadable.
ArrangementFile load_arrangement(const std::string& path);
/// Canonical text; parse_arrangement(print_arrangement(f)) reproduces f.
std::string print_arrangement(const ArrangementFile& f);

/// "+-+--++": sign of each line on the face, line 0 first.
std::string format_tope(Tope t, int lines);
Tope parse_tope(std::string_view text);

/// Purely real base arrangement (journal not applied). Throws NotCampedelli
/// and the errors of CellComplex::build.
LabeledArrangement base_arrangement(const ArrangementFile& f);
/// Throws ParseError for a purely real file or a wrong label set.
MixedArrangement mixed_arrangement(const ArrangementFile& f);

/// Equipped arrangement after replaying the journal, with base face ids
/// carried along.
struct LoadedState {
  LabeledArrangement arr;
  SignEquipment eq;
  std::vector<int> origin;  // current face id -> base face id
  std::vector<MoveRecord> moves;
};

/// The anchor defaults to face 0 with (+,+,+). `anchor_override` (face id
/// of the base arrangement, signs) wins over the file's anchor.
LoadedState load_state(const ArrangementFile& f, std::optional<std::pair<int, SignTriple>> anchor_override = {});

/// Face names P1, P2, ... keyed by base topes.
struct FaceNumbering {
  std::vector<std::pair<int, Tope>> entries;  // (number, tope)

  /// Number of a tope, 0 when absent.
  int number_of(Tope t) const;
};

/// "campedelli-numbering/1" followed by lines "P<k> <tope>".
FaceNumbering parse_numbering(std::string_view text);
FaceNumbering load_numbering(const std::string& path);
std::string print_numbering(const FaceNumbering& n, int lines);

std::string read_text_file(const std::string& path);

}  // namespace campedelli
