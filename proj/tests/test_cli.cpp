#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "support.hpp"

using namespace campedelli;
using testing::fixture;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(CAMPEDELLI_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const char* name) { return fixture(name); }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

int count_containing(const std::string& text, const std::string& part) {
  std::istringstream in(text);
  int n = 0;
  for (std::string l; std::getline(in, l);) n += l.find(part) != std::string::npos;
  return n;
}

}  // namespace

TEST_CASE("file format round trip") {
  for (const char* name : {"chain_base.arr", "chain_final.arr", "premaximal.arr", "heptagon.arr", "mixed_type2.arr"}) {
    const std::string text = read_text_file(fx(name));
    const auto f = parse_arrangement(text);
    const std::string printed = print_arrangement(f);
    CHECK(print_arrangement(parse_arrangement(printed)) == printed);
  }
  const auto f = load_arrangement(fx("chain_final.arr"));
  CHECK(f.kind == FileKind::PurelyReal);
  CHECK(f.journal.size() == 7);
  CHECK(format_tope(parse_tope("++--++-"), 7) == "++--++-");
}

TEST_CASE("parse errors carry line and column") {
  auto code_and_text = [](const std::string& text) -> std::pair<Errc, std::string> {
    try {
      parse_arrangement(text);
    } catch (const Error& e) {
      return {e.code(), e.what()};
    }
    return {Errc::IdenticalLines, ""};
  };
  const auto [c1, w1] = code_and_text(read_text_file(fx("malformed.arr")));
  CHECK(c1 == Errc::ParseError);
  CHECK(w1.find("6:12") != std::string::npos);
  const auto [c2, w2] = code_and_text("campedelli/1\nkind purely_real\nline 100 1 0\n");
  CHECK(c2 == Errc::ParseError);
  CHECK(w2.find("3:") != std::string::npos);
  const auto [c3, w3] = code_and_text("campedelli/2\n");
  CHECK(c3 == Errc::ParseError);
  CHECK(w3.find("1:") != std::string::npos);
}

TEST_CASE("report of the chain base") {
  const auto r = cli("report " + fx("chain_base.arr") + " --numbering " + fx("chain_base.numbering"));
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "type (11,5,5,1,0)"));
  CHECK(has_line(r.out, "4 4 5 4 5 4 4 5"));
  CHECK(has_line(r.out, "3 5 3 5 3 6 3 3"));
  CHECK(has_line(r.out, "P1 (4_7,4_8',5_9,3_15',5_14,4_13')"));
  CHECK(has_line(r.out, "P2 (5_16,3_17',5_18,3_21',6_20,3_19')"));
  CHECK(has_line(r.out, "positive P1 P2"));
  CHECK(has_line(r.out, "profile ((4,4',5,3',5,4'),(5,3',5,3',6,3'))"));
  // The library and the CLI agree.
  const auto file = load_arrangement(fx("chain_base.arr"));
  const auto numbering = load_numbering(fx("chain_base.numbering"));
  const auto rep = build_report(base_arrangement(file), load_state(file), &numbering);
  CHECK(r.out == format_report(rep));
}

TEST_CASE("json output") {
  const auto r = cli("validate " + fx("zero_sum.arr") + " --format json");
  CHECK(r.exit_code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["violations"].size() == 1);
  CHECK(j["violations"][0]["point"] == "(1,0,0)");
  const auto c = nlohmann::json::parse(cli("count-classes " + fx("chain_base.arr") + " --format json").out);
  CHECK(c["classes"] == 120);
}

TEST_CASE("exit codes") {
  CHECK(cli("validate " + fx("chain_base.arr")).exit_code == 0);
  CHECK(cli("validate " + fx("zero_sum.arr")).exit_code == 2);
  const auto bad = cli("validate " + fx("malformed.arr"));
  CHECK(bad.exit_code == 3);
  CHECK(bad.out.find("6:12") != std::string::npos);
  CHECK(cli("classify-mixed " + fx("mixed_degenerate.arr")).exit_code == 4);
  CHECK(cli("no-such-command").exit_code == 3);
  CHECK(cli("validate /nonexistent/file.arr").exit_code != 0);
}

TEST_CASE("move journal reproduces the final fixture") {
  const auto dir = std::filesystem::temp_directory_path() / ("campedelli_journal_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const auto r = cli("move " + fx("chain_base.arr") + " P3 P4 P3 P5 P4 P3 P6 --numbering " + fx("chain_base.numbering") +
                     " --journal " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(count_containing(r.out, " good") == 7);
  CHECK(r.out.find("WARNING") == std::string::npos);
  CHECK(read_text_file((dir / "step_7.arr").string()) == read_text_file(fx("chain_final.arr")));
  const auto fin = cli("report " + (dir / "step_7.arr").string());
  CHECK(has_line(fin.out, "type (8,10,4,0,0)"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("equations") {
  const auto real = cli("emit-equations " + fx("chain_base.arr"));
  CHECK(real.exit_code == 0);
  CHECK(count_containing(real.out, "^2 =") == 7);
  CHECK(count_containing(real.out, "# l0") + count_containing(real.out, "# l1") == 7);
  CHECK(count_containing(real.out, "/(") == 4);
  const auto mixed = cli("emit-equations " + fx("mixed_type2.arr"));
  CHECK(mixed.exit_code == 0);
  CHECK(count_containing(mixed.out, "^2 =") == 7);
}

TEST_CASE("mixed classification and oracle check") {
  const auto r = cli("classify-mixed " + fx("mixed_type1.arr"));
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "type I"));
  CHECK(count_containing(r.out, "[oracle agrees]") == 4);
  CHECK(cli("oracle-check " + fx("premaximal.arr")).exit_code == 0);
}
