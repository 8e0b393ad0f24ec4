#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("regdet_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string("\"") + REGDET_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out)};
}

}  // namespace

TEST_CASE("parse subcommand") {
  const Run r = run("parse 'a(b|ε)*' --alphabet ab");
  CHECK(r.code == 0);
  CHECK(r.out == "expression: (a((b|ε)*))\nwidth: 2\nnullable: false\n");
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("parse 'a|' --alphabet ab").code == 2);
  CHECK(run("parse 'c' --alphabet ab").code == 2);
  CHECK(run("parse 'a' --alphabet 'a|'").code == 2);
  CHECK(run("nosuchcommand").code == 2);
  CHECK(run("landau 500").code == 2);
  CHECK(run("witness --cycles 3,9").code == 2);
  CHECK(run("witness").code == 2);
  CHECK(run("sweep 10 6").code == 2);
  CHECK(run("dfa --input /nonexistent/file.nfa").code == 2);
  CHECK(run("landau").code == 2);
}

TEST_CASE("budget exceeded exits with 3") {
  CHECK(run("dfa '(a((a((b|ε)a){1}a)*|(a((b|ε)a){3}a)*)b)*' --max-subsets 10").code == 3);
  CHECK(run("witness --cycles 3,5 --certify --max-subsets 10").code == 3);
}

TEST_CASE("nfa, dfa and minimize write automata and reports") {
  const fs::path nfa = scratch() / "a.nfa";
  CHECK(run("nfa 'a*' --alphabet a -o '" + nfa.string() + "'").code == 0);
  CHECK(read_file(nfa) == "nfa 2 a\n0 a 1\n1 a 1\ninitial 0\naccepting 0 1\n");

  const Run d = run("dfa --input '" + nfa.string() + "'");
  CHECK(d.code == 0);
  CHECK(d.out.starts_with("dfa 2 a\n"));

  const fs::path csv = scratch() / "report.csv";
  const Run m = run("minimize 'a*' --alphabet a --csv '" + csv.string() + "'");
  CHECK(m.code == 0);
  CHECK(m.out == "dfa 1 a\n0 a 0\ninitial 0\naccepting 0\n");
  CHECK(read_file(csv).find("\nregex,\"(a*)\",1,1,2,1,1,2,1,") != std::string::npos);

  const Run dot = run("minimize 'ab' --dot --csv '" + csv.string() + "'");
  CHECK(dot.code == 0);
  CHECK(dot.out.starts_with("digraph"));

  const fs::path min_file = scratch() / "m.dfa";
  CHECK(run("minimize 'ab|ab' -o '" + min_file.string() + "' --csv '" + csv.string() + "'").code == 0);
  const Run again = run("minimize --input '" + min_file.string() + "'");
  CHECK(again.code == 0);
  CHECK(again.out == read_file(min_file));
}

TEST_CASE("witness and landau") {
  const fs::path dir = scratch() / "w";
  const Run w = run("witness --budget 14 --certify --dot --out-dir '" + dir.string() + "'");
  CHECK(w.code == 0);
  CHECK(w.out.find("cycles: 3,5\n") != std::string::npos);
  CHECK(w.out.find("lower_bound: 180\n") != std::string::npos);
  CHECK(w.out.find("witness,\"3,5\",14,14,13,8,1,235,235,512,2607,") != std::string::npos);
  CHECK(fs::exists(dir / "witness.nfa"));
  CHECK(fs::exists(dir / "witness.dot"));
  CHECK(read_file(dir / "witness.regex") == "(a((a((b|ε)a){1}a)*|(a((b|ε)a){3}a)*)b)*\n");

  const Run l = run("landau 7");
  CHECK(l.code == 0);
  CHECK(l.out == "n,g,witness\n7,12,3 4\n");
}

TEST_CASE("sweep is reproducible") {
  const fs::path a = scratch() / "s1.csv";
  const fs::path b = scratch() / "s2.csv";
  CHECK(run("sweep --seed 3 6 12 --csv '" + a.string() + "'").code == 0);
  CHECK(run("sweep 6 12 --seed 3 --csv '" + b.string() + "'").code == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK_FALSE(read_file(a).empty());
}
