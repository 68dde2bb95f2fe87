#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "fedlogic/corpus.hpp"
#include "fedlogic/kernel.hpp"
#include "fedlogic/syntax.hpp"
#include "golden.hpp"

using namespace fedlogic;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string cf(const std::string& rel) { return default_corpus_dir() + "/" + rel; }

}  // namespace

TEST_CASE("cli check") {
  Run r = run({"check", cf("scripts/lemma-2.1.proof")});
  CHECK(r.code == 0);
  CHECK(r.out == "triv(a) :> (b :> a)\n");

  r = run({"--report", "check", cf("scripts/lemma-2.1.proof")});
  CHECK(r.code == 0);
  CHECK(r.out == "status: ok\nsteps: 23\ntheorem: triv(a) :> (b :> a)\n");

  // a script citing earlier corpus entries
  r = run({"check", cf("scripts/extensionality-concrete.proof")});
  CHECK(r.code == 0);
  CHECK(parse(r.out) == parse("(V :> #1) :> (({x | x in #1 & #2} :> {x | x in #1}) :> (#1 & #2 :> #1))"));

  // an assumption script is checked under the discipline
  r = run({"check", cf("scripts/k-formula.proof")});
  CHECK(r.code == 0);
  CHECK(r.out == "(c :> d) :> ((e :> f) :> (c :> d))\n");
}

TEST_CASE("cli check failures") {
  Run r = run({"check", "-"}, "1. a :> O ; A7\n");
  CHECK(r.code == 1);
  CHECK(r.err.find("step 1") != std::string::npos);
  r = run({"--report", "check", "-"}, "1. a :> a ; A7\n2. b :> b ; A7\n");
  CHECK(r.code == 1);
  CHECK(r.out.find("status: failed\nstep: 2") != std::string::npos);
  r = run({"check", "-"}, "1. a :> ; A7\n");
  CHECK(r.code == 2);
}

TEST_CASE("cli check --fill") {
  Run r = run({"check", "--fill", "-"}, "1. ? ; A8\n2. ? ; sub 1 a := O\n");
  CHECK(r.code == 0);
  CHECK(r.out == "1. a :> O ; A8\n2. triv(O) ; sub 1 a := O\n");
}

TEST_CASE("cli elaborate") {
  for (const char* name : {"class-monotone", "k-formula", "instantiation"}) {
    CAPTURE(name);
    Run r = run({"elaborate", cf(std::string("scripts/") + name + ".proof")});
    REQUIRE(r.code == 0);
    Corpus c = Corpus::load(default_corpus_dir());
    ProofScript s = parse_script(r.out);
    CHECK_FALSE(s.has_assumptions());
    CHECK(check_script(s, c.registry()) == c.registry().find(name)->theorem);
    // byte-identical on a second run
    CHECK(run({"elaborate", cf(std::string("scripts/") + name + ".proof")}).out == r.out);
  }
}

TEST_CASE("cli parse and fmt") {
  Run r = run({"fmt", cf("fixtures/russell-empty.obj")});
  CHECK(r.code == 0);
  CHECK(r.out == "{x | not(x in x)}\n");
  r = run({"parse", cf("fixtures/universe-k2.obj")});
  CHECK(r.code == 0);
  CHECK(r.out == "{a | O}\n");
  r = run({"--report", "parse", cf("fixtures/k-trivial-valid.obj")});
  CHECK(r.code == 0);
  CHECK(r.out == "object: ((O :> a) :> (b :> a))\nformula: yes\nclosed: no\nfree: a b\nsize: 11\n");
  // parse then fmt round trip
  Run core = run({"parse", cf("fixtures/russell-empty.obj")});
  CHECK(run({"fmt", "-"}, core.out).out == "{x | not(x in x)}\n");
  CHECK(run({"parse", "-"}, "a's'sa").code == 0);
  CHECK(run({"parse", "-"}, "O'sa").code == 2);
  CHECK(run({"parse", "-"}, "(a").code == 2);
}

TEST_CASE("cli eval") {
  Run r = run({"eval", "--k", "2", cf("fixtures/russell-empty.obj")});
  CHECK(r.code == 0);
  CHECK(r.out == "O\n");
  r = run({"--report", "eval", "--k", "3", cf("fixtures/universe-k3.obj")});
  CHECK(r.out == "k: 3\nvalue: 7\n");
  CHECK(run({"eval", "--k", "1", "-"}, "#3").code == 2);
  CHECK(run({"eval", "-"}, "a").code == 2);
  CHECK(run({"eval", "--k", "99", "-"}, "O").code == 2);
}

TEST_CASE("cli validate") {
  Run r = run({"validate", "--k", "1", cf("fixtures/k-trivial-valid.obj")});
  CHECK(r.code == 0);
  CHECK(r.out == "valid O in M_1\n");
  r = run({"--report", "validate", "--k", "1", "-"}, "a :> b");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "k: 1\nverdict: not-valid\nattainable: O _|_\n"
        "witness O: {a = O, b = O}\nwitness _|_: {a = O, b = 1}\n");
}

TEST_CASE("cli countermodel") {
  Run r = run({"countermodel", "--k", "3", cf("fixtures/k-trivial-valid.obj")});
  CHECK(r.code == 0);
  CHECK(r.out == "valid up to k=3\n");
  r = run({"countermodel", "--k", "3", cf("fixtures/curry-single-k3.obj")});
  CHECK(r.code == 1);
  r = run({"--report", "countermodel", "--k", "1", "-"}, "O :> a");
  CHECK(r.code == 1);
  CHECK(r.out == "k: 0\nverdict: countermodel\nvalue: _|_\nwitness: {a = _|_}\n");
  r = run({"countermodel", "--k", "0", "-"}, "_|_");
  CHECK(r.code == 1);
  CHECK(r.out == "countermodel at k=0: {} gives _|_\n");
}

TEST_CASE("cli tables") {
  Run r = run({"tables", "--k", "2"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  auto shown = golden::parse_tables(in);
  auto gold = golden::read_tables(std::string(FEDLOGIC_TEST_DIR) + "/golden/tables_k2.txt");
  std::vector<golden::Cell> fc;
  for (const auto& c : shown)
    if (c.op != "/\\") fc.push_back(c);
  REQUIRE(fc.size() == gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    CAPTURE(gold[i].op + " " + gold[i].row + " " + gold[i].col);
    CHECK(fc[i].op == gold[i].op);
    CHECK(fc[i].row == gold[i].row);
    CHECK(fc[i].col == gold[i].col);
    CHECK(fc[i].value == gold[i].value);
  }
  Run t = run({"tables", "--k", "2", "--triples"});
  CHECK(t.code == 0);
  CHECK(t.out.find("(1, 2, 3)") != std::string::npos);
  CHECK(t.out.find("(3, 1, O)") != std::string::npos);
  Run cl = run({"--mode", "classical", "tables", "--k", "1"});
  CHECK(cl.out.find("/\\") == std::string::npos);
}

TEST_CASE("cli corpus") {
  Run r = run({"corpus"});
  CHECK(r.code == 0);
  auto n = Corpus::load(default_corpus_dir()).entries().size();
  CHECK(r.out.find(std::to_string(n) + " entries, 0 failures\n") != std::string::npos);
  r = run({"corpus", "--entry", "lemma-2.1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ok   lemma-2.1 [script] triv(a) :> (b :> a)\n", 0) == 0);
  CHECK(run({"corpus", "--entry", "nope"}).code == 2);
  CHECK(run({"corpus", "--dir", "/nonexistent/fedlogic"}).code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--mode", "odd", "parse", "-"}, "O").code == 2);
  CHECK(run({"check", "/nonexistent/file.proof"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
