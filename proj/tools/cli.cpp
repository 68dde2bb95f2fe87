#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fedlogic/corpus.hpp"
#include "fedlogic/kernel.hpp"
#include "fedlogic/lattice.hpp"
#include "fedlogic/syntax.hpp"

namespace fedlogic::cli {

namespace {

struct Usage : Error {
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Mode mode_of(const std::string& m) {
  if (m == "extended") return Mode::extended;
  if (m == "classical") return Mode::classical;
  throw Usage("unknown mode '" + m + "'");
}

std::string values(const Classification& c) {
  std::string s;
  for (const auto& [v, w] : c.attainable) s += (s.empty() ? "" : " ") + to_string(v);
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"fedlogic: objects, proof scripts and k-structure models"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string mode_name = "extended";
  bool report = false;
  app.add_option("--mode", mode_name, "extended or classical");
  app.add_flag("--report", report, "key: value output");

  std::string file = "-";
  unsigned k = 2;
  bool fill = false, triples = false;
  std::string corpus_dir = default_corpus_dir(), entry;

  auto* parse_cmd = app.add_subcommand("parse", "parse an object, print it in core form");
  parse_cmd->add_option("file", file, "object file or -");
  auto* fmt_cmd = app.add_subcommand("fmt", "parse an object, print it in sugared form");
  fmt_cmd->add_option("file", file, "object file or -");
  auto* check_cmd = app.add_subcommand("check", "check a proof script, print its theorem");
  check_cmd->add_option("file", file, "script file or -");
  check_cmd->add_flag("--fill", fill, "compute '?' formulas and print the script");
  check_cmd->add_option("--corpus", corpus_dir, "corpus whose entries may be cited as lemmas");
  auto* elab_cmd = app.add_subcommand("elaborate", "turn an assumption-style script into a formal one");
  elab_cmd->add_option("file", file, "script file or -");
  elab_cmd->add_option("--corpus", corpus_dir, "corpus whose entries may be cited as lemmas");
  auto* eval_cmd = app.add_subcommand("eval", "value of a closed object in M_k");
  auto* validate_cmd = app.add_subcommand("validate", "attainable values of an object in M_k");
  auto* cm_cmd = app.add_subcommand("countermodel", "search M_0..M_k for a non-O value");
  for (auto* c : {eval_cmd, validate_cmd, cm_cmd}) {
    c->add_option("file", file, "object file or -");
    c->add_option("--k", k, "structure size")->check(CLI::Range(0u, kMaxK));
  }
  auto* tables_cmd = app.add_subcommand("tables", "operation tables of M_k");
  tables_cmd->add_option("--k", k, "structure size")->check(CLI::Range(0u, 6u));
  tables_cmd->add_flag("--triples", triples, "one (a, b, v) line per cell");
  auto* corpus_cmd = app.add_subcommand("corpus", "verify every corpus entry");
  corpus_cmd->add_option("--dir", corpus_dir, "corpus directory");
  corpus_cmd->add_option("--entry", entry, "verify one entry");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Mode mode = mode_of(mode_name);
    if (parse_cmd->parsed() || fmt_cmd->parsed()) {
      Object o = parse(read_input(file, in), mode);
      if (fmt_cmd->parsed()) {
        out << render(o, Style::sugar, mode) << "\n";
        return 0;
      }
      if (!report) {
        out << render(o, Style::core, mode) << "\n";
        return 0;
      }
      StructureReport r = structural_query(o);
      out << "object: " << render(o, Style::core, mode) << "\n";
      out << "formula: " << (is_formula(o) ? "yes" : "no") << "\n";
      out << "closed: " << (r.closed ? "yes" : "no") << "\n";
      out << "free:";
      for (const auto& v : r.free_variables) out << " " << render(v.object(), Style::sugar);
      out << "\n";
      if (r.closed) out << "weight: " << weight(o) << "\n";
      out << "size: " << o.size() << "\n";
      return 0;
    }
    if (check_cmd->parsed() || elab_cmd->parsed()) {
      Corpus corpus = Corpus::load(corpus_dir);
      ProofScript s = parse_script(read_input(file, in), mode, fill);
      try {
        if (elab_cmd->parsed()) {
          out << render_script(elaborate(s, corpus.registry(), mode), mode);
          return 0;
        }
        Object t = s.has_assumptions()
                       ? check_assumption_discipline(s, corpus.registry(), mode).theorem
                       : check_script(s, corpus.registry(), mode);
        if (fill) out << render_script(s, mode);
        else if (report) out << "status: ok\nsteps: " << s.steps.size() << "\ntheorem: " << render(t, Style::sugar, mode) << "\n";
        else out << render(t, Style::sugar, mode) << "\n";
        return 0;
      } catch (const CheckError& e) {
        err << "check failed: " << e.what() << "\n";
        if (report) out << "status: failed\nstep: " << e.label() << "\n";
        return 1;
      }
    }
    if (eval_cmd->parsed()) {
      Object o = parse(read_input(file, in), mode);
      DomainValue v;
      try {
        v = evaluate(o, k, mode);
      } catch (const EvalError& e) {
        throw Usage(e.what());
      }
      if (report) out << "k: " << k << "\nvalue: " << to_string(v) << "\n";
      else out << to_string(v) << "\n";
      return 0;
    }
    if (validate_cmd->parsed()) {
      Object o = parse(read_input(file, in), mode);
      Classification c;
      try {
        c = classify(o, k, mode);
      } catch (const EvalError& e) {
        throw Usage(e.what());
      }
      if (report) {
        out << "k: " << k << "\nverdict: " << (c.valid ? "valid" : "not-valid") << "\n";
        if (c.valid) out << "value: " << to_string(*c.valid) << "\n";
        out << "attainable: " << values(c) << "\n";
        for (const auto& [v, w] : c.attainable) out << "witness " << to_string(v) << ": " << to_string(w) << "\n";
      } else if (c.valid) {
        out << "valid " << to_string(*c.valid) << " in M_" << k << "\n";
      } else {
        out << "not valid in M_" << k << "; values " << values(c) << "\n";
        for (const auto& [v, w] : c.attainable) out << "  " << to_string(v) << " at " << to_string(w) << "\n";
      }
      return 0;
    }
    if (cm_cmd->parsed()) {
      Object o = parse(read_input(file, in), mode);
      auto cm = countermodel(o, k, mode);
      if (!cm) {
        if (report) out << "k: " << k << "\nverdict: valid\n";
        else out << "valid up to k=" << k << "\n";
        return 0;
      }
      if (report)
        out << "k: " << cm->k << "\nverdict: countermodel\nvalue: " << to_string(cm->value)
            << "\nwitness: " << to_string(cm->assignment) << "\n";
      else
        out << "countermodel at k=" << cm->k << ": " << to_string(cm->assignment) << " gives "
            << to_string(cm->value) << "\n";
      return 1;
    }
    if (tables_cmd->parsed()) {
      out << render_tables(k, mode, triples);
      return 0;
    }
    if (corpus_cmd->parsed()) {
      Corpus c = Corpus::load(corpus_dir);
      CorpusReport r = verify_all(c);
      std::size_t shown = 0;
      for (const auto& e : r.entries) {
        if (!entry.empty() && e.name != entry) continue;
        ++shown;
        out << (e.ok ? "ok   " : "FAIL ") << e.name << " [" << entry_kind_name(e.kind) << "] "
            << e.message << "\n";
      }
      if (!entry.empty() && shown == 0) throw Usage("unknown corpus entry '" + entry + "'");
      out << r.entries.size() << " entries, " << r.failures() << " failures\n";
      return r.ok() ? 0 : 1;
    }
  } catch (const Usage& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fedlogic::cli
