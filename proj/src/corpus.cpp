#include "fedlogic/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fedlogic/syntax.hpp"

namespace fedlogic {

namespace fs = std::filesystem;

const char* entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::script: return "script";
    case EntryKind::assumption_script: return "assumption-script";
    case EntryKind::fixture: return "fixture";
  }
  return "?";
}

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EntryKind kind_from(const std::string& s) {
  if (s == "script") return EntryKind::script;
  if (s == "assumption-script") return EntryKind::assumption_script;
  if (s == "fixture") return EntryKind::fixture;
  throw Error("manifest: unknown entry kind '" + s + "'");
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    auto c = line.find("--");
    if (c != std::string::npos) line = line.substr(0, c);
    out += line + "\n";
  }
  return out;
}

// Theorem of a script or assumption script, or an Error.
std::pair<Object, ProofScript> prove(const CorpusEntry& e, const LemmaRegistry& reg) {
  ProofScript s = parse_script(e.text, e.mode);
  if (e.kind == EntryKind::script) {
    Object t = check_script(s, reg, e.mode);
    return {t, s};
  }
  check_assumption_discipline(s, reg, e.mode);
  ProofScript formal = elaborate(s, reg, e.mode);
  return {formal.theorem(), formal};
}

}  // namespace

Corpus Corpus::load(const std::string& dir) {
  Corpus c;
  c.dir_ = dir;
  c.registry_ = standard_lemmas();
  fs::path manifest = fs::path(dir) / "manifest.json";
  if (!fs::exists(manifest)) {
    if (!fs::is_directory(dir)) throw Error("corpus directory " + dir + " does not exist");
    return c;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(manifest));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("manifest: ") + e.what());
  }
  for (const auto& item : j.at("entries")) {
    CorpusEntry e;
    e.name = item.at("name").get<std::string>();
    e.kind = kind_from(item.at("kind").get<std::string>());
    e.path = item.at("path").get<std::string>();
    e.note = item.value("note", "");
    e.reconstructed = item.value("reconstructed", false);
    if (item.value("mode", "extended") == "classical") e.mode = Mode::classical;
    e.text = slurp(fs::path(dir) / e.path);
    if (item.contains("formal")) {
      e.formal_path = item.at("formal").get<std::string>();
      e.formal_text = slurp(fs::path(dir) / e.formal_path);
    }
    if (e.kind == EntryKind::fixture) {
      Fixture f;
      f.object = parse(strip_comments(e.text), e.mode);
      f.ks = item.at("ks").get<std::vector<unsigned>>();
      auto v = value_from_string(item.at("expected").get<std::string>());
      if (!v) throw Error("manifest: bad expected value for " + e.name);
      f.expected = *v;
      f.validity = item.value("check", "evaluate") == "valid";
      e.fixture = f;
    } else {
      // later entries may cite this one
      try {
        auto [t, s] = prove(e, c.registry_);
        c.registry_.add({e.name, t, s});
      } catch (const Error&) {
        // reported by verify_all
      }
    }
    c.entries_.push_back(std::move(e));
  }
  return c;
}

const CorpusEntry& Corpus::get_entry(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw Error("unknown corpus entry '" + name + "'");
}

std::string default_corpus_dir() { return FEDLOGIC_CORPUS_DIR; }

bool CorpusReport::ok() const { return failures() == 0; }

std::size_t CorpusReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (!e.ok) ++n;
  return n;
}

CorpusReport verify_all(const Corpus& c) {
  CorpusReport r;
  for (const auto& e : c.entries()) {
    EntryStatus st{e.name, e.kind, false, "", std::nullopt};
    try {
      if (e.kind == EntryKind::fixture) {
        const Fixture& f = *e.fixture;
        std::string bad;
        for (unsigned k : f.ks) {
          if (f.validity) {
            auto cl = classify(f.object, k, e.mode);
            if (!cl.valid || *cl.valid != f.expected)
              bad += " k=" + std::to_string(k) + " not valid " + to_string(f.expected);
          } else {
            DomainValue v = evaluate(f.object, k, e.mode);
            if (v != f.expected) bad += " k=" + std::to_string(k) + " gives " + to_string(v);
          }
        }
        st.ok = bad.empty();
        st.message = st.ok ? "value " + to_string(f.expected) : "expected " + to_string(f.expected) + ":" + bad;
      } else {
        // cite only entries registered before this one
        LemmaRegistry reg = standard_lemmas();
        for (const auto& other : c.entries()) {
          if (other.name == e.name) break;
          if (const Lemma* l = c.registry().find(other.name)) reg.add(*l);
        }
        auto [t, s] = prove(e, reg);
        st.theorem = t;
        if (e.kind == EntryKind::assumption_script) {
          if (e.formal_text.empty()) throw Error("no elaborated companion file");
          ProofScript stored = parse_script(e.formal_text, e.mode);
          Object st_t = check_script(stored, reg, e.mode);
          if (st_t != t) throw Error("stored elaboration proves a different formula");
          if (stored.has_assumptions()) throw Error("stored elaboration uses assumptions");
        }
        st.ok = true;
        st.message = render(t, Style::sugar, e.mode);
      }
    } catch (const Error& ex) {
      st.ok = false;
      st.message = ex.what();
    }
    r.entries.push_back(std::move(st));
  }
  return r;
}

std::vector<std::pair<std::string, Object>> corpus_theorems(const Corpus& c) {
  std::vector<std::pair<std::string, Object>> out;
  for (const auto& e : c.entries())
    if (e.kind != EntryKind::fixture)
      if (const Lemma* l = c.registry().find(e.name)) out.emplace_back(e.name, l->theorem);
  return out;
}

}  // namespace fedlogic
