#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fedlogic/kernel.hpp"
#include "fedlogic/lattice.hpp"

namespace fedlogic {

enum class EntryKind { script, assumption_script, fixture };

const char* entry_kind_name(EntryKind k);

// An object with the value it must take in each listed M_k. With
// check == "valid" the object may be open and must be valid with that value.
struct Fixture {
  Object object;
  std::vector<unsigned> ks;
  DomainValue expected;
  bool validity = false;
};

struct CorpusEntry {
  std::string name;
  EntryKind kind = EntryKind::script;
  Mode mode = Mode::extended;
  std::string path;         // relative to the corpus directory
  std::string formal_path;  // elaborated companion of an assumption script
  std::string note;
  bool reconstructed = false;
  std::string text;         // raw file contents
  std::string formal_text;
  std::optional<Fixture> fixture;
};

class Corpus {
 public:
  // Reads manifest.json; a directory without one is an empty corpus.
  static Corpus load(const std::string& dir);

  const std::string& dir() const { return dir_; }
  const std::vector<CorpusEntry>& entries() const { return entries_; }
  const CorpusEntry& get_entry(const std::string& name) const;  // throws Error
  // Standard lemmas plus every script entry, in manifest order.
  const LemmaRegistry& registry() const { return registry_; }

 private:
  std::string dir_;
  std::vector<CorpusEntry> entries_;
  LemmaRegistry registry_;
};

std::string default_corpus_dir();

struct EntryStatus {
  std::string name;
  EntryKind kind;
  bool ok = false;
  std::string message;
  std::optional<Object> theorem;
};

struct CorpusReport {
  std::vector<EntryStatus> entries;
  bool ok() const;
  std::size_t failures() const;
};

CorpusReport verify_all(const Corpus& c);

// Theorems of all script entries that check, for the soundness sweep.
std::vector<std::pair<std::string, Object>> corpus_theorems(const Corpus& c);

}  // namespace fedlogic
