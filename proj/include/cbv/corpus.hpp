#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbv/term.hpp"

namespace cbv {

struct CorpusEntry {
  std::string name;
  TermPtr term;
};

// Named combinator table. Built-in entries: I, K, F, B, Delta, Omega,
// Z, Kstar, ZB, Xi, A. Lookup is exact for single-letter names and
// case-insensitive otherwise, so `omega` resolves while a variable `a`
// stays a variable.
class Corpus {
 public:
  static Corpus builtin();

  // `name = term` per line, `#` comments, blank lines ignored.
  // Later definitions shadow earlier ones.
  void load_text(const std::string& text);

  std::optional<TermPtr> lookup(const std::string& name) const;
  const std::vector<CorpusEntry>& entries() const { return entries_; }

 private:
  void add(const std::string& name, const TermPtr& term);
  std::vector<CorpusEntry> entries_;
};

}  // namespace cbv
