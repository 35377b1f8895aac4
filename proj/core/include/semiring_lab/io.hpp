#pragma once

#include "semiring_lab/semimodule.hpp"

namespace semiring_lab {

/// A named collection of validated structures. Semimodules resolve
/// their base semiring by name within the same corpus.
struct Corpus {
  std::vector<SemiringPtr> semirings;
  std::vector<SemimodulePtr> modules;

  SemiringPtr find_semiring(const std::string& name) const;
  SemimodulePtr find_module(const std::string& name) const;
};

/// Parses one or more structures from text. Semiring blocks:
///   semiring <name> / order <n> / one <i> / add-table / mul-table / end
/// Semimodule blocks:
///   semimodule <name> over <base> / order <m> / add-table /
///   action-table / end
/// '#' starts a comment; tables are whitespace-separated indices, one
/// row per line. Bases are resolved against semiring blocks anywhere
/// in the same text first, then against `context` when given.
Corpus parse_structures(const std::string& text, const Corpus* context = nullptr);

std::string print_semiring(const FiniteSemiring& s);
std::string print_semimodule(const FiniteSemimodule& m);

/// Loads every regular file in the directory in sorted filename order.
/// Two passes: all semiring blocks first, then all semimodule blocks,
/// so bases may live in any file.
Corpus load_corpus_dir(const std::string& dir);

/// The curated built-in corpus: semirings bool2, chain3, sat3, z3, z4,
/// z6; every semiring acting on itself; every ideal of every semiring
/// as a standalone module; bool2.sq (pairs, componentwise) and
/// z6.mod3 (mod-3 quotient-style tables).
const Corpus& built_in_corpus();

}  // namespace semiring_lab
