#pragma once

#include <optional>
#include <string>
#include <variant>

#include "autoseq/automaton.hpp"
#include "autoseq/blockmap.hpp"
#include "autoseq/definability.hpp"
#include "autoseq/ndsubst.hpp"
#include "autoseq/substitution.hpp"

namespace autoseq {

// Substitution file body: the rules plus an optional output coding
// (`output:` alphabet and `code a -> 1` lines).
struct SubstitutionFile {
  Substitution sub;
  std::optional<Coding> coding;
};

struct NdSubstitutionFile {
  NdSubstitution sub;
  int32_t seed = 0;
  std::optional<Coding> coding;
};

using SpecValue = std::variant<Automaton, SubstitutionFile, NdSubstitutionFile,
                               BlockMap, SemilinearSet>;

// Parses a kind-tagged, line-oriented file; '#' starts a comment. Throws
// ParseError (with line and column) on malformed text and ValidationError
// when a well-formed file breaks the owning type's rules.
SpecValue parse_spec(const std::string& text);

// Canonical text; printing is idempotent: parse_spec(print_spec(v)) prints
// to the same bytes.
std::string print_spec(const SpecValue& v);

// Two-dimensional window as text. "pgm": plain PGM, one gray level per
// letter index, maxval = alphabet size - 1, origin top left, axis 1 runs
// along the columns. "ascii": one symbol per cell in the same layout.
std::string render_window(const ArrayWindow& w, const std::string& format);

}  // namespace autoseq
