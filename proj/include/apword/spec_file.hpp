// Substitution rules from JSON files:
//
//   {"alphabet": ["a", "b", "c"],
//    "rules": {"a": "abc", "b": "bca", "c": "cab"},
//    "seed": "a"}
//
// Letter names are single characters, mapped to 0, 1, ... in declaration
// order. "seed" is optional.

#ifndef APWORD_SPEC_FILE_HPP_
#define APWORD_SPEC_FILE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "apword/substitution.hpp"

namespace apword {

  struct SubstitutionSpec {
    //! Letter names in index order.
    std::vector<char>     names;
    Substitution          rule;
    std::optional<Letter> seed;

    //! Index of a letter name; throws Error for unknown names.
    [[nodiscard]] Letter letter(char name) const;
    //! Word spelled with the letter names.
    [[nodiscard]] std::string spell(std::span<Letter const> w) const;
    //! Inverse of spell().
    [[nodiscard]] Word parse(std::string const& text) const;
  };

  SubstitutionSpec parse_spec(std::string const& json_text);
  SubstitutionSpec load_spec_file(std::string const& path);

  //! The validated rule of a spec file.
  Substitution load_spec(std::string const& path);

  //! "tm", "pq:P,Q" or "spec:FILE". Built-in rules use names '0' and '1'.
  SubstitutionSpec resolve_subst(std::string const& text);

}  // namespace apword

#endif  // APWORD_SPEC_FILE_HPP_
