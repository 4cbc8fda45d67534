// Exact factor languages of primitive constant-length substitutions, and
// repetition checks on fixed-point prefixes.

#ifndef APWORD_LANGUAGE_HPP_
#define APWORD_LANGUAGE_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <span>

#include "apword/substitution.hpp"
#include "apword/word_source.hpp"

namespace apword {

  inline constexpr std::size_t default_factor_cap = std::size_t{1} << 14;

  //! All factors of one length, in lexicographic order.
  struct FactorSet {
    std::size_t    length = 0;
    std::set<Word> words;

    [[nodiscard]] bool contains(std::span<Letter const> w) const {
      return w.size() == length && words.count(Word(w.begin(), w.end())) != 0;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return words.size();
    }
  };

  //! Length-\p length factors of the language of \p s, computed exactly: the
  //! two-letter factors are closed under "two-letter factors of s(xy)", and
  //! longer factors are cut out of images of shorter ones. Requires a
  //! primitive substitution, for which the language does not depend on
  //! \p seed.
  FactorSet factors(Substitution const& s,
                    Letter              seed,
                    std::size_t         length,
                    std::size_t         cap = default_factor_cap);

  //! Membership of \p w in the language.
  bool contains(Substitution const&     s,
                Letter                  seed,
                std::span<Letter const> w,
                std::size_t             cap = default_factor_cap);

  //! Largest k such that a^k is a factor for some letter a.
  std::size_t max_run(Substitution const& s,
                      Letter              seed,
                      std::size_t         cap = default_factor_cap);

  //! x^e for integer e >= 2, or the overlap x x x_0 when \c overlap is set.
  struct Repetition {
    std::size_t exponent = 2;
    bool        overlap  = false;
  };

  struct PowerViolation {
    std::uint64_t start  = 0;
    std::uint64_t period = 0;
    //! Letters covered by the repetition: e * period, or 2 * period + 1.
    std::uint64_t span = 0;
  };

  struct PowerFreeResult {
    bool                          free = true;
    std::optional<PowerViolation> first;
  };

  //! Looks for the repetition in the first \p N letters of \p ws, trying all
  //! periods that fit. Reports the violation with the smallest period, and the
  //! smallest start for that period.
  PowerFreeResult power_free_check(WordSource const& ws,
                                   Repetition        rep,
                                   std::uint64_t     N,
                                   unsigned          threads = 0);

  //! Same check on an explicit word.
  PowerFreeResult power_free_check(std::span<Letter const> word,
                                   Repetition              rep,
                                   unsigned                threads = 0);

}  // namespace apword

#endif  // APWORD_LANGUAGE_HPP_
