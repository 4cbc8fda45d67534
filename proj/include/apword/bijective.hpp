// Checks for bijective constant-length substitutions: diagonal progressions
// in binary superwords, and the sets C_{n,a} of positions t where
// t, t+n, ..., t+kn all carry the letter a.
//
// Positive measure of C_{n,a} is approximated by a positive count in a
// finite prefix, which is sound for a linearly repetitive fixed point once
// the prefix contains the relevant patch.

#ifndef APWORD_BIJECTIVE_HPP_
#define APWORD_BIJECTIVE_HPP_

#include <cstdint>
#include <optional>
#include <utility>

#include "apword/substitution.hpp"
#include "apword/word_source.hpp"

namespace apword {

  //! s^{2n}(a) carries a at m (Q^n + 1) for every 0 <= m < Q^n. Throws Error
  //! unless s is binary and bijective.
  bool diagonal_ap_check(Substitution const& s, Letter a, std::size_t n);

  struct FrequencyEstimate {
    std::uint64_t n = 0;
    Letter        a = 0;
    std::uint64_t k = 0;
    //! Positions t < N - kn with v[t] = v[t+n] = ... = v[t+kn] = a.
    std::uint64_t count = 0;
    std::uint64_t N     = 0;
    //! count / (N - kn).
    double frequency = 0.0;
  };

  //! Exact count over the prefix [0, N). Requires n >= 1 and N > kn.
  FrequencyEstimate cna_frequency(WordSource const& ws,
                                  std::uint64_t     n,
                                  Letter            a,
                                  std::uint64_t     k,
                                  std::uint64_t     N);

  //! Counts for every letter in one pass, indexed by letter.
  std::vector<FrequencyEstimate> cna_frequencies(WordSource const& ws,
                                                 std::uint64_t     n,
                                                 std::uint64_t     k,
                                                 std::uint64_t     N);

  //! No progression of difference d and length >= L inside [0, N).
  bool absence_check(WordSource const& ws,
                     std::uint64_t     d,
                     std::uint64_t     L,
                     std::uint64_t     N);

  //! Smallest n <= n_max, then smallest letter, with a positive count.
  //! Differences with N <= kn are skipped.
  std::optional<std::pair<std::uint64_t, Letter>> find_positive_cna(
      WordSource const& ws,
      std::uint64_t     k,
      std::uint64_t     n_max,
      std::uint64_t     N,
      unsigned          threads = 0);

  //! Every image of s^m contains every letter.
  bool images_contain_all_letters(Substitution const& s, std::size_t m);

}  // namespace apword

#endif  // APWORD_BIJECTIVE_HPP_
