// Streaming longest-progression scanner.
//
// Letters are consumed in order. For difference d the scanner keeps one run
// counter per residue class modulo d: run[i mod d] is the number of equal
// letters at i, i-d, i-2d, ... ending at the current position. Memory is O(d)
// regardless of how many letters are fed.

#ifndef APWORD_SCAN_HPP_
#define APWORD_SCAN_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "apword/progression.hpp"
#include "apword/substitution.hpp"

namespace apword {

  class ApScanner {
   public:
    ApScanner(std::uint64_t difference, std::size_t alphabet_size);

    void feed(std::span<Letter const> letters);

    //! Number of letters consumed so far.
    [[nodiscard]] std::uint64_t position() const noexcept {
      return _pos;
    }
    [[nodiscard]] std::uint64_t difference() const noexcept {
      return _d;
    }

    //! Longest progression of letter \p a seen so far, earliest one on ties.
    //! Has length 0 when \p a has not occurred.
    [[nodiscard]] Progression best(Letter a) const;

    //! Longest progression over all letters; ties go to the smallest start.
    [[nodiscard]] Progression best() const;

   private:
    struct Record {
      std::uint32_t length = 0;
      std::uint64_t end    = 0;
    };

    void slow_update(std::size_t col, std::span<Letter const> seg, std::uint64_t pos);

    std::uint64_t              _d;
    std::vector<Letter>        _last;
    std::vector<std::uint32_t> _run;
    std::size_t                _col;
    std::uint64_t              _pos;
    std::vector<Record>        _best;
    std::uint32_t              _threshold;
  };

}  // namespace apword

#endif  // APWORD_SCAN_HPP_
