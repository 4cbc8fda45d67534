// Square blocks of the two-dimensional block substitution.
//
// For a binary bar-swap rule s of length Q, the block substitution sends a
// letter b to the Q x Q block whose row i is s(s(b)_i). Iterating it n times
// on a letter a gives a Q^n x Q^n block that, read row by row, is s^{2n}(a).

#ifndef APWORD_BLOCK_HPP_
#define APWORD_BLOCK_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apword/substitution.hpp"

namespace apword {

  struct Block {
    std::size_t side = 0;
    //! Row-major cells.
    Word         cells;
    Substitution generator;
    Letter       seed = 0;
    std::size_t  iterations = 0;

    [[nodiscard]] Letter at(std::size_t row, std::size_t col) const noexcept {
      return cells[row * side + col];
    }
    [[nodiscard]] std::span<Letter const> row(std::size_t i) const noexcept {
      return {cells.data() + i * side, side};
    }
    [[nodiscard]] Word column(std::size_t j) const;
  };

  //! The n-th block iterate of \p a. Built by reshaping s^{2n}(a); the
  //! cell-by-cell block substitution is used by check_block_lemmas() to
  //! confirm the two agree.
  Block block_iterate(Substitution const& s,
                      Letter              a,
                      std::size_t         n,
                      std::uint64_t       cap = default_iterate_cap);

  //! n-fold application of the block substitution, cell by cell.
  Block block_substitute(Substitution const& s,
                         Letter              a,
                         std::size_t         n,
                         std::uint64_t       cap = default_iterate_cap);

  enum class Diagonal { main, anti };

  //! Main diagonal read from the top-left corner, anti diagonal from the
  //! top-right corner.
  Word diagonal(Block const& b, Diagonal which);

  //! s(0) reversed is s(0) or s(1), as for theta_{p,p}.
  bool is_reflection_symmetric(Substitution const& s);

  enum class CheckStatus { pass, fail, skipped };

  std::string to_string(CheckStatus status);

  struct LemmaCheck {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
  };

  struct BlockReport {
    std::vector<LemmaCheck> checks;

    //! No check failed (skipped checks are fine).
    [[nodiscard]] bool ok() const noexcept;
  };

  //! Row read against s^{2n}(a); every row and column is s^n(0) or s^n(1);
  //! the main diagonal is constant a. For reflection-symmetric rules also:
  //! symmetry in both diagonals and an anti diagonal of a (n even) or bar a
  //! (n odd). Those three are skipped for other rules.
  BlockReport check_block_lemmas(Substitution const& s, Letter a, std::size_t n);

  enum class RenderFormat { ascii, pbm };

  //! ascii: '#' for letter 0, '.' for letter 1, one line per row.
  //! pbm: plain P1 bitmap, letter 0 is a black (1) pixel.
  std::string render(Block const& b, RenderFormat format);

}  // namespace apword

#endif  // APWORD_BLOCK_HPP_
