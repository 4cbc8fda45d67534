// Random access and streaming generation of substitution fixed points.

#ifndef APWORD_WORD_SOURCE_HPP_
#define APWORD_WORD_SOURCE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "apword/substitution.hpp"

namespace apword {

  //! Largest supported index into a fixed point.
  inline constexpr std::uint64_t max_index = (std::uint64_t{1} << 63) - 1;

  //! The one-sided fixed point v = lim s^n(seed). Requires s(seed) to start
  //! with seed. Immutable; letter_at() may be called concurrently.
  class WordSource {
   public:
    WordSource(Substitution s, Letter seed);

    [[nodiscard]] Substitution const& substitution() const noexcept {
      return _subst;
    }
    [[nodiscard]] Letter seed() const noexcept {
      return _seed;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _subst.length();
    }

    //! v[i], walking the base-Q digits of i from the most significant one.
    [[nodiscard]] Letter letter_at(std::uint64_t i) const;

    //! s^k(a) for the internal chunk exponent k; prefix streaming copies
    //! these blocks.
    [[nodiscard]] std::span<Letter const> block(Letter a) const noexcept {
      return {_blocks.data() + a * _block_size, _block_size};
    }
    [[nodiscard]] std::size_t block_size() const noexcept {
      return _block_size;
    }

   private:
    Substitution _subst;
    Letter       _seed;
    std::size_t  _block_size;
    Word         _blocks;
  };

  WordSource make_source(Substitution s, Letter seed);

  //! Thue-Morse letter: parity of the number of ones in binary i.
  [[nodiscard]] inline Letter tm_letter(std::uint64_t i) noexcept {
    return static_cast<Letter>(__builtin_popcountll(i) & 1);
  }

  //! Letter i of the generalised Thue-Morse fixed point started at \p seed:
  //! the seed flipped once per base-(p+q) digit of i that is >= p.
  Letter gtm_letter(std::uint64_t p,
                    std::uint64_t q,
                    std::uint64_t i,
                    Letter        seed = 0);

  //! Sequential reader over a fixed point. Single consumer.
  class PrefixStream {
   public:
    explicit PrefixStream(WordSource const& ws, std::uint64_t start = 0);

    //! Fills \p out with the next out.size() letters.
    void read(std::span<Letter> out);

    [[nodiscard]] std::uint64_t position() const noexcept {
      return _pos;
    }

   private:
    WordSource const* _ws;
    std::uint64_t     _pos;
  };

  //! The first \p count letters of the fixed point.
  Word prefix(WordSource const& ws, std::uint64_t count);

}  // namespace apword

#endif  // APWORD_WORD_SOURCE_HPP_
