#ifndef APWORD_PROGRESSION_HPP_
#define APWORD_PROGRESSION_HPP_

#include <cstdint>
#include <string>

#include "apword/substitution.hpp"
#include "apword/word_source.hpp"

namespace apword {

  //! A monochromatic arithmetic progression start, start+d, ...,
  //! start+(length-1)d carrying \c letter.
  struct Progression {
    std::uint64_t start      = 0;
    std::uint64_t difference = 1;
    std::uint64_t length     = 0;
    Letter        letter     = 0;

    [[nodiscard]] std::uint64_t last() const noexcept {
      return length == 0 ? start : start + (length - 1) * difference;
    }

    //! Builds a progression and checks every member against \p ws; throws
    //! Error on the first mismatch.
    static Progression verified(WordSource const& ws,
                                std::uint64_t     start,
                                std::uint64_t     difference,
                                std::uint64_t     length,
                                Letter            letter);

    friend bool operator==(Progression const&, Progression const&) = default;
  };

  //! True iff every member of \p p carries p.letter in \p ws.
  bool verify(WordSource const& ws, Progression const& p);

  std::string to_string(Progression const& p);

}  // namespace apword

#endif  // APWORD_PROGRESSION_HPP_
