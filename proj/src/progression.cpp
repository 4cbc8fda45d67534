#include "apword/progression.hpp"

namespace apword {

  Progression Progression::verified(WordSource const& ws,
                                    std::uint64_t     start,
                                    std::uint64_t     difference,
                                    std::uint64_t     length,
                                    Letter            letter) {
    Progression p{start, difference, length, letter};
    if (difference == 0) {
      throw Error("progression difference must be positive");
    }
    if (length > 0 && (max_index - start) / difference < length - 1) {
      throw Error("progression runs past the largest supported index");
    }
    for (std::uint64_t m = 0; m < length; ++m) {
      std::uint64_t const i = start + m * difference;
      if (ws.letter_at(i) != letter) {
        throw Error("progression member " + std::to_string(m) + " at index "
                    + std::to_string(i) + " does not carry letter "
                    + std::to_string(letter));
      }
    }
    return p;
  }

  bool verify(WordSource const& ws, Progression const& p) {
    try {
      (void) Progression::verified(ws, p.start, p.difference, p.length, p.letter);
      return true;
    } catch (Error const&) {
      return false;
    }
  }

  std::string to_string(Progression const& p) {
    return "{start=" + std::to_string(p.start) + ", d="
           + std::to_string(p.difference) + ", length="
           + std::to_string(p.length) + ", letter="
           + std::to_string(p.letter) + "}";
  }

}  // namespace apword
