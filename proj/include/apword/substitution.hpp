// Constant-length substitutions on small dense alphabets.

#ifndef APWORD_SUBSTITUTION_HPP_
#define APWORD_SUBSTITUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apword {

  //! Error raised for violated preconditions and malformed inputs.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A letter is a dense index into the alphabet; names only exist at the
  //! I/O boundary.
  using Letter = std::uint8_t;
  using Word   = std::vector<Letter>;

  //! Alphabets are kept at 16 letters or fewer so words pack into nibbles.
  inline constexpr std::size_t max_alphabet_size = 16;

  //! Default cap on the number of letters iterate() will materialise.
  inline constexpr std::uint64_t default_iterate_cap = std::uint64_t{1} << 28;

  //! A constant-length substitution: every letter maps to a word of the same
  //! length Q. Immutable after construction.
  class Substitution {
   public:
    //! Throws Error unless all images have the same non-zero length and only
    //! contain letters below \p alphabet_size.
    Substitution(std::size_t alphabet_size, std::vector<Word> images);

    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _images.size();
    }
    //! The common image length Q.
    [[nodiscard]] std::size_t length() const noexcept {
      return _length;
    }
    [[nodiscard]] Word const& image(Letter a) const;
    [[nodiscard]] std::vector<Word> const& images() const noexcept {
      return _images;
    }
    //! Image letter at column \p j without bounds checks.
    [[nodiscard]] Letter at(Letter a, std::size_t j) const noexcept {
      return _images[a][j];
    }

    friend bool operator==(Substitution const&, Substitution const&)
        = default;

   private:
    std::size_t       _length;
    std::vector<Word> _images;
  };

  //! Thue-Morse: 0 -> 01, 1 -> 10.
  Substitution make_tm();

  //! Generalised Thue-Morse: 0 -> 0^p 1^q, 1 -> 1^p 0^q.
  Substitution make_gtm(std::size_t p, std::size_t q);

  //! Concatenation of the images of the letters of \p w.
  Word apply(Substitution const& s, std::span<Letter const> w);

  //! s^n(a), refusing results longer than \p cap letters.
  Word iterate(Substitution const&    s,
               Letter                 a,
               std::size_t            n,
               std::uint64_t          cap = default_iterate_cap);

  //! Letterwise complement of a binary word.
  Word bar(std::span<Letter const> w);

  //! Every image column is a permutation of the alphabet.
  bool is_bijective(Substitution const& s);

  //! Some power of the incidence matrix (at most sigma^2) is positive.
  bool is_primitive(Substitution const& s);

  //! Binary rule commuting with the complement: s(1) = bar(s(0)).
  bool has_bar_swap(Substitution const& s);

  //! Parses a word over the digit alphabet "01..." (e.g. "0110").
  Word word_from_digits(std::string const& text);
  std::string to_digits(std::span<Letter const> w);

  //! Q^n, throwing Error when the result does not fit into 63 bits.
  std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent);

}  // namespace apword

#endif  // APWORD_SUBSTITUTION_HPP_
