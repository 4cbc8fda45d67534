#include "apword/word_source.hpp"

#include <algorithm>
#include <array>

namespace apword {

  namespace {
    // Chunks of at least this many letters are copied per streaming step.
    constexpr std::size_t min_block = 4096;
  }  // namespace

  WordSource::WordSource(Substitution s, Letter seed)
      : _subst(std::move(s)), _seed(seed), _block_size(1), _blocks() {
    if (_subst.length() < 2) {
      throw Error("fixed points need image length at least 2");
    }
    if (seed >= _subst.alphabet_size()) {
      throw Error("seed is not a letter of the alphabet");
    }
    if (_subst.at(seed, 0) != seed) {
      throw Error("the image of the seed does not start with the seed");
    }
    std::size_t k = 0;
    while (_block_size < min_block) {
      _block_size *= _subst.length();
      ++k;
    }
    _blocks.reserve(_block_size * _subst.alphabet_size());
    for (std::size_t a = 0; a < _subst.alphabet_size(); ++a) {
      Word b = iterate(_subst, static_cast<Letter>(a), k);
      _blocks.insert(_blocks.end(), b.begin(), b.end());
    }
  }

  Letter WordSource::letter_at(std::uint64_t i) const {
    std::uint64_t const           q = _subst.length();
    std::array<std::uint8_t, 64>  digits;
    std::size_t                   n = 0;
    while (i != 0) {
      digits[n++] = static_cast<std::uint8_t>(i % q);
      i /= q;
    }
    Letter a = _seed;
    while (n != 0) {
      a = _subst.at(a, digits[--n]);
    }
    return a;
  }

  WordSource make_source(Substitution s, Letter seed) {
    return WordSource(std::move(s), seed);
  }

  Letter gtm_letter(std::uint64_t p,
                    std::uint64_t q,
                    std::uint64_t i,
                    Letter        seed) {
    if (p == 0 || q == 0) {
      throw Error("generalised Thue-Morse needs p >= 1 and q >= 1");
    }
    std::uint64_t const base  = p + q;
    unsigned            flips = seed;
    for (; i != 0; i /= base) {
      flips += (i % base) >= p;
    }
    return static_cast<Letter>(flips & 1);
  }

  PrefixStream::PrefixStream(WordSource const& ws, std::uint64_t start)
      : _ws(&ws), _pos(start) {}

  void PrefixStream::read(std::span<Letter> out) {
    std::size_t const bs   = _ws->block_size();
    std::size_t       done = 0;
    while (done < out.size()) {
      std::uint64_t const chunk  = _pos / bs;
      std::size_t const   offset = static_cast<std::size_t>(_pos % bs);
      auto const          src    = _ws->block(_ws->letter_at(chunk));
      std::size_t const   n      = std::min(bs - offset, out.size() - done);
      std::copy_n(src.begin() + offset, n, out.begin() + done);
      done += n;
      _pos += n;
    }
  }

  Word prefix(WordSource const& ws, std::uint64_t count) {
    Word         w(count);
    PrefixStream stream(ws);
    stream.read(w);
    return w;
  }

}  // namespace apword
