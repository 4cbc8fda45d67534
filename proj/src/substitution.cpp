#include "apword/substitution.hpp"

#include <algorithm>
#include <limits>

namespace apword {

  namespace {
    constexpr char digit_chars[] = "0123456789abcdef";
  }

  Substitution::Substitution(std::size_t alphabet_size, std::vector<Word> images)
      : _length(0), _images(std::move(images)) {
    if (alphabet_size == 0) {
      throw Error("empty alphabet");
    }
    if (alphabet_size > max_alphabet_size) {
      throw Error("alphabet larger than "
                  + std::to_string(max_alphabet_size) + " letters");
    }
    if (_images.size() != alphabet_size) {
      throw Error("expected " + std::to_string(alphabet_size)
                  + " images, got " + std::to_string(_images.size()));
    }
    _length = _images[0].size();
    if (_length == 0) {
      throw Error("empty image");
    }
    for (auto const& img : _images) {
      if (img.size() != _length) {
        throw Error("unequal image lengths");
      }
      for (Letter x : img) {
        if (x >= alphabet_size) {
          throw Error("unknown letter in an image");
        }
      }
    }
  }

  Word const& Substitution::image(Letter a) const {
    if (a >= _images.size()) {
      throw Error("invalid letter index " + std::to_string(a));
    }
    return _images[a];
  }

  Substitution make_tm() {
    return make_gtm(1, 1);
  }

  Substitution make_gtm(std::size_t p, std::size_t q) {
    if (p == 0 || q == 0) {
      throw Error("generalised Thue-Morse needs p >= 1 and q >= 1");
    }
    Word zero(p, 0), one(p, 1);
    zero.insert(zero.end(), q, 1);
    one.insert(one.end(), q, 0);
    return Substitution(2, {std::move(zero), std::move(one)});
  }

  Word apply(Substitution const& s, std::span<Letter const> w) {
    Word out;
    out.reserve(w.size() * s.length());
    for (Letter a : w) {
      auto const& img = s.image(a);
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  }

  Word iterate(Substitution const& s,
               Letter              a,
               std::size_t         n,
               std::uint64_t       cap) {
    if (a >= s.alphabet_size()) {
      throw Error("invalid letter index " + std::to_string(a));
    }
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (size > cap / s.length()) {
        throw Error("iterate: result exceeds the cap of " + std::to_string(cap)
                    + " letters");
      }
      size *= s.length();
    }
    Word w{a};
    for (std::size_t i = 0; i < n; ++i) {
      w = apword::apply(s, w);
    }
    return w;
  }

  Word bar(std::span<Letter const> w) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] > 1) {
        throw Error("bar is only defined on the binary alphabet");
      }
      out[i] = static_cast<Letter>(1 - w[i]);
    }
    return out;
  }

  bool is_bijective(Substitution const& s) {
    std::size_t const sigma = s.alphabet_size();
    std::vector<bool> seen(sigma);
    for (std::size_t j = 0; j < s.length(); ++j) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t a = 0; a < sigma; ++a) {
        Letter x = s.at(static_cast<Letter>(a), j);
        if (seen[x]) {
          return false;
        }
        seen[x] = true;
      }
    }
    return true;
  }

  bool is_primitive(Substitution const& s) {
    std::size_t const sigma = s.alphabet_size();
    // Boolean incidence matrix: m[a][b] iff b occurs in s(a).
    std::vector<std::vector<bool>> m(sigma, std::vector<bool>(sigma));
    for (std::size_t a = 0; a < sigma; ++a) {
      for (Letter b : s.image(static_cast<Letter>(a))) {
        m[a][b] = true;
      }
    }
    auto power = m;
    for (std::size_t k = 1; k <= sigma * sigma; ++k) {
      bool positive = true;
      for (auto const& row : power) {
        positive = positive
                   && std::all_of(row.begin(), row.end(), [](bool x) { return x; });
      }
      if (positive) {
        return true;
      }
      auto next = power;
      for (std::size_t a = 0; a < sigma; ++a) {
        for (std::size_t b = 0; b < sigma; ++b) {
          bool x = false;
          for (std::size_t c = 0; c < sigma && !x; ++c) {
            x = power[a][c] && m[c][b];
          }
          next[a][b] = x;
        }
      }
      power = std::move(next);
    }
    return false;
  }

  bool has_bar_swap(Substitution const& s) {
    return s.alphabet_size() == 2 && s.image(1) == bar(s.image(0));
  }

  Word word_from_digits(std::string const& text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
      auto const* p = std::find(std::begin(digit_chars),
                                std::end(digit_chars) - 1,
                                c);
      if (p == std::end(digit_chars) - 1) {
        throw Error(std::string("not a letter digit: '") + c + "'");
      }
      w.push_back(static_cast<Letter>(p - std::begin(digit_chars)));
    }
    return w;
  }

  std::string to_digits(std::span<Letter const> w) {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w) {
      out.push_back(digit_chars[a & 0xF]);
    }
    return out;
  }

  std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent) {
    constexpr std::uint64_t limit = std::numeric_limits<std::int64_t>::max();
    std::uint64_t           r     = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      if (base != 0 && r > limit / base) {
        throw Error("integer power overflows 63 bits");
      }
      r *= base;
    }
    return r;
  }

}  // namespace apword
