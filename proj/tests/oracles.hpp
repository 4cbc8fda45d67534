// Slow reference implementations used only by the tests. They work on plain
// strings of digit characters and share no code with the library.

#ifndef APWORD_TESTS_ORACLES_HPP_
#define APWORD_TESTS_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

  using Rules = std::map<char, std::string>;

  inline Rules gtm_rules(int p, int q) {
    return {{'0', std::string(p, '0') + std::string(q, '1')},
            {'1', std::string(p, '1') + std::string(q, '0')}};
  }

  inline std::string substitute(Rules const& r, std::string const& w) {
    std::string out;
    for (char c : w) {
      out += r.at(c);
    }
    return out;
  }

  inline std::string iterate(Rules const& r, char a, int n) {
    std::string w(1, a);
    for (int i = 0; i < n; ++i) {
      w = substitute(r, w);
    }
    return w;
  }

  //! At least \p count letters of the fixed point, by repeated substitution.
  inline std::string fixed_point(Rules const& r, char seed, std::size_t count) {
    std::string w(1, seed);
    while (w.size() < count) {
      w = substitute(r, w);
    }
    return w.substr(0, count);
  }

  inline char tm_char(std::uint64_t i) {
    int ones = 0;
    for (; i != 0; i >>= 1) {
      ones += static_cast<int>(i & 1);
    }
    return ones % 2 == 0 ? '0' : '1';
  }

  struct Ap {
    std::uint64_t start  = 0;
    std::uint64_t length = 0;
    char          letter = '0';
  };

  //! Longest progression of difference d in w, smallest start on ties.
  inline Ap longest_ap(std::string const& w, std::uint64_t d) {
    Ap best;
    for (std::uint64_t s = 0; s < w.size(); ++s) {
      std::uint64_t len = 1;
      while (s + len * d < w.size() && w[s + len * d] == w[s]) {
        ++len;
      }
      if (len > best.length) {
        best = {s, len, w[s]};
      }
    }
    return best;
  }

  inline std::set<std::string> factors(std::string const& w, std::size_t len) {
    std::set<std::string> out;
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      out.insert(w.substr(i, len));
    }
    return out;
  }

  //! Q^n x Q^n block: row i is s^n of letter i of s^n(a).
  inline std::vector<std::string> block(Rules const& r, char a, int n) {
    std::string const       top = iterate(r, a, n);
    std::vector<std::string> rows;
    for (char c : top) {
      rows.push_back(iterate(r, c, n));
    }
    return rows;
  }

  //! Does w contain x^e (or x x x_0 when overlap) for some nonempty x?
  inline bool has_repetition(std::string const& w, std::size_t e, bool overlap) {
    for (std::size_t P = 1; P <= w.size(); ++P) {
      std::size_t const span = overlap ? 2 * P + 1 : e * P;
      if (span > w.size()) {
        break;
      }
      for (std::size_t s = 0; s + span <= w.size(); ++s) {
        bool ok = true;
        for (std::size_t i = s; i + P < s + span && ok; ++i) {
          ok = w[i] == w[i + P];
        }
        if (ok) {
          return true;
        }
      }
    }
    return false;
  }

}  // namespace oracle

#endif  // APWORD_TESTS_ORACLES_HPP_
