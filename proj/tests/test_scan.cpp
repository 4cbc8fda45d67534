#include <doctest.h>

#include <random>

#include "apword/scan.hpp"
#include "apword/word_source.hpp"
#include "oracles.hpp"

using namespace apword;

namespace {

  Progression scan_all(Word const& w, std::uint64_t d, std::size_t sigma, std::size_t chunk) {
    ApScanner sc(d, sigma);
    for (std::size_t i = 0; i < w.size(); i += chunk) {
      std::size_t const n = std::min(chunk, w.size() - i);
      sc.feed({w.data() + i, n});
    }
    return sc.best();
  }

}  // namespace

TEST_CASE("scanner agrees with the brute-force search on random words") {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    std::size_t const sigma = 2 + rng() % 3;
    std::size_t const N     = 1 + rng() % 400;
    std::string       s(N, '0');
    Word              w(N);
    for (std::size_t i = 0; i < N; ++i) {
      w[i] = static_cast<Letter>(rng() % sigma);
      s[i] = static_cast<char>('0' + w[i]);
    }
    std::uint64_t const d = 1 + rng() % 40;
    Progression const   p = scan_all(w, d, sigma, 1 + rng() % 64);
    oracle::Ap const    o = oracle::longest_ap(s, d);
    CHECK(p.length == o.length);
    CHECK(p.start == o.start);
    CHECK(p.letter == o.letter - '0');
    CHECK(p.difference == d);
  }
}

TEST_CASE("per-letter bests") {
  Word const w = word_from_digits("0010110100");
  ApScanner  sc(2, 2);
  sc.feed(w);
  // Even positions read 0 1 1 0 0, odd positions 0 0 1 1 0.
  CHECK(sc.best(0).length == 2);
  CHECK(sc.best(1).length == 2);
  CHECK(sc.best(1).start == 2);
  CHECK(sc.best().start == 1);
  CHECK(sc.position() == 10);
}

TEST_CASE("letter absent") {
  ApScanner sc(3, 3);
  sc.feed(word_from_digits("0101"));
  CHECK(sc.best(2).length == 0);
}

TEST_CASE("scanner on the thue-morse prefix matches the oracle") {
  std::string const v  = oracle::fixed_point(oracle::gtm_rules(1, 1), '0', 1 << 14);
  Word const        w  = word_from_digits(v);
  for (std::uint64_t d : {1, 2, 3, 5, 7, 9, 15, 17, 31}) {
    Progression const p = scan_all(w, d, 2, 1000);
    oracle::Ap const  o = oracle::longest_ap(v, d);
    CHECK(p.length == o.length);
    CHECK(p.start == o.start);
  }
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(ApScanner(0, 2), Error);
  ApScanner sc(2, 2);
  CHECK_THROWS_AS((void)sc.best(5), Error);
}
