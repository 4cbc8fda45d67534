#include <doctest.h>

#include <random>

#include "apword/word_source.hpp"
#include "oracles.hpp"

using namespace apword;

TEST_CASE("thue-morse prefix") {
  WordSource const ws(make_tm(), 0);
  CHECK(to_digits(prefix(ws, 16)) == "0110100110010110");
  CHECK(to_digits(prefix(ws, 16)) == oracle::fixed_point(oracle::gtm_rules(1, 1), '0', 16));
}

TEST_CASE("generalised prefixes") {
  CHECK(to_digits(prefix(WordSource(make_gtm(2, 1), 0), 9)) == "001001110");
  CHECK(to_digits(prefix(WordSource(make_gtm(1, 2), 0), 9)) == "011100100");
}

TEST_CASE("letter_at agrees with the oracles") {
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    for (char seed : {'0', '1'}) {
      std::string const  v = oracle::fixed_point(oracle::gtm_rules(p, q), seed, 50000);
      WordSource const   ws(make_gtm(p, q), static_cast<Letter>(seed - '0'));
      Word const         pre = prefix(ws, v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        REQUIRE(ws.letter_at(i) == v[i] - '0');
        REQUIRE(pre[i] == v[i] - '0');
        REQUIRE(gtm_letter(p, q, i, static_cast<Letter>(seed - '0')) == v[i] - '0');
      }
    }
  }
}

TEST_CASE("tm_letter is the popcount parity") {
  std::mt19937_64 rng(11);
  WordSource const ws(make_tm(), 0);
  for (int t = 0; t < 2000; ++t) {
    std::uint64_t const i = rng() & max_index;
    CHECK(tm_letter(i) == oracle::tm_char(i) - '0');
    CHECK(ws.letter_at(i) == tm_letter(i));
  }
}

TEST_CASE("stream matches letter_at from any start") {
  WordSource const ws(make_gtm(2, 3), 0);
  for (std::uint64_t start : {0ull, 1ull, 4095ull, 123457ull}) {
    PrefixStream st(ws, start);
    Word         buf(777);
    st.read(buf);
    st.read(buf);
    CHECK(st.position() == start + 1554);
    for (std::size_t j = 0; j < buf.size(); ++j) {
      REQUIRE(buf[j] == ws.letter_at(start + 777 + j));
    }
  }
}

TEST_CASE("three-letter fixed point") {
  Substitution const cyclic(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  WordSource const   ws(cyclic, 0);
  oracle::Rules const r{{'0', "012"}, {'1', "120"}, {'2', "201"}};
  std::string const   v = oracle::fixed_point(r, '0', 3000);
  CHECK(to_digits(prefix(ws, 3000)) == v);
}

TEST_CASE("invalid sources") {
  CHECK_THROWS_AS(WordSource(make_tm(), 2), Error);
  // s(0) = 10 does not start with 0.
  CHECK_THROWS_AS(WordSource(Substitution(2, {{1, 0}, {0, 1}}), 0), Error);
  CHECK_THROWS_AS(WordSource(Substitution(2, {{0}, {1}}), 0), Error);
}
