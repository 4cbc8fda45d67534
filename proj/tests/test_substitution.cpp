#include <doctest.h>

#include <random>

#include "apword/substitution.hpp"
#include "oracles.hpp"

using namespace apword;

namespace {

  std::string str(Word const& w) {
    return to_digits(w);
  }

}  // namespace

TEST_CASE("thue-morse rule") {
  Substitution const tm = make_tm();
  CHECK(tm.alphabet_size() == 2);
  CHECK(tm.length() == 2);
  CHECK(str(tm.image(0)) == "01");
  CHECK(str(tm.image(1)) == "10");
  CHECK(tm == make_gtm(1, 1));
}

TEST_CASE("generalised images") {
  CHECK(str(make_gtm(2, 1).image(0)) == "001");
  CHECK(str(make_gtm(2, 1).image(1)) == "110");
  CHECK(str(make_gtm(1, 3).image(0)) == "0111");
  CHECK_THROWS_AS(make_gtm(0, 2), Error);
}

TEST_CASE("iterate against string substitution") {
  CHECK(str(iterate(make_tm(), 0, 3)) == "01101001");
  CHECK(str(iterate(make_gtm(1, 2), 0, 2)) == "011100100");
  CHECK(str(iterate(make_tm(), 1, 0)) == "1");
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    for (int n = 0; n <= 4; ++n) {
      for (char a : {'0', '1'}) {
        CHECK(str(iterate(make_gtm(p, q), static_cast<Letter>(a - '0'), n))
              == oracle::iterate(oracle::gtm_rules(p, q), a, n));
      }
    }
  }
}

TEST_CASE("iterate cap") {
  CHECK_THROWS_AS(iterate(make_tm(), 0, 10, 1000), Error);
  CHECK(iterate(make_tm(), 0, 10, 1024).size() == 1024);
}

TEST_CASE("recursion s^{n+1}(a) = s^n(a) bar(s^n(a)) for thue-morse") {
  Substitution const tm = make_tm();
  for (std::size_t n = 0; n <= 8; ++n) {
    for (Letter a = 0; a < 2; ++a) {
      Word w = iterate(tm, a, n);
      Word b = bar(w);
      w.insert(w.end(), b.begin(), b.end());
      CHECK(iterate(tm, a, n + 1) == w);
    }
  }
}

TEST_CASE("bar-swap rules commute with the complement") {
  std::mt19937 rng(7);
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 1}, {3, 2}}) {
    Substitution const s = make_gtm(p, q);
    CHECK(has_bar_swap(s));
    for (int t = 0; t < 20; ++t) {
      Word w(1 + rng() % 12);
      for (auto& x : w) {
        x = static_cast<Letter>(rng() % 2);
      }
      CHECK(apword::apply(s, bar(w)) == bar(apword::apply(s, w)));
    }
  }
}

TEST_CASE("classification") {
  CHECK(is_bijective(make_tm()));
  CHECK(is_primitive(make_tm()));
  for (auto [p, q] : {std::pair{1, 2}, {2, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    CHECK(is_bijective(make_gtm(p, q)));
    CHECK(is_primitive(make_gtm(p, q)));
  }
  Substitution const constant(2, {{0, 0}, {1, 1}});
  CHECK(!is_primitive(constant));
  CHECK(is_bijective(constant));
  Substitution const fib_like(2, {{0, 1}, {0, 0}});
  CHECK(!is_bijective(fib_like));
  CHECK(is_primitive(fib_like));
  CHECK(!has_bar_swap(fib_like));
  Substitution const cyclic(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(is_bijective(cyclic));
  CHECK(!has_bar_swap(cyclic));
}

TEST_CASE("validation") {
  CHECK_THROWS_WITH_AS(Substitution(0, {}), "empty alphabet", Error);
  CHECK_THROWS_WITH_AS(Substitution(2, {{0, 1}, {1, 0, 0}}), "unequal image lengths", Error);
  CHECK_THROWS_WITH_AS(Substitution(2, {{0, 2}, {1, 0}}), "unknown letter in an image",
                       Error);
  CHECK_THROWS_AS((void)make_tm().image(2), Error);
  CHECK_THROWS_AS(bar(Word{0, 2}), Error);
}

TEST_CASE("digits round trip") {
  CHECK(str(word_from_digits("0110")) == "0110");
  CHECK(word_from_digits("a").at(0) == 10);
  CHECK_THROWS_AS(word_from_digits("0x"), Error);
}

TEST_CASE("checked powers") {
  CHECK(checked_pow(2, 10) == 1024);
  CHECK(checked_pow(6, 0) == 1);
  CHECK(checked_pow(2, 62) == std::uint64_t{1} << 62);
  CHECK_THROWS_AS(checked_pow(2, 64), Error);
}
