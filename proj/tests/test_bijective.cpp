#include <doctest.h>

#include "apword/ap.hpp"
#include "apword/bijective.hpp"
#include "oracles.hpp"

using namespace apword;

namespace {

  // Brute-force count of t < N - kn with v[t] = v[t+n] = ... = v[t+kn] = a.
  std::uint64_t naive_count(std::string const& v, std::uint64_t n, char a, std::uint64_t k) {
    std::uint64_t c = 0;
    for (std::uint64_t t = 0; t + k * n < v.size(); ++t) {
      bool ok = true;
      for (std::uint64_t j = 0; j <= k && ok; ++j) {
        ok = v[t + j * n] == a;
      }
      c += ok;
    }
    return c;
  }

}  // namespace

TEST_CASE("diagonal progressions") {
  CHECK(diagonal_ap_check(make_tm(), 0, 3));
  CHECK(diagonal_ap_check(Substitution(2, {{1, 0}, {0, 1}}), 1, 2));
  CHECK(diagonal_ap_check(make_gtm(2, 1), 0, 2));
  for (auto const& img : {"001", "010", "011", "100", "111"}) {
    Word const         z = word_from_digits(img);
    Substitution const s(2, {z, bar(z)});
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(diagonal_ap_check(s, 0, n));
      CHECK(diagonal_ap_check(s, 1, n));
    }
  }
  CHECK_THROWS_AS(diagonal_ap_check(Substitution(2, {{0, 1}, {0, 0}}), 0, 2), Error);
}

TEST_CASE("C_{n,a} counts against brute force") {
  std::string const v = oracle::fixed_point(oracle::gtm_rules(1, 1), '0', 5000);
  WordSource const  ws(make_tm(), 0);
  for (std::uint64_t n : {1, 2, 3, 5, 6, 12}) {
    for (std::uint64_t k : {1, 2, 3}) {
      for (Letter a = 0; a < 2; ++a) {
        FrequencyEstimate const e = cna_frequency(ws, n, a, k, v.size());
        CHECK(e.count == naive_count(v, n, static_cast<char>('0' + a), k));
        CHECK(e.frequency >= 0.0);
        CHECK(e.frequency <= 1.0);
      }
    }
  }
}

TEST_CASE("examples from the odd-difference argument") {
  WordSource const ws(make_tm(), 0);
  CHECK(cna_frequency(ws, 3, 0, 2, 100000).count > 0);
  CHECK(cna_frequency(ws, 1, 0, 2, 100000).count == 0);
  CHECK_THROWS_AS(cna_frequency(ws, 10, 0, 2, 20), Error);
}

TEST_CASE("searching for positive counts") {
  WordSource const tm(make_tm(), 0);
  auto const       found = find_positive_cna(tm, 2, 20, 100000, 1);
  REQUIRE(found);
  CHECK(found->first == 3);
  CHECK(found->second == 0);
  CHECK(find_positive_cna(WordSource(make_gtm(2, 1), 0), 3, 20, 100000));
  CHECK(!find_positive_cna(tm, 1000000, 20, 100000));
  // Threaded search picks the same smallest n.
  CHECK(find_positive_cna(tm, 2, 20, 100000, 4) == found);
}

TEST_CASE("absence is the complement of a long enough progression") {
  WordSource const tm(make_tm(), 0);
  CHECK(absence_check(tm, 67, 66, std::uint64_t{1} << 22));
  CHECK(absence_check(tm, 5, 7, std::uint64_t{1} << 20));
  CHECK(!absence_check(tm, 15, 20, std::uint64_t{1} << 22));
  for (std::uint64_t d : {3, 9, 17}) {
    std::uint64_t const len = longest_ap(tm, d, 1 << 16).length;
    CHECK(!absence_check(tm, d, len, 1 << 16));
    CHECK(absence_check(tm, d, len + 1, 1 << 16));
  }
  CHECK_THROWS_AS(absence_check(tm, 0, 3, 100), Error);
}

TEST_CASE("images containing all letters") {
  CHECK(images_contain_all_letters(make_tm(), 1));
  Substitution const cyclic(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(images_contain_all_letters(cyclic, 1));
  CHECK(!images_contain_all_letters(Substitution(2, {{0, 0}, {1, 1}}), 3));
}
