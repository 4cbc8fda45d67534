#include <doctest.h>

#include "apword/ap.hpp"
#include "oracles.hpp"

using namespace apword;

namespace {

  WordSource tm_source() {
    return WordSource(make_tm(), 0);
  }

  // 2^n + 4 for even n, 2^n for odd n.
  std::uint64_t olga(std::size_t n) {
    return (std::uint64_t{1} << n) + (n % 2 == 0 ? 4 : 0);
  }

}  // namespace

TEST_CASE("longest_ap agrees with the oracle") {
  std::string const v = oracle::fixed_point(oracle::gtm_rules(2, 1), '0', 30000);
  WordSource const  ws(make_gtm(2, 1), 0);
  for (std::uint64_t d : {1, 2, 3, 8, 10, 26, 28}) {
    Progression const p = longest_ap(ws, d, v.size());
    oracle::Ap const  o = oracle::longest_ap(v, d);
    CHECK(p.length == o.length);
    CHECK(p.start == o.start);
    CHECK(verify(ws, p));
  }
  CHECK_THROWS_AS(longest_ap(ws, 5, 5), Error);
  CHECK_THROWS_AS(longest_ap(ws, 0, 50), Error);
}

TEST_CASE("small thue-morse values") {
  CHECK(estimate_A(tm_source(), 1).a_lower == 2);
  CHECK(estimate_A(tm_source(), 3).a_lower == 8);
  CHECK(estimate_A(tm_source(), 5).a_lower == 6);
  CHECK(estimate_A(tm_source(), 7).a_lower == 8);
  CHECK(estimate_A(tm_source(), 15).a_lower == 20);
}

TEST_CASE("estimate_A is stable and matches the closed forms for thue-morse") {
  for (std::size_t n = 2; n <= 7; ++n) {
    ScanReport const minus = estimate_A(tm_source(), (std::uint64_t{1} << n) - 1);
    CHECK(minus.stable);
    CHECK(minus.a_lower == olga(n));
    CHECK(minus.a_lower == closed_form_A(Family{}, n, Kind::minus).value);
    CHECK(verify(tm_source(), minus.witness));
    ScanReport const plus = estimate_A(tm_source(), (std::uint64_t{1} << n) + 1);
    CHECK(plus.stable);
    CHECK(plus.a_lower == (std::uint64_t{1} << n) + 2);
  }
}

TEST_CASE("scan report fields") {
  ScanReport const r = estimate_A(tm_source(), 15);
  CHECK(r.d == 15);
  CHECK(r.witness.length == r.a_lower);
  CHECK(r.witness.difference == 15);
  CHECK(r.prefix_scanned >= 2 * auto_prefix(15));
  CHECK(r.per_letter.size() == 2);
  CHECK(std::max(r.per_letter[0].length, r.per_letter[1].length) == r.a_lower);
}

TEST_CASE("prefix cap makes scans unstable") {
  ScanOptions opts;
  opts.max_prefix = std::uint64_t{1} << 16;
  ScanReport const r = estimate_A(tm_source(), 255, opts);
  CHECK(!r.stable);
  CHECK(r.prefix_scanned <= opts.max_prefix);
}

TEST_CASE("auto prefix") {
  CHECK(auto_prefix(1) == 65536);
  CHECK(auto_prefix(255) == 32 * 255 * 263);
}

TEST_CASE("reduce_difference") {
  CHECK(reduce_difference(40, 2) == std::pair<std::uint64_t, std::size_t>{5, 3});
  CHECK(reduce_difference(7, 2) == std::pair<std::uint64_t, std::size_t>{7, 0});
  CHECK(reduce_difference(27, 3) == std::pair<std::uint64_t, std::size_t>{1, 3});
}

TEST_CASE("scan_range with and without reduction") {
  RangeOptions plain;
  plain.threads = 1;
  RangeOptions reduced = plain;
  reduced.reduce       = true;
  auto const a = scan_range(tm_source(), 24, plain);
  auto const b = scan_range(tm_source(), 24, reduced);
  REQUIRE(a.size() == 24);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].d == i + 1);
    CHECK(a[i].a_lower == b[i].a_lower);
    CHECK(verify(tm_source(), b[i].witness));
    CHECK(b[i].witness.difference == b[i].d);
  }
  CHECK(b[11].scanned_difference == 3);
}

TEST_CASE("family names") {
  CHECK(parse_family("tm") == Family{1, 1});
  CHECK(parse_family("pq:2,3") == Family{2, 3});
  CHECK(Family{2, 3}.name() == "pq:2,3");
  CHECK(Family{}.name() == "tm");
  CHECK_THROWS_AS(parse_family("pq:0,1"), Error);
  CHECK_THROWS_AS(parse_family("xyz"), Error);
  CHECK(parse_kind("minus") == Kind::minus);
  CHECK_THROWS_AS(parse_kind("times"), Error);
  CHECK(kind_difference(Family{2, 1}, 2, Kind::minus) == 8);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_A(Family{}, 4, Kind::minus).value == 20);
  CHECK(closed_form_A(Family{}, 5, Kind::minus).value == 32);
  CHECK(closed_form_A(Family{}, 3, Kind::plus).value == 10);
  CHECK(closed_form_A(Family{1, 2}, 2, Kind::plus).value == 11);
  CHECK(closed_form_A(Family{2, 1}, 2, Kind::plus).value == 11);
  CHECK(closed_form_A(Family{2, 3}, 2, Kind::plus).value == 28);
  CHECK(closed_form_A(Family{2, 2}, 2, Kind::plus).value == 18);
  CHECK(closed_form_A(Family{2, 2}, 2, Kind::minus).value == 20);
  CHECK(closed_form_A(Family{2, 2}, 3, Kind::minus).value == 64);
  ClosedForm const ub = closed_form_A(Family{2, 1}, 3, Kind::minus);
  CHECK(ub.upper_bound);
  CHECK(ub.value == 27);
  CHECK_THROWS_AS(closed_form_A(Family{2, 1}, 2, Kind::minus), Error);
  CHECK_THROWS_AS(closed_form_A(Family{}, 1, Kind::plus), Error);
}

TEST_CASE("the p != q bound does not reach n = 2") {
  // A_{2,1}(8) = 12 exceeds 3^2.
  ScanReport const r = estimate_A(WordSource(make_gtm(2, 1), 0), 8);
  CHECK(r.stable);
  CHECK(r.a_lower == 12);
}

TEST_CASE("witnesses") {
  Progression const w8 = witness_ap(make_tm(), 2, Kind::minus);
  CHECK(w8.length == 8);
  CHECK(w8.difference == 3);
  CHECK(witness_ap(make_tm(), 4, Kind::minus).length == 20);
  CHECK(witness_ap(make_tm(), 3, Kind::plus).length == 10);
  Progression const w = witness_ap(make_tm(), 12, Kind::plus);
  CHECK(w.length == (1u << 12) + 2);
  CHECK(verify(tm_source(), w));
  CHECK(witness_ap(make_gtm(2, 2), 3, Kind::minus).length == 64);
  CHECK(witness_ap(make_gtm(1, 3), 2, Kind::plus).length == 19);
  CHECK_THROWS_AS(witness_ap(make_gtm(2, 1), 3, Kind::minus), Error);
}

TEST_CASE("progression verification") {
  WordSource const  ws = tm_source();
  Progression const p  = Progression::verified(ws, 0, 3, 2, 0);
  CHECK(p.last() == 3);
  CHECK_THROWS_AS(Progression::verified(ws, 0, 1, 3, 0), Error);
  CHECK(!verify(ws, Progression{0, 1, 3, 0}));
  CHECK(to_string(p).find("3") != std::string::npos);
}

TEST_CASE("small-difference facts") {
  FactsReport const tm_facts = small_d_facts(Family{}, 40);
  CHECK(tm_facts.all_pass());
  CHECK(!tm_facts.checks.empty());
  FactsReport const g = small_d_facts(Family{1, 2}, 40);
  CHECK(g.all_pass());
}
