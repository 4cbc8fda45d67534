#include <doctest.h>

#include "apword/block.hpp"
#include "oracles.hpp"

using namespace apword;

namespace {

  std::vector<std::string> rows_of(Block const& b) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < b.side; ++i) {
      out.push_back(to_digits(b.row(i)));
    }
    return out;
  }

}  // namespace

TEST_CASE("thue-morse 8 x 8 block") {
  Block const b = block_iterate(make_tm(), 0, 3);
  CHECK(b.side == 8);
  std::vector<std::string> const expect{"01101001", "10010110", "10010110", "01101001",
                                        "10010110", "01101001", "01101001", "10010110"};
  CHECK(rows_of(b) == expect);
  CHECK(to_digits(diagonal(b, Diagonal::main)) == "00000000");
  CHECK(to_digits(diagonal(b, Diagonal::anti)) == "11111111");
}

TEST_CASE("generalised 9 x 9 block") {
  Block const b = block_iterate(make_gtm(2, 1), 0, 2);
  std::vector<std::string> const expect{"001001110", "001001110", "110110001",
                                        "001001110", "001001110", "110110001",
                                        "110110001", "110110001", "001001110"};
  CHECK(rows_of(b) == expect);
  CHECK(to_digits(b.column(2)) == "110110001");
}

TEST_CASE("both constructions agree with the direct definition") {
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    int const max_n = p + q == 2 ? 4 : 2;
    for (int n = 1; n <= max_n; ++n) {
      for (char a : {'0', '1'}) {
        auto const  expect = oracle::block(oracle::gtm_rules(p, q), a, n);
        Letter const la    = static_cast<Letter>(a - '0');
        CHECK(rows_of(block_iterate(make_gtm(p, q), la, n)) == expect);
        CHECK(rows_of(block_substitute(make_gtm(p, q), la, n)) == expect);
      }
    }
  }
}

TEST_CASE("lemma checks") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (Letter a = 0; a < 2; ++a) {
      BlockReport const r = check_block_lemmas(make_tm(), a, n);
      CHECK(r.ok());
      for (auto const& c : r.checks) {
        CHECK(c.status == CheckStatus::pass);
      }
    }
  }
  BlockReport const skewed = check_block_lemmas(make_gtm(2, 1), 0, 2);
  CHECK(skewed.ok());
  std::size_t skipped = 0;
  for (auto const& c : skewed.checks) {
    skipped += c.status == CheckStatus::skipped;
  }
  CHECK(skipped == 3);
}

TEST_CASE("anti diagonal alternates with n when p = q") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Block const  b    = block_iterate(make_gtm(2, 2), 1, n);
    Letter const want = (b.iterations % 2 == 0) ? 1 : 0;
    for (Letter x : diagonal(b, Diagonal::anti)) {
      CHECK(x == want);
    }
  }
}

TEST_CASE("reflection symmetry of rules") {
  CHECK(is_reflection_symmetric(make_tm()));
  CHECK(is_reflection_symmetric(make_gtm(3, 3)));
  CHECK(!is_reflection_symmetric(make_gtm(1, 2)));
}

TEST_CASE("rendering") {
  Block const b = block_iterate(make_tm(), 0, 1);
  CHECK(render(b, RenderFormat::ascii) == "#.\n.#\n");
  CHECK(render(b, RenderFormat::pbm) == "P1\n2 2\n1 0\n0 1\n");
}

TEST_CASE("block errors") {
  CHECK_THROWS_AS(block_iterate(Substitution(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}), 0, 1),
                  Error);
  CHECK_THROWS_AS(block_iterate(make_tm(), 0, 20, 1 << 20), Error);
  CHECK_THROWS_AS(check_block_lemmas(make_tm(), 0, 0), Error);
}
