#include "apword/block.hpp"

#include <algorithm>

namespace apword {

  namespace {

    void require_binary_bar_swap(Substitution const& s) {
      if (!has_bar_swap(s)) {
        throw Error("block substitution needs a binary bar-swap rule");
      }
    }

    std::uint64_t block_cells(Substitution const& s,
                              std::size_t         n,
                              std::uint64_t       cap) {
      std::uint64_t const cells = checked_pow(s.length(), 2 * n);
      if (cells > cap) {
        throw Error("block of " + std::to_string(cells)
                    + " cells exceeds the cap of " + std::to_string(cap));
      }
      return cells;
    }

    bool matches_superword(std::span<Letter const> w,
                           Word const&             zero,
                           Word const&             one) {
      return std::equal(w.begin(), w.end(), zero.begin())
             || std::equal(w.begin(), w.end(), one.begin());
    }

  }  // namespace

  Word Block::column(std::size_t j) const {
    Word out(side);
    for (std::size_t i = 0; i < side; ++i) {
      out[i] = at(i, j);
    }
    return out;
  }

  Block block_iterate(Substitution const& s,
                      Letter              a,
                      std::size_t         n,
                      std::uint64_t       cap) {
    require_binary_bar_swap(s);
    if (n == 0) {
      throw Error("block iterates need n >= 1");
    }
    block_cells(s, n, cap);
    Block b{checked_pow(s.length(), n), iterate(s, a, 2 * n, cap), s, a, n};
    return b;
  }

  Block block_substitute(Substitution const& s,
                         Letter              a,
                         std::size_t         n,
                         std::uint64_t       cap) {
    require_binary_bar_swap(s);
    block_cells(s, n, cap);
    std::size_t const q = s.length();
    // tile[b] is the Q x Q image of letter b, row-major.
    std::vector<Word> tile(2);
    for (Letter b = 0; b < 2; ++b) {
      for (Letter x : s.image(b)) {
        Word const& r = s.image(x);
        tile[b].insert(tile[b].end(), r.begin(), r.end());
      }
    }
    std::size_t side = 1;
    Word        grid{a};
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t const next_side = side * q;
      Word              next(next_side * next_side);
      for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) {
          Word const& t = tile[grid[i * side + j]];
          for (std::size_t r = 0; r < q; ++r) {
            std::copy_n(t.begin() + r * q, q,
                        next.begin() + (i * q + r) * next_side + j * q);
          }
        }
      }
      grid = std::move(next);
      side = next_side;
    }
    return Block{side, std::move(grid), s, a, n};
  }

  Word diagonal(Block const& b, Diagonal which) {
    Word out(b.side);
    for (std::size_t i = 0; i < b.side; ++i) {
      out[i] = which == Diagonal::main ? b.at(i, i) : b.at(i, b.side - 1 - i);
    }
    return out;
  }

  bool is_reflection_symmetric(Substitution const& s) {
    if (!has_bar_swap(s)) {
      return false;
    }
    Word r = s.image(0);
    std::reverse(r.begin(), r.end());
    return r == s.image(0) || r == s.image(1);
  }

  std::string to_string(CheckStatus status) {
    switch (status) {
      case CheckStatus::pass:
        return "pass";
      case CheckStatus::fail:
        return "fail";
      default:
        return "skipped";
    }
  }

  bool BlockReport::ok() const noexcept {
    return std::none_of(checks.begin(), checks.end(), [](LemmaCheck const& c) {
      return c.status == CheckStatus::fail;
    });
  }

  BlockReport check_block_lemmas(Substitution const& s, Letter a, std::size_t n) {
    require_binary_bar_swap(s);
    if (n == 0) {
      throw Error("block lemmas need n >= 1");
    }
    if (a > 1) {
      throw Error("letter must be 0 or 1");
    }
    BlockReport report;
    auto        add = [&](std::string name, bool ok, std::string detail = {}) {
      report.checks.push_back({std::move(name),
                               ok ? CheckStatus::pass : CheckStatus::fail,
                               ok ? std::string{} : std::move(detail)});
    };
    auto skip = [&](std::string name) {
      report.checks.push_back({std::move(name), CheckStatus::skipped,
                               "rule is not reflection symmetric"});
    };

    Word const        word = iterate(s, a, 2 * n);
    std::size_t const side = checked_pow(s.length(), n);
    auto cell = [&](std::size_t i, std::size_t j) { return word[i * side + j]; };

    Block const direct = block_substitute(s, a, n);
    add("row-read", direct.cells == word,
        "block substitution disagrees with s^{2n}(a)");

    Word const zero = iterate(s, 0, n);
    Word const one  = iterate(s, 1, n);
    bool       rows = true, cols = true;
    Word       col(side);
    for (std::size_t i = 0; i < side; ++i) {
      rows = rows
             && matches_superword({word.data() + i * side, side}, zero, one);
      for (std::size_t r = 0; r < side; ++r) {
        col[r] = cell(r, i);
      }
      cols = cols && matches_superword(col, zero, one);
    }
    add("rows-are-superwords", rows, "a row is neither s^n(0) nor s^n(1)");
    add("columns-are-superwords", cols, "a column is neither s^n(0) nor s^n(1)");

    bool main_const = true;
    for (std::size_t i = 0; i < side; ++i) {
      main_const = main_const && cell(i, i) == a;
    }
    add("main-diagonal-constant", main_const, "main diagonal is not constant a");

    if (!is_reflection_symmetric(s)) {
      skip("main-diagonal-reflection");
      skip("anti-diagonal-reflection");
      skip("anti-diagonal-constant");
      return report;
    }
    bool transpose = true, anti_transpose = true, anti_const = true;
    Letter const anti = n % 2 == 0 ? a : static_cast<Letter>(1 - a);
    for (std::size_t i = 0; i < side; ++i) {
      anti_const = anti_const && cell(i, side - 1 - i) == anti;
      for (std::size_t j = 0; j < side; ++j) {
        transpose      = transpose && cell(i, j) == cell(j, i);
        anti_transpose = anti_transpose
                         && cell(i, j) == cell(side - 1 - j, side - 1 - i);
      }
    }
    add("main-diagonal-reflection", transpose, "block is not symmetric");
    add("anti-diagonal-reflection", anti_transpose,
        "block is not symmetric in the anti diagonal");
    add("anti-diagonal-constant", anti_const,
        "anti diagonal is not constant");
    return report;
  }

  std::string render(Block const& b, RenderFormat format) {
    std::string out;
    if (format == RenderFormat::ascii) {
      out.reserve(b.side * (b.side + 1));
      for (std::size_t i = 0; i < b.side; ++i) {
        for (Letter x : b.row(i)) {
          out.push_back(x == 0 ? '#' : '.');
        }
        out.push_back('\n');
      }
      return out;
    }
    out = "P1\n" + std::to_string(b.side) + " " + std::to_string(b.side) + "\n";
    for (std::size_t i = 0; i < b.side; ++i) {
      auto const r = b.row(i);
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j != 0) {
          out.push_back(' ');
        }
        out.push_back(r[j] == 0 ? '1' : '0');
      }
      out.push_back('\n');
    }
    return out;
  }

}  // namespace apword
