#include "apword/bijective.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#include "apword/ap.hpp"
#include "apword/parallel.hpp"

namespace apword {

  bool diagonal_ap_check(Substitution const& s, Letter a, std::size_t n) {
    if (s.alphabet_size() != 2 || !is_bijective(s)) {
      throw Error("diagonal check needs a binary bijective rule");
    }
    if (a > 1) {
      throw Error("letter must be 0 or 1");
    }
    Word const          w    = iterate(s, a, 2 * n);
    std::uint64_t const side = checked_pow(s.length(), n);
    for (std::uint64_t m = 0; m < side; ++m) {
      if (w[m * (side + 1)] != a) {
        return false;
      }
    }
    return true;
  }

  std::vector<FrequencyEstimate> cna_frequencies(WordSource const& ws,
                                                 std::uint64_t     n,
                                                 std::uint64_t     k,
                                                 std::uint64_t     N) {
    if (n == 0) {
      throw Error("difference must be positive");
    }
    if (k != 0 && n > (N - 1) / k) {
      throw Error("prefix of " + std::to_string(N)
                  + " letters is too short for k n = "
                  + std::to_string(k) + " * " + std::to_string(n));
    }
    std::uint64_t const span = k * n;
    Word const          w    = prefix(ws, N);
    std::size_t const   sigma = ws.substitution().alphabet_size();
    std::vector<std::uint64_t> counts(sigma, 0);
    // run[r] counts equal letters at i, i-n, i-2n, ... for r = i mod n; a
    // run of k+1 ending at i means t = i - kn qualifies.
    std::vector<std::uint64_t> run(n, 0);
    for (std::uint64_t i = 0; i < N; ++i) {
      std::uint64_t const r = i % n;
      run[r] = (i >= n && w[i - n] == w[i]) ? run[r] + 1 : 1;
      if (run[r] >= k + 1) {
        ++counts[w[i]];
      }
    }
    std::vector<FrequencyEstimate> out;
    for (std::size_t a = 0; a < sigma; ++a) {
      out.push_back({n, static_cast<Letter>(a), k, counts[a], N,
                     static_cast<double>(counts[a])
                         / static_cast<double>(N - span)});
    }
    return out;
  }

  FrequencyEstimate cna_frequency(WordSource const& ws,
                                  std::uint64_t     n,
                                  Letter            a,
                                  std::uint64_t     k,
                                  std::uint64_t     N) {
    if (a >= ws.substitution().alphabet_size()) {
      throw Error("letter is not in the alphabet");
    }
    return cna_frequencies(ws, n, k, N)[a];
  }

  bool absence_check(WordSource const& ws,
                     std::uint64_t     d,
                     std::uint64_t     L,
                     std::uint64_t     N) {
    if (d == 0 || L < 2) {
      throw Error("absence check needs d >= 1 and L >= 2");
    }
    return longest_ap(ws, d, N).length < L;
  }

  std::optional<std::pair<std::uint64_t, Letter>> find_positive_cna(
      WordSource const& ws,
      std::uint64_t     k,
      std::uint64_t     n_max,
      std::uint64_t     N,
      unsigned          threads) {
    if (k == 0) {
      throw Error("k must be at least 1");
    }
    std::uint64_t const none = ~std::uint64_t{0};
    // Smallest hit seen so far, packed as n * 256 + letter.
    std::atomic<std::uint64_t> best{none};
    detail::parallel_for(
        n_max,
        [&](std::size_t idx) {
          std::uint64_t const n = idx + 1;
          if (n > (N - 1) / k || n * 256 > best.load()) {
            return;
          }
          for (auto const& e : cna_frequencies(ws, n, k, N)) {
            if (e.count > 0) {
              std::uint64_t const key = n * 256 + e.a;
              std::uint64_t       cur = best.load();
              while (key < cur && !best.compare_exchange_weak(cur, key)) {
              }
              return;
            }
          }
        },
        threads);
    if (best.load() == none) {
      return std::nullopt;
    }
    return std::pair{best.load() / 256, static_cast<Letter>(best.load() % 256)};
  }

  bool images_contain_all_letters(Substitution const& s, std::size_t m) {
    std::size_t const sigma = s.alphabet_size();
    for (std::size_t a = 0; a < sigma; ++a) {
      // Letters reachable from a in exactly m steps.
      std::vector<bool> reach(sigma, false);
      reach[a] = true;
      for (std::size_t step = 0; step < m; ++step) {
        std::vector<bool> next(sigma, false);
        for (std::size_t b = 0; b < sigma; ++b) {
          if (reach[b]) {
            for (Letter x : s.image(static_cast<Letter>(b))) {
              next[x] = true;
            }
          }
        }
        reach = std::move(next);
      }
      if (std::find(reach.begin(), reach.end(), false) != reach.end()) {
        return false;
      }
    }
    return true;
  }

}  // namespace apword
