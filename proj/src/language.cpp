#include "apword/language.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "apword/parallel.hpp"

namespace apword {

  namespace {

    std::set<Word> two_letter_factors(Substitution const& s) {
      std::set<Word> found;
      std::vector<Word> todo;
      auto add = [&](Word w) {
        if (found.insert(w).second) {
          todo.push_back(std::move(w));
        }
      };
      for (auto const& img : s.images()) {
        for (std::size_t j = 0; j + 1 < img.size(); ++j) {
          add(Word{img[j], img[j + 1]});
        }
      }
      // A two-letter factor across an image boundary comes from some xy
      // already in the set.
      while (!todo.empty()) {
        Word xy = std::move(todo.back());
        todo.pop_back();
        add(Word{s.image(xy[0]).back(), s.image(xy[1]).front()});
      }
      return found;
    }

    std::set<Word> factors_impl(Substitution const& s, std::size_t length) {
      if (length == 1) {
        std::set<Word> out;
        for (std::size_t a = 0; a < s.alphabet_size(); ++a) {
          out.insert(Word{static_cast<Letter>(a)});
        }
        return out;
      }
      if (length == 2) {
        return two_letter_factors(s);
      }
      std::size_t const q     = s.length();
      std::size_t const shorter = (length - 1 + q - 1) / q + 1;
      std::set<Word>    out;
      for (Word const& u : factors_impl(s, shorter)) {
        Word const img = apword::apply(s, u);
        for (std::size_t i = 0; i + length <= img.size(); ++i) {
          out.emplace(img.begin() + i, img.begin() + i + length);
        }
      }
      return out;
    }

    bool find_zero_run(std::span<std::uint64_t const> bits,
                       std::uint64_t                  N,
                       std::uint64_t                  period,
                       std::uint64_t                  target,
                       std::uint64_t&                 where) {
      // diff bit i = v[i] xor v[i + period] for i < N - period.
      std::uint64_t const limit      = N - period;
      std::size_t const   word_shift = period / 64;
      unsigned const      bit_shift  = period % 64;
      std::uint64_t       run_start  = 0;
      auto                shifted    = [&](std::size_t w) {
        std::uint64_t lo = bits[w + word_shift] >> bit_shift;
        if (bit_shift != 0 && w + word_shift + 1 < bits.size()) {
          lo |= bits[w + word_shift + 1] << (64 - bit_shift);
        }
        return lo;
      };
      std::size_t const words = static_cast<std::size_t>((limit + 63) / 64);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t diff = bits[w] ^ shifted(w);
        std::uint64_t const base = std::uint64_t{w} * 64;
        if (base + 64 > limit) {
          diff &= (std::uint64_t{1} << (limit - base)) - 1;
        }
        if (diff == 0) {
          continue;
        }
        if (target > 64) {
          // Only runs crossing word boundaries can be long enough.
          std::uint64_t const first = base + std::countr_zero(diff);
          if (first - run_start >= target) {
            where = run_start;
            return true;
          }
          run_start = base + 64 - std::countl_zero(diff);
        } else {
          while (diff != 0) {
            std::uint64_t const one = base + std::countr_zero(diff);
            if (one - run_start >= target) {
              where = run_start;
              return true;
            }
            run_start = one + 1;
            diff &= diff - 1;
          }
        }
      }
      if (limit - run_start >= target) {
        where = run_start;
        return true;
      }
      return false;
    }

    bool find_equal_run(std::span<Letter const> word,
                        std::uint64_t           period,
                        std::uint64_t           target,
                        std::uint64_t&          where) {
      std::uint64_t const limit     = word.size() - period;
      std::uint64_t       run_start = 0;
      for (std::uint64_t i = 0; i < limit; ++i) {
        if (word[i] != word[i + period]) {
          if (i - run_start >= target) {
            where = run_start;
            return true;
          }
          run_start = i + 1;
        }
      }
      if (limit - run_start >= target) {
        where = run_start;
        return true;
      }
      return false;
    }

  }  // namespace

  FactorSet factors(Substitution const& s,
                    Letter              seed,
                    std::size_t         length,
                    std::size_t         cap) {
    if (length == 0) {
      throw Error("factor length must be positive");
    }
    if (length > cap) {
      throw Error("factor length " + std::to_string(length)
                  + " exceeds the cap of " + std::to_string(cap));
    }
    if (seed >= s.alphabet_size()) {
      throw Error("seed is not a letter of the alphabet");
    }
    if (!is_primitive(s)) {
      throw Error("factor closure needs a primitive substitution");
    }
    return FactorSet{length, factors_impl(s, length)};
  }

  bool contains(Substitution const&     s,
                Letter                  seed,
                std::span<Letter const> w,
                std::size_t             cap) {
    if (w.empty()) {
      return true;
    }
    for (Letter x : w) {
      if (x >= s.alphabet_size()) {
        return false;
      }
    }
    return factors(s, seed, w.size(), cap).contains(w);
  }

  std::size_t max_run(Substitution const& s, Letter seed, std::size_t cap) {
    for (std::size_t k = 1; k < cap; ++k) {
      FactorSet const next = factors(s, seed, k + 1, cap);
      bool            longer = false;
      for (std::size_t a = 0; a < s.alphabet_size() && !longer; ++a) {
        longer = next.contains(Word(k + 1, static_cast<Letter>(a)));
      }
      if (!longer) {
        return k;
      }
    }
    throw Error("letter runs reach the factor cap");
  }

  PowerFreeResult power_free_check(std::span<Letter const> word,
                                   Repetition              rep,
                                   unsigned                threads) {
    if (!rep.overlap && rep.exponent < 2) {
      throw Error("repetition exponent must be at least 2");
    }
    std::uint64_t const N = word.size();
    // Letters spanned by a repetition of period P.
    auto span_of = [&](std::uint64_t P) {
      return rep.overlap ? 2 * P + 1 : rep.exponent * P;
    };
    std::uint64_t max_period = 0;
    while (span_of(max_period + 1) <= N) {
      ++max_period;
    }

    bool const binary = std::all_of(word.begin(), word.end(),
                                    [](Letter x) { return x < 2; });
    std::vector<std::uint64_t> bits;
    if (binary) {
      bits.assign(static_cast<std::size_t>((N + 63) / 64) + 1, 0);
      for (std::uint64_t i = 0; i < N; ++i) {
        bits[i / 64] |= std::uint64_t{word[i]} << (i % 64);
      }
    }

    // Periods are checked in batches so the smallest violating period wins
    // without scanning every period when a violation appears early.
    constexpr std::uint64_t batch = 256;
    for (std::uint64_t lo = 1; lo <= max_period; lo += batch) {
      std::uint64_t const hi = std::min(max_period + 1, lo + batch);
      std::vector<std::optional<std::uint64_t>> hits(hi - lo);
      detail::parallel_for(
          hi - lo,
          [&](std::size_t k) {
            std::uint64_t const P      = lo + k;
            std::uint64_t const target = span_of(P) - P;
            std::uint64_t       where  = 0;
            bool const          found
                = binary ? find_zero_run(bits, N, P, target, where)
                         : find_equal_run(word, P, target, where);
            if (found) {
              hits[k] = where;
            }
          },
          threads);
      for (std::size_t k = 0; k < hits.size(); ++k) {
        if (hits[k]) {
          std::uint64_t const P = lo + k;
          return {false, PowerViolation{*hits[k], P, span_of(P)}};
        }
      }
    }
    return {true, std::nullopt};
  }

  PowerFreeResult power_free_check(WordSource const& ws,
                                   Repetition        rep,
                                   std::uint64_t     N,
                                   unsigned          threads) {
    Word const w = prefix(ws, N);
    return power_free_check(w, rep, threads);
  }

}  // namespace apword
