#include "apword/ap.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "apword/language.hpp"
#include "apword/parallel.hpp"
#include "apword/scan.hpp"

namespace apword {

  namespace {

    constexpr std::size_t stream_chunk = std::size_t{1} << 16;

    // Feeds letters [scanner.position(), N) of the fixed point.
    void feed_until(PrefixStream&     stream,
                    ApScanner&        scanner,
                    std::uint64_t     N,
                    Word&             buffer) {
      while (scanner.position() < N) {
        std::size_t const n = static_cast<std::size_t>(
            std::min<std::uint64_t>(buffer.size(), N - scanner.position()));
        std::span<Letter> chunk(buffer.data(), n);
        stream.read(chunk);
        scanner.feed(chunk);
      }
    }

    std::vector<Progression> per_letter(ApScanner const& scanner,
                                        std::size_t      sigma) {
      std::vector<Progression> out;
      out.reserve(sigma);
      for (std::size_t a = 0; a < sigma; ++a) {
        out.push_back(scanner.best(static_cast<Letter>(a)));
      }
      return out;
    }

  }  // namespace

  ScanOptions ScanOptions::from_env() {
    ScanOptions opts;
    if (char const* env = std::getenv("APWORD_MAX_PREFIX")) {
      char*                    end = nullptr;
      unsigned long long const v   = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) {
        throw Error("APWORD_MAX_PREFIX must be a positive integer");
      }
      opts.max_prefix = v;
    }
    return opts;
  }

  std::uint64_t auto_prefix(std::uint64_t d) {
    return std::max<std::uint64_t>(std::uint64_t{1} << 16, 32 * d * (d + 8));
  }

  Progression longest_ap(WordSource const& ws, std::uint64_t d, std::uint64_t N) {
    if (d == 0) {
      throw Error("progression difference must be positive");
    }
    if (N <= d) {
      throw Error("prefix length must exceed the difference");
    }
    ApScanner    scanner(d, ws.substitution().alphabet_size());
    PrefixStream stream(ws);
    Word         buffer(stream_chunk);
    feed_until(stream, scanner, N, buffer);
    return scanner.best();
  }

  std::vector<Progression> longest_ap_per_letter(WordSource const& ws,
                                                 std::uint64_t     d,
                                                 std::uint64_t     N) {
    if (d == 0) {
      throw Error("progression difference must be positive");
    }
    if (N <= d) {
      throw Error("prefix length must exceed the difference");
    }
    ApScanner    scanner(d, ws.substitution().alphabet_size());
    PrefixStream stream(ws);
    Word         buffer(stream_chunk);
    feed_until(stream, scanner, N, buffer);
    return per_letter(scanner, ws.substitution().alphabet_size());
  }

  ScanReport estimate_A(WordSource const&  ws,
                        std::uint64_t      d,
                        ScanOptions const& options) {
    if (d == 0) {
      throw Error("progression difference must be positive");
    }
    std::uint64_t const cap = options.max_prefix;
    std::uint64_t N = options.initial_prefix != 0 ? options.initial_prefix
                                                  : auto_prefix(d);
    N = std::min(N, cap);
    if (N <= d) {
      throw Error("prefix cap " + std::to_string(cap)
                  + " does not exceed the difference");
    }
    std::size_t const sigma = ws.substitution().alphabet_size();
    ApScanner         scanner(d, sigma);
    PrefixStream      stream(ws);
    Word              buffer(stream_chunk);

    ScanReport report;
    report.d                  = d;
    report.scanned_difference = d;

    feed_until(stream, scanner, N, buffer);
    Progression previous = scanner.best();
    while (true) {
      if (N > cap / 2) {
        report.stable         = false;
        report.prefix_scanned = N;
        break;
      }
      N *= 2;
      feed_until(stream, scanner, N, buffer);
      Progression const current = scanner.best();
      if (current.length == previous.length) {
        report.stable         = true;
        report.prefix_scanned = N;
        break;
      }
      previous = current;
    }
    report.witness    = scanner.best();
    report.a_lower    = report.witness.length;
    report.per_letter = per_letter(scanner, sigma);
    return report;
  }

  std::pair<std::uint64_t, std::size_t> reduce_difference(std::uint64_t d,
                                                          std::uint64_t Q) {
    if (d == 0) {
      throw Error("difference must be positive");
    }
    if (Q < 2) {
      throw Error("reduction base must be at least 2");
    }
    std::size_t s = 0;
    while (d % Q == 0) {
      d /= Q;
      ++s;
    }
    return {d, s};
  }

  std::vector<ScanReport> scan_range(WordSource const&   ws,
                                     std::uint64_t       d_max,
                                     RangeOptions const& options) {
    if (d_max == 0) {
      throw Error("d_max must be positive");
    }
    std::uint64_t const     Q = ws.length();
    std::vector<ScanReport> out(d_max);
    detail::parallel_for(
        d_max,
        [&](std::size_t k) {
          std::uint64_t const d = k + 1;
          if (!options.reduce) {
            out[k] = estimate_A(ws, d, options.scan);
            return;
          }
          std::uint64_t const reduced = reduce_difference(d, Q).first;
          ScanReport rep          = estimate_A(ws, reduced, options.scan);
          // A progression t + m d' lifts to Q^s t + m Q^s d' in the fixed
          // point, carrying the first letter of s^s(letter).
          std::uint64_t const scale = d / reduced;
          auto lift = [&](Progression const& p) {
            if (p.length == 0) {
              return Progression{0, d, 0, p.letter};
            }
            Progression lifted{p.start * scale, d, p.length, 0};
            lifted.letter = ws.letter_at(lifted.start);
            return lifted;
          };
          rep.d       = d;
          rep.witness = lift(rep.witness);
          for (auto& p : rep.per_letter) {
            p = lift(p);
          }
          std::sort(rep.per_letter.begin(), rep.per_letter.end(),
                    [](auto const& x, auto const& y) { return x.letter < y.letter; });
          out[k] = std::move(rep);
        },
        options.threads);
    return out;
  }

  std::string Family::name() const {
    if (is_tm()) {
      return "tm";
    }
    return "pq:" + std::to_string(p) + "," + std::to_string(q);
  }

  Family parse_family(std::string const& text) {
    if (text == "tm") {
      return Family{1, 1};
    }
    if (text.rfind("pq:", 0) == 0) {
      auto const comma = text.find(',', 3);
      if (comma != std::string::npos) {
        try {
          std::size_t         used = 0;
          std::string const   ps   = text.substr(3, comma - 3);
          std::string const   qs   = text.substr(comma + 1);
          unsigned long const p    = std::stoul(ps, &used);
          if (used == ps.size()) {
            unsigned long const q = std::stoul(qs, &used);
            if (used == qs.size() && p >= 1 && q >= 1) {
              return Family{p, q};
            }
          }
        } catch (std::exception const&) {
        }
      }
    }
    throw Error("expected 'tm' or 'pq:P,Q' with P, Q >= 1, got '" + text + "'");
  }

  std::string to_string(Kind k) {
    return k == Kind::plus ? "plus" : "minus";
  }

  Kind parse_kind(std::string const& text) {
    if (text == "plus") {
      return Kind::plus;
    }
    if (text == "minus") {
      return Kind::minus;
    }
    throw Error("kind must be 'plus' or 'minus', got '" + text + "'");
  }

  std::uint64_t kind_difference(Family const& f, std::size_t n, Kind kind) {
    std::uint64_t const qn = checked_pow(f.Q(), n);
    return kind == Kind::plus ? qn + 1 : qn - 1;
  }

  ClosedForm closed_form_A(Family const& f, std::size_t n, Kind kind) {
    if (f.p == 0 || f.q == 0) {
      throw Error("family needs p >= 1 and q >= 1");
    }
    if (n <= 1) {
      throw Error("closed forms need n > 1");
    }
    std::uint64_t const Q  = f.Q();
    std::uint64_t const qn = checked_pow(Q, n);
    if (kind == Kind::plus) {
      if (f.p > 1 && f.q > 1) {
        return {qn + Q - 2, false};
      }
      if (f.p == 1 && f.q == 1) {
        return {qn + Q, false};
      }
      return {qn + Q - 1, false};
    }
    if (f.p == f.q) {
      if (n % 2 == 1) {
        return {qn, false};
      }
      return {f.p > 1 ? qn + Q : qn + Q + 2, false};
    }
    if (n <= 2) {
      throw Error("the bound for Q^n - 1 with p != q needs n > 2");
    }
    return {qn, true};
  }

  Progression witness_ap(Substitution const& s, std::size_t n, Kind kind) {
    if (s.alphabet_size() != 2 || !is_bijective(s) || !has_bar_swap(s)) {
      throw Error("witness_ap needs a binary bijective bar-swap rule");
    }
    if (n == 0) {
      throw Error("witness_ap needs n >= 1");
    }
    WordSource const    ws(s, 0);
    std::uint64_t const Q     = s.length();
    std::uint64_t const side  = checked_pow(Q, n);
    std::uint64_t const super = checked_pow(Q, 2 * n);
    std::uint64_t const d     = kind == Kind::plus ? side + 1 : side - 1;

    // Where does each three-letter context first occur in the fixed point?
    FactorSet const contexts = factors(s, 0, 3);
    Word const head = prefix(ws, std::uint64_t{1} << 16);

    std::optional<Progression> best;
    for (Word const& ctx : contexts.words) {
      auto const it = std::search(head.begin(), head.end(), ctx.begin(), ctx.end());
      if (it == head.end()) {
        throw Error("context " + to_digits(ctx)
                    + " not found in the fixed-point prefix");
      }
      // The middle letter's level-2n superword.
      std::uint64_t const centre = static_cast<std::uint64_t>(it - head.begin()) + 1;
      if (centre > (max_index - 2 * super) / super) {
        throw Error("witness position overflows the index range");
      }
      std::uint64_t const offset = centre * super;
      std::uint64_t       start  = kind == Kind::plus ? offset : offset + side - 1;
      Letter const        letter = ws.letter_at(start);
      std::uint64_t       length = side;
      for (std::uint64_t m = 0; m < side; ++m) {
        if (ws.letter_at(start + m * d) != letter) {
          throw Error("diagonal of the block is not constant for this rule");
        }
      }
      while (start >= d && ws.letter_at(start - d) == letter) {
        start -= d;
        ++length;
      }
      while (ws.letter_at(start + length * d) == letter) {
        ++length;
      }
      if (!best || length > best->length) {
        best = Progression::verified(ws, start, d, length, letter);
      }
    }
    return *best;
  }

  bool FactsReport::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](FactCheck const& c) { return c.pass; });
  }

  FactsReport small_d_facts(Family const&      f,
                            std::uint64_t      bound,
                            ScanOptions const& options) {
    if (bound == 0) {
      throw Error("bound must be positive");
    }
    WordSource const ws(f.substitution(), 0);
    std::uint64_t const Q = f.Q();

    std::map<std::uint64_t, std::uint64_t> cache;
    auto A = [&](std::uint64_t d) {
      auto it = cache.find(d);
      if (it == cache.end()) {
        it = cache.emplace(d, estimate_A(ws, d, options).a_lower).first;
      }
      return it->second;
    };

    FactsReport report;
    auto at_most = [&](std::string fact, std::uint64_t d, std::uint64_t bnd) {
      std::uint64_t const a = A(d);
      report.checks.push_back({std::move(fact), d, a, "<=", bnd, a <= bnd});
    };

    auto is_power_of = [Q](std::uint64_t d) {
      return reduce_difference(d, Q).first == 1;
    };

    if (f.is_tm()) {
      for (std::uint64_t d = 1; d <= bound; ++d) {
        std::uint64_t const a = A(d);
        if (d > 1 && d % 2 == 1) {
          report.checks.push_back({"odd-d-at-least-3", d, a, ">=", 3, a >= 3});
        }
        bool const pow2 = is_power_of(d);
        report.checks.push_back({pow2 ? "power-of-2-gives-2" : "non-power-exceeds-2",
                                 d, a, pow2 ? "==" : ">", 2,
                                 pow2 ? a == 2 : a > 2});
      }
      // The smallest d = 2^n - k for a given n is 2^(n-1) + 1.
      for (std::size_t n = 1; n < 62 && (std::uint64_t{1} << (n - 1)) + 1 <= bound; ++n) {
        std::uint64_t const two_n = std::uint64_t{1} << n;
        for (std::uint64_t k = 1; k < two_n / 2; k += 2) {
          std::uint64_t const d = two_n - k;
          if (d > bound) {
            continue;
          }
          if (n % 2 == 1) {
            at_most("bound-odd-n", d, two_n);
          }
          if (n > 1 && k > 2) {
            at_most("bound-general", d, two_n);
          }
        }
      }
      return report;
    }

    for (std::uint64_t s = 0;; ++s) {
      std::uint64_t const d = checked_pow(Q, s);
      if (d > bound) {
        break;
      }
      std::uint64_t const a = A(d);
      report.checks.push_back({"power-of-Q-gives-Q", d, a, "==", Q, a == Q});
    }

    bool q_prime = Q >= 2;
    for (std::uint64_t x = 2; x * x <= Q; ++x) {
      q_prime = q_prime && Q % x != 0;
    }
    bool const min_one = std::min(f.p, f.q) == 1;

    for (std::size_t n = 2;; ++n) {
      std::uint64_t const qn  = checked_pow(Q, n);
      std::uint64_t const qn1 = qn / Q;
      if (qn - qn1 > bound) {
        break;
      }
      for (std::uint64_t k = 2; k < qn1; ++k) {
        std::uint64_t const d = qn - k;
        if (d > bound) {
          continue;
        }
        if (q_prime && k > Q) {
          at_most("prime-Q-bound", d, qn);
        }
        if (q_prime && min_one) {
          at_most("prime-Q-min-one-bound", d, qn);
        }
        std::uint64_t const g = std::gcd(k, Q);
        if (g == Q) {
          continue;
        }
        // A progression longer than Q^n / g forces equal letters inside each
        // level-n superword at offsets r + l g and r + l g + d.
        std::uint64_t const a = A(d);
        bool                holds = true;
        if (a > qn / g) {
          Word const w = iterate(f.substitution(), 0, n);
          holds        = false;
          for (std::uint64_t r = 0; r < g && !holds; ++r) {
            bool ok = true;
            for (std::uint64_t l = 0; l * g < k && ok; ++l) {
              std::uint64_t const i = r + l * g;
              if (i + d < qn) {
                ok = w[i] == w[i + d];
              }
            }
            holds = ok;
          }
        }
        report.checks.push_back({"superword-relation", d, a, "<=|relation",
                                 qn / g, holds});
      }
    }
    return report;
  }

}  // namespace apword
