// Maximal monochromatic arithmetic progressions in fixed points.
//
// A(d) is the maximal length of a progression of difference d. For an
// infinite word it is estimated from finite prefixes: a scan is called
// stable when doubling the prefix does not change the result. Stability is a
// heuristic flag, not a proof. The closed forms below are the exact values
// where they are known.

#ifndef APWORD_AP_HPP_
#define APWORD_AP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apword/progression.hpp"
#include "apword/substitution.hpp"
#include "apword/word_source.hpp"

namespace apword {

  inline constexpr std::uint64_t default_max_prefix = std::uint64_t{1} << 30;

  struct ScanOptions {
    //! First prefix length; 0 selects auto_prefix(d).
    std::uint64_t initial_prefix = 0;
    //! Hard cap on the scanned prefix.
    std::uint64_t max_prefix = default_max_prefix;

    //! Defaults, with max_prefix taken from APWORD_MAX_PREFIX when set.
    static ScanOptions from_env();
  };

  //! max(2^16, 32 d (d + 8)).
  std::uint64_t auto_prefix(std::uint64_t d);

  struct ScanReport {
    std::uint64_t d = 0;
    //! Best length found; equals witness.length.
    std::uint64_t            a_lower = 0;
    Progression              witness;
    std::uint64_t            prefix_scanned = 0;
    bool                     stable         = false;
    std::vector<Progression> per_letter;
    //! Difference that was actually scanned (d with factors Q removed when
    //! scan_range reduces).
    std::uint64_t scanned_difference = 0;
  };

  //! Longest progression of difference \p d inside [0, N). One pass with d
  //! rolling counters. Ties go to the smallest start, then the smaller letter.
  Progression longest_ap(WordSource const& ws, std::uint64_t d, std::uint64_t N);

  //! Per-letter variant of longest_ap(), indexed by letter.
  std::vector<Progression> longest_ap_per_letter(WordSource const& ws,
                                                 std::uint64_t     d,
                                                 std::uint64_t     N);

  //! Scans prefixes N0, 2 N0, 4 N0, ... until the best length is unchanged
  //! between consecutive prefixes or the cap is reached.
  ScanReport estimate_A(WordSource const&  ws,
                        std::uint64_t      d,
                        ScanOptions const& options = {});

  //! d = Q^s * reduced with Q not dividing reduced. Returns {reduced, s}.
  std::pair<std::uint64_t, std::size_t> reduce_difference(std::uint64_t d,
                                                          std::uint64_t Q);

  struct RangeOptions {
    ScanOptions scan;
    //! Scan d / Q^s instead of d and lift the witness back.
    bool reduce = false;
    //! Worker threads; 0 means hardware concurrency.
    unsigned threads = 0;
  };

  //! One report per d = 1..d_max, in order.
  std::vector<ScanReport> scan_range(WordSource const&   ws,
                                     std::uint64_t       d_max,
                                     RangeOptions const& options = {});

  //! The generalised Thue-Morse family theta_{p,q}; p = q = 1 is Thue-Morse.
  struct Family {
    std::uint64_t p = 1;
    std::uint64_t q = 1;

    [[nodiscard]] std::uint64_t Q() const noexcept {
      return p + q;
    }
    [[nodiscard]] bool is_tm() const noexcept {
      return p == 1 && q == 1;
    }
    [[nodiscard]] Substitution substitution() const {
      return make_gtm(p, q);
    }
    [[nodiscard]] std::string name() const;

    friend bool operator==(Family const&, Family const&) = default;
  };

  //! Parses "tm" or "pq:P,Q".
  Family parse_family(std::string const& text);

  enum class Kind { plus, minus };

  std::string to_string(Kind k);
  Kind        parse_kind(std::string const& text);

  //! Q^n + 1 or Q^n - 1.
  std::uint64_t kind_difference(Family const& f, std::size_t n, Kind kind);

  struct ClosedForm {
    std::uint64_t value = 0;
    //! True when only A <= value is known (minus kind with p != q).
    bool upper_bound = false;
  };

  //! Known value of A_{p,q}(Q^n +- 1). Throws Error outside the hypotheses:
  //! n > 1, and n > 2 for the minus kind with p != q.
  ClosedForm closed_form_A(Family const& f, std::size_t n, Kind kind);

  //! Builds the diagonal progression of difference Q^n +- 1 inside an
  //! occurrence of s^{2n}(a) in the fixed point of \p s from letter 0, tries
  //! every three-letter context around that superword, extends greedily in
  //! both directions and returns the longest verified result. \p s must be
  //! binary, bijective, bar-swap symmetric; the minus kind also needs the
  //! anti-diagonal to be constant.
  Progression witness_ap(Substitution const& s, std::size_t n, Kind kind);

  struct FactCheck {
    std::string   fact;
    std::uint64_t d        = 0;
    std::uint64_t observed = 0;
    //! Relation that must hold: observed (relation) expected.
    std::string   relation;
    std::uint64_t expected = 0;
    bool          pass     = false;
  };

  struct FactsReport {
    std::vector<FactCheck> checks;
    [[nodiscard]] bool     all_pass() const noexcept;
  };

  //! Scans every d <= bound covered by the small-difference lemmas of the
  //! family and compares the scan results with their bounds.
  FactsReport small_d_facts(Family const&      f,
                            std::uint64_t      bound,
                            ScanOptions const& options = {});

}  // namespace apword

#endif  // APWORD_AP_HPP_
