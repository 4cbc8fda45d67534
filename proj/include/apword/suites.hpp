// Reproduction suites: scans, witnesses and lemma checks compared against
// the closed forms and structural facts they are meant to confirm.

#ifndef APWORD_SUITES_HPP_
#define APWORD_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apword/ap.hpp"

namespace apword {

  struct SuiteCase {
    nlohmann::ordered_json       params;
    std::optional<std::uint64_t> expected;
    //! "==", "<=", ">=", ">" or "info" (reported, never fails).
    std::string   relation = "==";
    std::uint64_t observed = 0;
    bool          pass     = false;
    //! Scan replaced by a witness because of a runtime or prefix budget.
    bool        downgraded = false;
    std::string note;
  };

  struct SuiteResult {
    std::string            name;
    std::vector<SuiteCase> cases;
    double                 runtime_seconds = 0.0;

    [[nodiscard]] bool        pass() const noexcept;
    [[nodiscard]] std::size_t failures() const noexcept;
  };

  struct SuiteOptions {
    std::optional<std::size_t> n_min;
    std::optional<std::size_t> n_max;
    //! Empty selects the suite's default families.
    std::vector<Family> families;
    //! Largest difference for the bounds and range suites; 0 for the default.
    std::uint64_t bound = 0;
    //! Budget after which remaining scans become witnesses; 0 for none.
    double max_seconds = 0.0;
    //! Prefix cap; 0 takes APWORD_MAX_PREFIX or the default.
    std::uint64_t max_prefix = 0;
    unsigned      threads    = 0;
  };

  //! tm-olga, tm-plus, gtm, bounds, blocks, language, bijective, plus
  //! tm-range, tm-powers, invariance, powerfree and oracle.
  std::vector<std::string> const& suite_names();

  //! Throws Error for an unknown suite or for n outside the hypotheses.
  SuiteResult run_suite(std::string const& name, SuiteOptions const& options = {});

  //! The six (p, q) pairs used by the generalised suites.
  std::vector<Family> const& default_gtm_families();

  //! Case list without the runtime, so equal runs give equal bytes.
  nlohmann::ordered_json to_json(SuiteResult const& r, bool with_runtime = false);

}  // namespace apword

#endif  // APWORD_SUITES_HPP_
