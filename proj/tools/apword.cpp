// apword: fixed points of constant-length substitutions and their
// monochromatic arithmetic progressions.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "apword/ap.hpp"
#include "apword/bijective.hpp"
#include "apword/block.hpp"
#include "apword/language.hpp"
#include "apword/spec_file.hpp"
#include "apword/suites.hpp"
#include "apword/table.hpp"

using namespace apword;
using json = nlohmann::ordered_json;

namespace {

  struct Global {
    std::string subst = "tm";
    std::string seed;
    std::string out;
    std::string format;
  };

  // Writes to --out, or stdout when it is empty or "-".
  void emit(Global const& g, std::string const& text) {
    if (g.out.empty() || g.out == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(g.out, std::ios::binary);
    f << text;
    if (!f) {
      throw Error("cannot write " + g.out);
    }
  }

  struct Loaded {
    SubstitutionSpec spec;
    Letter           seed;
  };

  Loaded load(Global const& g) {
    SubstitutionSpec spec = resolve_subst(g.subst);
    Letter           seed = spec.seed.value_or(0);
    if (!g.seed.empty()) {
      if (g.seed.size() != 1) {
        throw Error("--seed takes one letter");
      }
      seed = spec.letter(g.seed[0]);
    }
    return {std::move(spec), seed};
  }

  json progression_json(Progression const& p) {
    return {{"start", p.start}, {"difference", p.difference},
            {"length", p.length}, {"letter", p.letter}};
  }

  // The n and kind with d = Q^n +- 1 for which a closed form applies.
  std::optional<std::pair<std::size_t, Kind>> closed_form_slot(Family const& f,
                                                              std::uint64_t d) {
    for (std::size_t n = 2; n < 63; ++n) {
      std::uint64_t qn = 0;
      try {
        qn = checked_pow(f.Q(), n);
      } catch (Error const&) {
        break;
      }
      if (qn > d + 1) {
        break;
      }
      for (Kind k : {Kind::plus, Kind::minus}) {
        if (kind_difference(f, n, k) == d && (n > 2 || k == Kind::plus || f.p == f.q)) {
          return std::pair{n, k};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<ClosedForm> closed_form_for(std::string const& subst, std::uint64_t d) {
    if (subst.rfind("spec:", 0) == 0) {
      return std::nullopt;
    }
    Family const f    = parse_family(subst);
    auto const   slot = closed_form_slot(f, d);
    if (!slot) {
      return std::nullopt;
    }
    return closed_form_A(f, slot->first, slot->second);
  }

  bool check_row(TableRow& row, std::optional<ClosedForm> const& form) {
    if (!form) {
      return true;
    }
    row.expected = form->value;
    row.pass     = form->upper_bound ? row.length <= form->value
                                     : row.length == form->value && row.stable;
    return *row.pass;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic progressions in substitution fixed points"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--subst", g.subst, "tm, pq:P,Q or spec:FILE")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed letter of the fixed point");
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "Output format of the subcommand");

  int  exit_code = 0;
  auto run       = [&](auto&& body) {
    return [&, body] {
      try {
        exit_code = body();
      } catch (Error const& e) {
        std::cerr << "apword: " << e.what() << '\n';
        exit_code = 2;
      }
    };
  };

  // word
  std::uint64_t word_count = 64;
  auto*         word       = app.add_subcommand("word", "Prefix of the fixed point");
  word->add_option("--count,-n", word_count, "Number of letters")->capture_default_str();
  word->callback(run([&] {
    Loaded const l = load(g);
    Word const   w = prefix(WordSource(l.spec.rule, l.seed), word_count);
    if (g.format == "raw") {
      emit(g, std::string(w.begin(), w.end()));
    } else if (g.format.empty() || g.format == "text") {
      emit(g, l.spec.spell(w) + "\n");
    } else {
      throw Error("word formats are text and raw");
    }
    return 0;
  }));

  // letter
  std::vector<std::uint64_t> letter_indices;
  auto* letter = app.add_subcommand("letter", "Letters at given indices");
  letter->add_option("indices", letter_indices, "Indices")->required();
  letter->callback(run([&] {
    Loaded const     l = load(g);
    WordSource const ws(l.spec.rule, l.seed);
    std::string      text;
    for (std::uint64_t i : letter_indices) {
      text += std::to_string(i) + " " + l.spec.names[ws.letter_at(i)] + "\n";
    }
    emit(g, text);
    return 0;
  }));

  // ap
  std::uint64_t ap_d = 0, ap_prefix = 0;
  bool          ap_per_letter = false, ap_check = false;
  auto*         ap = app.add_subcommand("ap", "Longest progression of one difference");
  ap->add_option("-d", ap_d, "Difference")->required();
  auto* ap_prefix_opt = ap->add_option("--prefix", ap_prefix, "Scan exactly this prefix");
  ap->add_flag("--auto", "Stability doubling from the automatic prefix (default)")
      ->excludes(ap_prefix_opt);
  ap->add_flag("--per-letter", ap_per_letter, "Report each letter");
  ap->add_flag("--check", ap_check, "Compare with the closed form; exit 1 on mismatch");
  ap->callback(run([&] {
    Loaded const     l = load(g);
    WordSource const ws(l.spec.rule, l.seed);
    json             out;
    out["d"] = ap_d;
    TableRow row;
    if (ap_prefix != 0) {
      Progression const p = longest_ap(ws, ap_d, ap_prefix);
      out["length"]         = p.length;
      out["start"]          = p.start;
      out["letter"]         = p.letter;
      out["prefix_scanned"] = ap_prefix;
      out["stable"]         = false;
      row                   = {ap_d, p.length, p.start, p.letter, false, {}, {}};
      if (ap_per_letter) {
        json pl = json::array();
        for (auto const& q : longest_ap_per_letter(ws, ap_d, ap_prefix)) {
          pl.push_back(progression_json(q));
        }
        out["per_letter"] = pl;
      }
    } else {
      ScanReport const r    = estimate_A(ws, ap_d, ScanOptions::from_env());
      out["length"]         = r.a_lower;
      out["start"]          = r.witness.start;
      out["letter"]         = r.witness.letter;
      out["prefix_scanned"] = r.prefix_scanned;
      out["stable"]         = r.stable;
      row                   = to_row(r);
      if (ap_per_letter) {
        json pl = json::array();
        for (auto const& q : r.per_letter) {
          pl.push_back(progression_json(q));
        }
        out["per_letter"] = pl;
      }
    }
    bool ok = true;
    if (ap_check) {
      auto const form = closed_form_for(g.subst, ap_d);
      if (!form) {
        throw Error("no closed form covers d = " + std::to_string(ap_d));
      }
      ok              = check_row(row, form);
      out["expected"] = form->value;
      out["relation"] = form->upper_bound ? "<=" : "==";
      out["pass"]     = ok;
    }
    emit(g, out.dump(2) + "\n");
    return ok ? 0 : 1;
  }));

  // scan
  std::uint64_t scan_d_max = 0;
  bool          scan_reduce = false, scan_check = false;
  unsigned      scan_threads = 0;
  auto*         scan = app.add_subcommand("scan", "Estimates A(d) for d = 1..d-max");
  scan->add_option("--d-max", scan_d_max, "Largest difference")->required();
  scan->add_flag("--reduce", scan_reduce, "Scan d with factors Q removed");
  scan->add_flag("--check", scan_check, "Add closed-form expectations; exit 1 on mismatch");
  scan->add_option("--threads", scan_threads, "Worker threads (0 = all cores)");
  scan->callback(run([&] {
    Loaded const l = load(g);
    RangeOptions opts;
    opts.scan    = ScanOptions::from_env();
    opts.reduce  = scan_reduce;
    opts.threads = scan_threads;
    bool ok      = true;
    std::vector<TableRow> rows;
    for (auto const& r : scan_range(WordSource(l.spec.rule, l.seed), scan_d_max, opts)) {
      TableRow row = to_row(r);
      if (scan_check) {
        ok = check_row(row, closed_form_for(g.subst, r.d)) && ok;
      }
      rows.push_back(row);
    }
    emit_table(rows, parse_table_format(g.format.empty() ? "csv" : g.format), g.out);
    return ok ? 0 : 1;
  }));

  // witness
  std::string   wit_family = "tm", wit_kind = "plus";
  std::size_t   wit_n      = 2;
  bool          wit_check  = false;
  auto*         witness    = app.add_subcommand("witness", "Diagonal witness progression");
  witness->add_option("--family", wit_family, "tm or pq:P,Q")->capture_default_str();
  witness->add_option("--n,-n", wit_n, "Level n")->required();
  witness->add_option("--kind", wit_kind, "plus or minus")->capture_default_str();
  witness->add_flag("--check", wit_check, "Compare with the closed form; exit 1 on mismatch");
  witness->callback(run([&] {
    Family const      f = parse_family(wit_family);
    Kind const        k = parse_kind(wit_kind);
    Progression const p = witness_ap(f.substitution(), wit_n, k);
    json              out = progression_json(p);
    bool              ok  = true;
    if (wit_check) {
      ClosedForm const form = closed_form_A(f, wit_n, k);
      if (form.upper_bound) {
        throw Error("a witness cannot confirm an upper bound");
      }
      ok              = p.length == form.value;
      out["expected"] = form.value;
      out["pass"]     = ok;
    }
    emit(g, out.dump(2) + "\n");
    return ok ? 0 : 1;
  }));

  // table
  std::size_t tab_n_min = 2, tab_n_max = 6;
  std::string tab_kind  = "both";
  auto*       table     = app.add_subcommand("table", "A at Q^n +- 1 next to its closed form");
  table->add_option("--n-min", tab_n_min, "Smallest n")->capture_default_str();
  table->add_option("--n-max", tab_n_max, "Largest n")->capture_default_str();
  table->add_option("--kind", tab_kind, "plus, minus or both")->capture_default_str();
  table->callback(run([&] {
    Family const f = parse_family(g.subst);
    std::vector<Kind> kinds;
    if (tab_kind == "both") {
      kinds = {Kind::plus, Kind::minus};
    } else {
      kinds = {parse_kind(tab_kind)};
    }
    WordSource const      ws(f.substitution(), 0);
    ScanOptions const     opts = ScanOptions::from_env();
    std::vector<TableRow> rows;
    bool                  ok = true;
    for (std::size_t n = tab_n_min; n <= tab_n_max; ++n) {
      for (Kind k : kinds) {
        std::uint64_t const d = kind_difference(f, n, k);
        TableRow            row = to_row(estimate_A(ws, d, opts));
        if (n > 2 || k == Kind::plus || f.p == f.q) {
          ok = check_row(row, closed_form_A(f, n, k)) && ok;
        }
        rows.push_back(row);
      }
    }
    emit_table(rows, parse_table_format(g.format.empty() ? "csv" : g.format), g.out);
    return ok ? 0 : 1;
  }));

  // block
  std::size_t blk_iters  = 2;
  std::string blk_letter;
  auto*       block = app.add_subcommand("block", "Block iterate as ascii, pbm or json");
  block->add_option("--iters", blk_iters, "Number of block substitution steps")
      ->capture_default_str();
  block->add_option("--letter", blk_letter, "Letter to iterate (default: seed)");
  block->callback(run([&] {
    Loaded const l = load(g);
    Letter const a = blk_letter.empty() ? l.seed : l.spec.letter(blk_letter.at(0));
    Block const  b = block_iterate(l.spec.rule, a, blk_iters);
    std::string const fmt = g.format.empty() ? "ascii" : g.format;
    if (fmt == "ascii") {
      emit(g, render(b, RenderFormat::ascii));
    } else if (fmt == "pbm") {
      emit(g, render(b, RenderFormat::pbm));
    } else if (fmt == "json") {
      json rows = json::array();
      for (std::size_t i = 0; i < b.side; ++i) {
        rows.push_back(l.spec.spell(b.row(i)));
      }
      json checks = json::array();
      for (auto const& c : check_block_lemmas(l.spec.rule, a, blk_iters).checks) {
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}});
      }
      json out{{"side", b.side}, {"letter", std::string(1, l.spec.names[a])}, {"iters", blk_iters},
               {"rows", rows}, {"checks", checks}};
      emit(g, out.dump(2) + "\n");
    } else {
      throw Error("block formats are ascii, pbm and json");
    }
    return 0;
  }));

  // factors
  std::size_t fac_length = 0;
  std::string fac_contains;
  auto*       factors_cmd = app.add_subcommand("factors", "Factors of one length");
  factors_cmd->add_option("--length,-l", fac_length, "Factor length");
  factors_cmd->add_option("--contains", fac_contains, "Only test membership of this word");
  factors_cmd->callback(run([&] {
    Loaded const l = load(g);
    if (!fac_contains.empty()) {
      bool const in = contains(l.spec.rule, l.seed, l.spec.parse(fac_contains));
      emit(g, std::string(in ? "true" : "false") + "\n");
      return in ? 0 : 1;
    }
    if (fac_length == 0) {
      throw Error("give --length or --contains");
    }
    std::string text;
    for (Word const& w : factors(l.spec.rule, l.seed, fac_length).words) {
      text += l.spec.spell(w) + "\n";
    }
    emit(g, text);
    return 0;
  }));

  // powerfree
  std::size_t   pf_exponent = 0;
  bool          pf_overlap  = false;
  std::uint64_t pf_prefix   = 100000;
  unsigned      pf_threads  = 0;
  auto*         powerfree   = app.add_subcommand("powerfree", "Repetition search in a prefix");
  auto* pf_e = powerfree->add_option("--exponent,-e", pf_exponent, "Integer exponent e");
  powerfree->add_flag("--overlap", pf_overlap, "Look for overlaps w w w_0")->excludes(pf_e);
  powerfree->add_option("--prefix", pf_prefix, "Prefix length")->capture_default_str();
  powerfree->add_option("--threads", pf_threads, "Worker threads (0 = all cores)");
  powerfree->callback(run([&] {
    if (!pf_overlap && pf_exponent == 0) {
      throw Error("give --exponent or --overlap");
    }
    Loaded const          l = load(g);
    Repetition const      rep{pf_overlap ? 2 : pf_exponent, pf_overlap};
    PowerFreeResult const r
        = power_free_check(WordSource(l.spec.rule, l.seed), rep, pf_prefix, pf_threads);
    json out{{"prefix", pf_prefix},
             {"repetition", pf_overlap ? std::string("overlap")
                                       : "power " + std::to_string(pf_exponent)},
             {"free", r.free}};
    if (r.first) {
      out["start"]  = r.first->start;
      out["period"] = r.first->period;
      out["span"]   = r.first->span;
    }
    emit(g, out.dump(2) + "\n");
    return 0;
  }));

  // bij
  std::string   bij_spec, bij_check = "diagonal", bij_letter;
  std::size_t   bij_n = 2;
  std::uint64_t bij_k = 0, bij_prefix = 100000, bij_d = 0, bij_L = 0, bij_n_max = 20;
  auto*         bij = app.add_subcommand("bij", "Checks for bijective rules");
  bij->add_option("--spec", bij_spec, "Spec file (overrides --subst)");
  bij->add_option("--check", bij_check, "diagonal, cna, find or absence")->capture_default_str();
  bij->add_option("--n,-n", bij_n, "Level (diagonal) or difference (cna)")->capture_default_str();
  bij->add_option("--letter", bij_letter, "Letter (default: seed)");
  bij->add_option("-k", bij_k, "Run bound k (default: longest letter run)");
  bij->add_option("--prefix", bij_prefix, "Prefix length")->capture_default_str();
  bij->add_option("-d", bij_d, "Difference for absence");
  bij->add_option("-L", bij_L, "Length for absence");
  bij->add_option("--n-max", bij_n_max, "Search bound for find")->capture_default_str();
  bij->callback(run([&] {
    Global local = g;
    if (!bij_spec.empty()) {
      local.subst = "spec:" + bij_spec;
    }
    Loaded const     l = load(local);
    WordSource const ws(l.spec.rule, l.seed);
    Letter const     a = bij_letter.empty() ? l.seed : l.spec.letter(bij_letter.at(0));
    std::uint64_t const k = bij_k != 0 ? bij_k : max_run(l.spec.rule, l.seed);
    json out{{"check", bij_check}};
    if (bij_check == "diagonal") {
      bool const ok = diagonal_ap_check(l.spec.rule, a, bij_n);
      out["letter"] = std::string(1, l.spec.names[a]);
      out["n"]      = bij_n;
      out["holds"]  = ok;
      emit(g, out.dump(2) + "\n");
      return ok ? 0 : 1;
    }
    if (bij_check == "cna") {
      FrequencyEstimate const e = cna_frequency(ws, bij_n, a, k, bij_prefix);
      out["n"]         = e.n;
      out["letter"]    = std::string(1, l.spec.names[e.a]);
      out["k"]         = e.k;
      out["count"]     = e.count;
      out["prefix"]    = e.N;
      out["frequency"] = e.frequency;
    } else if (bij_check == "find") {
      auto const found = find_positive_cna(ws, k, bij_n_max, bij_prefix);
      out["k"]     = k;
      out["found"] = found.has_value();
      if (found) {
        out["n"]      = found->first;
        out["letter"] = std::string(1, l.spec.names[found->second]);
      }
    } else if (bij_check == "absence") {
      if (bij_d == 0 || bij_L == 0) {
        throw Error("absence needs -d and -L");
      }
      out["d"]      = bij_d;
      out["L"]      = bij_L;
      out["prefix"] = bij_prefix;
      out["absent"] = absence_check(ws, bij_d, bij_L, bij_prefix);
    } else {
      throw Error("unknown check \"" + bij_check + "\"");
    }
    emit(g, out.dump(2) + "\n");
    return 0;
  }));

  // verify
  std::vector<std::string> ver_suites;
  std::vector<std::string> ver_families;
  SuiteOptions             ver_opts;
  std::size_t              ver_n_min = 0, ver_n_max = 0;
  bool                     ver_runtime = false;
  auto* verify = app.add_subcommand("verify", "Reproduction suites; exit 1 on any failure");
  verify->add_option("--suite", ver_suites, "Suite names (default: all)");
  verify->add_option("--n-min", ver_n_min, "Smallest n");
  verify->add_option("--n-max", ver_n_max, "Largest n");
  verify->add_option("--family", ver_families, "Families (tm or pq:P,Q)");
  verify->add_option("--bound", ver_opts.bound, "Largest difference for range suites");
  verify->add_option("--max-seconds", ver_opts.max_seconds,
                     "Budget after which scans become witnesses");
  verify->add_option("--max-prefix", ver_opts.max_prefix, "Prefix cap for scans");
  verify->add_option("--threads", ver_opts.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--runtime", ver_runtime, "Include runtimes in the JSON");
  verify->callback(run([&] {
    if (verify->count("--n-min") != 0) {
      ver_opts.n_min = ver_n_min;
    }
    if (verify->count("--n-max") != 0) {
      ver_opts.n_max = ver_n_max;
    }
    for (auto const& f : ver_families) {
      ver_opts.families.push_back(parse_family(f));
    }
    if (ver_suites.empty()) {
      ver_suites = suite_names();
    }
    json results = json::array();
    bool ok      = true;
    for (auto const& name : ver_suites) {
      SuiteResult const r = run_suite(name, ver_opts);
      std::cerr << name << ": " << (r.pass() ? "pass" : "FAIL") << " ("
                << r.cases.size() << " cases, " << r.failures() << " failed, "
                << r.runtime_seconds << " s)\n";
      ok = ok && r.pass();
      results.push_back(to_json(r, ver_runtime));
    }
    emit(g, json{{"schema_version", 1}, {"pass", ok}, {"suites", results}}.dump(2) + "\n");
    return ok ? 0 : 1;
  }));

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
