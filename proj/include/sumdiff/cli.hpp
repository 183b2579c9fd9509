#pragma once

// Command-line front end. run() parses arguments, dispatches to the library
// and writes the report; main() in tools/ only forwards argv.
//
// Exit codes: 0 success, 1 domain error or bad arguments, 2 search refused by
// the node budget, 3 conjecture counterexample found.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "constructions.hpp"
#include "lemmas.hpp"
#include "verify.hpp"

namespace sumdiff::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kBudgetRefused = 2, kCounterexample = 3 };

enum class Format { json, csv, text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw domain_error("unknown format '" + s + "' (expected json, csv or text)");
}

/// Worker count from SUMDIFF_WORKERS, else 1.
inline unsigned default_workers() {
  if (const char* env = std::getenv("SUMDIFF_WORKERS")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw domain_error(std::string("malformed ") + what + " list: '" + text + "'");
    }
  }
  if (out.empty()) throw domain_error(std::string("empty ") + what + " list");
  return out;
}

/// Parsed arguments of every subcommand.
struct JobConfig {
  std::string quantity;  // formula quantity, construction kind or lemma name
  std::string group;
  std::int64_t r = 0, s = 0, m = 0, n = 0, e = 0, p = 0, d = 0, c = 0, v = 0, d1 = 0, d2 = 0;
  std::string objective = "diff";
  std::string mode = "bnb";
  std::string symmetry = "auto";
  bool no_normalize = false;
  std::int64_t max_order = 0, min_order = 1;
  unsigned workers = 1;
  std::uint64_t node_budget = SearchOptions{}.node_budget;
  std::string format = "text";
  std::string output;
  std::string out_witness;
  std::string witness;
  std::string lambda, mu_seq;
  std::int64_t max_len = 6, max_part = 6;
  std::uint64_t samples = 0, seed = 1;

  SearchOptions search_options() const {
    SearchOptions o;
    if (mode == "bnb") o.mode = SearchMode::branch_and_bound;
    else if (mode == "exhaustive") o.mode = SearchMode::exhaustive;
    else throw domain_error("unknown mode '" + mode + "' (expected bnb or exhaustive)");
    if (symmetry == "auto") o.automorphisms = Symmetry::automatic;
    else if (symmetry == "on") o.automorphisms = Symmetry::on;
    else if (symmetry == "off") o.automorphisms = Symmetry::off;
    else throw domain_error("unknown symmetry '" + symmetry + "' (expected auto, on or off)");
    o.normalize_translation = !no_normalize;
    o.workers = workers;
    o.node_budget = node_budget;
    return o;
  }
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline std::string list_to_string(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

/// Emits an ordered key/value record in the requested format.
inline void emit(std::ostream& out, Format f, const ojson& rec) {
  switch (f) {
    case Format::json: out << rec.dump() << '\n'; break;
    case Format::csv: {
      std::string header, row;
      for (auto it = rec.begin(); it != rec.end(); ++it) {
        header += (header.empty() ? "" : ",") + it.key();
        auto cell = it->is_string() ? it->get<std::string>() : it->dump();
        if (cell.find_first_of(",\"") != std::string::npos) {
          std::string q = "\"";
          for (char ch : cell) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          cell = q + "\"";
        }
        row += (row.empty() && it == rec.begin() ? "" : ",") + cell;
      }
      out << header << '\n' << row << '\n';
      break;
    }
    case Format::text: {
      bool first = true;
      for (auto it = rec.begin(); it != rec.end(); ++it) {
        out << (first ? "" : " ") << it.key() << '=' << (it->is_string() ? it->get<std::string>() : it->dump());
        first = false;
      }
      out << '\n';
      break;
    }
  }
}

inline GroupSpec require_group(const JobConfig& cfg) {
  return GroupSpec::parse(cfg.group);
}

inline int run_formula(const JobConfig& cfg, Format f, std::ostream& out) {
  ojson rec;
  rec["quantity"] = cfg.quantity;
  const auto& q = cfg.quantity;
  if (q == "mu" || q == "rho-plus" || q == "rho-minus" || q == "upper-bound") {
    const auto g = require_group(cfg);
    rec["group"] = g.to_string();
    rec["r"] = cfg.r;
    if (q == "mu") {
      rec["s"] = cfg.s;
      rec["value"] = mu(g, cfg.r, cfg.s);
      rec["status"] = std::string(to_string(FormulaStatus::theorem));
    } else if (q == "rho-plus") {
      rec["value"] = rho_plus(g, cfg.r);
      rec["status"] = std::string(to_string(FormulaStatus::theorem));
    } else if (q == "rho-minus") {
      const auto v = rho_minus_conjectured(g, cfg.r);
      rec["value"] = v.value;
      rec["status"] = std::string(to_string(v.status));
    } else {
      const auto status = rho_minus_status(g);
      rec["value"] = difference_upper_bound(g, cfg.r);
      rec["status"] = std::string(to_string(status == FormulaStatus::conjectured ? FormulaStatus::upper_bound_only : status));
    }
  } else if (q == "vector-space") {
    rec["p"] = cfg.p;
    rec["d"] = cfg.d;
    rec["r"] = cfg.r;
    rec["value"] = rho_minus_vector_space(cfg.p, static_cast<int>(cfg.d), cfg.r);
    rec["status"] = std::string(to_string(FormulaStatus::theorem_vector_space));
  } else if (q == "rho-pm") {
    rec["p"] = cfg.p;
    rec["c"] = cfg.c;
    rec["v"] = cfg.v;
    rec["m"] = cfg.c * cfg.p + cfg.v;
    rec["value"] = rho_pm_predicted(cfg.p, cfg.c, cfg.v);
    rec["status"] = std::string(to_string(FormulaStatus::theorem));
  } else if (q == "divisors") {
    rec["n"] = cfg.n;
    rec["value"] = list_to_string(divisors(cfg.n));
  } else if (q == "restricted-divisors") {
    rec["n"] = cfg.n;
    rec["e"] = cfg.e;
    rec["r"] = cfg.r;
    rec["value"] = list_to_string(restricted_divisor_set(cfg.n, cfg.e, cfg.r));
  } else if (q == "invariant-factors") {
    const auto g = require_group(cfg);
    rec["group"] = g.to_string();
    rec["value"] = invariant_factors(g).to_string();
  } else if (q == "groups") {
    rec["n"] = cfg.n;
    std::string list;
    for (const auto& g : enumerate_abelian_groups(cfg.n)) list += (list.empty() ? "" : ";") + std::string("[") + g.to_string() + "]";
    rec["value"] = list;
  } else {
    throw domain_error("unknown formula quantity '" + q + "'");
  }
  emit(out, f, rec);
  return kOk;
}

inline int run_construct(const JobConfig& cfg, Format f, std::ostream& out) {
  const auto& k = cfg.quantity;
  std::optional<WitnessReport> w;
  if (k == "coset") w = coset_progression(cfg.n, cfg.r, cfg.d);
  else if (k == "best-coset") w = best_coset_progression(cfg.n, cfg.r);
  else if (k == "product") w = product_construction(require_group(cfg), cfg.r, cfg.d1, cfg.d2);
  else if (k == "best-product") w = best_product_construction(require_group(cfg), cfg.r);
  else if (k == "lex") w = lex_prefix(cfg.p, static_cast<int>(cfg.d), cfg.r);
  else throw domain_error("unknown construction '" + k + "' (expected coset, best-coset, product, best-product or lex)");

  ojson rec;
  rec["construction"] = std::string(to_string(w->kind));
  rec["group"] = w->set.group().to_string();
  rec["r"] = cfg.r;
  rec["size"] = w->set.size();
  rec["achieved"] = w->achieved_size;
  rec["bound"] = w->target_bound;
  rec["meets_bound"] = w->meets_bound();
  rec["set"] = f == Format::json ? ojson(elements_to_json(w->set)) : ojson(w->set.to_string());
  emit(out, f, rec);
  if (!cfg.out_witness.empty()) write_witness_file(cfg.out_witness, w->set);
  return kOk;
}

inline void emit_record(std::ostream& out, Format f, const SearchRecord& rec, bool& header_done) {
  switch (f) {
    case Format::json: out << to_json(rec).dump() << '\n'; break;
    case Format::csv:
      if (!header_done) out << csv_header() << '\n';
      header_done = true;
      out << to_csv_row(rec) << '\n';
      break;
    case Format::text: out << to_text(rec) << '\n'; break;
  }
  out.flush();
}

inline int run_search(const JobConfig& cfg, Objective objective, std::int64_t r, Format f, std::ostream& out) {
  const auto g = require_group(cfg);
  const auto opts = cfg.search_options();
  bool header_done = false;
  const auto lo = r > 0 ? r : 1;
  const auto hi = r > 0 ? r : g.order();
  for (auto k = lo; k <= hi; ++k) emit_record(out, f, run_search_record(g, k, objective, opts), header_done);
  return kOk;
}

inline int run_verify(const JobConfig& cfg, Format f, std::ostream& out, std::ostream& err) {
  bool header_done = false;
  const auto report = verify_conjecture(
      cfg.max_order, cfg.search_options(), [&](const SearchRecord& rec) { emit_record(out, f, rec, header_done); },
      cfg.min_order);
  const auto bad = report.counterexamples();
  std::int64_t groups = 0;
  for (auto n = std::max<std::int64_t>(cfg.min_order, 1); n <= cfg.max_order; ++n)
    groups += static_cast<std::int64_t>(enumerate_abelian_groups(n).size());

  ojson summary;
  summary["summary"] = "verify-conjecture";
  summary["max_order"] = cfg.max_order;
  summary["groups"] = groups;
  summary["records"] = report.records.size();
  summary["counterexamples"] = bad.size();
  summary["all_equal"] = report.all_equal();
  if (f == Format::csv) emit(err, Format::text, summary);
  else emit(out, f, summary);
  for (const auto& rec : bad) err << "counterexample: " << to_text(rec) << '\n';
  return bad.empty() ? kOk : kCounterexample;
}

inline GroupSubset hyperplane_set(const JobConfig& cfg) {
  if (!cfg.witness.empty()) return read_witness_file(cfg.witness);
  throw domain_error("lemmas hyperplane: --witness <file> is required");
}

inline void put_summary(ojson& rec, const SweepSummary& s) {
  rec["checked"] = s.checked;
  rec["passed"] = s.passed;
  rec["vacuous"] = s.vacuous;
  rec["failed"] = s.failed;
}

inline int run_lemmas(const JobConfig& cfg, Format f, std::ostream& out) {
  const auto& k = cfg.quantity;
  ojson rec;
  rec["lemma"] = k;
  bool failed = false;
  if (k == "a1") {
    const PartitionSeq lambda(parse_int_list(cfg.lambda, "lambda"));
    const auto res = check_lemma_a1(lambda);
    rec["lambda"] = list_to_string(lambda.values());
    rec["mu"] = list_to_string(mu_from_lambda(lambda));
    rec["outcome"] = std::string(to_string(res.outcome));
    if (res.outcome == Outcome::vacuous) {
      rec["reason"] = res.reason;
    } else {
      rec["lhs"] = res.lhs;
      rec["rhs"] = res.rhs;
      rec["slack"] = res.slack();
    }
    rec["ferrers_containment"] = ferrers_containment(lambda);
    failed = res.outcome == Outcome::fails;
  } else if (k == "a2") {
    const PartitionSeq lambda(parse_int_list(cfg.lambda, "lambda"));
    const auto mu_vals = cfg.mu_seq.empty() ? minimal_feasible_mu(cfg.p, lambda) : parse_int_list(cfg.mu_seq, "mu");
    const auto res = check_lemma_a2(cfg.p, cfg.n, lambda, mu_vals);
    rec["p"] = cfg.p;
    rec["n"] = cfg.n;
    rec["lambda"] = list_to_string(lambda.values());
    rec["mu"] = list_to_string(mu_vals);
    rec["mu_mode"] = cfg.mu_seq.empty() ? "minimal" : "given";
    rec["outcome"] = std::string(to_string(res.outcome));
    if (res.outcome == Outcome::vacuous) {
      rec["reason"] = res.reason;
    } else {
      rec["lhs"] = res.lhs;
      rec["rhs"] = res.rhs;
      rec["slack"] = res.slack();
    }
    failed = res.outcome == Outcome::fails;
  } else if (k == "hyperplane") {
    const auto s = hyperplane_set(cfg);
    const auto res = check_hyperplane_lemma(cfg.p, static_cast<int>(cfg.d), cfg.m, s);
    rec["p"] = cfg.p;
    rec["d"] = cfg.d;
    rec["m"] = cfg.m;
    rec["size"] = s.size();
    rec["hyperplanes"] = res.hyperplanes;
    rec["min_intersection"] = res.min_intersection;
    rec["hypothesis_holds"] = res.hypothesis_holds;
    rec["conclusion_holds"] = res.conclusion_holds;
    rec["implication_ok"] = res.implication_ok();
    failed = !res.implication_ok();
  } else if (k == "sweep-a1") {
    rec["max_len"] = cfg.max_len;
    rec["max_part"] = cfg.max_part;
    const auto a1 = sweep_lemma_a1(static_cast<int>(cfg.max_len), cfg.max_part);
    put_summary(rec, a1);
    const auto fer = sweep_ferrers_containment(static_cast<int>(cfg.max_len), cfg.max_part);
    rec["ferrers_checked"] = fer.checked;
    rec["ferrers_failed"] = fer.failed;
    failed = a1.failed > 0 || fer.failed > 0;
  } else if (k == "sweep-a2") {
    rec["p"] = cfg.p;
    const auto s = sweep_lemma_a2(cfg.p);
    put_summary(rec, s);
    failed = s.failed > 0;
  } else if (k == "sweep-hyperplane") {
    rec["p"] = cfg.p;
    rec["d"] = cfg.d;
    rec["m"] = cfg.m;
    rec["samples"] = cfg.samples;
    const auto s = cfg.samples == 0
                       ? sweep_hyperplane_exhaustive(cfg.p, static_cast<int>(cfg.d), cfg.m)
                       : sweep_hyperplane_random(cfg.p, static_cast<int>(cfg.d), cfg.m, cfg.samples, cfg.seed);
    put_summary(rec, s);
    failed = s.failed > 0;
  } else {
    throw domain_error("unknown lemma '" + k + "' (expected a1, a2, hyperplane, sweep-a1, sweep-a2 or sweep-hyperplane)");
  }
  emit(out, f, rec);
  return failed ? kDomainError : kOk;
}

inline int run_measure(const JobConfig& cfg, Format f, std::ostream& out) {
  const auto a = read_witness_file(cfg.witness);
  ojson rec;
  rec["group"] = a.group().to_string();
  rec["size"] = a.size();
  rec["sumset"] = sumset(a, a).size();
  rec["difference_set"] = difference_set(a, a).size();
  if (!a.empty()) rec["signed_sumset"] = signed_sumset_2(a).size();
  emit(out, f, rec);
  return kOk;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  cfg.workers = default_workers();

  CLI::App app{"Minimum sumset, difference-set and signed-sumset sizes in finite abelian groups", "sumdiff"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", cfg.output, "Write the report to this file instead of stdout");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "bnb (branch and bound) or exhaustive")->check(CLI::IsMember({"bnb", "exhaustive"}));
    sub->add_option("--symmetry", cfg.symmetry, "Automorphism pruning: auto, on or off")->check(CLI::IsMember({"auto", "on", "off"}));
    sub->add_flag("--no-normalize", cfg.no_normalize, "Do not force the identity into A");
    sub->add_option("--workers", cfg.workers, "Worker threads (default: $SUMDIFF_WORKERS or 1; 0 = all cores)");
    sub->add_option("--node-budget", cfg.node_budget, "Refuse jobs estimated above this many subsets");
  };

  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form quantity");
  formula->add_option("quantity", cfg.quantity,
                      "mu, rho-plus, rho-minus, upper-bound, vector-space, rho-pm, divisors, restricted-divisors, "
                      "invariant-factors or groups")
      ->required();
  formula->add_option("--group", cfg.group, "Group as comma-separated cyclic factors, e.g. 4,2");
  formula->add_option("--r", cfg.r, "Cardinality r");
  formula->add_option("--s", cfg.s, "Cardinality s");
  formula->add_option("--p", cfg.p, "Prime p");
  formula->add_option("--d", cfg.d, "Dimension d");
  formula->add_option("--c", cfg.c, "c in m = cp + v");
  formula->add_option("--v", cfg.v, "v in m = cp + v");
  formula->add_option("--n", cfg.n, "Integer n (group order)");
  formula->add_option("--e", cfg.e, "Group exponent e");
  add_common(formula);

  auto* construct = app.add_subcommand("construct", "Build an extremal witness set and measure it");
  construct->add_option("kind", cfg.quantity, "coset, best-coset, product, best-product or lex")->required();
  construct->add_option("--group", cfg.group, "Group (product constructions)");
  construct->add_option("--n", cfg.n, "Order of the cyclic group (coset constructions)");
  construct->add_option("--r", cfg.r, "Requested cardinality")->required();
  construct->add_option("--d", cfg.d, "Subgroup order (coset) or dimension (lex)");
  construct->add_option("--d1", cfg.d1, "Order of the subgroup A1 (product)");
  construct->add_option("--d2", cfg.d2, "Divisor used for A2 (product)");
  construct->add_option("--p", cfg.p, "Prime (lex)");
  construct->add_option("--out", cfg.out_witness, "Write the witness set as JSON to this file");
  add_common(construct);

  auto* search = app.add_subcommand("search", "Exact minimum by search");
  search->add_option("--group", cfg.group, "Group")->required();
  search->add_option("--r", cfg.r, "Cardinality (default: every r)");
  search->add_option("--objective", cfg.objective, "diff, sum or signed2")->check(CLI::IsMember({"diff", "sum", "signed2"}));
  add_search(search);
  add_common(search);

  auto* signed_cmd = app.add_subcommand("signed", "Exact minimum of |2±A| by search");
  signed_cmd->add_option("--group", cfg.group, "Group")->required();
  signed_cmd->add_option("--m", cfg.m, "Cardinality (default: every m)");
  add_search(signed_cmd);
  add_common(signed_cmd);

  auto* verify = app.add_subcommand("verify-conjecture", "Compare exact min |A-A| with the conjectured formula");
  verify->add_option("--max-order", cfg.max_order, "Largest group order")->required();
  verify->add_option("--min-order", cfg.min_order, "Smallest group order");
  add_search(verify);
  add_common(verify);

  auto* lemmas = app.add_subcommand("lemmas", "Check the sequence and hyperplane lemmas");
  lemmas->add_option("lemma", cfg.quantity, "a1, a2, hyperplane, sweep-a1, sweep-a2 or sweep-hyperplane")->required();
  lemmas->add_option("--lambda", cfg.lambda, "Weakly decreasing sequence, e.g. 3,3,1");
  lemmas->add_option("--mu", cfg.mu_seq, "Explicit mu sequence for a2 (default: minimal feasible mu)");
  lemmas->add_option("--p", cfg.p, "Prime p");
  lemmas->add_option("--n", cfg.n, "n in sum(lambda) >= np + 1");
  lemmas->add_option("--d", cfg.d, "Dimension");
  lemmas->add_option("--m", cfg.m, "m in the hyperplane lemma");
  lemmas->add_option("--witness", cfg.witness, "Witness JSON file holding S (hyperplane)");
  lemmas->add_option("--max-len", cfg.max_len, "sweep-a1: longest lambda");
  lemmas->add_option("--max-part", cfg.max_part, "sweep-a1: largest part");
  lemmas->add_option("--samples", cfg.samples, "sweep-hyperplane: random samples (0 = every subset)");
  lemmas->add_option("--seed", cfg.seed, "sweep-hyperplane: random seed");
  add_common(lemmas);

  auto* measure = app.add_subcommand("measure", "Measure |A|, |A+A|, |A-A| and |2±A| of a witness file");
  measure->add_option("--witness", cfg.witness, "Witness JSON file")->required();
  add_common(measure);

  std::vector<const char*> argv{"sumdiff"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    const auto fmt = parse_format(cfg.format);
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw domain_error("cannot open output file " + cfg.output);
      sink = &file;
    }
    if (formula->parsed()) return detail::run_formula(cfg, fmt, *sink);
    if (construct->parsed()) return detail::run_construct(cfg, fmt, *sink);
    if (search->parsed()) return detail::run_search(cfg, parse_objective(cfg.objective), cfg.r, fmt, *sink);
    if (signed_cmd->parsed()) return detail::run_search(cfg, Objective::signed2, cfg.m, fmt, *sink);
    if (verify->parsed()) return detail::run_verify(cfg, fmt, *sink, err);
    if (lemmas->parsed()) return detail::run_lemmas(cfg, fmt, *sink);
    if (measure->parsed()) return detail::run_measure(cfg, fmt, *sink);
  } catch (const budget_exceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kBudgetRefused;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kDomainError;
}

}  // namespace sumdiff::cli
