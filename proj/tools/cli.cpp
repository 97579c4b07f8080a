#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

#include "parryscope/analysis.hpp"
#include "parryscope/corpus.hpp"
#include "parryscope/report.hpp"
#include "parryscope/substitution.hpp"
#include "parryscope/witness.hpp"

namespace parryscope::cli {

namespace {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return kUsage;
    case ErrorCode::IntegerBase:
    case ErrorCode::NotApplicable:
      return kNotApplicable;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::DigitwiseSubtractionFailed:
    case ErrorCode::VerificationFailed:
      return kVerification;
    default:
      return kInvalid;
  }
}

Json error_json(const Error& e) {
  Json out = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (e.index()) out["index"] = *e.index();
  return out;
}

struct Options {
  std::size_t budget = 0;
  std::string format;
  unsigned threads = 0;
};

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Rough decimal value of x, from a narrow rational enclosure of beta.
double approximate(const ZBeta& x) {
  const BetaField& field = *x.field();
  while (true) {
    const auto iv = field.beta_interval();
    if (iv.hi - iv.lo < mpq_class(1, 1000000000) * mpq_class(1, 1000000000)) {
      mpq_class acc = 0;
      const auto& c = x.coords();
      for (std::size_t i = c.size(); i-- > 0;) acc = acc * iv.hi + c[i];
      return acc.get_d();
    }
    field.refine();
  }
}

int cmd_validate(const std::string& text, std::ostream& out) {
  const Word candidate = Word::parse(text);
  try {
    const auto d = RenyiExpansion::validate(candidate);
    print(out, {{"valid", true},
                {"m", d.m()},
                {"d", d.str()},
                {"polynomial", parry_polynomial_str(d)},
                {"quasi_greedy_period", quasi_greedy(d).period.str()}});
    return kOk;
  } catch (const Error& e) {
    Json j = {{"valid", false}, {"d", candidate.str()}};
    j.update(error_json(e));
    if (e.code() == ErrorCode::ParryViolation && e.index()) {
      j["suffix"] = candidate.suffix(candidate.size() - *e.index() + 1).str();
    }
    print(out, j);
    return exit_code(e.code());
  }
}

int cmd_classify(const RenyiExpansion& d, std::size_t oracle_n, const Options& opt, std::ostream& out) {
  const Classification c = oracle_n ? classify_affine(d, oracle_n, opt.budget) : classify_affine(d);
  Json j = {{"d", d.str()}, {"m", d.m()}};
  j.update(to_json(c));
  if (c.oracle) {
    j["complexity"] = c.oracle->profile.values;
    j["prefix_length"] = c.oracle->profile.prefix_length_used;
  }
  print(out, j);
  return c.oracle && c.oracle->stabilized && c.oracle->conclusive && !c.oracle->agrees ? kVerification : kOk;
}

int cmd_witness(const RenyiExpansion& d, std::ostream& out) {
  WitnessBundle b;
  try {
    b = construct_witness(d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
    Json j = {{"d", d.str()}};
    j.update(error_json(e));
    j.update(to_json(classify_affine(d)));
    print(out, j);
    return kNotApplicable;
  }
  const WitnessVerification v = verify_witness(d, b, false);
  Json j = {{"d", d.str()}, {"bundle", to_json(b)}, {"verification", to_json(v)}, {"all_pass", v.all()}};
  print(out, j);
  return v.all() ? kOk : kVerification;
}

struct ScanRow {
  std::string d;
  std::size_t m = 0;
  std::optional<Classification> cls;
  std::optional<Error> error;
};

std::string verdict_text(const Classification& c) {
  if (c.affine) return "Affine(" + std::to_string(c.slope) + "," + std::to_string(c.intercept) + ")";
  return c.reason == NonAffineReason::TmNotOne ? "NotAffine(TmNotOne)" : "NotAffine(FractionalPower:" + c.border->str() + ")";
}

int cmd_scan(const std::string& spec_text, std::size_t oracle_n, const Options& opt, std::ostream& out,
             std::ostream& err) {
  const CorpusSpec spec = CorpusSpec::parse(spec_text);
  const Corpus corpus = enumerate_corpus(spec);
  std::vector<ScanRow> rows(corpus.members.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      const RenyiExpansion& d = corpus.members[i];
      ScanRow& row = rows[i];
      row.d = d.str();
      row.m = d.m();
      try {
        row.cls = oracle_n ? classify_affine(d, oracle_n, opt.budget) : classify_affine(d);
      } catch (const Error& e) {
        row.error = e;
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_threads = std::min<std::size_t>(opt.threads ? opt.threads : hw, std::max<std::size_t>(rows.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t disagreements = 0, unstable = 0, inconclusive = 0, affine = 0, errors = 0;
  for (const auto& row : rows) {
    if (row.error) {
      ++errors;
      continue;
    }
    affine += row.cls->affine;
    if (row.cls->oracle) {
      if (!row.cls->oracle->stabilized) {
        ++unstable;
      } else if (!row.cls->oracle->conclusive) {
        ++inconclusive;
      } else if (!row.cls->oracle->agrees) {
        ++disagreements;
      }
    }
  }

  if (opt.format == "json") {
    Json list = Json::array();
    for (const auto& row : rows) {
      Json r = {{"d", row.d}, {"m", row.m}};
      if (row.error) {
        r.update(error_json(*row.error));
      } else {
        r.update(to_json(*row.cls));
      }
      list.push_back(std::move(r));
    }
    print(out, {{"corpus", spec.str()},
                {"rows", list},
                {"summary",
                 {{"members", rows.size()},
                  {"rejected_parry", corpus.rejected_parry},
                  {"filtered", corpus.filtered},
                  {"affine", affine},
                  {"errors", errors},
                  {"unstabilized", unstable},
                  {"inconclusive", inconclusive},
                  {"disagreements", disagreements}}}});
  } else {
    out << "d\tm\tverdict\toracle\tfirst_excess\tstabilized\tagrees\tprefix_length\n";
    for (const auto& row : rows) {
      out << row.d << '\t' << row.m << '\t';
      if (row.error) {
        out << "error:" << to_string(row.error->code()) << "\t-\t-\t-\t-\t-\n";
        continue;
      }
      out << verdict_text(*row.cls);
      if (const auto& o = row.cls->oracle) {
        out << '\t' << (o->affine_by_enumeration ? "Affine" : "NotAffine") << '\t'
            << (o->first_excess ? std::to_string(*o->first_excess) : "-") << '\t' << (o->stabilized ? "yes" : "no")
            << '\t' << (!o->conclusive ? "inconclusive" : o->agrees ? "yes" : "no") << '\t'
            << o->profile.prefix_length_used << '\n';
      } else {
        out << "\t-\t-\t-\t-\t-\n";
      }
    }
    err << "scanned " << rows.size() << " expansions (" << corpus.rejected_parry << " rejected, " << corpus.filtered
        << " filtered); " << affine << " affine, " << disagreements << " disagreements, " << unstable
        << " unstabilized, " << inconclusive << " inconclusive, " << errors << " errors\n";
  }
  return disagreements ? kVerification : kOk;
}

int cmd_generate(const RenyiExpansion& d, std::size_t length, const Options& opt, std::ostream& out) {
  const Word prefix = fixed_point_prefix(d, length);
  if (opt.format == "tsv") {
    out << prefix.str() << '\n';
  } else {
    print(out, {{"d", d.str()}, {"length", length}, {"prefix", prefix.str()}, {"substitution", to_json(Substitution::build(d))}});
  }
  return kOk;
}

int cmd_profile(const RenyiExpansion& d, std::size_t n_max, const Options& opt, std::ostream& out) {
  Json j = {{"d", d.str()}};
  j.update(to_json(complexity_profile(d, n_max, opt.budget)));
  print(out, j);
  return kOk;
}

int cmd_specials(const RenyiExpansion& d, std::optional<std::size_t> n, std::optional<std::size_t> bound,
                 const Options& opt, std::ostream& out) {
  if (!n && !bound) n = 1;
  const std::size_t need = std::max(n.value_or(0), bound.value_or(0)) + 2;
  const StabilizedLanguage lang = require_stabilized_language(d, need, opt.budget);
  Json j = {{"d", d.str()}, {"prefix_length", lang.prefix.size()}};
  if (n) j["length"] = to_json(special_factors(lang, *n));
  if (bound) {
    Json maximal = Json::array();
    for (const Word& w : maximal_left_special(lang, *bound)) maximal.push_back(w.str());
    Json tridents = Json::array();
    for (const Trident& t : find_tridents(lang, *bound)) tridents.push_back(to_json(t));
    j["length_bound"] = *bound;
    j["maximal_left_special"] = maximal;
    j["tridents"] = tridents;
  }
  print(out, j);
  return kOk;
}

int cmd_report(const RenyiExpansion& d, std::size_t oracle_n, std::size_t bound, const Options& opt,
               std::ostream& out) {
  const Classification c = classify_affine(d, oracle_n, opt.budget);
  Json witness = nullptr;
  if (!c.affine && c.reason == NonAffineReason::FractionalPower) {
    const WitnessBundle b = construct_witness(d);
    witness = to_json(b);
    witness["verification"] = to_json(verify_witness(d, b, false));
  }
  Json specials = nullptr;
  if (bound) {
    const StabilizedLanguage lang = require_stabilized_language(d, bound + 2, opt.budget);
    Json maximal = Json::array();
    for (const Word& w : maximal_left_special(lang, bound)) maximal.push_back(w.str());
    specials = {{"length_bound", bound}, {"maximal_left_special", maximal}, {"tridents", find_tridents(lang, bound).size()}};
  }
  Json j = analysis_report(d, c, witness, specials);
  j["prefix_length"] = c.oracle->profile.prefix_length_used;
  print(out, j);
  return kOk;
}

Word admissible_input(const RenyiExpansion& d, const std::string& text) {
  const Word x = Word::parse(text);
  require_admissible(d, x);
  return x;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple Parry numbers: beta-integers, canonical substitutions and factor complexity", "parryscope"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--prefix-budget", opt.budget, "Largest prefix of u_beta to generate (0: default or PARRYSCOPE_BUDGET)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--threads", opt.threads, "Worker threads for scan (0: all cores)");

  std::string d_text, x_text, corpus_text = "m=2..4,digit<=2";
  std::size_t oracle_n = 0, report_oracle_n = 20, length = 0, n_max = 10, count = 10, bound = 0;
  std::uint64_t number = 0;
  std::optional<std::size_t> special_n, special_bound;
  std::function<int()> action;

  auto with_d = [&](CLI::App* sub) { sub->add_option("d", d_text, "Renyi expansion of 1, e.g. 2121 or 10,1")->required(); };
  auto expansion = [&] { return RenyiExpansion::parse(d_text); };

  auto* validate = app.add_subcommand("validate", "Check the Parry condition");
  with_d(validate);
  validate->callback([&] { action = [&] { return cmd_validate(d_text, out); }; });

  auto* classify = app.add_subcommand("classify", "Decide whether the factor complexity is affine");
  with_d(classify);
  classify->add_option("--oracle-n", oracle_n, "Cross-check against enumeration up to this length");
  classify->callback([&] { action = [&] { return cmd_classify(expansion(), oracle_n, opt, out); }; });

  auto* witness = app.add_subcommand("witness", "Build and verify a non-prefix left special factor");
  with_d(witness);
  witness->callback([&] { action = [&] { return cmd_witness(expansion(), out); }; });

  auto* scan = app.add_subcommand("scan", "Classify every expansion in a corpus");
  scan->add_option("--corpus", corpus_text, "e.g. m=2..4,digit<=2,tm=1")->capture_default_str();
  scan->add_option("--oracle-n", oracle_n, "Cross-check against enumeration up to this length");
  scan->callback([&] {
    if (opt.format.empty()) opt.format = "tsv";
    action = [&] { return cmd_scan(corpus_text, oracle_n, opt, out, err); };
  });

  auto* generate = app.add_subcommand("generate", "Prefix of the fixed point u_beta");
  with_d(generate);
  generate->add_option("--length", length, "Number of letters")->required();
  generate->callback([&] { action = [&] { return cmd_generate(expansion(), length, opt, out); }; });

  auto* profile = app.add_subcommand("profile", "Factor complexity C(1..n)");
  with_d(profile);
  profile->add_option("--n-max", n_max, "Largest factor length")->capture_default_str();
  profile->callback([&] { action = [&] { return cmd_profile(expansion(), n_max, opt, out); }; });

  auto* specials = app.add_subcommand("specials", "Special factors, maximal left special factors and tridents");
  with_d(specials);
  specials->add_option("--n", special_n, "Report all special factors of this length");
  specials->add_option("--length-bound", special_bound, "Search maximal left special factors and tridents up to this length");
  specials->callback([&] { action = [&] { return cmd_specials(expansion(), special_n, special_bound, opt, out); }; });

  auto* report = app.add_subcommand("report", "Full analysis report");
  with_d(report);
  report->add_option("--oracle-n", report_oracle_n, "Enumeration range")->capture_default_str();
  report->add_option("--length-bound", bound, "Also search maximal left special factors up to this length");
  report->callback([&] { action = [&] { return cmd_report(expansion(), std::max<std::size_t>(report_oracle_n, 1), bound, opt, out); }; });

  auto* betaint = app.add_subcommand("betaint", "Beta-integer arithmetic on admissible strings");
  betaint->require_subcommand(1);
  auto* succ = betaint->add_subcommand("succ", "Successor and the gap letter");
  with_d(succ);
  succ->add_option("x", x_text, "Admissible string")->required();
  succ->callback([&] {
    action = [&] {
      const auto d = expansion();
      const Word x = admissible_input(d, x_text);
      print(out, {{"d", d.str()}, {"x", x.str()}, {"succ", next_admissible(d, x).str()},
                  {"letter", static_cast<int>(succ_gap_letter(d, x))}, {"match_length", succ_match_length(d, x)}});
      return kOk;
    };
  });
  auto* pred = betaint->add_subcommand("pred", "Predecessor and the gap letter");
  with_d(pred);
  pred->add_option("x", x_text, "Admissible string")->required();
  pred->callback([&] {
    action = [&] {
      const auto d = expansion();
      const Word x = admissible_input(d, x_text);
      print(out, {{"d", d.str()}, {"x", x.str()}, {"pred", previous_admissible(d, x).str()},
                  {"letter", static_cast<int>(pred_gap_letter(d, x))}});
      return kOk;
    };
  });
  auto* coding = betaint->add_subcommand("coding", "Gap letters of consecutive beta-integers");
  with_d(coding);
  coding->add_option("x", x_text, "Starting admissible string (empty for 0)");
  coding->add_option("--count", count, "Number of gaps")->capture_default_str();
  coding->callback([&] {
    action = [&] {
      const auto d = expansion();
      const Word x = x_text.empty() ? Word{} : admissible_input(d, x_text);
      print(out, {{"d", d.str()}, {"start", x.str()}, {"count", count}, {"coding", coding_of_segment(d, x, count).str()}});
      return kOk;
    };
  });
  auto* expand = betaint->add_subcommand("expand", "Greedy beta-expansion of a non-negative integer");
  with_d(expand);
  expand->add_option("n", number, "Integer")->required();
  expand->callback([&] {
    action = [&] {
      const auto d = expansion();
      try {
        const BetaExpansion e = greedy_expand_integer(d, number);
        print(out, {{"d", d.str()}, {"n", number}, {"expansion", e.str()}, {"beta_integer", e.fractional_digits.empty()}});
        return kOk;
      } catch (const FractionalBudgetExceeded& e) {
        Json j = {{"d", d.str()}, {"n", number}, {"partial", e.partial().str()}};
        j.update(error_json(e));
        print(out, j);
        return kInvalid;
      }
    };
  });
  auto* value = betaint->add_subcommand("value", "Exact value of an admissible string in Z[beta]");
  with_d(value);
  value->add_option("x", x_text, "Admissible string")->required();
  value->callback([&] {
    action = [&] {
      const auto d = expansion();
      const Word x = admissible_input(d, x_text);
      const ZBeta v = value_of(d, x);
      Json j = {{"d", d.str()}, {"x", x.str()}, {"index", radix_index(d, x)}};
      j.update(to_json(v));
      j["approx"] = approximate(v);
      print(out, j);
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    print(out, error_json(e));
    return exit_code(e.code());
  }
}

}  // namespace parryscope::cli
