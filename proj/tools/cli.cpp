#include "cli.hpp"

#include "oubraid/checks.hpp"
#include "oubraid/families.hpp"
#include "oubraid/invariants.hpp"
#include "oubraid/layers.hpp"
#include "oubraid/warping.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace oubraid::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordInput {
  std::string word;
  std::string file;
  int strands = 0;  // 0: infer from the word

  void attach(CLI::App* app) {
    auto* w = app->add_option("--word", word, "braid word, e.g. \"1 -2 3^2\"");
    auto* f = app->add_option("--file", file, "read the braid word from a file");
    w->excludes(f);
    app->add_option("--strands", strands, "strand count (default: 1 + largest generator)")->check(CLI::PositiveNumber);
  }

  BraidWord load(const CLI::App* app) const {
    std::string text = word;
    if (app->count("--file")) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot read file '" + file + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else if (!app->count("--word")) {
      throw UsageError("one of --word or --file is required");
    }
    return parse_word(text, strands > 0 ? std::optional<int>(strands) : std::nullopt);
  }
};

Json entry(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json multiset_json(const CrossingMultiset& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(entry(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json permutation_json(const Permutation& p) { return Json(std::vector<int>(p.image().begin(), p.image().end())); }

Json wd_json(const WdResult& r) {
  return Json{{"value", r.value}, {"order", permutation_json(r.order)}, {"exact", r.exact}, {"nodes", r.nodes}};
}

Json report_json(const InvariantReport& r) {
  Json j;
  j["n"] = r.strands;
  j["word"] = r.word;
  j["braid_permutation"] = permutation_json(r.braid_permutation);
  j["ou_matrix"] = matrix_json(r.ou_matrix);
  j["det"] = r.det.get_str();
  j["rank"] = r.rank;
  Json cp = Json::array();
  for (const auto& c : r.charpoly.coefficients) cp.push_back(c.get_str());
  j["charpoly"] = std::move(cp);
  j["over_set"] = multiset_json(r.over_set);
  j["under_set"] = multiset_json(r.under_set);
  if (r.wd) j["wd"] = wd_json(*r.wd);
  return j;
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
  std::istringstream rows(m.to_string());
  for (std::string line; std::getline(rows, line);) out << "  " << line << '\n';
}

void print_wd(std::ostream& out, const WdResult& r) {
  out << "value: " << r.value << '\n'
      << "order: " << r.order.to_string() << '\n'
      << "exact: " << (r.exact ? "true" : "false") << '\n';
  if (r.nodes) out << "nodes: " << r.nodes << '\n';
}

void print_report(std::ostream& out, const InvariantReport& r) {
  out << "strands: " << r.strands << '\n'
      << "word: " << r.word << '\n'
      << "braid permutation: " << r.braid_permutation.to_string() << '\n'
      << "OU matrix (identity order):\n";
  print_matrix(out, r.ou_matrix);
  out << "det: " << r.det.get_str() << '\n'
      << "rank: " << r.rank << '\n'
      << "charpoly: " << r.charpoly.to_string() << '\n'
      << "over set: " << r.over_set.to_string() << '\n'
      << "under set: " << r.under_set.to_string() << '\n';
  if (r.wd) {
    out << "warping degree:\n";
    std::ostringstream wd;
    print_wd(wd, *r.wd);
    std::istringstream lines(wd.str());
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
}

int thread_cap(int requested) {
  const char* env = std::getenv("OU_BRAID_THREADS");
  if (!env || !*env) return requested;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 1) throw UsageError("OU_BRAID_THREADS must be a positive integer");
  return static_cast<int>(std::min<long>(requested, cap));
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

BraidWord generate(const std::string& family, const std::vector<long>& params, std::uint64_t seed) {
  auto need = [&](std::size_t count, const char* usage) {
    if (params.size() != count) throw UsageError("gen " + family + " expects " + usage);
  };
  auto as_int = [](long v) {
    if (v < 0 || v > 1'000'000) throw UsageError("parameter out of range: " + std::to_string(v));
    return static_cast<int>(v);
  };
  try {
    if (family == "weaving") {
      need(2, "<p> <q>");
      return weaving(as_int(params[0]), as_int(params[1]));
    }
    if (family == "fundamental") {
      need(1, "<n>");
      return fundamental(as_int(params[0]));
    }
    if (family == "delta-power") {
      need(2, "<n> <r>");
      return delta_power(as_int(params[0]), as_int(params[1]));
    }
    if (family == "permutation") {
      if (params.empty()) throw UsageError("gen permutation expects the image list, e.g. 3 1 2 4");
      std::vector<int> image;
      for (long v : params) image.push_back(as_int(v));
      return permutation_braid(Permutation(std::move(image)));
    }
    if (family == "random" || family == "random-positive" || family == "random-positive-pure") {
      need(2, "<n> <length>");
      const int n = as_int(params[0]);
      const auto len = static_cast<std::size_t>(as_int(params[1]));
      if (family == "random") return random_braid(n, len, seed);
      if (family == "random-positive") return random_positive(n, len, seed);
      return random_positive_pure(n, len, seed);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + family + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"OU matrices, invariants and warping degrees of braid diagrams", "oubraid"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"text", "json"};

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
  };

  WordInput analyze_in;
  bool analyze_wd = false;
  auto* analyze = app.add_subcommand("analyze", "OU matrix and its permutation-independent invariants");
  analyze_in.attach(analyze);
  analyze->add_flag("--wd", analyze_wd, "also compute the exact warping degree");
  add_format(analyze);

  WordInput wd_in;
  bool use_heuristic = false, use_exact = false;
  std::uint64_t budget = 0, wd_seed = 0;
  int threads = 1;
  auto* wd = app.add_subcommand("wd", "warping degree of the diagram");
  wd_in.attach(wd);
  auto* exact_flag = wd->add_flag("--exact", use_exact, "exact branch and bound (default)");
  wd->add_flag("--heuristic", use_heuristic, "greedy + insertion local search")->excludes(exact_flag);
  wd->add_option("--budget", budget, "node budget for the exact search");
  wd->add_option("--seed", wd_seed, "seed for the heuristic");
  wd->add_option("--threads", threads, "search threads (capped by OU_BRAID_THREADS)")->check(CLI::PositiveNumber);
  add_format(wd);

  WordInput layers_in;
  auto* layers = app.add_subcommand("layers", "finest layered decomposition");
  layers_in.attach(layers);
  add_format(layers);

  std::string family;
  std::vector<long> params;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "print a word from a braid family");
  gen->add_option("family", family,
                  "weaving | fundamental | delta-power | permutation | random | random-positive | random-positive-pure")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", gen_seed, "seed for random families");

  std::string suite;
  std::uint64_t check_seed = 0;
  std::size_t cases = 200;
  auto* check = app.add_subcommand("check", "run a randomized property suite");
  check->add_option("suite", suite, "property suite")->required();
  check->add_option("--seed", check_seed, "seed");
  check->add_option("--cases", cases, "number of random cases");
  add_format(check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (analyze->parsed()) {
      const BraidWord word = analyze_in.load(analyze);
      std::optional<WdResult> wd_result;
      if (analyze_wd) {
        if (word.strands() > kExactStrandLimit)
          throw UsageError("--wd needs at most " + std::to_string(kExactStrandLimit) + " strands; use the wd command");
        wd_result = wd_exact(word);
      }
      const InvariantReport report = invariant_report(word, wd_result);
      if (format == "json")
        out << report_json(report).dump(2) << '\n';
      else
        print_report(out, report);
      return kOk;
    }

    if (wd->parsed()) {
      const BraidWord word = wd_in.load(wd);
      WdResult result;
      if (use_heuristic) {
        err << "seed: " << wd_seed << '\n';
        result = wd_heuristic(word, wd_seed);
      } else {
        const bool has_budget = wd->count("--budget") > 0;
        if (word.strands() > kExactStrandLimit && !has_budget) {
          err << "error: exact search on " << word.strands() << " strands needs an explicit --budget (limit "
              << kExactStrandLimit << " without one)\n";
          return kBudgetRefused;
        }
        ExactOptions options;
        if (has_budget) options.node_budget = budget;
        options.threads = thread_cap(threads);
        result = wd_exact(word, options);
      }
      if (format == "json") {
        Json j{{"n", word.strands()}, {"word", format_word(word)}};
        j["wd"] = wd_json(result);
        if (use_heuristic) j["seed"] = wd_seed;
        out << j.dump(2) << '\n';
      } else {
        print_wd(out, result);
      }
      return kOk;
    }

    if (layers->parsed()) {
      const BraidWord word = layers_in.load(layers);
      const LayerDecomposition d = finest_layering(word);
      const mpz_class total = det_of(word);
      mpz_class product_of_layers = 1;
      std::vector<mpz_class> dets;
      for (const auto& lw : d.layer_words) {
        dets.push_back(det_of(lw));
        product_of_layers *= dets.back();
      }
      const std::string status =
          d.is_completely_layered() && d.is_layered() ? "completely layered"
          : d.is_layered()                            ? "layered"
                                                      : "not layered";
      if (format == "json") {
        Json j{{"n", word.strands()}, {"word", format_word(word)}, {"status", status}};
        Json arr = Json::array();
        for (std::size_t i = 0; i < d.layers.size(); ++i)
          arr.push_back(Json{{"strands", d.layers[i]},
                             {"word", format_word(d.layer_words[i])},
                             {"n", d.layer_words[i].strands()},
                             {"det", dets[i].get_str()}});
        j["layers"] = std::move(arr);
        j["det"] = total.get_str();
        j["det_product"] = product_of_layers.get_str();
        j["det_check"] = total == product_of_layers;
        out << j.dump(2) << '\n';
      } else {
        out << "strands: " << word.strands() << '\n' << "layers: " << d.layers.size() << '\n';
        for (std::size_t i = 0; i < d.layers.size(); ++i)
          out << "  layer " << i + 1 << ": strands " << join_ints(d.layers[i]) << " word \""
              << format_word(d.layer_words[i]) << "\" det " << dets[i].get_str() << '\n';
        out << status << '\n'
            << "det: " << total.get_str() << " product of layer dets: " << product_of_layers.get_str() << " ("
            << (total == product_of_layers ? "equal" : "differ") << ")\n";
      }
      return kOk;
    }

    if (gen->parsed()) {
      if (family.rfind("random", 0) == 0) err << "seed: " << gen_seed << '\n';
      out << format_word(generate(family, params, gen_seed)) << '\n';
      return kOk;
    }

    if (check->parsed()) {
      const auto& names = check_suites();
      if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'");
      const CheckResult r = run_check(suite, check_seed, cases);
      if (format == "json") {
        Json j{{"suite", r.suite}, {"seed", r.seed}, {"cases", r.cases}, {"passed", r.passed}, {"ok", r.ok()}};
        if (r.counterexample) j["counterexample"] = *r.counterexample;
        out << j.dump(2) << '\n';
      } else {
        out << "suite: " << r.suite << '\n'
            << "seed: " << r.seed << '\n'
            << "cases: " << r.passed << "/" << r.cases << " passed\n"
            << (r.ok() ? "PASS" : "FAIL") << '\n';
        if (r.counterexample) out << "counterexample: " << *r.counterexample << '\n';
      }
      return r.ok() ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace oubraid::cli
