// Copyright 2026 The ortega authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: approximate arbitrary radicands, run the corpus
// verification, query the Pell oracle, print the Chuquet table, and run the
// scaled-seed derivation pipeline.
//
// Exit codes: 0 success, 1 invalid input or verification mismatch, 2 usage
// error, 3 corpus load failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "ortega/ortega.hpp"

namespace {

using namespace ortega;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCorpus = 3;

struct Options {
  std::string radicand;
  std::vector<std::string> seeds{"heron"};
  std::string policy = "reduce";
  std::vector<std::string> stop{"optimal"};
  std::string format = "table";
  std::string corpus_path;
  std::string only;
  std::size_t cap = 10000;
  bool verify_chuquet_flag = false;
  bool full_trace = false;
  std::string scale_c = "100";
  std::string scale_m = "5";
  std::string pell_n;
};

Corpus load_corpus_configured(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv("CORPUS_PATH")) path = env;
  }
  if (path.empty()) return load_corpus();
  return load_corpus_file(path);
}

char format_sep(const std::string& format) { return format == "csv" ? ',' : '\t'; }

void print_trace(const Trace& trace, const std::string& format) {
  if (format == "csv") std::cout << "index,lower,upper,upper_error\n";
  std::cout << render_trace_rows(trace, format_sep(format));
}

// Summary after the rows: final bounds, exact remainders, optimality flags.
void print_summary(const Trace& trace, const Radicand& n, const std::string& format) {
  const char* prefix = format == "csv" ? "# " : "";
  if (trace.termination == Termination::ExactRootFound) {
    std::cout << prefix << "exact: " << trace.exact_root->str() << "\n";
    return;
  }
  const TraceRow& last = trace.rows.back();
  Rational lo = last.lower.value();
  Rational up = last.upper.value();
  std::cout << prefix << "final: lower " << last.lower.str() << ", upper "
            << last.upper.str() << "\n";
  std::cout << prefix << "upper error: " << upper_error(up, n).str()
            << ", lower remainder: " << remainder(lo, n).str() << "\n";
  std::cout << prefix << "optimal upper: " << (is_optimal_upper(up, n) ? "yes" : "no")
            << ", optimal lower: " << (is_optimal_lower(lo, n) ? "yes" : "no") << "\n";
  std::cout << prefix << "termination: " << to_string(trace.termination) << " at row "
            << last.index << "\n";
}

int cmd_approx(const Options& opt) {
  Radicand n = Radicand::parse(opt.radicand);

  if (auto root = n.exact_root()) {
    std::cout << "exact: " << root->str() << "\n";
    return kExitOk;
  }

  SeedPair seeds;
  const std::string& kind = opt.seeds.at(0);
  if (kind == "heron" || kind == "integer") {
    if (opt.seeds.size() != 1) throw Error("--seeds " + kind + " takes no arguments");
    SeedResult r = kind == "heron" ? heron_bounds(n) : integer_bounds(n);
    seeds = std::get<SeedPair>(r);  // exact roots handled above
  } else if (kind == "scaled") {
    if (opt.seeds.size() != 3) throw Error("--seeds scaled needs C and M");
    Rational c = Rational::parse(opt.seeds[1]);
    BigInt m_int(opt.seeds[2]);
    Corpus corpus = load_corpus_configured(opt.corpus_path);
    const ChuquetEntry* src = corpus.chuquet_upper(m_int);
    if (!src)
      throw Error("no chuquet upper value for sqrt(" + m_int.str() +
                  "); scaled seeds cover m in the chuquet table");
    Radicand m{Rational(m_int)};
    if (c * c / m.value() != n.value())
      throw Error("scaled seeds c=" + c.str() + " m=" + m_int.str() +
                  " describe sqrt(" + (c * c / m.value()).str() + "), not sqrt(" +
                  n.value().str() + ")");
    ClassifiedApprox lower = reciprocal_scale(c, m, {src->value.value(), src->side});
    ClassifiedApprox upper = denominator_companion(to_raw(lower.value), n);
    seeds = SeedPair{lower.value, upper.value, SeedOrigin::Scaled};
  } else if (kind == "custom") {
    if (opt.seeds.size() != 3) throw Error("--seeds custom needs L and U");
    seeds = SeedPair{Rational::parse(opt.seeds[1]), Rational::parse(opt.seeds[2]),
                     SeedOrigin::Custom};
  } else {
    throw Error("unknown seeds kind '" + kind + "'");
  }

  StopRule stop;
  const std::string& stop_kind = opt.stop.at(0);
  if (stop_kind == "optimal") {
    stop = StopRule::first_optimal_upper();
  } else if (stop_kind == "optimal-lower") {
    stop = StopRule::first_optimal_lower();
  } else if (stop_kind == "target") {
    if (opt.stop.size() != 2) throw Error("--stop target needs a fraction");
    stop = StopRule::target_value(Rational::parse(opt.stop[1]));
  } else if (stop_kind == "rows") {
    if (opt.stop.size() != 2) throw Error("--stop rows needs a count");
    std::size_t k = std::stoul(opt.stop[1]);
    if (k < 1) throw Error("--stop rows needs a positive count");
    stop = StopRule::max_rows(k);
  } else if (stop_kind == "exact") {
    stop = StopRule::exact_hit();
  } else {
    throw Error("unknown stop rule '" + stop_kind + "'");
  }

  RefinePolicy policy =
      opt.policy == "raw" ? RefinePolicy::KeepRaw : RefinePolicy::Reduce;
  Trace trace = refine(n, seeds, policy, stop, opt.cap);
  print_trace(trace, opt.format);
  print_summary(trace, n, opt.format);
  return trace.termination == Termination::Incomplete ? kExitInvalid : kExitOk;
}

int cmd_verify(const Options& opt) {
  Corpus corpus;
  try {
    corpus = load_corpus_configured(opt.corpus_path);
  } catch (const Error& e) {
    std::cerr << "corpus load failed: " << e.what() << "\n";
    return kExitCorpus;
  }

  Report report;
  if (opt.only.empty())
    report = verify_all(corpus);
  else if (opt.only == "section2")
    report = verify_section2(corpus);
  else if (opt.only == "traces")
    report = verify_traces(corpus);
  else if (opt.only == "chuquet")
    report = verify_chuquet(corpus);
  else if (opt.only == "appendix3")
    report = verify_appendix3(corpus);
  else
    throw Error("unknown verifier '" + opt.only +
                "' (section2, traces, chuquet, appendix3)");

  if (opt.format == "csv")
    std::cout << render_report_csv(report);
  else
    std::cout << render_report_text(report);
  return report.ok() ? kExitOk : kExitInvalid;
}

int cmd_pell(const Options& opt) {
  BigInt n;
  try {
    n = BigInt(opt.pell_n);
  } catch (...) {
    throw Error("pell needs a positive integer, got '" + opt.pell_n + "'");
  }
  if (n < 2) throw Error("pell needs n >= 2");
  BigInt root = isqrt_floor(n);
  if (root * root == n) throw Error("sqrt(" + n.str() + ") = " + root.str() + " exactly");

  PellSolution pell = fundamental_pell(n);
  Rational upper(pell.p, pell.q);
  std::cout << "fundamental: p=" << pell.p.str() << " q=" << pell.q.str() << "\n";
  std::cout << "optimal upper: " << pell.p.str() << "/" << pell.q.str() << " = "
            << upper.str() << ", error 1/" << BigInt(pell.q * pell.q).str() << "\n";
  if (auto neg = fundamental_negative_pell(n)) {
    Rational lower(neg->p, neg->q);
    std::cout << "optimal lower: " << neg->p.str() << "/" << neg->q.str() << " = "
              << lower.str() << ", error 1/" << BigInt(neg->q * neg->q).str() << "\n";
  } else {
    std::cout << "optimal lower: none (period length even)\n";
  }
  return kExitOk;
}

int cmd_chuquet(const Options& opt) {
  Corpus corpus;
  try {
    corpus = load_corpus_configured(opt.corpus_path);
  } catch (const Error& e) {
    std::cerr << "corpus load failed: " << e.what() << "\n";
    return kExitCorpus;
  }
  char sep = format_sep(opt.format);
  if (opt.format == "csv") std::cout << "n,value,stated_error,side\n";
  for (const ChuquetEntry& e : corpus.chuquet) {
    std::cout << e.n << sep << e.value.str() << sep << e.stated_error.str() << sep
              << (e.side == SideOfRoot::Above ? "upper" : "lower") << "\n";
  }
  if (!opt.verify_chuquet_flag) return kExitOk;
  Report report = verify_chuquet(corpus);
  std::cout << render_report_text(report);
  return report.ok() ? kExitOk : kExitInvalid;
}

int cmd_scale_derive(const Options& opt) {
  Corpus corpus;
  try {
    corpus = load_corpus_configured(opt.corpus_path);
  } catch (const Error& e) {
    std::cerr << "corpus load failed: " << e.what() << "\n";
    return kExitCorpus;
  }
  Rational c = Rational::parse(opt.scale_c);
  BigInt m_int(opt.scale_m);
  const ChuquetEntry* src = corpus.chuquet_upper(m_int);
  if (!src) throw Error("no chuquet upper value for sqrt(" + m_int.str() + ")");

  Radicand m{Rational(m_int)};
  Radicand target(c * c / m.value());
  std::cout << "chuquet sqrt(" << m_int.str() << ") upper: " << src->value.num.str()
            << "/" << src->value.den.str() << " = " << src->value.str() << "\n";
  std::cout << "scale c=" << c.str() << ": target radicand " << (c * c).str() << "/"
            << m_int.str() << " = " << target.str() << "\n";

  ClassifiedApprox lower = reciprocal_scale(c, m, {src->value.value(), src->side});
  std::cout << "lower = c / upper = " << lower.value.str() << " ("
            << to_string(lower.side) << " the root)\n";
  ClassifiedApprox upper = denominator_companion(to_raw(lower.value), target);
  RawFraction lower_written = to_raw(lower.value);
  std::cout << "companion: " << lower_written.fractional_part().str() << " -> "
            << lower_written.fractional_part().num.str() << "/"
            << BigInt(lower_written.den - 1).str() << " -> upper = " << upper.value.str()
            << " (" << to_string(upper.side) << " the root)\n";

  Trace trace = refine(target, SeedPair{lower.value, upper.value, SeedOrigin::Scaled},
                       RefinePolicy::KeepRaw, StopRule::first_optimal_upper(), opt.cap);
  if (opt.full_trace) print_trace(trace, opt.format);
  const TraceRow& last = trace.rows.back();
  std::cout << "keep-raw refine: " << trace.rows.size() << " rows ("
            << to_string(trace.termination) << ")\n";
  std::cout << "final upper: " << last.upper.str() << " = " << last.upper.value().str()
            << ", error " << last.upper_error.str() << "\n";
  return trace.termination == Termination::Incomplete ? kExitInvalid : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact mediant-iteration square root approximation"};
  app.require_subcommand(1);

  CLI::App* approx = app.add_subcommand("approx", "refine bounds for sqrt(RADICAND)");
  approx->add_option("radicand", opt.radicand, "integer or fraction, e.g. 128 or 127+3/11")
      ->required();
  approx->add_option("--seeds", opt.seeds,
                     "heron | integer | scaled C M | custom L U")
      ->expected(1, 3);
  approx->add_option("--policy", opt.policy, "reduce | raw")
      ->check(CLI::IsMember({"reduce", "raw"}));
  approx->add_option("--stop", opt.stop,
                     "optimal | optimal-lower | target FRAC | rows K | exact")
      ->expected(1, 2);
  approx->add_option("--format", opt.format, "table | csv")
      ->check(CLI::IsMember({"table", "csv"}));
  approx->add_option("--cap", opt.cap, "safety cap on rows");
  approx->add_option("--corpus", opt.corpus_path, "corpus file for scaled seeds");

  CLI::App* verify = app.add_subcommand("verify", "recompute the printed-value corpus");
  verify->add_option("--only", opt.only, "section2 | traces | chuquet | appendix3");
  verify->add_option("--corpus", opt.corpus_path, "load corpus from file");
  verify->add_option("--format", opt.format, "table | csv")
      ->check(CLI::IsMember({"table", "csv"}));

  CLI::App* pell = app.add_subcommand("pell", "fundamental Pell solution for sqrt(N)");
  pell->add_option("n", opt.pell_n, "positive non-square integer")->required();

  CLI::App* chuquet = app.add_subcommand("chuquet", "print the Chuquet root table");
  chuquet->add_flag("--verify", opt.verify_chuquet_flag, "also recompute it");
  chuquet->add_option("--corpus", opt.corpus_path, "load corpus from file");
  chuquet->add_option("--format", opt.format, "table | csv")
      ->check(CLI::IsMember({"table", "csv"}));

  CLI::App* scale = app.add_subcommand("scale-derive",
                                       "run the reciprocal-scale seed pipeline");
  scale->add_option("--c", opt.scale_c, "scale numerator (default 100)");
  scale->add_option("--m", opt.scale_m, "source radicand (default 5)");
  scale->add_flag("--trace", opt.full_trace, "print the full trace");
  scale->add_option("--format", opt.format, "table | csv")
      ->check(CLI::IsMember({"table", "csv"}));
  scale->add_option("--cap", opt.cap, "safety cap on rows");
  scale->add_option("--corpus", opt.corpus_path, "load corpus from file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(approx)) return cmd_approx(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(pell)) return cmd_pell(opt);
    if (app.got_subcommand(chuquet)) return cmd_chuquet(opt);
    if (app.got_subcommand(scale)) return cmd_scale_derive(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
