// apforge: verifications, searches and case reports.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error,
// 3 resource ceiling reached.

#include "apforge/cli/commands.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <fstream>
#include <iostream>

namespace {

using apforge::cli::RunReport;

std::string command_echo(int argc, char** argv) {
  // --jobs and --report are dropped: neither changes the results, and the
  // report should not differ with the worker count or the output path.
  std::string s = "apforge";
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--jobs" || a == "-j" || a == "--report") {
      ++i;
      continue;
    }
    if (a.rfind("--jobs=", 0) == 0 || a.rfind("--report=", 0) == 0) continue;
    s += " " + a;
  }
  return s;
}

int finish(RunReport rep, const std::string& echo, const std::string& report_path, bool timings) {
  rep.command = echo;
  std::cout << rep.table(timings);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "apforge: cannot write report " << report_path << "\n";
      return 2;
    }
    out << rep.to_json(timings).dump(2) << "\n";
  }
  return rep.any_fail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and searches for perfect powers in arithmetic progression"};
  app.require_subcommand(1);

  std::string report_path, corpus_path;
  int jobs = 0;
  bool no_timings = false;
  app.add_option("--report", report_path, "Write the JSON report to this path");
  app.add_option("--corpus", corpus_path, "Case corpus (default: $APFORGE_CORPUS, then the bundled copy)");
  app.add_option("-j,--jobs", jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-timings", no_timings, "Write runtime_ms as 0 for byte-stable reports");

  auto* lemma = app.add_subcommand("verify-lemma", "Parametrization identities and cover checks");
  std::string family;
  long lemma_bound = 200;
  lemma->add_option("--family", family, "Family id i..viii");
  lemma->add_option("--bound", lemma_bound, "Cover bound on |a|, |b|; 0 runs identities only")
      ->check(CLI::Range(0L, 500L));

  auto* search = app.add_subcommand("search", "Progressions of twisted powers");
  bool theorem3 = false, cubic_twin = false, diagonal = false, no_sieve = false;
  long bound_sq = 10000, bound_cu = 1000, bound = -1, D = 1;
  unsigned k = 4, L = 3;
  std::vector<long> S;
  std::vector<unsigned> exponents;
  search->add_flag("--theorem3", theorem3, "k = 4, squares and cubes, eta = 1");
  search->add_flag("--cubic-twin", cubic_twin, "Coprime x^3 + y^3 = 2 z^3");
  search->add_flag("--diagonal", diagonal, "With --cubic-twin: only x = y");
  search->add_option("--bound-sq", bound_sq, "|x| bound for squares")->check(CLI::PositiveNumber);
  search->add_option("--bound-cu", bound_cu, "|x| bound for cubes")->check(CLI::PositiveNumber);
  search->add_option("--bound", bound, "|x| bound for every exponent (cubic twin: default 500)")
      ->check(CLI::PositiveNumber);
  search->add_option("--k", k, "Progression length")->check(CLI::Range(3u, 8u));
  search->add_option("--L", L, "Largest exponent")->check(CLI::Range(2u, 7u));
  search->add_option("--D", D, "gcd(h0, h1) <= D; 0 drops the condition")->check(CLI::NonNegativeNumber);
  search->add_option("--S,--eta", S, "Primes generating the twists eta");
  search->add_option("--exponents", exponents, "Exponent pattern of length k, 0 = any");
  search->add_flag("--no-sieve", no_sieve, "Skip the residue sieve");

  auto* cases = app.add_subcommand("cases", "Replay case derivations and facts");
  bool all = false;
  std::string case_id;
  std::vector<long> primes;
  long height = 0, local_primes = 0;
  cases->add_flag("--all", all, "Every case plus the polynomial families");
  cases->add_option("--case", case_id, "Case id, letterless stem or alias");
  cases->add_option("--primes", primes, "Extra primes for Jacobian orders");
  cases->add_option("--height", height, "Override every point-search height")->check(CLI::PositiveNumber);
  cases->add_option("--local-primes", local_primes, "Override the local solvability prime bound")
      ->check(CLI::PositiveNumber);

  auto* genus = app.add_subcommand("genus", "Genus bounds for exponent vectors");
  unsigned gk = 4, scan = 0;
  std::vector<unsigned> lvec, chi;
  genus->add_option("--k", gk, "Progression length 3..5")->check(CLI::Range(3u, 5u));
  genus->add_option("--scan-L", scan, "All vectors with entries in [2, L]");
  genus->add_option("--l", lvec, "One exponent vector");
  genus->add_option("--chi", chi, "r s t")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (jobs > 0) omp_set_num_threads(jobs);
  const std::string echo = command_echo(argc, argv);
  const bool timings = !no_timings;

  try {
    if (*lemma) {
      const auto corpus = apforge::corpus::load_corpus(corpus_path.empty() ? std::nullopt : std::optional(corpus_path));
      return finish(apforge::cli::cmd_verify_lemma(corpus, family.empty() ? std::nullopt : std::optional(family),
                                                   lemma_bound),
                    echo, report_path, timings);
    }
    if (*search) {
      if (theorem3 + cubic_twin > 1) throw std::invalid_argument("--theorem3 and --cubic-twin exclude each other");
      if (diagonal && !cubic_twin) throw std::invalid_argument("--diagonal needs --cubic-twin");
      if (cubic_twin) return finish(apforge::cli::cmd_search_cubic_twin(bound > 0 ? bound : 500, diagonal), echo,
                                    report_path, timings);
      if (theorem3) return finish(apforge::cli::cmd_search_theorem3(bound_sq, bound_cu), echo, report_path, timings);
      apforge::search::SearchConfig cfg;
      cfg.k = k;
      cfg.max_l = L;
      cfg.default_bound = bound > 0 ? bound : 1000;
      cfg.bound_by_l.assign(L + 1, 0);
      for (unsigned l = 2; l <= L; ++l) cfg.bound_by_l[l] = cfg.default_bound;
      if (search->count("--bound-sq")) cfg.bound_by_l[2] = bound_sq;
      if (L >= 3 && search->count("--bound-cu")) cfg.bound_by_l[3] = bound_cu;
      if (D > 0) cfg.max_gcd = D; else cfg.max_gcd.reset();
      cfg.primes = S;
      cfg.exponent_filter = exponents;
      cfg.use_sieve = !no_sieve;
      return finish(apforge::cli::cmd_search(cfg), echo, report_path, timings);
    }
    if (*cases) {
      if (all && !case_id.empty()) throw std::invalid_argument("--all and --case exclude each other");
      const auto corpus = apforge::corpus::load_corpus(corpus_path.empty() ? std::nullopt : std::optional(corpus_path));
      apforge::corpus::CaseOptions opt;
      if (height > 0) opt.height = height;
      if (local_primes > 0) opt.local_primes = local_primes;
      opt.extra_primes = primes;
      return finish(apforge::cli::cmd_cases(corpus, all ? "all" : case_id, opt), echo, report_path, timings);
    }
    if (*genus) {
      const int modes = (scan > 0) + !lvec.empty() + !chi.empty();
      if (modes != 1) throw std::invalid_argument("genus needs exactly one of --scan-L, --l, --chi");
      if (!chi.empty()) return finish(apforge::cli::cmd_genus_chi(chi[0], chi[1], chi[2]), echo, report_path, timings);
      if (scan > 0) return finish(apforge::cli::cmd_genus_scan(gk, scan), echo, report_path, timings);
      return finish(apforge::cli::cmd_genus_vector(gk, lvec), echo, report_path, timings);
    }
  } catch (const apforge::search::ResourceLimit& e) {
    std::cerr << "apforge: " << e.what() << "\n";
    return 3;
  } catch (const apforge::corpus::CorpusError& e) {
    std::cerr << "apforge: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "apforge: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
