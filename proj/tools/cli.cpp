#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "poplab/enumerator.hpp"
#include "poplab/oeis.hpp"
#include "poplab/pop.hpp"
#include "poplab/scan.hpp"
#include "poplab/theorems.hpp"

#ifndef POPLAB_DEFAULT_OEIS_PATH
#define POPLAB_DEFAULT_OEIS_PATH "data/oeis_fixture.txt"
#endif

namespace poplab::cli {

namespace {

struct Common {
  int ceiling = CountOptions{}.ceiling;
  int jobs = 1;
  bool json = false;

  CountOptions count_options() const { return {ceiling, jobs}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--ceiling", c.ceiling, "Largest n an exhaustive search may use")->check(CLI::Range(0, 20));
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256));
  cmd->add_flag("--json", c.json, "Emit JSON instead of text");
}

std::string pick(const std::string& flag, const std::string& positional, const char* what) {
  if (!flag.empty() && !positional.empty() && flag != positional) {
    throw std::invalid_argument(std::string("conflicting ") + what + " arguments \"" + flag + "\" and \"" + positional + "\"");
  }
  const std::string& v = flag.empty() ? positional : flag;
  if (v.empty()) throw std::invalid_argument(std::string("missing ") + what);
  return v;
}

// --oeis beats POPLAB_OEIS, which beats the bundled fixture.
std::string oeis_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("POPLAB_OEIS"); env != nullptr && *env != '\0') return env;
  return POPLAB_DEFAULT_OEIS_PATH;
}

nlohmann::json string_array(const std::vector<BigInt>& values) {
  nlohmann::json a = nlohmann::json::array();
  for (const BigInt& v : values) a.push_back(v.str());
  return a;
}

void print_warnings(const OeisDb& db, std::ostream& err) {
  for (const std::string& w : db.warnings) err << "warning: " << w << "\n";
}

int cmd_expand(const std::string& pop_text, std::ostream& out) {
  const Pop p = parse_pop(pop_text);
  const PatternSet patterns = linear_extensions(p);
  for (const Pattern& q : patterns) out << q.to_string() << "\n";
  out << patterns.size() << (patterns.size() == 1 ? " pattern" : " patterns") << "\n";
  return kOk;
}

int cmd_count(const std::string& pop_text, std::optional<int> single_n, int n_max, const std::string& oeis_flag,
              const Common& common, std::ostream& out, std::ostream& err) {
  const Pop p = parse_pop(pop_text);
  const CountOptions opts = common.count_options();
  if (single_n) {
    const BigInt v = count_avoiders(p, *single_n, opts);
    if (common.json) {
      out << nlohmann::json{{"schema", 1}, {"pop", p.to_string()}, {"n", *single_n}, {"count", v.str()}}.dump(2) << "\n";
    } else {
      out << v << "\n";
    }
    return kOk;
  }
  const std::vector<BigInt> counts = count_avoiders_prefix(p, n_max, opts).counts;
  std::vector<std::string> matches;
  if (!oeis_flag.empty()) {
    const OeisDb db = load_stripped(oeis_flag);
    print_warnings(db, err);
    const std::vector<BigInt> terms(counts.begin() + 1, counts.end());
    if (static_cast<int>(terms.size()) < 7) throw std::invalid_argument("matching needs --nmax >= 7");
    for (const Match& m : match_sequence(db, terms)) matches.push_back(m.a_number);
  }
  if (common.json) {
    nlohmann::json doc = {{"schema", 1}, {"pop", p.to_string()}, {"n_max", n_max}, {"counts", string_array(counts)}};
    if (!oeis_flag.empty()) doc["matches"] = matches;
    out << doc.dump(2) << "\n";
  } else {
    out << join(counts) << "\n";
    if (!oeis_flag.empty()) {
      out << "matches:";
      for (const std::string& m : matches) out << " " << m;
      out << (matches.empty() ? " none\n" : "\n");
    }
  }
  return kOk;
}

int cmd_verify(const std::string& id, std::optional<int> n_max, const Common& common, std::ostream& out) {
  std::vector<std::string> ids = id == "all" ? theorem_ids() : std::vector<std::string>{id};
  std::vector<Report> reports;
  for (const std::string& one : ids) {
    const int n = n_max ? *n_max : default_verify_nmax(find_theorem(one));
    reports.push_back(verify_theorem(one, n, common.count_options()));
  }
  const auto passed = std::count_if(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
  if (common.json) {
    out << reports_to_json(reports);
  } else {
    for (const Report& r : reports) out << r.to_text() << "\n";
    out << passed << "/" << reports.size() << " passed\n";
  }
  return passed == static_cast<long>(reports.size()) ? kOk : kMismatch;
}

int cmd_scan(int length, int n_max, const std::string& oeis_flag, const std::string& out_path, const Common& common,
             std::ostream& out, std::ostream& err) {
  if (length < 1 || length > 6) throw std::invalid_argument("scan --length must be in 1..6");
  std::optional<OeisDb> db;
  const std::string path = oeis_path(oeis_flag);
  try {
    db = load_stripped(path);
    print_warnings(*db, err);
  } catch (const IoError&) {
    if (!oeis_flag.empty()) throw;
    err << "warning: no OEIS data at " << path << "; scanning without matches\n";
  }
  ScanOptions opts;
  opts.length = length;
  opts.n_max = n_max;
  opts.count = common.count_options();
  opts.db = db ? &*db : nullptr;
  if (n_max > opts.count.ceiling) {
    throw CeilingExceeded("n=" + std::to_string(n_max) + " exceeds the exhaustive-search ceiling " +
                          std::to_string(opts.count.ceiling));
  }
  const ScanResult result = scan_pops(opts);
  const std::string json = result.to_json();
  const std::string summary = std::to_string(result.pops_processed) + " POPs processed, " +
                              std::to_string(result.orbit_count) + " symmetry orbits, " +
                              std::to_string(result.classes.size()) + " empirical classes at n <= " +
                              std::to_string(n_max) + "\n";
  if (out_path.empty()) {
    out << json;
    err << summary;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot write " + out_path);
    file << json;
    if (!file.flush()) throw IoError("cannot write " + out_path);
    out << summary;
  }
  return kOk;
}

int cmd_conjectures(int n_max, const Common& common, std::ostream& out) {
  std::vector<Report> reports;
  for (const ConjectureEntry& e : conjecture_entries()) reports.push_back(check_conjecture(e, n_max, common.count_options()));
  const auto supported = std::count_if(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
  if (common.json) {
    out << reports_to_json(reports);
  } else {
    for (const Report& r : reports) out << r.to_text() << "\n";
    out << supported << "/" << reports.size() << " conjectures supported at n <= " << n_max << "\n";
  }
  return supported == static_cast<long>(reports.size()) ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting permutations that avoid partially ordered patterns", "poplab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "poplab 0.1.0");

  Common common;
  std::string pop_flag, pop_pos, theorem_flag, theorem_pos, oeis_flag, out_path;
  int n_max = 8;
  int n_single = 0;
  int length = 4;

  auto* expand = app.add_subcommand("expand", "List the classical patterns equivalent to a POP");
  expand->add_option("pop-text", pop_pos, "POP text, e.g. \"k=3; 1>3\"");
  expand->add_option("--pop", pop_flag, "POP text");

  auto* count = app.add_subcommand("count", "Count avoiders of a POP for n = 0..nmax");
  count->add_option("pop-text", pop_pos, "POP text");
  count->add_option("--pop", pop_flag, "POP text");
  auto* count_nmax = count->add_option("--nmax", n_max, "Largest n")->check(CLI::NonNegativeNumber);
  auto* count_n = count->add_option("--n", n_single, "Count a single n")->check(CLI::NonNegativeNumber);
  count_n->excludes(count_nmax);
  count->add_option("--oeis", oeis_flag, "Stripped OEIS file to match the counts against");
  add_common(count, common);

  auto* verify = app.add_subcommand("verify", "Check a registered result against brute force and its table row");
  verify->add_option("theorem-id", theorem_pos, "Theorem id or \"all\"");
  verify->add_option("--theorem", theorem_flag, "Theorem id or \"all\"");
  auto* verify_nmax = verify->add_option("--nmax", n_max, "Largest n (default 9 for length 4, 8 for length 5)")
                          ->check(CLI::NonNegativeNumber);
  add_common(verify, common);

  auto* scan = app.add_subcommand("scan", "Group every POP of one length by its count prefix");
  scan->add_option("--length", length, "POP length")->check(CLI::Range(1, 6));
  auto* scan_nmax = scan->add_option("--nmax", n_max, "Largest n")->check(CLI::PositiveNumber);
  scan->add_option("--oeis", oeis_flag, "Stripped OEIS file (default: $POPLAB_OEIS or the bundled fixture)");
  scan->add_option("--out", out_path, "Write the JSON here instead of stdout");
  add_common(scan, common);

  auto* conjectures = app.add_subcommand("conjectures", "Check the conjectured length-5 connections");
  auto* conj_nmax = conjectures->add_option("--nmax", n_max, "Largest n")->check(CLI::PositiveNumber);
  add_common(conjectures, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(pick(pop_flag, pop_pos, "POP"), out);
    if (count->parsed()) {
      std::optional<int> single;
      if (count_n->count() > 0) single = n_single;
      return cmd_count(pick(pop_flag, pop_pos, "POP"), single, n_max, oeis_flag, common, out, err);
    }
    if (verify->parsed()) {
      std::optional<int> n;
      if (verify_nmax->count() > 0) n = n_max;
      return cmd_verify(pick(theorem_flag, theorem_pos, "theorem id"), n, common, out);
    }
    if (scan->parsed()) return cmd_scan(length, scan_nmax->count() > 0 ? n_max : 7, oeis_flag, out_path, common, out, err);
    if (conjectures->parsed()) return cmd_conjectures(conj_nmax->count() > 0 ? n_max : 8, common, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << " (use --ceiling)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace poplab::cli
