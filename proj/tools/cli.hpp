#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// the integration tests drive it in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmhs.hpp"
#include "suites.hpp"

namespace qmhs::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kBadInput = 2, kIoError = 3 };

enum class Format { json, csv, text };

struct RunConfig {
  std::string command;
  std::string index;
  int n = 0;
  std::string backend = "exact";
  bool star = false;
  bool modified = false;
  std::string suite;
  int family = 0;
  std::string kind;
  SuiteRanges ranges;
  std::optional<int> n_min;
  std::optional<int> k;
  std::optional<int> ab_max;
  std::string format;
  std::string output;
  unsigned jobs = 1;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string param_string(const ParamValue& v) {
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

inline std::string complex_string(std::complex<double> c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g %c %.15gi", c.real(), c.imag() < 0 ? '-' : '+', std::abs(c.imag()));
  return buf;
}

inline nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, v] : r.params) {
    if (const auto* i = std::get_if<long long>(&v))
      params[name] = *i;
    else
      params[name] = std::get<std::string>(v);
  }
  return {{"suite", r.suite}, {"params", params}, {"status", to_string(r.status)},
          {"lhs", r.lhs},     {"rhs", r.rhs},       {"micros", r.micros}};
}

inline std::string render_reports(const std::vector<VerificationReport>& reports, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      os << arr.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "suite,params,status,lhs,rhs,micros\n";
      for (const auto& r : reports) {
        std::string params;
        for (const auto& [name, v] : r.params) params += (params.empty() ? "" : ";") + name + "=" + param_string(v);
        os << csv_field(r.suite) << "," << csv_field(params) << "," << to_string(r.status) << "," << csv_field(r.lhs)
           << "," << csv_field(r.rhs) << "," << r.micros << "\n";
      }
      break;
    case Format::text:
      for (const auto& r : reports) {
        os << to_string(r.status) << " " << r.suite;
        for (const auto& [name, v] : r.params) os << " " << name << "=" << param_string(v);
        if (r.status != Status::pass) os << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs;
        os << "\n";
      }
      break;
  }
  return os.str();
}

/// A table of exact values; `value` holds the exact string, and rational
/// entries also fill numerator and denominator.
struct Table {
  std::vector<std::string> keys;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> key_values, const std::string& value, const std::optional<Rational>& q) {
    key_values.push_back(value);
    key_values.push_back(q ? q->get_num().get_str() : "");
    key_values.push_back(q ? q->get_den().get_str() : "");
    rows.push_back(std::move(key_values));
  }

  std::string render(Format format) const {
    std::vector<std::string> header = keys;
    header.insert(header.end(), {"value", "numerator", "denominator"});
    std::ostringstream os;
    if (format == Format::json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        arr.push_back(obj);
      }
      os << arr.dump(2) << "\n";
      return os.str();
    }
    const char* sep = format == Format::csv ? "," : " ";
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? sep : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? sep : "") << (format == Format::csv ? csv_field(row[i]) : row[i]);
      os << "\n";
    }
    return os.str();
  }
};

inline std::optional<Rational> rational_of(const CycloElem& e) {
  if (!e.is_rational()) return std::nullopt;
  return e.rational_part();
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + s + "'");
}

inline int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

inline std::string cmd_compute(const RunConfig& cfg, Format format) {
  const Index idx = Index::parse(cfg.index);
  if (cfg.n < 1) throw std::invalid_argument("--n must be positive");
  std::string value;
  if (cfg.backend == "exact") {
    ExactBackend backend(cfg.n);
    const Chain chain = cfg.star ? Chain::nonstrict : Chain::strict;
    value = to_string(cfg.modified ? zbar(idx, backend, chain) : nested_sum(idx, backend, chain));
  } else if (cfg.backend == "numeric") {
    if (cfg.n < 2) throw std::invalid_argument("numeric backend needs n >= 2");
    std::complex<double> v = z_numeric(idx, cfg.n, cfg.star);
    if (cfg.modified) {
      const std::complex<double> base = std::complex<double>(1.0) - ComplexBackend(cfg.n).q_power(1);
      v /= std::pow(base, idx.weight());
    }
    value = complex_string(v);
  } else {
    throw std::invalid_argument("unknown backend '" + cfg.backend + "'");
  }
  switch (format) {
    case Format::json:
      return nlohmann::json{{"index", idx.to_string()}, {"n", cfg.n},        {"backend", cfg.backend},
                            {"star", cfg.star},         {"modified", cfg.modified}, {"value", value}}
                 .dump(2) +
             "\n";
    case Format::csv:
      return "index,n,backend,star,modified,value\n" + csv_field(idx.to_string()) + "," + std::to_string(cfg.n) + "," +
             cfg.backend + "," + (cfg.star ? "true" : "false") + "," + (cfg.modified ? "true" : "false") + "," +
             csv_field(value) + "\n";
    case Format::text:
      return value + "\n";
  }
  return {};
}

inline std::string cmd_table(const RunConfig& cfg, Format format) {
  Table t;
  const SuiteRanges& g = cfg.ranges;
  if (cfg.kind == "zbar") {
    const Index idx = Index::parse(cfg.index);
    t.keys = {"index", "n"};
    for (int n = cfg.n_min.value_or(1); n <= require(g.n_max, "--n-max"); ++n) {
      const CycloElem v = cfg.star ? zbar_star(idx, n) : zbar(idx, n);
      t.add({idx.to_string(), std::to_string(n)}, to_string(v), rational_of(v));
    }
  } else if (cfg.kind == "depth1") {
    const int n = cfg.n;
    if (n < 1) throw std::invalid_argument("--n must be positive");
    t.keys = {"n", "k"};
    const auto values = depth_one_bar(n, require(g.k_max, "--k-max"));
    for (std::size_t k = 0; k < values.size(); ++k)
      t.add({std::to_string(n), std::to_string(k + 1)}, to_string(values[k]), values[k]);
  } else if (cfg.kind == "kkk") {
    const int k = require(cfg.k, "--k");
    const KkkTable table = kkk_general(k, require(g.n_max, "--n-max"), require(g.r_max, "--r-max"));
    t.keys = {"k", "n", "r"};
    for (int n = 1; n <= table.n_max(); ++n)
      for (int r = 1; r <= table.r_max(); ++r)
        t.add({std::to_string(k), std::to_string(n), std::to_string(r)}, to_string(table.at(n, r)), table.at(n, r));
  } else if (cfg.kind == "tildeU") {
    const auto series = cfg.star ? tilde_U_star(require(g.cap, "--cap")) : tilde_U(require(g.cap, "--cap"));
    t.keys = {"k", "r", "s"};
    std::vector<std::pair<std::array<int, 3>, Rational>> entries;
    for (const auto& [e, c] : series.terms()) entries.push_back({{e[0] + e[1] + 2 * e[2], e[1] + e[2], e[2]}, c});
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [krs, c] : entries)
      t.add({std::to_string(krs[0]), std::to_string(krs[1]), std::to_string(krs[2])}, to_string(c), c);
  } else {
    throw std::invalid_argument("unknown table kind '" + cfg.kind + "'");
  }
  return t.render(format);
}

inline std::vector<VerificationReport> cmd_conjecture(const RunConfig& cfg) {
  if (cfg.family != 1 && cfg.family != 2) throw std::invalid_argument("conjecture family must be 1 or 2");
  const int n_max = cfg.ranges.n_max.value_or(12);
  const int ab_max = cfg.ab_max.value_or(4);
  if (ab_max < 0) throw std::invalid_argument("--ab-max must be non-negative");
  struct Instance {
    int n, a, b;
  };
  std::vector<Instance> instances;
  for (int n = 2; n <= n_max; ++n)
    for (int a = 0; a <= ab_max; ++a)
      for (int b = a; a + b <= ab_max; ++b)
        if (a + b + 1 < n) instances.push_back({n, a, b});
  const int family = cfg.family;
  return parallel_map(instances, [family](const Instance& i) { return conjecture_check(family, i.n, i.a, i.b); }, cfg.jobs);
}

inline unsigned resolve_jobs(unsigned flag) {
  if (const char* env = std::getenv("QMHS_PARALLELISM"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw std::invalid_argument(std::string("QMHS_PARALLELISM must be a positive integer, got '") + env + "'");
    return static_cast<unsigned>(v);
  }
  return flag == 0 ? default_jobs() : flag;
}

}  // namespace detail

/// Runs the tool with argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  unsigned jobs_flag = 0;
  CLI::App app{"Finite multiple harmonic q-series at roots of unity", "qmhs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");
  app.add_option("--jobs,-j", jobs_flag, "Worker threads (0 = hardware concurrency; QMHS_PARALLELISM overrides)");

  auto* compute = app.add_subcommand("compute", "Evaluate z_n, z*_n or their modified values for one index");
  compute->add_option("--index", cfg.index, "Comma-separated positive integers, e.g. 2,1")->required();
  compute->add_option("--n", cfg.n, "Order of the root of unity")->required();
  compute->add_option("--backend", cfg.backend, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  compute->add_flag("--star", cfg.star, "Use non-strict chains");
  compute->add_flag("--modified", cfg.modified, "Divide by (1 - zeta_n)^weight");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "thm11, thm12, sumformula, phi, polylog, xi or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--n-max", cfg.ranges.n_max, "Largest n");
  verify->add_option("--cap", cfg.ranges.cap, "Weight cap");
  verify->add_option("--k-max", cfg.ranges.k_max, "Largest weight or part");
  verify->add_option("--r-max", cfg.ranges.r_max, "Largest depth");

  auto* conjecture = app.add_subcommand("conjecture", "Compare the conjectured symmetric evaluations (report only)");
  conjecture->add_option("family", cfg.family, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  conjecture->add_option("--n-max", cfg.ranges.n_max, "Largest n (default 12)");
  conjecture->add_option("--ab-max", cfg.ab_max, "Largest a + b (default 4)");

  auto* table = app.add_subcommand("table", "Write a table of exact values");
  table->add_option("kind", cfg.kind, "zbar, depth1, kkk or tildeU")->required()->check(CLI::IsMember({"zbar", "depth1", "kkk", "tildeU"}));
  table->add_option("--index", cfg.index, "Index for zbar tables");
  table->add_option("--n", cfg.n, "n for depth1 tables");
  table->add_option("--n-min", cfg.n_min, "Smallest n for zbar tables");
  table->add_option("--n-max", cfg.ranges.n_max, "Largest n");
  table->add_option("--k", cfg.k, "Part k for kkk tables");
  table->add_option("--k-max", cfg.ranges.k_max, "Largest weight for depth1 tables");
  table->add_option("--r-max", cfg.ranges.r_max, "Largest depth for kkk tables");
  table->add_option("--cap", cfg.ranges.cap, "Weight cap for tildeU tables");
  table->add_flag("--star", cfg.star, "Star values (zbar, tildeU)");

  std::vector<std::string> argv_storage{"qmhs"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  std::string rendered;
  int code = kOk;
  try {
    cfg.jobs = detail::resolve_jobs(jobs_flag);
    if (compute->parsed()) {
      rendered = detail::cmd_compute(cfg, detail::parse_format(cfg.format.empty() ? "text" : cfg.format));
    } else if (verify->parsed()) {
      err << "# admissible index: k_1 >= 2\n";
      const auto reports = run_tasks(suite_tasks(cfg.suite, cfg.ranges), cfg.jobs);
      for (const auto& r : reports)
        if (r.failed()) code = kFailed;
      rendered = detail::render_reports(reports, detail::parse_format(cfg.format.empty() ? "json" : cfg.format));
    } else if (conjecture->parsed()) {
      rendered = detail::render_reports(detail::cmd_conjecture(cfg), detail::parse_format(cfg.format.empty() ? "json" : cfg.format));
    } else if (table->parsed()) {
      rendered = detail::cmd_table(cfg, detail::parse_format(cfg.format.empty() ? "csv" : cfg.format));
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailed;
  }

  if (cfg.output.empty()) {
    out << rendered;
    return code;
  }
  std::ofstream file(cfg.output);
  if (!file) {
    err << "error: cannot open '" << cfg.output << "' for writing\n";
    return kIoError;
  }
  file << rendered;
  file.close();
  if (!file) {
    err << "error: failed writing '" << cfg.output << "'\n";
    return kIoError;
  }
  return code;
}

}  // namespace qmhs::cli
