// Command-line front end. Talks to the library only through yw.h.
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "yw/yw.h"

using nlohmann::json;

namespace {

// Exit codes.
constexpr int kOk = 0, kVerifyFailed = 1, kInvalid = 2, kResource = 3, kDomain = 4, kInternal = 5;

struct Failure {
  int code;
  std::string kind, message, flag;
};

[[noreturn]] void invalid(const std::string& msg, const std::string& flag = "") {
  throw Failure{kInvalid, "invalid", msg, flag};
}

void check(yw_status s) {
  switch (s) {
    case YW_OK: return;
    case YW_E_INVALID: throw Failure{kInvalid, "invalid", yw_last_error(), ""};
    case YW_E_DOMAIN: throw Failure{kDomain, "domain", yw_last_error(), ""};
    case YW_E_RESOURCE: throw Failure{kResource, "resource", yw_last_error(), ""};
    case YW_E_OVERFLOW: throw Failure{kResource, "overflow", yw_last_error(), ""};
    default: throw Failure{kInternal, "internal", yw_last_error(), ""};
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  yw_string_free(s);
  return out;
}

struct Options {
  std::string family, weight, direction = "forward", input, extra, algorithm = "theta", set, x, identity,
                              format = "json";
  int rank = 0, N = 0, size = -1, max_degree = 20, max_size = 15, jobs = 1;
  bool trace = false, count_only = false;
};

using ConfigPtr = std::unique_ptr<yw_config, decltype(&yw_config_free)>;

ConfigPtr config(const Options& o, bool required) {
  if (o.family.empty() && !required) return {nullptr, yw_config_free};
  if (o.family.empty()) invalid("a configuration is required", "--family");
  if (o.rank <= 0) invalid("rank must be positive", "--rank");
  if (o.weight.empty()) invalid("a weight is required", "--weight");
  yw_config* c = nullptr;
  yw_status s = yw_config_new(o.family.c_str(), o.rank, o.weight.c_str(), &c);
  if (s == YW_E_INVALID) invalid(yw_last_error(), "--family");
  check(s);
  return {c, yw_config_free};
}

std::vector<int> parse_ints(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      invalid("'" + text + "' is not a comma-separated integer list", flag);
    }
  }
  return out;
}

void print_report(const json& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.dump() << "\n";
    return;
  }
  std::cout << "identity\tfamily\trank\tweight\tm\tlhs\trhs\tpass\n";
  auto cell = [](const json& v) { return v.is_null() ? std::string("-") : v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto& row : r["results"])
    std::cout << cell(r["identity"]) << "\t" << cell(r["family"]) << "\t" << cell(r["rank"]) << "\t"
              << cell(r["weight"]) << "\t" << row["m"] << "\t" << row["lhs"] << "\t" << row["rhs"] << "\t"
              << (row["pass"].get<bool>() ? "true" : "false") << "\n";
}

int run_enumerate(const Options& o) {
  if (o.set.empty()) invalid("a set kind is required", "--set");
  if (o.size < 0) invalid("a nonnegative size is required", "--size");
  bool needs_cfg = o.set == "z" || o.set.rfind("ao1", 0) == 0 || o.set.rfind("ao2", 0) == 0;
  needs_cfg = needs_cfg && o.set.find("classical") == std::string::npos;
  auto cfg = config(o, needs_cfg);
  auto X = parse_ints(o.x, "--x");
  if (o.count_only) {
    int64_t n = 0;
    check(yw_count(o.set.c_str(), cfg.get(), X.data(), X.size(), o.N, o.size, &n));
    std::cout << n << "\n";
    return kOk;
  }
  yw_list* l = nullptr;
  check(yw_enumerate(o.set.c_str(), cfg.get(), X.data(), X.size(), o.N, o.size, &l));
  std::unique_ptr<yw_list, decltype(&yw_list_free)> list(l, yw_list_free);
  if (o.format == "json") {
    char* s = nullptr;
    check(yw_list_json(l, &s));
    std::cout << take(s) << "\n";
  } else {
    for (std::size_t i = 0; i < yw_list_size(l); ++i) {
      yw_partition* p = nullptr;
      check(yw_list_get(l, i, &p));
      char* s = nullptr;
      yw_status st = yw_partition_to_string(p, &s);
      yw_partition_free(p);
      check(st);
      std::cout << take(s) << "\n";
    }
  }
  return kOk;
}

int run_bijection(const Options& o) {
  if (o.input.empty()) invalid("an input partition is required", "--input");
  if (o.direction != "forward" && o.direction != "backward") invalid("direction must be forward or backward", "--direction");
  auto cfg = config(o, true);
  char* s = nullptr;
  check(yw_bijection_json(cfg.get(), o.algorithm.c_str(), o.direction == "forward", o.input.c_str(),
                          o.extra.empty() ? nullptr : o.extra.c_str(), o.trace, &s));
  json j = json::parse(take(s));
  if (o.format == "json" && !o.trace) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  if (o.trace) {
    for (const char* key : {"trace", "rounds"})
      if (j.contains(key))
        for (auto& step : j[key]) std::cout << step.dump() << "\n";
    if (j.contains("diagram")) std::cout << j["diagram"].dump() << "\n";
  }
  // final line: the image, followed by the extracted partition for reductions
  std::cout << j["output"].get<std::string>();
  if (j.contains("extracted") && o.direction == "forward") std::cout << "\t" << j["extracted"].get<std::string>();
  std::cout << "\n";
  return kOk;
}

int run_series(const Options& o) {
  if (o.max_degree < 0) invalid("max degree must be nonnegative", "--max-degree");
  auto cfg = config(o, true);
  std::vector<int64_t> c(static_cast<std::size_t>(o.max_degree) + 1);
  check(yw_product_series(cfg.get(), o.max_degree, c.data(), c.size()));
  if (o.format == "json") {
    std::cout << json{{"family", o.family}, {"rank", o.rank}, {"weight", o.weight}, {"coefficients", c}}.dump() << "\n";
  } else {
    std::cout << "m\tcoefficient\n";
    for (std::size_t m = 0; m < c.size(); ++m) std::cout << m << "\t" << c[m] << "\n";
  }
  return kOk;
}

int run_verify(const Options& o) {
  if (o.identity.empty()) invalid("an identity is required", "--identity");
  if (o.max_size < 0) invalid("max size must be nonnegative", "--max-size");
  if (o.jobs < 1) invalid("jobs must be at least 1", "--jobs");
  bool needs_cfg = o.identity != "euler" && o.identity != "classical";
  auto cfg = config(o, needs_cfg);
  char* s = nullptr;
  int pass = 0;
  check(yw_verify(o.identity.c_str(), cfg.get(), o.max_size, o.jobs, &s, &pass));
  print_report(json::parse(take(s)), o.format);
  return pass ? kOk : kVerifyFailed;
}

int run_selfcheck(const Options& o) {
  char* s = nullptr;
  int pass = 0;
  check(yw_selfcheck(&s, &pass));
  json j = json::parse(take(s));
  if (o.format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "name\tpass\tdetail\n";
    for (auto& c : j["checks"])
      std::cout << c["name"].get<std::string>() << "\t" << (c["pass"].get<bool>() ? "true" : "false") << "\t"
                << c["detail"].get<std::string>() << "\n";
  }
  return pass ? kOk : kVerifyFailed;
}

void diagnose(const Failure& f) {
  json d = {{"error", f.kind}, {"code", f.code}, {"message", f.message}};
  if (!f.flag.empty()) d["flag"] = f.flag;
  std::cerr << d.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-colored partitions: enumeration, bijections and identity checks"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "A2even, A2odd, B1, D1 or D2");
    sub->add_option("--rank", o.rank, "rank n (n+1 for D2)");
    sub->add_option("--weight", o.weight, "L0, L1, Ln-1 or Ln");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  };

  auto* en = app.add_subcommand("enumerate", "list or count a set of partitions of one size");
  add_config(en);
  add_format(en);
  en->add_option("--set", o.set, "set kind, e.g. ao1, ao2, z, overpartitions, ao3-classical");
  en->add_option("--x", o.x, "residue set, comma separated");
  en->add_option("--N", o.N, "classical modulus");
  en->add_option("--size", o.size, "partition size m");
  en->add_flag("--count-only", o.count_only, "print only the number of members");

  auto* bi = app.add_subcommand("bijection", "run theta or one of its component algorithms");
  add_config(bi);
  add_format(bi);
  bi->add_option("--direction", o.direction, "forward or backward");
  bi->add_option("--input", o.input, "partition, e.g. \"33,31,28~,28~\"");
  bi->add_option("--extra", o.extra, "extracted partition for backward reductions");
  bi->add_option("--algorithm", o.algorithm, "theta A B C D Dprime E F po ps");
  bi->add_flag("--trace", o.trace, "print each intermediate step as JSON");

  auto* se = app.add_subcommand("series", "coefficients of the product formula");
  add_config(se);
  add_format(se);
  se->add_option("--max-degree", o.max_degree, "highest degree");

  auto* ve = app.add_subcommand("verify", "check an identity exhaustively up to a size bound");
  add_config(ve);
  add_format(ve);
  ve->add_option("--identity", o.identity, "ao fock euler restricted classical theta");
  ve->add_option("--max-size", o.max_size, "largest m checked");
  ve->add_option("--jobs", o.jobs, "worker threads");

  auto* sc = app.add_subcommand("selfcheck", "replay the built-in worked examples");
  add_format(sc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose({kInvalid, "invalid", e.what(), ""});
    return kInvalid;
  }

  try {
    if (en->parsed()) return run_enumerate(o);
    if (bi->parsed()) return run_bijection(o);
    if (se->parsed()) return run_series(o);
    if (ve->parsed()) return run_verify(o);
    return run_selfcheck(o);
  } catch (const Failure& f) {
    diagnose(f);
    return f.code;
  } catch (const std::exception& e) {
    diagnose({kInternal, "internal", e.what(), ""});
    return kInternal;
  }
}
