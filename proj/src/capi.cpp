#include <cstring>
#include <string>

#include "json.hpp"
#include "yw/bijections.hpp"
#include "yw/error.hpp"
#include "yw/series.hpp"
#include "yw/sets.hpp"
#include "yw/verify.hpp"
#include "yw/yw.h"

using nlohmann::json;

struct yw_config {
  yw::Config c;
};
struct yw_partition {
  yw::Partition p;
};
struct yw_list {
  std::vector<yw::Partition> items;
};

namespace {

thread_local std::string g_error;

template <class F>
yw_status guard(F f) {
  try {
    f();
    g_error.clear();
    return YW_OK;
  } catch (const yw::InvalidArgument& e) {
    g_error = e.what();
    return YW_E_INVALID;
  } catch (const yw::DomainError& e) {
    g_error = e.what();
    return YW_E_DOMAIN;
  } catch (const yw::ResourceError& e) {
    g_error = e.what();
    return YW_E_RESOURCE;
  } catch (const yw::OverflowError& e) {
    g_error = e.what();
    return YW_E_OVERFLOW;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return YW_E_RESOURCE;
  } catch (const std::exception& e) {
    g_error = e.what();
    return YW_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw yw::InvalidArgument(std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json part_json(const yw::Partition& p) {
  json a = json::array();
  for (auto x : p) a.push_back({{"v", x.v}, {"bar", x.bar}});
  return a;
}

json config_json(const yw::Config& c) {
  json j = {{"family", yw::to_string(c.family)}, {"rank", c.rank}, {"weight", yw::to_string(c.weight)},
            {"n", c.n}, {"z", {c.z1, c.z2, c.z3}}, {"U", c.U}, {"V", c.V}, {"Delta", c.Delta},
            {"eps", c.eps}, {"eps_tilde", c.eps_tilde}};
  if (!c.warning.empty()) j["warning"] = c.warning;
  return j;
}

yw::SetSpec make_spec(const char* kind, const yw_config* cfg, const int* X, size_t nx, int N) {
  need(kind, "kind");
  yw::SetSpec s;
  s.kind = yw::parse_set_kind(kind);
  if (cfg) s.cfg = cfg->c;
  if (nx) need(X, "X");
  s.X.assign(X, X + nx);
  s.N = N;
  if (s.kind == yw::SetKind::StrictAvoiding && s.N == 0 && cfg) s.N = cfg->c.U;
  yw::validate(s);
  return s;
}

json reduction_json(const yw::Reduction& r) {
  return {{"output", yw::to_string(r.reduced)}, {"extracted", yw::to_string(r.extracted)}};
}

}  // namespace

extern "C" {

const char* yw_last_error(void) { return g_error.c_str(); }
const char* yw_version(void) { return "1.0.0"; }
void yw_string_free(char* s) { std::free(s); }

yw_status yw_config_new(const char* family, int rank, const char* weight, yw_config** out) {
  return guard([&] {
    need(family, "family");
    need(weight, "weight");
    need(out, "out");
    *out = new yw_config{yw::make_config(family, rank, weight)};
  });
}

void yw_config_free(yw_config* c) { delete c; }

yw_status yw_config_json(const yw_config* c, char** out) {
  return guard([&] {
    need(c, "config");
    need(out, "out");
    *out = dup(config_json(c->c).dump());
  });
}

yw_status yw_partition_parse(const char* text, yw_partition** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new yw_partition{yw::parse_partition(text)};
  });
}

void yw_partition_free(yw_partition* p) { delete p; }
size_t yw_partition_length(const yw_partition* p) { return p ? p->p.size() : 0; }
int yw_partition_size(const yw_partition* p) { return p ? yw::size(p->p) : 0; }

yw_status yw_partition_part(const yw_partition* p, size_t i, int* value, int* barred) {
  return guard([&] {
    need(p, "partition");
    if (i >= p->p.size()) throw yw::InvalidArgument("part index out of range");
    if (value) *value = p->p[i].v;
    if (barred) *barred = p->p[i].bar ? 1 : 0;
  });
}

yw_status yw_partition_to_string(const yw_partition* p, char** out) {
  return guard([&] {
    need(p, "partition");
    need(out, "out");
    *out = dup(yw::to_string(p->p));
  });
}

yw_status yw_enumerate(const char* kind, const yw_config* cfg, const int* X, size_t nx, int N, int m, yw_list** out) {
  return guard([&] {
    need(out, "out");
    auto s = make_spec(kind, cfg, X, nx, N);
    *out = new yw_list{yw::enumerate(s, m)};
  });
}

yw_status yw_count(const char* kind, const yw_config* cfg, const int* X, size_t nx, int N, int m, int64_t* out) {
  return guard([&] {
    need(out, "out");
    auto s = make_spec(kind, cfg, X, nx, N);
    *out = yw::count(s, m);
  });
}

size_t yw_list_size(const yw_list* l) { return l ? l->items.size() : 0; }

yw_status yw_list_get(const yw_list* l, size_t i, yw_partition** out) {
  return guard([&] {
    need(l, "list");
    need(out, "out");
    if (i >= l->items.size()) throw yw::InvalidArgument("list index out of range");
    *out = new yw_partition{l->items[i]};
  });
}

yw_status yw_list_json(const yw_list* l, char** out) {
  return guard([&] {
    need(l, "list");
    need(out, "out");
    json a = json::array();
    for (auto& p : l->items) a.push_back(part_json(p));
    *out = dup(a.dump());
  });
}

void yw_list_free(yw_list* l) { delete l; }

yw_status yw_contains(const char* kind, const yw_config* cfg, const int* X, size_t nx, int N, const yw_partition* p,
                      int* result) {
  return guard([&] {
    need(p, "partition");
    need(result, "result");
    auto s = make_spec(kind, cfg, X, nx, N);
    *result = yw::contains(s, p->p) ? 1 : 0;
  });
}

yw_status yw_theta(const yw_config* c, const yw_partition* in, yw_partition** out) {
  return guard([&] {
    need(c, "config");
    need(in, "input");
    need(out, "out");
    *out = new yw_partition{yw::theta(in->p, c->c)};
  });
}

yw_status yw_theta_inv(const yw_config* c, const yw_partition* in, yw_partition** out) {
  return guard([&] {
    need(c, "config");
    need(in, "input");
    need(out, "out");
    *out = new yw_partition{yw::theta_inv(in->p, c->c)};
  });
}

yw_status yw_bijection_json(const yw_config* cfg, const char* algo, int forward, const char* input, const char* extra,
                            int trace, char** out) {
  return guard([&] {
    need(cfg, "config");
    need(algo, "algorithm");
    need(input, "input");
    need(out, "out");
    const yw::Config& c = cfg->c;
    const std::string a = algo;
    yw::Partition y = yw::parse_partition(input);
    auto extra_ordinary = [&] { return extra ? yw::parse_ordinary(extra) : yw::Ordinary{}; };
    json j = {{"algorithm", a}, {"direction", forward ? "forward" : "backward"}, {"input", yw::to_string(y)}};
    if (a == "theta") {
      std::vector<yw::TraceStep> steps;
      auto z = forward ? yw::theta(y, c, trace ? &steps : nullptr) : yw::theta_inv(y, c, trace ? &steps : nullptr);
      j["output"] = yw::to_string(z);
      j["parts"] = part_json(z);
      if (trace) {
        json t = json::array();
        for (auto& s : steps) t.push_back({{"step", s.label}, {"y", yw::to_string(s.y)}, {"lambda", yw::to_string(s.lambda)}});
        j["trace"] = t;
      }
    } else if (a == "A" || a == "B" || a == "C" || a == "D" || a == "Dprime") {
      if (forward) {
        std::vector<yw::RoundInfo> rounds;
        yw::Reduction r = a == "A"   ? yw::algoA(y, c)
                          : a == "B" ? yw::algoB(y, c, &rounds)
                          : a == "C" ? yw::algoC(y, c, &rounds)
                          : a == "D" ? yw::algoD(y, c)
                                     : yw::algoDprime(y, c);
        j.update(reduction_json(r));
        if (trace && !rounds.empty()) {
          json t = json::array();
          for (auto& q : rounds) t.push_back({{"lambda_hat", q.lambda_hat}, {"t", q.t}, {"a", q.a}});
          j["rounds"] = t;
        }
      } else {
        auto lam = extra_ordinary();
        auto z = a == "A"   ? yw::algoA_inv(y, lam, c)
                 : a == "B" ? yw::algoB_inv(y, lam, c)
                 : a == "C" ? yw::algoC_inv(y, lam, c)
                 : a == "D" ? yw::algoD_inv(y, lam, c)
                            : yw::algoDprime_inv(y, lam, c);
        j["extracted"] = yw::to_string(lam);
        j["output"] = yw::to_string(z);
      }
    } else if (a == "E" || a == "F") {
      if ((a == "E") == static_cast<bool>(forward)) {
        yw::ModularDiagram d;
        j.update(reduction_json(yw::algoE(y, c, &d)));
        if (trace) {
          auto mu = yw::mu_formula(d);
          j["diagram"] = {{"t", d.t}, {"e", d.e}, {"l", d.l}, {"eps", d.eps}, {"r", d.r}, {"mu", mu}};
        }
      } else {
        auto lam = extra_ordinary();
        j["extracted"] = yw::to_string(lam);
        j["output"] = yw::to_string(yw::algoF(y, lam, c));
      }
    } else if (a == "po" || a == "ps") {
      yw::Partition z = a == "po" ? (forward ? yw::p_o(y, c) : yw::p_o_inv(y, c))
                                  : (forward ? yw::p_s(y, c) : yw::p_s_inv(y, c));
      j["output"] = yw::to_string(z);
    } else {
      throw yw::InvalidArgument("unknown algorithm '" + a + "'");
    }
    *out = dup(j.dump());
  });
}

yw_status yw_product_series(const yw_config* c, int M, int64_t* out, size_t n) {
  return guard([&] {
    need(c, "config");
    need(out, "out");
    if (M < 0 || n < static_cast<size_t>(M) + 1) throw yw::InvalidArgument("output buffer shorter than M+1");
    auto s = yw::product_series(c->c, M);
    for (int i = 0; i <= M; ++i) out[i] = s[i];
  });
}

yw_status yw_verify(const char* identity, const yw_config* c, int max_size, int jobs, char** out, int* pass) {
  return guard([&] {
    need(identity, "identity");
    need(out, "out");
    const std::string id = identity;
    auto cfg = [&]() -> const yw::Config& {
      need(c, "config");
      return c->c;
    };
    yw::Report r;
    if (id == "ao") r = yw::verify_counts(cfg(), max_size, jobs);
    else if (id == "fock") r = yw::fock_identity(cfg(), max_size, jobs);
    else if (id == "euler") r = yw::euler_identity(max_size);
    else if (id == "restricted") r = yw::restricted_identity(cfg(), max_size, jobs);
    else if (id == "classical") r = yw::classical_identity(6, 4, max_size, jobs);
    else if (id == "theta") r = yw::theta_bijectivity(cfg(), max_size, jobs);
    else throw yw::InvalidArgument("unknown identity '" + id + "'");
    json rows = json::array();
    for (auto& x : r.results) {
      json row = {{"m", x.m}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"pass", x.pass}};
      if (!x.note.empty()) row["note"] = x.note;
      rows.push_back(row);
    }
    json j = {{"identity", r.identity}, {"family", r.family.empty() ? json(nullptr) : json(r.family)},
              {"rank", r.family.empty() ? json(nullptr) : json(r.rank)},
              {"weight", r.weight.empty() ? json(nullptr) : json(r.weight)}, {"results", rows}, {"pass", r.pass}};
    *out = dup(j.dump());
    if (pass) *pass = r.pass ? 1 : 0;
  });
}

yw_status yw_selfcheck(char** out, int* pass) {
  return guard([&] {
    need(out, "out");
    auto checks = yw::selfcheck();
    json a = json::array();
    bool ok = true;
    for (auto& ch : checks) {
      a.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
      ok = ok && ch.pass;
    }
    *out = dup(json{{"checks", a}, {"pass", ok}}.dump());
    if (pass) *pass = ok ? 1 : 0;
  });
}

}  // extern "C"
