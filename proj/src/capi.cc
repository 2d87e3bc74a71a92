// Copyright 2026 The dp2 Authors
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

#include "dp2/verdict.h"
#include "dp2/dp2.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "dp2/class_table.h"
#include "dp2/config_search.h"
#include "dp2/error.h"
#include "dp2/hypersurface.h"
#include "dp2/verdict.h"
#include "dp2/zeta.h"
#include "json.hpp"

using nlohmann::json;

struct dp2_context {
  std::string cache_dir;
  dp2::GroupBuildOptions build;
  std::optional<dp2::ClassTable> table;
  bool loaded_from_cache = false;
  std::string last_error;
};

namespace {

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
dp2_status Guard(dp2_context* ctx, F&& body) {
  if (!ctx) return DP2_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return DP2_OK;
  } catch (const dp2::Error& e) {
    ctx->last_error = e.what();
    return static_cast<dp2_status>(e.code());
  } catch (const json::exception& e) {
    ctx->last_error = e.what();
    return DP2_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return DP2_ERR_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return DP2_ERR_INTERNAL;
  }
}

void Require(bool cond, const char* what) {
  if (!cond) dp2::Fail(dp2::ErrorCode::kInvalidArgument, what);
}

const dp2::ClassTable& Table(dp2_context* ctx) {
  if (!ctx->table) ctx->table = dp2::ClassTable::LoadOrBuild(ctx->cache_dir, ctx->build, &ctx->loaded_from_cache);
  return *ctx->table;
}

std::shared_ptr<const dp2::FiniteField> Field(uint64_t p, int m) {
  Require(m >= 1, "m must be positive");
  Require(dp2::IsPrime(p), "p must be prime");
  return dp2::FiniteField::Canonical(p, m);
}

dp2::ProjPoint ParsePoint(const dp2::FiniteField& f, std::string text) {
  for (char& c : text) {
    if (c == '(' || c == ')') c = ' ';
    if (c == ',') c = ':';
  }
  dp2::ProjPoint pt;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    const auto b = tok.find_first_not_of(' ');
    const auto e = tok.find_last_not_of(' ');
    if (b == std::string::npos) dp2::Fail(dp2::ErrorCode::kParse, "empty coordinate in point");
    pt.push_back(f.Parse(tok.substr(b, e - b + 1)));
  }
  return pt;
}

json FieldJson(const dp2::FiniteField& f) {
  return {{"p", f.p()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

}  // namespace

extern "C" {

const char* dp2_version(void) { return "1.0.0"; }

const char* dp2_status_name(dp2_status status) {
  if (status == DP2_OK) return "ok";
  if (status >= DP2_ERR_INVALID_ARGUMENT && status <= DP2_ERR_INTERNAL) {
    return dp2::ErrorCodeName(static_cast<dp2::ErrorCode>(status));
  }
  return "unknown";
}

dp2_status dp2_context_create(const char* cache_dir, uint64_t memory_budget, int threads, dp2_context** out) {
  if (!out) return DP2_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  auto* ctx = new (std::nothrow) dp2_context;
  if (!ctx) return DP2_ERR_BUDGET_EXCEEDED;
  if (cache_dir) ctx->cache_dir = cache_dir;
  if (memory_budget) ctx->build.memory_budget_bytes = memory_budget;
  ctx->build.threads = threads < 1 ? 1 : threads;
  *out = ctx;
  return DP2_OK;
}

void dp2_context_destroy(dp2_context* ctx) { delete ctx; }

const char* dp2_last_error(const dp2_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void dp2_string_free(char* s) { std::free(s); }

dp2_status dp2_load_table(dp2_context* ctx, int* loaded_from_cache) {
  return Guard(ctx, [&] {
    Table(ctx);
    if (loaded_from_cache) *loaded_from_cache = ctx->loaded_from_cache ? 1 : 0;
  });
}

dp2_status dp2_table(dp2_context* ctx, const char* format, char** out) {
  return Guard(ctx, [&] {
    Require(format && out, "null argument");
    const std::string fmt = format;
    Require(fmt == "json" || fmt == "csv", "format must be json or csv");
    const auto& t = Table(ctx);
    *out = Dup(fmt == "json" ? t.ToJson().dump(1) + "\n" : t.ToCsv());
  });
}

dp2_status dp2_classify(dp2_context* ctx, const int64_t matrix[64], int* class_id) {
  return Guard(ctx, [&] {
    Require(matrix && class_id, "null argument");
    dp2::IntMatrix8 m;
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        const int64_t v = matrix[r * 8 + c];
        if (v < -32 || v > 32) dp2::Fail(dp2::ErrorCode::kNotAnIsometry, "entry out of range");
        m(r, c) = static_cast<int>(v);
      }
    }
    *class_id = Table(ctx).Classify(dp2::Isometry(m));
  });
}

dp2_status dp2_zeta(dp2_context* ctx, int class_id, uint64_t q, int dmax, char** out_json) {
  return Guard(ctx, [&] {
    Require(out_json, "null argument");
    dp2::ValidateFieldSize(q);
    *out_json = Dup(dp2::ZetaToJson(dp2::ComputeZeta(Table(ctx), class_id, q, dmax)).dump(1) + "\n");
  });
}

dp2_status dp2_verdicts(dp2_context* ctx, uint64_t q, const char* format, const char* witness_dir, char** out) {
  return Guard(ctx, [&] {
    Require(format && out, "null argument");
    const std::string fmt = format;
    Require(fmt == "json" || fmt == "csv", "format must be json or csv");
    auto rows = dp2::ComputeVerdicts(Table(ctx), q);
    if (witness_dir) {
      namespace fs = std::filesystem;
      std::error_code ec;
      fs::create_directories(witness_dir, ec);
      for (auto& r : rows) {
        if (!r.witness) continue;
        const fs::path path =
            fs::path(witness_dir) / ("type" + std::to_string(r.class_id) + "_q" + std::to_string(q) + ".json");
        std::ofstream f(path);
        f << dp2::WitnessToJson(*r.witness).dump(1) << '\n';
        if (!f) dp2::Fail(dp2::ErrorCode::kIo, "cannot write " + path.string());
        r.witness_path = path.string();
      }
    }
    *out = Dup(fmt == "json" ? dp2::VerdictsToJson(rows).dump(1) + "\n" : dp2::VerdictsToCsv(rows));
  });
}

dp2_status dp2_search(dp2_context* ctx, const char* pattern, uint64_t q, uint64_t node_budget,
                      dp2_search_outcome* outcome, char** out_json) {
  return Guard(ctx, [&] {
    Require(pattern && outcome && out_json, "null argument");
    dp2::SearchOptions opts;
    if (node_budget) opts.node_budget = node_budget;
    const auto pat = dp2::SearchPattern::Parse(pattern);
    const auto res = dp2::SearchBlowupConfig(pat, q, opts);
    json j;
    if (res.status == dp2::SearchStatus::kFound) {
      j = dp2::WitnessToJson(*res.witness);
    } else {
      j = {{"q", q}, {"pattern", pat.ToString()}, {"status", dp2::SearchStatusName(res.status)},
           {"nodes", res.nodes}, {"certificate", res.certificate}};
    }
    *outcome = static_cast<dp2_search_outcome>(res.status);
    *out_json = Dup(j.dump(1) + "\n");
  });
}

dp2_status dp2_verify_witness(dp2_context* ctx, const char* witness_json, int* ok, char** detail) {
  return Guard(ctx, [&] {
    Require(witness_json && ok && detail, "null argument");
    const auto check = dp2::VerifyWitness(dp2::WitnessFromJson(json::parse(witness_json)));
    *ok = check.ok ? 1 : 0;
    *detail = Dup(check.detail);
  });
}

dp2_status dp2_verify_cubic(dp2_context* ctx, const char* equation, uint64_t p, int m, char** out_json) {
  return Guard(ctx, [&] {
    Require(equation && out_json, "null argument");
    const auto f = Field(p, m);
    const auto s = dp2::HyperSurface::Parse(f, equation);
    Require(s.num_vars() == 4 && s.degree() == 3, "expected a cubic surface in four variables");
    json pts = json::array();
    for (const auto& pt : dp2::RationalPoints(s)) {
      const auto r = dp2::EckardtAnalysis(s, pt);
      pts.push_back({{"point", dp2::PointToString(*f, pt)},
                     {"eckardt", r.is_eckardt},
                     {"lines_over_closure", r.lines_over_closure},
                     {"tangent_quadric_vanishes", r.tangent_quadric_vanishes}});
    }
    json j = {{"field", FieldJson(*f)}, {"equation", s.ToString()}, {"num_points", pts.size()}, {"points", pts}};
    *out_json = Dup(j.dump(1) + "\n");
  });
}

dp2_status dp2_singularity(dp2_context* ctx, const char* equation, uint64_t p, int m, const char* point,
                           char** out_json) {
  return Guard(ctx, [&] {
    Require(equation && point && out_json, "null argument");
    const auto f = Field(p, m);
    const auto c = dp2::HyperSurface::Parse(f, equation);
    Require(c.num_vars() == 3, "expected a plane curve in three variables");
    const auto pt = ParsePoint(*f, point);
    Require(pt.size() == 3, "point needs three coordinates");
    const auto r = dp2::CurveSingularityAnalysis(c, pt);
    json cone = json::array();
    for (auto x : r.tangent_cone) cone.push_back(f->ToString(x));
    json lines = json::array();
    for (const auto& t : r.tangent_lines) {
      lines.push_back({{"direction", dp2::PointToString(*r.extension, t.direction)}, {"multiplicity", t.multiplicity}});
    }
    json j = {{"field", FieldJson(*f)},
              {"equation", c.ToString()},
              {"point", dp2::PointToString(*f, dp2::NormalizePoint(*f, pt))},
              {"on_curve", c.Evaluate(pt) == 0},
              {"singular", r.is_singular},
              {"multiplicity", r.multiplicity},
              {"tangent_cone", cone},
              {"tangent_lines", lines},
              {"node", r.is_node}};
    *out_json = Dup(j.dump(1) + "\n");
  });
}

}  // extern "C"
