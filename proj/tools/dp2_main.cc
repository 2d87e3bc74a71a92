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
// dp2: command-line front end over the C interface.
//
// Exit codes: 0 found / verified, 2 exhausted, 1 error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dp2/dp2.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitExhausted = 2;

struct Globals {
  int threads = 1;
  uint64_t memory_budget = 0;
  std::string cache_dir;
  std::string out;
};

std::string DefaultCacheDir() {
  if (const char* d = std::getenv("DP2_CACHE_DIR")) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME")) return std::string(x) + "/dp2";
  if (const char* h = std::getenv("HOME")) return std::string(h) + "/.cache/dp2";
  return ".dp2-cache";
}

struct ContextDeleter {
  void operator()(dp2_context* c) const { dp2_context_destroy(c); }
};
using Context = std::unique_ptr<dp2_context, ContextDeleter>;

struct StringDeleter {
  void operator()(char* s) const { dp2_string_free(s); }
};
using Owned = std::unique_ptr<char, StringDeleter>;

int Report(dp2_context* ctx, dp2_status st) {
  std::cerr << "dp2: " << dp2_status_name(st) << ": " << dp2_last_error(ctx) << '\n';
  return kExitError;
}

bool Emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(out);
  f << text;
  if (!f) {
    std::cerr << "dp2: cannot write " << out << '\n';
    return false;
  }
  return true;
}

bool ReadFile(const std::string& path, std::string* text) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "dp2: cannot read " << path << '\n';
    return false;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  *text = ss.str();
  return true;
}

std::string CubicSummary(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  std::string s = "points: " + std::to_string(j["num_points"].get<size_t>());
  for (const auto& p : j["points"]) {
    s += "; " + p["point"].get<std::string>() + " Eckardt: " + (p["eckardt"].get<bool>() ? "yes" : "no");
  }
  return s + "\n";
}

std::string SingularitySummary(const nlohmann::json& j) {
  std::string s = j["point"].get<std::string>() + ": ";
  if (!j["singular"].get<bool>()) return s + "smooth\n";
  s += "singular, multiplicity " + std::to_string(j["multiplicity"].get<int>());
  s += j["node"].get<bool>() ? ", node" : ", not a node";
  s += "; tangent lines:";
  for (const auto& t : j["tangent_lines"]) {
    s += " " + t["direction"].get<std::string>() + "^" + std::to_string(t["multiplicity"].get<int>());
  }
  return s + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-2 del Pezzo surfaces over finite fields: W(E7) classes, zeta functions, searches"};
  app.require_subcommand(1);
  Globals g;
  g.cache_dir = DefaultCacheDir();
  app.add_option("--threads", g.threads, "Worker threads for the group build")->check(CLI::PositiveNumber);
  app.add_option("--memory-budget", g.memory_budget, "Byte budget for the group build (default 1 GiB)");
  app.add_option("--cache-dir", g.cache_dir, "Directory for the class table cache");

  auto* table = app.add_subcommand("table", "Emit the 60-row conjugacy class table");
  std::string table_format = "csv";
  table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  table->add_option("--out", g.out, "Output file (default stdout)");

  int class_id = 0;
  uint64_t q = 0;
  int dmax = 6;
  auto* zeta = app.add_subcommand("zeta", "Zeta function data for one class over F_q");
  zeta->add_option("--class", class_id, "Class id 1..60")->required();
  zeta->add_option("--q", q, "Field size")->required();
  zeta->add_option("--dmax", dmax, "Largest d for N_d")->default_val(6);
  zeta->add_option("--out", g.out, "Output file (default stdout)");

  std::string witness_dir;
  auto* verdict = app.add_subcommand("verdict", "Existence verdicts for the 18 minimal types over F_q");
  verdict->add_option("--q", q, "Field size")->required();
  std::string verdict_format = "json";
  verdict->add_option("--format", verdict_format, "json or csv")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  verdict->add_option("--out", g.out, "Output file (default stdout)");
  verdict->add_option("--witness-dir", witness_dir,
                      "Directory for witness files (default: next to --out, else <cache-dir>/witnesses)");

  std::string pattern;
  uint64_t node_budget = 0;
  auto* search = app.add_subcommand("search", "Search for points in general position with given degrees");
  search->add_option("--pattern", pattern, "Degree pattern: 1x7, 7, 3,1x4, 5,3:conic, ...")->required();
  search->add_option("--q", q, "Field size")->required();
  search->add_option("--out", g.out, "Witness or report file (default stdout)");
  search->add_option("--node-budget", node_budget, "Candidate orbits to examine before giving up");

  std::string file;
  auto* verify_witness = app.add_subcommand("verify-witness", "Re-check a witness file");
  verify_witness->add_option("--file", file, "Witness JSON")->required()->check(CLI::ExistingFile);

  uint64_t p = 0;
  int m = 1;
  std::string point;
  auto* verify_cubic = app.add_subcommand("verify-cubic", "Rational points and Eckardt points of a cubic surface");
  verify_cubic->add_option("--file", file, "Equation file")->required()->check(CLI::ExistingFile);
  verify_cubic->add_option("--p", p, "Characteristic")->required();
  verify_cubic->add_option("--m", m, "Field F_{p^m}")->default_val(1);
  std::string cubic_format = "text";
  verify_cubic->add_option("--format", cubic_format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* singularity = app.add_subcommand("singularity", "Singularity analysis of a plane curve at a point");
  singularity->add_option("--file", file, "Equation file")->required()->check(CLI::ExistingFile);
  singularity->add_option("--p", p, "Characteristic")->required();
  singularity->add_option("--m", m, "Field F_{p^m}")->default_val(1);
  singularity->add_option("--point", point, "Point as x:y:z")->required();
  std::string sing_format = "text";
  singularity->add_option("--format", sing_format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  dp2_context* raw = nullptr;
  if (dp2_context_create(g.cache_dir.c_str(), g.memory_budget, g.threads, &raw) != DP2_OK) {
    std::cerr << "dp2: cannot create context\n";
    return kExitError;
  }
  Context ctx(raw);
  char* out = nullptr;
  dp2_status st = DP2_OK;

  if (table->parsed()) {
    if ((st = dp2_table(ctx.get(), table_format.c_str(), &out)) != DP2_OK) return Report(ctx.get(), st);
    return Emit(Owned(out).get(), g.out) ? kExitOk : kExitError;
  }
  if (zeta->parsed()) {
    if ((st = dp2_zeta(ctx.get(), class_id, q, dmax, &out)) != DP2_OK) return Report(ctx.get(), st);
    return Emit(Owned(out).get(), g.out) ? kExitOk : kExitError;
  }
  if (verdict->parsed()) {
    if (witness_dir.empty()) {
      namespace fs = std::filesystem;
      witness_dir = g.out.empty() ? (fs::path(g.cache_dir) / "witnesses").string()
                                  : (fs::absolute(g.out).parent_path() / "witnesses").string();
    }
    if ((st = dp2_verdicts(ctx.get(), q, verdict_format.c_str(), witness_dir.c_str(), &out)) != DP2_OK) {
      return Report(ctx.get(), st);
    }
    return Emit(Owned(out).get(), g.out) ? kExitOk : kExitError;
  }
  if (search->parsed()) {
    dp2_search_outcome outcome;
    if ((st = dp2_search(ctx.get(), pattern.c_str(), q, node_budget, &outcome, &out)) != DP2_OK) {
      return Report(ctx.get(), st);
    }
    if (!Emit(Owned(out).get(), g.out)) return kExitError;
    switch (outcome) {
      case DP2_SEARCH_FOUND: return kExitOk;
      case DP2_SEARCH_EXHAUSTED: return kExitExhausted;
      default:
        std::cerr << "dp2: node budget exceeded before the search finished\n";
        return kExitError;
    }
  }
  if (verify_witness->parsed()) {
    std::string text;
    if (!ReadFile(file, &text)) return kExitError;
    int ok = 0;
    if ((st = dp2_verify_witness(ctx.get(), text.c_str(), &ok, &out)) != DP2_OK) return Report(ctx.get(), st);
    Owned detail(out);
    std::cout << (ok ? "verified: " : "rejected: ") << detail.get() << '\n';
    return ok ? kExitOk : kExitError;
  }
  if (verify_cubic->parsed()) {
    std::string text;
    if (!ReadFile(file, &text)) return kExitError;
    if ((st = dp2_verify_cubic(ctx.get(), text.c_str(), p, m, &out)) != DP2_OK) return Report(ctx.get(), st);
    Owned j(out);
    std::cout << (cubic_format == "json" ? std::string(j.get()) : CubicSummary(j.get()));
    return kExitOk;
  }
  if (singularity->parsed()) {
    std::string text;
    if (!ReadFile(file, &text)) return kExitError;
    if ((st = dp2_singularity(ctx.get(), text.c_str(), p, m, point.c_str(), &out)) != DP2_OK) {
      return Report(ctx.get(), st);
    }
    Owned j(out);
    std::cout << (sing_format == "json" ? std::string(j.get()) : SingularitySummary(nlohmann::json::parse(j.get())));
    return kExitOk;
  }
  return kExitError;
}
