// Command-line front end. Talks to the kernel exclusively through the shared
// library's C interface.
#include <cstdint>
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

#include "lemoine/lemoine.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("trailing characters in number");
    out.push_back(v);
  }
  return out;
}

struct Options {
  std::string triangle_csv;
  std::string input_path;
  bool random = false;
  std::optional<uint64_t> seed;
  double eps_rel = 1e-9;
  std::string backend = "binary64";
  unsigned prec = 128;
  int trials = -1;  // negative: command-specific default
  int grid = -1;
  std::string out_path;
  std::string format = "json";
};

uint64_t resolve_seed(const Options& opt) {
  if (opt.seed) return *opt.seed;
  if (const char* env = std::getenv("LEMOINE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("LEMOINE_SEED is not an unsigned integer");
    }
  }
  return 7;
}

lemoine_ctx* make_context(const Options& opt, std::string& err) {
  int sources = (!opt.triangle_csv.empty() ? 1 : 0) + (!opt.input_path.empty() ? 1 : 0) +
                (opt.random ? 1 : 0);
  if (sources > 1) {
    err = "choose exactly one of --triangle, --input, --random";
    return nullptr;
  }
  double xy[6] = {0.0, 0.0, 4.0, 0.0, 1.0, 3.0};  // default triangle
  if (!opt.triangle_csv.empty()) {
    std::vector<double> v = parse_csv_doubles(opt.triangle_csv);
    if (v.size() != 6) {
      err = "--triangle expects ax,ay,bx,by,cx,cy";
      return nullptr;
    }
    std::copy(v.begin(), v.end(), xy);
  } else if (!opt.input_path.empty()) {
    std::ifstream in(opt.input_path);
    if (!in) {
      err = "cannot open " + opt.input_path;
      return nullptr;
    }
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("A") || !j.contains("B") || !j.contains("C")) {
      err = "input file must be JSON with keys A, B, C (each [x, y])";
      return nullptr;
    }
    for (int i = 0; i < 3; ++i) {
      const auto& p = j[std::string(1, "ABC"[i])];
      if (!p.is_array() || p.size() != 2) {
        err = "input file must be JSON with keys A, B, C (each [x, y])";
        return nullptr;
      }
      xy[2 * i] = p[0].get<double>();
      xy[2 * i + 1] = p[1].get<double>();
    }
  } else if (opt.random) {
    lemoine_ctx* ctx = lemoine_ctx_new_random(resolve_seed(opt));
    if (ctx && lemoine_ctx_status(ctx) != LEMOINE_OK) {
      err = std::string(lemoine_status_name(lemoine_ctx_status(ctx))) + ": " +
            lemoine_ctx_error(ctx);
      lemoine_ctx_free(ctx);
      return nullptr;
    }
    return ctx;
  }
  lemoine_ctx* ctx = lemoine_ctx_new(xy[0], xy[1], xy[2], xy[3], xy[4], xy[5]);
  if (ctx && lemoine_ctx_status(ctx) != LEMOINE_OK) {
    err = std::string(lemoine_status_name(lemoine_ctx_status(ctx))) + ": " +
          lemoine_ctx_error(ctx);
    lemoine_ctx_free(ctx);
    return nullptr;
  }
  return ctx;
}

int emit(const Options& opt, const char* text) {
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << opt.out_path << "\n";
      return kExitUsage;
    }
    out << text;
    return kExitOk;
  }
  std::string s(text);
  std::cout << s;
  if (!s.empty() && s.back() != '\n') std::cout << "\n";
  return kExitOk;
}

int fail_status(lemoine_status st, const lemoine_ctx* ctx) {
  std::cerr << "error: " << lemoine_status_name(st);
  if (ctx && lemoine_ctx_error(ctx)[0]) std::cerr << ": " << lemoine_ctx_error(ctx);
  std::cerr << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Lemoine-type circle constructions and theorem verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--triangle", opt.triangle_csv, "inline vertices ax,ay,bx,by,cx,cy");
  app.add_option("--input", opt.input_path, "JSON file with keys A, B, C");
  app.add_flag("--random", opt.random, "random well-conditioned triangle (uses --seed)");
  app.add_option("--seed", opt.seed, "RNG seed (fallback: LEMOINE_SEED env var, then 7)");
  app.add_option("--eps", opt.eps_rel, "relative tolerance (default 1e-9)");
  app.add_option("--backend", opt.backend, "binary64 | bigfloat")
      ->check(CLI::IsMember({"binary64", "bigfloat"}));
  app.add_option("--prec", opt.prec, "bigfloat precision in bits (>= 64, default 128)");
  app.add_option("--trials", opt.trials, "random trials for verify");
  app.add_option("--grid", opt.grid, "sweep grid size");
  app.add_option("--out", opt.out_path, "output file (default stdout)");
  app.add_option("--format", opt.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* cmd_centers = app.add_subcommand("centers", "triangle centers and the axis spectrum");

  std::string circle_kind;
  std::string pivot_csv;
  double tucker_s = 0.3;
  CLI::App* cmd_circle = app.add_subcommand("circle", "construct a six-point configuration");
  cmd_circle->add_option("kind", circle_kind, "first|second|third|bui|new|tucker")->required();
  cmd_circle->add_option("--pivot", pivot_csv, "pivot x,y (default: symmedian point)");
  cmd_circle->add_option("--s", tucker_s, "Tucker chain seed (kind = tucker)");

  std::string verify_which = "all";
  CLI::App* cmd_verify = app.add_subcommand("verify", "run claim verifiers");
  cmd_verify->add_option("which", verify_which,
                         "all|thm-new|lemma|scaffold|converse|uniqueness|tucker|spectrum|precision");

  CLI::App* cmd_hunt =
      app.add_subcommand("hunt-midpoint", "probe the family at the open-problem slot");

  int fig_id = 0;
  CLI::App* cmd_figure = app.add_subcommand("figure", "emit an SVG figure");
  cmd_figure->add_option("id", fig_id, "figure id 1..8")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string err;
  lemoine_ctx* ctx = nullptr;
  try {
    ctx = make_context(opt, err);
  } catch (const std::exception& e) {
    err = e.what();
  }
  if (!ctx) {
    std::cerr << "error: " << (err.empty() ? "cannot create context" : err) << "\n";
    return kExitUsage;
  }

  lemoine_status st = lemoine_ctx_set_eps(ctx, opt.eps_rel);
  if (st == LEMOINE_OK && opt.backend == "bigfloat")
    st = lemoine_ctx_set_backend(ctx, opt.prec);
  if (st != LEMOINE_OK) {
    int rc = fail_status(st, ctx);
    lemoine_ctx_free(ctx);
    return rc;
  }

  int as_json = opt.format == "json" ? 1 : 0;
  int rc = kExitOk;
  char* text = nullptr;

  try {
    if (cmd_centers->parsed()) {
      text = lemoine_cmd_centers(ctx, as_json, &st);
    } else if (cmd_circle->parsed()) {
      double pivot[2];
      const double* pivot_ptr = nullptr;
      if (!pivot_csv.empty()) {
        std::vector<double> v = parse_csv_doubles(pivot_csv);
        if (v.size() != 2) {
          std::cerr << "error: --pivot expects x,y\n";
          lemoine_ctx_free(ctx);
          return kExitUsage;
        }
        pivot[0] = v[0];
        pivot[1] = v[1];
        pivot_ptr = pivot;
      }
      text = lemoine_cmd_circle(ctx, circle_kind.c_str(), pivot_ptr, tucker_s, as_json, &st);
    } else if (cmd_verify->parsed()) {
      int all_pass = 0;
      unsigned prec_bits = opt.backend == "bigfloat" ? opt.prec : 0;
      text = lemoine_cmd_verify(ctx, verify_which.c_str(), opt.trials, opt.grid,
                                resolve_seed(opt), prec_bits, as_json, &all_pass, &st);
      if (st == LEMOINE_OK && !all_pass) rc = kExitClaimFailed;
    } else if (cmd_hunt->parsed()) {
      text = lemoine_cmd_hunt(ctx, as_json, &st);
    } else if (cmd_figure->parsed()) {
      text = lemoine_cmd_figure(ctx, fig_id, &st);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    lemoine_ctx_free(ctx);
    return kExitUsage;
  }

  if (st != LEMOINE_OK || !text) {
    rc = fail_status(st, ctx);
  } else {
    int emit_rc = emit(opt, text);
    if (emit_rc != kExitOk) rc = emit_rc;
  }
  lemoine_free(text);
  lemoine_ctx_free(ctx);
  return rc;
}
