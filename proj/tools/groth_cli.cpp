#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "groth/json_io.hpp"
#include "groth/verify.hpp"
#include "groth/weyl.hpp"

namespace {

using namespace groth;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

std::string poly_text(const MultiPoly& p) {
  std::ostringstream out;
  for (const auto& [e, c] : p.sorted_terms()) {
    out << c.get_str() << " ";
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
  return out.str();
}

std::string cache_dir_or_env(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("GROTH_CACHE_DIR")) return env;
  return "";
}

// compute the polynomial, going through the cache when one is configured
const MultiPoly& cached_groth(const Permutation& w, const std::string& dir) {
  if (!dir.empty() && cache_load(dir, w)) return grothendieck(w);
  const MultiPoly& g = grothendieck(w);
  if (!dir.empty()) cache_store(dir, w, g);
  return g;
}

void emit_poly(const MultiPoly& p, bool text) {
  if (text)
    std::cout << poly_text(p);
  else
    std::cout << to_json(p).dump(2) << "\n";
}

void emit_bubbling_set(const std::set<BubblingDiagram>& ds) {
  std::multiset<std::vector<int>> weights;
  for (const auto& d : ds) weights.insert(weight(d));
  json jw = json::array();
  for (const auto& wt : weights) jw.push_back(wt);
  json out{{"count", ds.size()}, {"weights", jw}};
  json jd = json::array();
  for (const auto& d : ds) jd.push_back(to_json(d));
  out["diagrams"] = jd;
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck polynomial and bubbling diagram toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --cache-dir after the subcommand too
  std::string cache_flag;
  app.add_option("--cache-dir", cache_flag,
                 "directory for cached polynomials (env GROTH_CACHE_DIR)");

  std::string warg, input, svg_out, suite;
  int darg = 0, nmax = 0, jobs = 0;
  bool text = false;

  auto* c_groth = app.add_subcommand("groth", "Grothendieck polynomial");
  c_groth->add_option("w", warg)->required();
  c_groth->add_flag("--text", text);
  c_groth->add_flag("--json", [](std::int64_t) {});  // the default

  auto* c_top = app.add_subcommand("top", "top degree component");
  c_top->add_option("w", warg)->required();
  c_top->add_flag("--text", text);

  auto* c_comp = app.add_subcommand("component", "homogeneous component");
  c_comp->add_option("w", warg)->required();
  c_comp->add_option("d", darg)->required();
  c_comp->add_flag("--text", text);

  auto* c_hom = app.add_subcommand("homogenize", "homogenized polynomial");
  c_hom->add_option("w", warg)->required();
  c_hom->add_flag("--text", text);

  auto* c_bd = app.add_subcommand("bd", "bubbling diagrams");
  c_bd->add_option("w", warg)->required();
  auto* c_sbd = app.add_subcommand("sbd", "special bubbling diagrams");
  c_sbd->add_option("w", warg)->required();
  auto* c_dtop = app.add_subcommand("dtop", "top bubbling diagram");
  c_dtop->add_option("w", warg)->required();
  auto* c_bpd = app.add_subcommand("bpd", "bumpless pipe dreams");
  c_bpd->add_option("w", warg)->required();

  auto* c_render = app.add_subcommand("render", "render a JSON diagram");
  c_render->add_option("input", input)->required();
  c_render->add_option("--svg", svg_out)->required();

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite)->required();
  c_verify->add_option("--nmax", nmax);
  c_verify->add_option("--jobs", jobs);

  auto* c_cache = app.add_subcommand("cache", "cache management");
  auto* c_clear = c_cache->add_subcommand("clear", "remove cached entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string cache_dir = cache_dir_or_env(cache_flag);
  try {
    if (*c_groth) {
      emit_poly(cached_groth(Permutation::parse(warg), cache_dir), text);
    } else if (*c_top) {
      emit_poly(top_component(cached_groth(Permutation::parse(warg),
                                           cache_dir)),
                text);
    } else if (*c_comp) {
      emit_poly(homogeneous_component(
                    cached_groth(Permutation::parse(warg), cache_dir), darg),
                text);
    } else if (*c_hom) {
      emit_poly(homogenize(cached_groth(Permutation::parse(warg), cache_dir)),
                text);
    } else if (*c_bd) {
      emit_bubbling_set(
          enumerate_bd(rothe_bubbling(Permutation::parse(warg))));
    } else if (*c_sbd) {
      emit_bubbling_set(enumerate_sbd(Permutation::parse(warg)));
    } else if (*c_dtop) {
      std::cout << to_json(d_top(Permutation::parse(warg))).dump(2) << "\n";
    } else if (*c_bpd) {
      const Permutation w = Permutation::parse(warg);
      std::vector<MarkedBpd> found;
      enumerate_mbpds(w, [&](const MarkedBpd& m) { found.push_back(m); });
      std::multiset<std::vector<int>> weights;
      for (const auto& m : found) weights.insert(weight(m));
      json jw = json::array();
      for (const auto& wt : weights) jw.push_back(wt);
      std::cout << json{{"count", found.size()}, {"weights", jw}}.dump(2)
                << "\n";
    } else if (*c_render) {
      std::ifstream in(input);
      if (!in) throw std::invalid_argument("cannot open " + input);
      const json j = json::parse(in);
      std::string svg;
      if (j.contains("tiles"))
        svg = render_svg(mbpd_from_json(j));
      else if (j.contains("squares"))
        svg = render_svg(bubbling_from_json(j));
      else
        throw std::invalid_argument("input is neither a pipe dream nor a "
                                    "bubbling diagram");
      std::ofstream(svg_out) << svg;
    } else if (*c_verify) {
      bool all_pass = true;
      for (const VerificationReport& r :
           run_suite(suite, nmax, jobs, cache_dir)) {
        json jr{{"check", r.check},
                {"range", r.range},
                {"pass", r.pass},
                {"ms", r.ms}};
        if (!r.pass) {
          all_pass = false;
          jr["counterexample"] =
              json::accept(r.counterexample) ? json::parse(r.counterexample)
                                             : json(r.counterexample);
        }
        std::cout << jr.dump() << "\n";
      }
      return all_pass ? 0 : kExitVerifyFail;
    } else if (*c_clear) {
      if (cache_dir.empty())
        throw std::invalid_argument("no cache directory configured");
      std::error_code ec;
      for (const auto& entry :
           std::filesystem::directory_iterator(cache_dir, ec))
        if (entry.path().extension() == ".json")
          std::filesystem::remove(entry.path());
    }
  } catch (const groth::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return 0;
}
