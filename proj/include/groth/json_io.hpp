#pragma once
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "groth/bpd.hpp"
#include "groth/bubbling.hpp"
#include "groth/core.hpp"
#include "groth/poly.hpp"
#include "groth/polyhedra.hpp"

namespace groth {

using nlohmann::json;

inline json to_json(const Permutation& w) { return json(w.oneline()); }

inline json to_json(const Diagram& d) {
  json cells = json::array();
  for (const Cell& c : d.cells) cells.push_back({c.first, c.second});
  return {{"n", d.n}, {"k", d.k}, {"cells", cells}};
}

inline Diagram diagram_from_json(const json& j) {
  Diagram d{j.at("n").get<int>(), j.at("k").get<int>(), {}};
  for (const auto& c : j.at("cells"))
    d.cells.insert({c.at(0).get<int>(), c.at(1).get<int>()});
  return d;
}

inline json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.sorted_terms())
    terms.push_back({{"e", e}, {"c", c.get_str()}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const json& j) {
  MultiPoly p(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("e").get<Exponent>(),
               mpz_class(t.at("c").get<std::string>()));
  return p;
}

inline json to_json(const MarkedBpd& m) {
  json tiles = json::array();
  for (int i = 1; i <= m.bpd.n; ++i) {
    json row = json::array();
    for (int j = 1; j <= m.bpd.n; ++j)
      row.push_back(std::string(1, static_cast<char>(m.bpd.at(i, j))));
    tiles.push_back(row);
  }
  json marks = json::array();
  for (const Cell& c : m.marks) marks.push_back({c.first, c.second});
  return {{"n", m.bpd.n}, {"tiles", tiles}, {"marks", marks}};
}

inline MarkedBpd mbpd_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  Bpd b{n, {}};
  for (const auto& row : j.at("tiles"))
    for (const auto& t : row)
      b.tiles.push_back(static_cast<Tile>(t.get<std::string>().at(0)));
  MarkedBpd m{std::move(b), {}};
  if (j.contains("marks"))
    for (const auto& c : j.at("marks"))
      m.marks.insert({c.at(0).get<int>(), c.at(1).get<int>()});
  return m;
}

inline json to_json(const BubblingDiagram& d) {
  json sq = json::array();
  for (const auto& [cell, st] : d.squares)
    sq.push_back({{"r", cell.first},
                  {"c", cell.second},
                  {"rank", st.rank},
                  {"dead", st.dead}});
  return {{"n", d.n}, {"k", d.k}, {"squares", sq}};
}

inline BubblingDiagram bubbling_from_json(const json& j) {
  BubblingDiagram d{j.at("n").get<int>(), j.at("k").get<int>(), {}};
  for (const auto& s : j.at("squares"))
    d.squares[{s.at("r").get<int>(), s.at("c").get<int>()}] = {
        s.at("rank").get<int>(), s.at("dead").get<bool>()};
  return d;
}

inline json expansion_to_json(const std::map<unsigned, mpq_class>& c) {
  json out = json::array();
  for (const auto& [mask, v] : c) {
    if (v == 0) continue;
    std::vector<int> elems;
    for (int k = 0; mask >> k; ++k)
      if (mask & (1u << k)) elems.push_back(k + 1);
    out.push_back({{"I", elems}, {"c", v.get_str()}});
  }
  return out;
}

// --- polynomial cache: one file per permutation ---

inline std::filesystem::path cache_path(const std::filesystem::path& dir,
                                        const Permutation& w) {
  return dir / ("groth_" + w.to_string() + ".json");
}

inline bool cache_load(const std::filesystem::path& dir,
                       const Permutation& w) {
  if (grothendieck_cache_peek(w)) return true;
  const auto file = cache_path(dir, w);
  std::ifstream in(file);
  if (!in) return false;
  try {
    json j = json::parse(in);
    if (j.at("w").get<std::vector<int>>() != w.oneline())
      throw std::runtime_error("permutation mismatch");
    grothendieck_cache_store(w, poly_from_json(j.at("poly")));
    return true;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "warning: corrupt cache entry %s (%s); recomputing\n",
                 file.string().c_str(), e.what());
    return false;
  }
}

inline void cache_store(const std::filesystem::path& dir,
                        const Permutation& w, const MultiPoly& p) {
  std::filesystem::create_directories(dir);
  std::ofstream out(cache_path(dir, w));
  out << json{{"w", w.oneline()}, {"poly", to_json(p)}};
}

}  // namespace groth
