#pragma once

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zipdata/abstract.hpp"
#include "zipdata/isogeny.hpp"
#include "zipdata/nonconnected.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// input

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

inline CoxeterGroup group_from_json(const json& j) {
  if (j.contains("matrix")) return CoxeterGroup::from_matrix(field<CoxeterMatrix>(j, "matrix"));
  return CoxeterGroup::from_type(field<std::string>(j, "type"));
}

inline SimpleSubset subset_from_json(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return SimpleSubset::of(field<std::vector<int>>(j, key));
}

/// "1:2,3:4" or "1:2 3:4"
inline ZipDatum::PsiMap parse_psi_pairs(const std::string& text) {
  ZipDatum::PsiMap map;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto colon = token.find(':');
    if (colon == std::string::npos) fail(ErrorCode::ParseError, "psi entry '" + token + "' must look like 1:2");
    try {
      map[std::stoi(token.substr(0, colon))] = std::stoi(token.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "psi entry '" + token + "' must look like 1:2");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return map;
}

inline SimpleSubset image_of(const ZipDatum::PsiMap& psi) {
  SimpleSubset J;
  for (auto& [s, t] : psi) J.insert(t);
  return J;
}

/// {"type":"A2","I":[1],"J":[2],"psi":{"1":2},"central_rank":0}
inline ZipDatum datum_from_json(const json& j) {
  auto g = group_from_json(j);
  SimpleSubset I = subset_from_json(j, "I");
  ZipDatum::PsiMap psi;
  if (j.contains("psi")) {
    const auto& p = j.at("psi");
    if (!p.is_object()) fail(ErrorCode::ParseError, "psi must be an object");
    for (auto it = p.begin(); it != p.end(); ++it) {
      try {
        psi[std::stoi(it.key())] = it.value().get<int>();
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "psi entry '" + it.key() + "' is malformed");
      }
    }
  } else {
    for (int s : I.indices()) psi[s] = s;
  }
  SimpleSubset J = j.contains("J") ? subset_from_json(j, "J") : image_of(psi);
  return ZipDatum(g, I, J, psi);
}

inline int central_rank_from_json(const json& j) {
  int c = j.contains("central_rank") ? field<int>(j, "central_rank") : 0;
  if (c < 0) fail(ErrorCode::ParseError, "central_rank must be non-negative");
  return c;
}

/// {"domain":4,"gamma_gens":["(1 2)",...],"delta_gens":["(1 2)"],"psi":{"(1 2)":"(2 3)"}}
inline AbstractZipDatum abstract_from_json(const json& j) {
  int degree = field<int>(j, "domain");
  if (degree < 1) fail(ErrorCode::ParseError, "domain must be positive");
  std::vector<Permutation> gg, dg, pi;
  for (auto& s : field<std::vector<std::string>>(j, "gamma_gens")) gg.push_back(Permutation::parse(s, degree));
  auto gamma = std::make_shared<const FiniteGroup>(degree, gg);
  std::map<Permutation, Permutation> psi;
  if (j.contains("psi")) {
    for (auto it = j.at("psi").begin(); it != j.at("psi").end(); ++it)
      psi[Permutation::parse(it.key(), degree)] = Permutation::parse(it.value().get<std::string>(), degree);
  }
  for (auto& s : field<std::vector<std::string>>(j, "delta_gens")) {
    auto d = Permutation::parse(s, degree);
    auto it = psi.find(d);
    if (it == psi.end()) fail(ErrorCode::ParseError, "psi has no image for Delta generator " + d.str());
    dg.push_back(d);
    pi.push_back(it->second);
  }
  return AbstractZipDatum(gamma, dg, pi);
}

inline SimplePermutation perm_from_json(const CoxeterGroup& g, const json& v) {
  if (v.is_string()) return parse_automorphism(g, v.get<std::string>());
  try {
    return v.get<SimplePermutation>();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("automorphism: ") + e.what());
  }
}

/// Datum fields plus {"omega_gens":[[2,1]], "omega_I_gens":[[2,1]], "psi_hat":{"[2,1]":[2,1]}}
inline ExtendedZipDatum extended_from_json(const json& j) {
  ZipDatum base = datum_from_json(j);
  const auto& g = base.group();
  std::vector<SimplePermutation> og, ig, ph;
  if (j.contains("omega_gens"))
    for (auto& v : j.at("omega_gens")) og.push_back(perm_from_json(g, v));
  std::map<SimplePermutation, SimplePermutation> hat;
  if (j.contains("psi_hat"))
    for (auto it = j.at("psi_hat").begin(); it != j.at("psi_hat").end(); ++it)
      hat[parse_automorphism(g, it.key())] = perm_from_json(g, it.value());
  if (j.contains("omega_I_gens")) {
    for (auto& v : j.at("omega_I_gens")) {
      auto p = perm_from_json(g, v);
      auto it = hat.find(p);
      if (it == hat.end()) fail(ErrorCode::ParseError, "psi_hat has no image for an Omega_I generator");
      ig.push_back(p);
      ph.push_back(it->second);
    }
  }
  return ExtendedZipDatum(base, og, ig, ph);
}

/// {"type":"A3","phi_bar":"id","delta":"id","I":[1],"x":"1,2"}
inline IsogenyInput isogeny_from_json(const json& j) {
  auto g = group_from_json(j);
  IsogenyInput in{g, identity_automorphism(g), identity_automorphism(g), subset_from_json(j, "I"), g.identity()};
  if (j.contains("phi_bar")) in.phi_bar = perm_from_json(g, j.at("phi_bar"));
  if (j.contains("delta")) in.delta = perm_from_json(g, j.at("delta"));
  if (j.contains("x")) in.x = g.parse_element(field<std::string>(j, "x"));
  return in;
}

// ---------------------------------------------------------------------------
// output

inline json words_json(const std::vector<Element>& elems) {
  json arr = json::array();
  for (const auto& w : elems) arr.push_back(w.str());
  return arr;
}

inline json piece_json(const Piece& p) {
  return {{"w", p.w.str()},     {"length", p.length},     {"dim", p.dim},         {"inf_stab_dim", p.inf_stab},
          {"K", p.K.indices()}, {"x", p.x.str()},         {"w_J", p.w_J.str()}};
}

inline std::string pieces_text(const std::vector<Piece>& pieces) {
  std::size_t width = 1;
  for (const auto& p : pieces) width = std::max(width, p.w.str().size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width) + 2) << "w" << std::setw(5) << "len" << std::setw(5) << "dim"
     << std::setw(10) << "inf_stab" << "K\n";
  for (const auto& p : pieces)
    os << std::left << std::setw(static_cast<int>(width) + 2) << p.w.str() << std::setw(5) << p.length
       << std::setw(5) << p.dim << std::setw(10) << p.inf_stab << p.K.str() << "\n";
  return os.str();
}

inline std::string pieces_jsonl(const std::vector<Piece>& pieces) {
  std::string out;
  for (const auto& p : pieces) out += piece_json(p).dump() + "\n";
  return out;
}

inline std::string poset_dot(const ClosurePoset& poset, const std::vector<int>& dims) {
  std::ostringstream os;
  os << "digraph closure {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << poset.nodes[i].str() << "\\nl=" << poset.nodes[i].length()
       << "\\ndim=" << dims.at(i) << "\"];\n";
  for (auto [a, b] : poset.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline json poset_json(const ClosurePoset& poset, const std::vector<int>& dims) {
  json nodes = json::array();
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    nodes.push_back({{"id", i}, {"w", poset.nodes[i].str()}, {"length", poset.nodes[i].length()}, {"dim", dims.at(i)}});
  json edges = json::array();
  for (auto [a, b] : poset.covers) edges.push_back({poset.nodes[a].str(), poset.nodes[b].str()});
  return {{"side", to_string(poset.side)}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace zipdata::io
