#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zipdata/io.hpp"
#include "zipdata/isogeny.hpp"
#include "zipdata/verify.hpp"

namespace zipdata::cli {

struct DatumOptions {
  std::string type;
  std::string I;
  std::string J;
  std::string psi;
  std::string datum_file;
  int central_rank = 0;

  void attach(CLI::App* app) {
    app->add_option("--type", type, "Cartan type, e.g. A2 or A1xA1");
    app->add_option("--I", I, "comma-separated simple indices");
    app->add_option("--J", J, "defaults to the image of psi");
    app->add_option("--psi", psi, "pairs like 1:2,2:3");
    app->add_option("--central-rank", central_rank, "rank of the central torus")->check(CLI::NonNegativeNumber);
    app->add_option("--datum", datum_file, "JSON datum file");
  }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SimpleSubset parse_subset(const std::string& text) {
  SimpleSubset out;
  for (int s : parse_word(text)) out.insert(s);
  return out;
}

inline io::json load_json(const DatumOptions& o) {
  if (!o.datum_file.empty()) return io::parse_json(read_file(o.datum_file));
  if (o.type.empty()) fail(ErrorCode::ParseError, "give --type or --datum");
  io::json j;
  j["type"] = o.type;
  j["I"] = parse_subset(o.I).indices();
  if (!o.J.empty()) j["J"] = parse_subset(o.J).indices();
  auto map = io::parse_psi_pairs(o.psi);
  if (o.psi.empty())
    for (int s : parse_subset(o.I).indices()) map[s] = s;
  io::json psi = io::json::object();
  for (auto [s, t] : map) psi[std::to_string(s)] = t;
  j["psi"] = psi;
  j["central_rank"] = o.central_rank;
  return j;
}

inline ParamSide parse_side(const std::string& s) {
  if (s == "iw") return ParamSide::IW;
  if (s == "wj") return ParamSide::WJ;
  fail(ErrorCode::ParseError, "side must be iw or wj");
}

inline std::string subset_list(const std::vector<Element>& elems) {
  std::string out;
  for (const auto& w : elems) out += (out.empty() ? "" : " ") + w.str();
  return out.empty() ? "(none)" : out;
}

inline std::vector<int> poset_dims(const ZipDatum& z, const ClosurePoset& poset, int central_rank) {
  std::vector<int> dims;
  for (const auto& w : poset.nodes) dims.push_back(z.dim_P(central_rank) + w.length());
  return dims;
}

inline void emit_pieces(std::ostream& out, const ZipDatum& z, ParamSide side, int central_rank,
                        const std::string& format, bool frobenius) {
  auto pieces = z.pieces(side, central_rank);
  if (format == "jsonl") {
    out << io::pieces_jsonl(pieces);
  } else if (format == "text") {
    out << io::pieces_text(pieces);
  } else {
    fail(ErrorCode::ParseError, "pieces format must be text or jsonl");
  }
  if (frobenius) {
    auto poset = z.hasse_poset(side);
    if (format == "jsonl") {
      for (auto [a, b] : poset.covers)
        out << io::json{{"cover", {poset.nodes[a].str(), poset.nodes[b].str()}}}.dump() << "\n";
    } else {
      out << "# orbitally finite: each piece above is a single orbit\n";
      for (auto [a, b] : poset.covers) out << "# cover " << poset.nodes[a].str() << " < " << poset.nodes[b].str() << "\n";
    }
  }
}

/// Runs one command line; returns 0 on success, 1 on a failed verification
/// and 2 on malformed input.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Weyl group combinatorics of zip data"};
  app.require_subcommand(1);
  DatumOptions d;
  std::string side = "iw", format = "text", word, level = "quick";
  bool frobenius = false, inverse = false;

  auto* pieces = app.add_subcommand("pieces", "list pieces with length, dimension, K_w");
  d.attach(pieces);
  pieces->add_option("--side", side)->check(CLI::IsMember({"iw", "wj"}));
  pieces->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
  pieces->add_flag("--frobenius", frobenius, "annotate pieces as single orbits with closure edges");

  auto* closure = app.add_subcommand("closure", "closure set of one piece");
  d.attach(closure);
  closure->add_option("--w", word)->required();
  closure->add_option("--side", side)->check(CLI::IsMember({"iw", "wj"}));
  closure->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* poset = app.add_subcommand("poset", "Hasse diagram of the closure order");
  d.attach(poset);
  poset->add_option("--side", side)->check(CLI::IsMember({"iw", "wj"}));
  poset->add_option("--format", format)->check(CLI::IsMember({"dot", "json", "text"}));

  auto* classify = app.add_subcommand("classify", "canonical representative and sigma image");
  d.attach(classify);
  classify->add_option("--w", word)->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sigma = app.add_subcommand("sigma", "sigma or its inverse");
  d.attach(sigma);
  sigma->add_option("--w", word)->required();
  sigma->add_flag("--inverse", inverse);

  auto* abstract = app.add_subcommand("abstract", "classes and E_gamma of an abstract datum");
  std::string abstract_file;
  abstract->add_option("--datum", abstract_file)->required();
  abstract->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* nonconn = app.add_subcommand("nonconnected", "pieces modulo Omega_I and their closures");
  std::string nc_file;
  nonconn->add_option("--datum", nc_file)->required();
  nonconn->add_option("--side", side)->check(CLI::IsMember({"iw", "wj"}));

  auto* isogeny = app.add_subcommand("isogeny", "build a datum from (delta, phi_bar, I, x) and list pieces");
  std::string iso_file, phi_bar = "id", delta = "id", x = "e";
  isogeny->add_option("--datum", iso_file);
  isogeny->add_option("--type", d.type);
  isogeny->add_option("--I", d.I);
  isogeny->add_option("--phi-bar", phi_bar);
  isogeny->add_option("--delta", delta);
  isogeny->add_option("--x", x);
  isogeny->add_option("--central-rank", d.central_rank)->check(CLI::NonNegativeNumber);
  isogeny->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
  isogeny->add_flag("--frobenius", frobenius);

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (pieces->parsed()) {
      auto j = load_json(d);
      emit_pieces(out, io::datum_from_json(j), parse_side(side), io::central_rank_from_json(j), format, frobenius);
    } else if (closure->parsed()) {
      auto z = io::datum_from_json(load_json(d));
      auto set = z.closure_set(z.group().parse_element(word), parse_side(side));
      if (format == "json") {
        out << io::words_json(set).dump() << "\n";
      } else {
        out << subset_list(set) << "\n";
      }
    } else if (poset->parsed()) {
      if (format == "text") format = "dot";
      auto j = load_json(d);
      auto z = io::datum_from_json(j);
      auto p = z.hasse_poset(parse_side(side));
      auto dims = poset_dims(z, p, io::central_rank_from_json(j));
      if (format == "dot") {
        out << io::poset_dot(p, dims);
      } else {
        out << io::poset_json(p, dims).dump(2) << "\n";
      }
    } else if (classify->parsed()) {
      auto z = io::datum_from_json(load_json(d));
      auto w = z.group().parse_element(word);
      auto c = z.canonical_piece(w);
      auto s = z.sigma(c);
      if (format == "json") {
        out << io::json{{"w", w.str()}, {"canonical", c.str()}, {"sigma", s.str()}}.dump() << "\n";
      } else {
        out << "canonical " << c.str() << "\nsigma " << s.str() << "\n";
      }
    } else if (sigma->parsed()) {
      auto z = io::datum_from_json(load_json(d));
      auto w = z.group().parse_element(word);
      out << (inverse ? z.sigma_inverse(w) : z.sigma(w)).str() << "\n";
    } else if (abstract->parsed()) {
      auto a = io::abstract_from_json(io::parse_json(read_file(abstract_file)));
      const auto& G = a.gamma();
      auto classes = a.all_classes();
      bool sizes_ok = true;
      for (const auto& c : classes) sizes_ok = sizes_ok && c.size() == a.delta().size();
      if (format == "json") {
        io::json jc = io::json::array();
        for (const auto& c : classes) {
          io::json members = io::json::array();
          for (auto v : c) members.push_back(G.element(v).str());
          io::json E = io::json::array();
          for (auto v : a.E(c.front())) E.push_back(G.element(v).str());
          jc.push_back({{"members", members}, {"E", E}});
        }
        out << io::json{{"order", G.order()}, {"delta_order", a.delta().size()}, {"classes", jc},
                        {"uniform_size", sizes_ok}}
                   .dump(2)
            << "\n";
      } else {
        out << "|Gamma| = " << G.order() << ", |Delta| = " << a.delta().size() << ", classes = " << classes.size()
            << (sizes_ok ? " (all of size |Delta|)" : " (SIZE MISMATCH)") << "\n";
        for (const auto& c : classes) {
          out << "class of " << G.element(c.front()).str() << ":";
          for (auto v : c) out << " " << G.element(v).str();
          out << "\n  E =";
          for (auto v : a.E(c.front())) out << " " << G.element(v).str();
          out << "\n";
        }
      }
    } else if (nonconn->parsed()) {
      auto e = io::extended_from_json(io::parse_json(read_file(nc_file)));
      auto sd = parse_side(side);
      for (const auto& orbit : e.nc_pieces(sd)) {
        out << "orbit {";
        for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? ", " : "") << e.str(orbit[i]);
        out << "} closure {";
        auto cl = e.nc_closure(orbit.front(), sd);
        for (std::size_t i = 0; i < cl.size(); ++i) out << (i ? ", " : "") << e.str(cl[i]);
        out << "}";
        if (sd == ParamSide::IW) out << " sigma_hat " << e.str(e.sigma_hat(orbit.front()));
        out << "\n";
      }
    } else if (isogeny->parsed()) {
      IsogenyInput in{CoxeterGroup::from_type("A1"), {}, {}, {}, {}};
      if (!iso_file.empty()) {
        auto j = io::parse_json(read_file(iso_file));
        in = io::isogeny_from_json(j);
        if (j.contains("central_rank")) d.central_rank = io::central_rank_from_json(j);
      } else {
        if (d.type.empty()) fail(ErrorCode::ParseError, "give --type or --datum");
        auto g = CoxeterGroup::from_type(d.type);
        in = {g, parse_automorphism(g, phi_bar), parse_automorphism(g, delta), parse_subset(d.I), g.parse_element(x)};
      }
      auto iso = build_from_isogeny(in);
      out << "# J = " << iso.datum.J().str() << ", psi =";
      for (auto [s, t] : iso.datum.psi_map()) out << " " << s << ":" << t;
      out << "\n";
      emit_pieces(out, iso.datum, ParamSide::IW, d.central_rank, format, frobenius);
    } else if (verify->parsed()) {
      auto report = verify::run(level == "full" ? verify::Level::Full : verify::Level::Quick);
      for (const auto& c : report.checks) {
        if (c.passed) continue;
        err << "FAIL " << c.name << "\n";
        for (std::size_t i = 0; i < c.failures.size() && i < 20; ++i) err << "  " << c.failures[i] << "\n";
      }
      if (!report.ok()) return 1;
      out << "OK\n";
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 0;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace zipdata::cli
