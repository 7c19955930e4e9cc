#include "crystal/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "crystal/binf.hpp"
#include "crystal/blambda.hpp"
#include "crystal/bridge.hpp"
#include "crystal/errors.hpp"
#include "crystal/json_io.hpp"
#include "crystal/tableau.hpp"

namespace crystal::cli {

namespace {

std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw DomainError(std::string("--") + what + ": \"" + text + "\" is not a comma-separated integer list");
    }
  }
  if (out.empty()) throw DomainError(std::string("--") + what + " is empty");
  return out;
}

struct Common {
  std::string type = "A2";
  std::string format = "json";
  std::uint64_t seed = Genericity{}.seed;
  bool paranoid = false;
  int jobs = 1;
  std::size_t budget = 200000;

  RootDatum datum() const { return RootDatum::parse(type); }
  Genericity genericity() const {
    Genericity g{seed};
    return paranoid ? g.paranoid() : g;
  }
  ExpandOptions expand() const {
    if (jobs < 1) throw DomainError("--jobs must be at least 1");
    return {jobs, budget};
  }
};

DimVector framing(const RootDatum& d, const std::string& hw) {
  const auto w = parse_list(hw, "hw");
  if (static_cast<int>(w.size()) != d.n)
    throw DomainError("--hw needs " + std::to_string(d.n) + " entries for " + d.label());
  for (int x : w)
    if (x < 0) throw DomainError("--hw must be dominant (non-negative entries)");
  return w;
}

// "n" may be left out; the rank then comes from --type
Multisegment segments_arg(const std::string& text, const Common& c) {
  auto j = parse_json(text);
  if (j.is_object() && !j.contains("n")) j["n"] = c.datum().n;
  return multisegment_from_json(j);
}

void emit_graph(std::ostream& out, const CrystalGraph& g, const std::string& format) {
  if (format == "dot")
    out << g.to_dot();
  else
    out << g.to_json() << "\n";
}

int selftest(const Common& c, std::ostream& out) {
  bool ok = true;
  auto line = [&](bool pass, const std::string& what) {
    out << (pass ? "ok   " : "FAIL ") << what << "\n";
    ok = ok && pass;
  };
  std::vector<std::unique_ptr<GeometricBinf>> models;
  for (int n = 1; n <= 3; ++n) models.push_back(std::make_unique<GeometricBinf>(n, c.genericity()));
  const auto report = calibrate_fast_rule([&](int n) -> const GeometricBinf& { return *models[n - 1]; });
  line(true, "fast rule calibrated (" + report.rule.describe() + ") on " + std::to_string(report.table_size) +
                 " cases and " + std::to_string(report.spot_checks) + " spot checks");

  const auto d = RootDatum::type_a(2);
  const auto geo = generate_blambda(*models[1], {1, 1}, c.expand());
  const auto tab = generate_tableau_crystal(d, {2, 1});
  line(geo.graph.nodes().size() == 8 && geo.graph.edges().size() == 8, "B(2,1): 8 nodes, 8 edges");
  const auto iso = crystal_isomorphic(geo.graph, tab.graph);
  bool agrees = iso.isomorphic;
  for (const auto& [a, b] : iso.matching)
    agrees = agrees && tableau_to_multisegment(tab.elements[b], 2) == geo.elements[a];
  line(agrees, "B(2,1) geometric and tableau crystals match box by box");

  const Tableau column{{{1}, {5}, {8}, {10}}};
  const auto m = tableau_to_multisegment(column, 9);
  line(m == Multisegment(9, {{4, 9}, {3, 7}, {2, 4}}), "column (1,5,8,10) -> " + m.to_string());
  line(kostka({2, 1}, {1, 1, 1}) == 2, "kostka((2,1),(1,1,1)) = 2");
  return ok ? kOk : kInternalError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystal graphs of sl_{n+1} from tableaux and from quiver varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--type", c.type, "Cartan type, A{n}");
  app.add_option("--format", c.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--seed", c.seed, "seed for generic points")->envname("CRYSTAL_SEED");
  app.add_flag("--paranoid", c.paranoid, "10x samples and coefficient range");
  app.add_option("--jobs", c.jobs, "worker threads for graph expansion");
  app.add_option("--budget", c.budget, "node budget for graph generation");

  int depth = 3;
  bool fast = false;
  auto* gen_binf = app.add_subcommand("gen-binf", "B(infinity) truncated at a total dimension");
  gen_binf->add_option("--depth", depth, "maximal sum of the dimension vector");
  gen_binf->add_flag("--fast", fast, "use the calibrated signature rule");

  std::string hw;
  bool tableaux = false;
  auto* gen_bl = app.add_subcommand("gen-blambda", "B(lambda) as the stable components");
  gen_bl->add_option("--hw", hw, "highest weight, comma list in the omega basis")->required();
  gen_bl->add_flag("--tableau", tableaux, "tableau model instead of the geometric one");

  std::string rep_text, seg_text;
  int vertex = 0;
  auto* decompose = app.add_subcommand("decompose", "segment decomposition of a representation");
  decompose->add_option("--rep", rep_text, "representation JSON")->required();

  auto* epsilon = app.add_subcommand("epsilon", "epsilon_i of a point or of a component");
  auto* eps_rep = epsilon->add_option("--rep", rep_text, "representation JSON");
  auto* eps_seg = epsilon->add_option("--segments", seg_text, "multisegment JSON");
  eps_rep->excludes(eps_seg);
  epsilon->add_option("--vertex", vertex, "vertex i")->required();

  auto* moment = app.add_subcommand("moment", "moment map of a representation");
  moment->add_option("--rep", rep_text, "representation JSON")->required();

  std::string framed_text;
  auto* stable = app.add_subcommand("stable", "stability of a framed point or of a component");
  auto* st_framed = stable->add_option("--framed", framed_text, "framed point JSON");
  auto* st_seg = stable->add_option("--segments", seg_text, "multisegment JSON (with --hw)");
  st_framed->excludes(st_seg);
  stable->add_option("--hw", hw, "framing dimensions for --segments");

  std::string column, tableau_text;
  auto* biject = app.add_subcommand("biject", "tableau <-> multisegment");
  auto* bj_col = biject->add_option("--column", column, "single-column tableau, comma list");
  auto* bj_tab = biject->add_option("--tableau", tableau_text, "tableau JSON");
  auto* bj_seg = biject->add_option("--segments", seg_text, "multisegment JSON (with --hw)");
  bj_col->excludes(bj_tab)->excludes(bj_seg);
  bj_tab->excludes(bj_seg);
  biject->add_option("--hw", hw, "highest weight for --segments");

  auto* verify = app.add_subcommand("verify-iso", "compare the geometric and tableau B(lambda)");
  verify->add_option("--hw", hw, "highest weight")->required();

  auto* self = app.add_subcommand("selftest", "calibration and golden checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  try {
    if (*gen_binf) {
      const auto d = c.datum();
      if (depth < 0) throw DomainError("--depth must be non-negative");
      MultisegmentGraph g;
      if (fast) {
        std::vector<std::unique_ptr<GeometricBinf>> models;
        for (int n = 1; n <= 3; ++n) models.push_back(std::make_unique<GeometricBinf>(n, c.genericity()));
        const auto report = calibrate_fast_rule([&](int n) -> const GeometricBinf& { return *models[n - 1]; });
        g = generate_binf_fast(d, report.rule, depth, c.expand());
      } else {
        GeometricBinf model(d.n, c.genericity());
        g = generate_binf(model, depth, c.expand());
      }
      emit_graph(out, g.graph, c.format);
    } else if (*gen_bl) {
      const auto d = c.datum();
      const auto w = framing(d, hw);
      if (tableaux) {
        auto g = generate_tableau_crystal(d, shape_of_weight(d, Weight(w))).graph;
        g.set_wdims(w);
        emit_graph(out, g, c.format);
      } else {
        GeometricBinf model(d.n, c.genericity());
        emit_graph(out, generate_blambda(model, w, c.expand()).graph, c.format);
      }
    } else if (*decompose) {
      const auto p = rep_from_json(parse_json(rep_text));
      out << multisegment_to_json(decompose_segments(p.omega_part())).dump() << "\n";
    } else if (*epsilon) {
      if (!rep_text.empty()) {
        const auto p = rep_from_json(parse_json(rep_text));
        if (vertex < 1 || vertex > static_cast<int>(p.dims.size())) throw DomainError("--vertex out of range");
        out << epsilon_point(p, vertex) << "\n";
      } else if (!seg_text.empty()) {
        const auto m = segments_arg(seg_text, c);
        if (vertex < 1 || vertex > m.rank()) throw DomainError("--vertex out of range");
        GeometricBinf model(m.rank(), c.genericity());
        out << model.epsilon(m, vertex) << "\n";
      } else {
        throw DomainError("epsilon needs --rep or --segments");
      }
    } else if (*moment) {
      const auto p = rep_from_json(parse_json(rep_text));
      Json psi = Json::array();
      for (const auto& m : moment_map(p)) psi.push_back(matrix_to_json(m));
      out << Json{{"psi", psi}, {"vanishes", moment_map_vanishes(p)}}.dump() << "\n";
    } else if (*stable) {
      if (!framed_text.empty()) {
        const auto fp = framed_from_json(parse_json(framed_text));
        out << Json{{"stable", is_stable(fp)}, {"invariant_in_kernel", max_invariant_in_kernel(fp)}}.dump() << "\n";
      } else if (!seg_text.empty()) {
        const auto m = segments_arg(seg_text, c);
        if (hw.empty()) throw DomainError("stable --segments needs --hw");
        const auto w = framing(RootDatum::type_a(m.rank()), hw);
        GeometricBinf model(m.rank(), c.genericity());
        out << Json{{"stable", is_stable_component(model, m, w)}}.dump() << "\n";
      } else {
        throw DomainError("stable needs --framed or --segments");
      }
    } else if (*biject) {
      const auto d = c.datum();
      if (!column.empty() || !tableau_text.empty()) {
        Tableau t;
        if (!column.empty())
          for (int x : parse_list(column, "column")) t.rows.push_back({x});
        else
          t = tableau_from_json(parse_json(tableau_text));
        const auto m = tableau_to_multisegment(t, d.n);
        out << Json{{"segments", multisegment_to_json(m)["segments"]}}.dump() << "\n";
      } else if (!seg_text.empty()) {
        if (hw.empty()) throw DomainError("biject --segments needs --hw");
        const auto m = segments_arg(seg_text, c);
        out << tableau_to_json(multisegment_to_tableau(m, framing(RootDatum::type_a(m.rank()), hw))).dump() << "\n";
      } else {
        throw DomainError("biject needs --column, --tableau or --segments");
      }
    } else if (*verify) {
      const auto d = c.datum();
      const auto w = framing(d, hw);
      GeometricBinf model(d.n, c.genericity());
      const auto geo = generate_blambda(model, w, c.expand());
      const auto tab = generate_tableau_crystal(d, shape_of_weight(d, Weight(w)));
      const auto iso = crystal_isomorphic(geo.graph, tab.graph);
      bool agrees = iso.isomorphic;
      std::vector<std::pair<Multisegment, Tableau>> pairs;
      for (const auto& [a, b] : iso.matching) {
        pairs.emplace_back(geo.elements[a], tab.elements[b]);
        agrees = agrees && tableau_to_multisegment(tab.elements[b], d.n) == geo.elements[a];
      }
      Json report{{"isomorphic", iso.isomorphic},
                  {"bijection_agrees", agrees},
                  {"nodes", geo.graph.nodes().size()},
                  {"weyl_dim", weyl_dim(d, Weight(w))}};
      if (!iso.mismatch.empty()) report["mismatch"] = iso.mismatch;
      report["matching"] = matching_report(pairs);
      out << report.dump() << "\n";
      return agrees ? kOk : kInternalError;
    } else if (*self) {
      return selftest(c, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}

}  // namespace crystal::cli
