#pragma once

// The `onep` command line: one subcommand per operation, files in the
// edge-list and embedding formats, reports as JSON.
//
// Exit codes: 0 success (any verdict), 1 invalid input or failed check,
// 2 usage error, 3 search cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "onep/decider.hpp"
#include "onep/embedding.hpp"
#include "onep/kernel.hpp"
#include "onep/reductions.hpp"
#include "onep/surgery.hpp"
#include "onep/td_pipeline.hpp"
#include "onep/thomassen.hpp"

namespace onep::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

inline nlohmann::ordered_json read_json(const std::string& path) {
  try {
    return nlohmann::ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

inline Graph read_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

inline void write_report(const std::string& path, const nlohmann::ordered_json& j) {
  if (!path.empty()) write_file(path, j.dump(2) + "\n");
}

// An argument that names an existing file is read; otherwise it is taken as
// inline JSON.
inline nlohmann::ordered_json json_argument(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_json(arg);
  try {
    return nlohmann::ordered_json::parse(arg);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("argument is neither a file nor JSON: " + std::string(e.what()));
  }
}

inline std::string join(const std::vector<VertexId>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using J = nlohmann::ordered_json;
  CLI::App app{"Exact tools for 1-planarity: kernels, decider, embeddings, surgery, treedepth rules, reductions"};
  app.require_subcommand(1);
  std::function<int()> action;

  // kernelize
  struct {
    std::string variant = "1p", in, out, report;
    int k = 1;
  } ker;
  auto* c_ker = app.add_subcommand("kernelize", "Shrink long degree-2 paths");
  c_ker->add_option("--variant", ker.variant, "1p, g1p, kp or gkp")->check(CLI::IsMember({"1p", "g1p", "kp", "gkp"}));
  c_ker->add_option("--k", ker.k, "Crossings per edge for kp")->check(CLI::PositiveNumber);
  c_ker->add_option("--in", ker.in)->required();
  c_ker->add_option("--out", ker.out)->required();
  c_ker->add_option("--report", ker.report);
  c_ker->callback([&] {
    action = [&] {
      auto r = kernelize(detail::read_graph(ker.in), parse_kernel_variant(ker.variant), ker.k);
      detail::write_file(ker.out, to_edge_list(r.kernel));
      detail::write_report(ker.report, kernel_report(r));
      out << r.kernel.n() << " vertices, " << r.kernel.m() << " edges\n";
      return kOk;
    };
  });

  // decide
  struct {
    std::string in, witness, report;
    bool geometric = false;
    int k = 1, max_edges = 11;
    std::vector<int> ab;
    int a = -1;
  } dec;
  auto* c_dec = app.add_subcommand("decide", "Decide (geometric) k-planarity exactly");
  c_dec->add_option("--in", dec.in)->required();
  c_dec->add_flag("--geometric", dec.geometric);
  c_dec->add_option("--k", dec.k)->check(CLI::PositiveNumber);
  c_dec->add_option("--max-edges", dec.max_edges, "Edge cap per component")->check(CLI::PositiveNumber);
  c_dec->add_option("--ab-outer", dec.ab, "Require a and b on the outer face")->expected(2);
  c_dec->add_option("--a-outer", dec.a, "Require a on the outer face");
  c_dec->add_option("--witness", dec.witness, "Write a witness embedding for yes answers");
  c_dec->add_option("--report", dec.report);
  c_dec->callback([&] {
    action = [&] {
      Graph g = detail::read_graph(dec.in);
      Predicate p = Predicate::plain(dec.geometric, dec.k);
      auto vertex = [&](int raw) {
        for (VertexId v = 0; v < g.n(); ++v)
          if (g.vertex_label(v) == std::to_string(raw)) return v;
        throw InvalidInput("vertex " + std::to_string(raw) + " is not in the graph");
      };
      if (!dec.ab.empty()) p = Predicate::ab_outer(vertex(dec.ab[0]), vertex(dec.ab[1]), dec.geometric);
      else if (dec.a >= 0) p = Predicate::a_outer(vertex(dec.a), dec.geometric);
      DeciderOptions opt;
      opt.max_edges = dec.max_edges;
      auto v = decide(g, p, opt);
      out << (v.yes ? "YES" : "NO") << "\n";
      if (v.yes && v.witness && !dec.witness.empty()) detail::write_file(dec.witness, serialize_embedding(*v.witness));
      detail::write_report(dec.report, J{{"answer", v.yes ? "yes" : "no"},
                                         {"reason", v.reason},
                                         {"embeddings", v.embeddings},
                                         {"crossing_sets", v.crossing_sets}});
      return kOk;
    };
  });

  // check-embedding
  struct {
    std::string in, report;
    bool geometric = false;
  } chk;
  auto* c_chk = app.add_subcommand("check-embedding", "Validate an embedding file");
  c_chk->add_option("--in", chk.in)->required();
  c_chk->add_flag("--geometric", chk.geometric, "Also look for B- and W-configurations");
  c_chk->add_option("--report", chk.report);
  c_chk->callback([&] {
    action = [&] {
      J rep;
      try {
        auto e = parse_embedding(detail::read_file(chk.in));
        rep["valid"] = true;
        rep["crossings"] = e.crossing_count();
        out << "VALID\n";
        if (chk.geometric) {
          auto cfg = find_bw_configurations(e);
          J list = J::array();
          for (const auto& c : cfg) list.push_back(to_json(c));
          rep["configurations"] = list;
          out << (cfg.empty() ? "STRAIGHTENABLE\n" : "NOT STRAIGHTENABLE\n");
          for (const auto& c : cfg) out << c.kind_name() << " a=" << c.a << " b=" << c.b << "\n";
        }
        detail::write_report(chk.report, rep);
        return kOk;
      } catch (const EmbeddingError& ex) {
        rep["valid"] = false;
        rep["violation"] = to_string(ex.kind());
        rep["message"] = ex.what();
        out << "INVALID " << to_string(ex.kind()) << "\n";
        err << ex.what() << "\n";
        detail::write_report(chk.report, rep);
        return kFailure;
      }
    };
  });

  // simplify
  struct {
    std::string in, out, report;
    int length = 0;
    bool geometric = false;
  } sim;
  auto* c_sim = app.add_subcommand("simplify", "Remove self and double crossings of flexible arcs");
  c_sim->add_option("--in", sim.in, "Embedding JSON with static and arcs")->required();
  c_sim->add_option("--out", sim.out)->required();
  c_sim->add_option("--reshorten", sim.length, "Re-subdivide every arc to this many edges");
  c_sim->add_flag("--geometric", sim.geometric);
  c_sim->add_option("--report", sim.report);
  c_sim->callback([&] {
    action = [&] {
      ArcSystem sys = arc_system_from_json(detail::read_json(sim.in));
      auto res = simplify(sys);
      J rep{{"rule_one", res.rule_one},
            {"rule_two", res.rule_two},
            {"crossings_before", res.crossings_before},
            {"crossings_after", res.crossings_after}};
      ArcSystem result = res.system;
      if (sim.length > 0) {
        auto re = reshorten(result, sim.length, sim.geometric);
        rep["arc_crossings"] = re.crossings;
        rep["leftover"] = re.leftover;
        result = re.system;
      }
      detail::write_file(sim.out, to_json(result).dump(1) + "\n");
      detail::write_report(sim.report, rep);
      out << res.crossings_before << " -> " << res.crossings_after << " crossings\n";
      return kOk;
    };
  });

  // td-run
  struct {
    std::string in, decomposition, overrides, log;
  } td;
  auto* c_td = app.add_subcommand("td-run", "Treedepth rules followed by the exact decision");
  c_td->add_option("--in", td.in)->required();
  c_td->add_option("--decomposition", td.decomposition, "\"vertex parent\" lines, root parent -1");
  c_td->add_option("--override-thresholds", td.overrides, "JSON object or file");
  c_td->add_option("--log", td.log);
  c_td->callback([&] {
    action = [&] {
      Graph g = detail::read_graph(td.in);
      std::optional<TreedepthDecomposition> t;
      if (!td.decomposition.empty()) {
        std::istringstream ds(detail::read_file(td.decomposition));
        t = parse_decomposition(ds, g.n());
      }
      PipelineOptions opt;
      if (!td.overrides.empty()) opt.thresholds = parse_threshold_overrides(detail::json_argument(td.overrides));
      auto o = run_pipeline(g, t, opt);
      detail::write_report(td.log, to_json(o));
      auto a = o.answer();
      if (!a) {
        out << "UNKNOWN\n";
        err << o.reason << "\n";
        return kCap;
      }
      out << (*a ? "YES" : "NO") << "\n";
      return kOk;
    };
  });

  // gen-binpack
  struct {
    std::string items, out, witnesses, report;
    int bins = 2;
    long long capacity = 1;
    bool raw = false;
  } gb;
  auto* c_gb = app.add_subcommand("gen-binpack", "Bin packing to geometric 1-planarity");
  c_gb->add_option("--items", gb.items, "Comma-separated sizes")->required();
  c_gb->add_option("--bins", gb.bins)->required();
  c_gb->add_option("--capacity", gb.capacity)->required();
  c_gb->add_flag("--raw", gb.raw, "Skip normalization");
  c_gb->add_option("--out", gb.out)->required();
  c_gb->add_option("--witnesses", gb.witnesses, "Directory for fvs.txt, pathdecomp.txt, labels.json");
  c_gb->add_option("--report", gb.report);
  c_gb->callback([&] {
    action = [&] {
      BinPackInstance inst = parse_items(gb.items, gb.bins, gb.capacity);
      J rep;
      if (!gb.raw) {
        auto norm = normalize_binpack(inst);
        if (norm.status != Normalization::Status::Instance) {
          bool yes = norm.status == Normalization::Status::Feasible;
          out << "TRIVIAL " << (yes ? "YES" : "NO") << "\n";
          detail::write_report(gb.report, J{{"trivial", yes ? "yes" : "no"}});
          return kOk;
        }
        rep["dummies"] = norm.dummies;
        rep["factor"] = norm.factor;
        inst = norm.instance;
      }
      auto li = gen_binpack_instance(inst, gb.raw);
      detail::write_file(gb.out, to_edge_list(li.graph));
      auto fvs = fvs_witness(li);
      auto pd = pathwidth_witness(li);
      if (!is_feedback_vertex_set(li.graph, fvs)) throw Error("feedback vertex witness failed its check");
      if (auto why = check_path_decomposition(li.graph, pd); !why.empty()) throw Error("path decomposition: " + why);
      if (!gb.witnesses.empty()) {
        std::filesystem::create_directories(gb.witnesses);
        std::filesystem::path dir(gb.witnesses);
        detail::write_file((dir / "fvs.txt").string(), detail::join(fvs) + "\n");
        std::string bags;
        for (const auto& b : pd) bags += detail::join(b) + "\n";
        detail::write_file((dir / "pathdecomp.txt").string(), bags);
        detail::write_file((dir / "labels.json").string(), to_json(li).dump(1) + "\n");
      }
      rep["n"] = li.graph.n();
      rep["m"] = li.graph.m();
      rep["left_path_length"] = li.left_length();
      rep["right_path_length"] = li.right_length();
      rep["purple_edges"] = li.purple.size();
      rep["fvs_size"] = fvs.size();
      rep["pathwidth_bound"] = width(pd);
      detail::write_report(gb.report, rep);
      out << li.graph.n() << " vertices, " << li.graph.m() << " edges, fvs " << fvs.size() << ", width "
          << width(pd) << "\n";
      return kOk;
    };
  });

  // gen-replace
  struct {
    std::string graph, gadget, out, report;
  } gr;
  auto* c_gr = app.add_subcommand("gen-replace", "Replace every edge by a two-terminal gadget");
  c_gr->add_option("--graph", gr.graph)->required();
  c_gr->add_option("--gadget", gr.gadget, "JSON {vertices, edges, alpha, beta}")->required();
  c_gr->add_option("--out", gr.out)->required();
  c_gr->add_option("--report", gr.report);
  c_gr->callback([&] {
    action = [&] {
      auto r = replace_edges_with_gadget(detail::read_graph(gr.graph), gadget_from_json(detail::read_json(gr.gadget)));
      detail::write_file(gr.out, to_edge_list(r.graph));
      detail::write_report(gr.report, J{{"n", r.graph.n()}, {"m", r.graph.m()}});
      out << r.graph.n() << " vertices, " << r.graph.m() << " edges\n";
      return kOk;
    };
  });

  // lift-bandwidth
  struct {
    std::string graph, ordering, gadget, out, report;
  } lb;
  auto* c_lb = app.add_subcommand("lift-bandwidth", "Column ordering of the gadget-replaced graph");
  c_lb->add_option("--graph", lb.graph)->required();
  c_lb->add_option("--ordering", lb.ordering, "Vertex ids from left to right")->required();
  c_lb->add_option("--gadget", lb.gadget)->required();
  c_lb->add_option("--out", lb.out, "Write the lifted ordering");
  c_lb->add_option("--report", lb.report);
  c_lb->callback([&] {
    action = [&] {
      Graph g = detail::read_graph(lb.graph);
      std::istringstream os(detail::read_file(lb.ordering));
      std::vector<VertexId> raw = parse_ordering(os);
      // ordering ids are raw ids as in the graph file
      std::map<std::string, VertexId> dense;
      for (VertexId v = 0; v < g.n(); ++v) dense[g.vertex_label(v)] = v;
      std::vector<VertexId> sigma;
      for (VertexId x : raw) {
        auto it = dense.find(std::to_string(x));
        if (it == dense.end()) throw InvalidInput("ordering names unknown vertex " + std::to_string(x));
        sigma.push_back(it->second);
      }
      auto lift = bandwidth_lift(g, LinearOrdering::from_sequence(sigma), gadget_from_json(detail::read_json(lb.gadget)));
      if (!lb.out.empty()) detail::write_file(lb.out, detail::join(lift.order.sequence()) + "\n");
      detail::write_report(lb.report, J{{"b", lift.b},
                                        {"column_bound", lift.column_bound},
                                        {"bound", lift.bound},
                                        {"measured", lift.measured}});
      out << "b " << lift.b << ", bound " << lift.bound << ", measured " << lift.measured << "\n";
      return lift.measured <= lift.bound ? kOk : kFailure;
    };
  });

  // convex-cert
  struct {
    std::string in, out;
  } cc;
  auto* c_cc = app.add_subcommand("convex-cert", "Straight-line drawing with path ends in convex position");
  c_cc->add_option("--in", cc.in)->required();
  c_cc->add_option("--out", cc.out);
  c_cc->callback([&] {
    action = [&] {
      Graph g = detail::read_graph(cc.in);
      auto cert = convex_certificate(g);
      auto j = certificate_json(g, cert);
      if (!cc.out.empty()) detail::write_file(cc.out, j.dump(1) + "\n");
      else out << j.dump(1) << "\n";
      out << (cert.check.ok ? "VALID" : "INVALID") << "\n";
      return cert.check.ok ? kOk : kFailure;
    };
  });

  // bounds
  struct {
    std::string variant = "1p";
    int ell = -1;
    std::string triangulation;
  } bd;
  auto* c_bd = app.add_subcommand("bounds", "Worst-case kernel size or triangulation bound");
  c_bd->add_option("--variant", bd.variant)->check(CLI::IsMember({"1p", "g1p", "kp", "gkp"}));
  c_bd->add_option("--ell", bd.ell, "Feedback edge number");
  c_bd->add_option("--triangulation", bd.triangulation, "Number of short-path edges m");
  c_bd->callback([&] {
    action = [&] {
      if (!bd.triangulation.empty()) {
        BigInt m;
        try {
          m = BigInt(bd.triangulation);
        } catch (const std::exception&) {
          throw InvalidInput("bad number '" + bd.triangulation + "'");
        }
        out << triangulation_bound(m) << "\n";
        return kOk;
      }
      if (bd.ell < 0) throw InvalidInput("bounds needs --ell or --triangulation");
      out << worst_case_size(bd.ell, parse_kernel_variant(bd.variant)) << "\n";
      return kOk;
    };
  });

  std::vector<const char*> argv{"onep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace onep::cli
