#include "reebcube/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "reebcube/errors.hpp"
#include "reebcube/io.hpp"
#include "reebcube/type_a.hpp"
#include "reebcube/type_b.hpp"

namespace reebcube {

namespace {

void check_rank(const RunConfig& cfg, int lo_a, int hi_a, int lo_b, int hi_b) {
  int lo = cfg.type == 'A' ? lo_a : lo_b;
  int hi = cfg.type == 'A' ? hi_a : hi_b;
  if (cfg.rank < lo) fail(Errc::rank_too_small, "rank too small for this command");
  if (cfg.rank > hi) fail(Errc::rank_too_large, "rank too large for this command");
}

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return;
  for (const char* f : allowed)
    if (cfg.format == f) return;
  fail(Errc::bad_format, "format " + cfg.format + " not valid for " + cfg.command);
}

// Reeb graph of the deletion at cfg.rank with vertices labeled by the class
// parametrization.
Digraph labeled_reeb_graph(const RunConfig& cfg) {
  if (cfg.type == 'A') {
    DeletionA d = deletion_A(cfg.rank);
    ReebGraph rg =
        cfg.augmented ? augmented_pre_reeb(d.proj, cfg.jobs) : pre_reeb(d.proj);
    for (int c = 0; c < rg.partition.num_classes(); ++c)
      rg.graph.set_label(c, subset_label(class_subset(d.domain_words[rg.partition.members[c][0]]).mask));
    return rg.graph;
  }
  DeletionB d = deletion_B(cfg.rank);
  ReebGraph rg = cfg.augmented ? augmented_pre_reeb(d.proj, cfg.jobs) : pre_reeb(d.proj);
  for (int c = 0; c < rg.partition.num_classes(); ++c)
    rg.graph.set_label(c, class_label_B(class_b(d.domain_words[rg.partition.members[c][0]])));
  return rg.graph;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_rank(cfg, 1, kMaxRankA, 1, kMaxRankB);
  check_format(cfg, {"text"});
  Poset p = cfg.type == 'A' ? weak_poset_A(cfg.rank).poset : weak_poset_B(cfg.rank).poset;
  write_poset(out, p);
  err << "weak order " << cfg.type << " rank " << cfg.rank << ": " << p.size() << " elements, "
      << p.covers().size() << " covers\n";
  return 0;
}

int cmd_reeb(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_rank(cfg, 2, kMaxRankA, 1, kMaxRankB);
  check_format(cfg, {"text", "dot"});
  Digraph g = labeled_reeb_graph(cfg);
  if (cfg.format == "dot") {
    // One rank=same layer per longest-path rank, mirroring the layered
    // drawings of these graphs.
    std::vector<std::vector<int>> layers;
    auto ranks = longest_path_ranks(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
      std::size_t r = static_cast<std::size_t>(ranks[v]);
      if (layers.size() <= r) layers.resize(r + 1);
      layers[r].push_back(v);
    }
    write_dot(out, g, layers);
  } else {
    write_digraph(out, g);
  }
  err << (cfg.augmented ? "augmented pre-Reeb" : "pre-Reeb") << " graph: " << g.num_vertices()
      << " vertices, " << g.num_edges() << " edges\n";
  return 0;
}

int cmd_lift(const RunConfig& cfg, std::ostream& out, std::ostream& err,
             std::ostream& meta) {
  check_rank(cfg, 1, kMaxRankA, 1, kMaxRankB);
  check_format(cfg, {"tsv"});
  TowerRealization t = build_tower(cfg.type, cfg.rank, cfg.heights, cfg.jobs);
  write_coordinate_map(out, t.top, t.coords);
  const int first_level = cfg.type == 'A' ? 2 : 1;
  for (std::size_t k = 0; k < t.levels.size(); ++k)
    meta << "level " << first_level + static_cast<int>(k) << " heights " << to_string(t.kind)
         << '\n';
  err << "tower " << cfg.type << " rank " << cfg.rank << ": " << t.top.size() << " elements, "
      << t.coords.dim << " coordinates, embedding verified\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_rank(cfg, 2, 5, 2, 4);
  check_format(cfg, {"text"});
  CheckReport rep;

  if (cfg.type == 'A') {
    DeletionA d = deletion_A(cfg.rank);
    rep.append(validate_cylindrical(d.proj).as_report());
    bool sizes = true;
    for (int q = 0; q < d.proj.codomain.size(); ++q)
      if (static_cast<int>(fiber(d.proj, q).size()) != cfg.rank) sizes = false;
    rep.add("all fibers have exactly n elements", sizes);
    rep.append(verify_boolean_iso(cfg.rank));
    rep.append(verify_total_order_A(cfg.rank, cfg.jobs));

    ReebGraph rg = augmented_pre_reeb(d.proj, cfg.jobs);
    HeightFunction min = minimal_heights(rg), nu;
    for (int c = 0; c < rg.partition.num_classes(); ++c)
      nu.push_back(nu_A(class_subset(d.domain_words[rg.partition.members[c][0]])));
    rep.add("minimal heights equal nu", min == nu);
    rep.add("nu and minimal heights order all pairs alike",
            uniqueness_check(d.proj, nu, min, cfg.jobs));
  } else {
    DeletionB d = deletion_B(cfg.rank);
    rep.append(validate_cylindrical(d.proj).as_report());
    bool sizes = true;
    for (int q = 0; q < d.proj.codomain.size(); ++q)
      if (static_cast<int>(fiber(d.proj, q).size()) != 2 * cfg.rank) sizes = false;
    rep.add("all fibers have exactly 2n elements", sizes);
    rep.append(verify_gamma_iso(cfg.rank));
    rep.append(verify_total_order_B(cfg.rank, cfg.jobs));

    ReebGraph rg = augmented_pre_reeb(d.proj, cfg.jobs);
    HeightFunction min = minimal_heights(rg), nu;
    for (int c = 0; c < rg.partition.num_classes(); ++c)
      nu.push_back(nu_B(class_b(d.domain_words[rg.partition.members[c][0]])));
    rep.add("nu and minimal heights order all pairs alike",
            uniqueness_check(d.proj, nu, min, cfg.jobs));
  }

  for (HeightsKind kind : {HeightsKind::nu, HeightsKind::minimal}) {
    TowerRealization t = build_tower(cfg.type, cfg.rank, kind, cfg.jobs);
    rep.add("tower with " + to_string(kind) + " heights is a cubic realization",
            !check_cubic_realization(t.top, t.coords).has_value());
    rep.add("tower with " + to_string(kind) + " heights is an order embedding",
            !check_order_embedding(t.top, t.coords, cfg.jobs).has_value());
    if (kind == HeightsKind::minimal) {
      bool cert_ok = true;
      std::string cert_witness;
      try {
        dimension_certificate(t);
      } catch (const Error& e) {
        cert_ok = false;
        cert_witness = e.what();
      }
      rep.add("section composites form a box and a Boolean lattice", cert_ok, cert_witness);
    }
  }

  if (cfg.type == 'B') rep.append(counterexample_weighted_sum());

  rep.print(out);
  err << (rep.all_pass() ? "all checks passed\n" : "some checks FAILED\n");
  return rep.all_pass() ? 0 : 1;
}

int cmd_export_table(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"text"});
  for (const TableLineB& line : reeb_table_B(3)) out << format_table_line(line) << '\n';
  return 0;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::ostream& meta) {
  if (cfg.command == "gen") return cmd_gen(cfg, out, err);
  if (cfg.command == "reeb") return cmd_reeb(cfg, out, err);
  if (cfg.command == "lift") return cmd_lift(cfg, out, err, meta);
  if (cfg.command == "verify") return cmd_verify(cfg, out, err);
  if (cfg.command == "export-table") return cmd_export_table(cfg, out);
  fail(Errc::bad_format, "unknown command " + cfg.command);
}

bool is_config_error(Errc c) {
  switch (c) {
    case Errc::rank_too_large:
    case Errc::rank_too_small:
    case Errc::bad_format:
    case Errc::type_mismatch:
    case Errc::unknown_element:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.out.empty()) {
      std::ostringstream meta;
      int rc = dispatch(cfg, out, err, meta);
      if (!meta.str().empty()) err << meta.str();
      return rc;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) fail(Errc::bad_format, "cannot open output file " + cfg.out);
    if (cfg.command == "lift") {
      std::ofstream meta(cfg.out + ".meta", std::ios::binary);
      return dispatch(cfg, file, err, meta);
    }
    std::ostringstream meta;
    return dispatch(cfg, file, err, meta);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_config_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"cubic realizations of weak-order deletion towers via pre-Reeb graphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string type = "A", heights = "minimal";

  auto add_common = [&](CLI::App* sub, bool with_rank) {
    sub->add_option("--type", type, "A or B")->check(CLI::IsMember({"A", "B"}));
    if (with_rank) sub->add_option("--rank", cfg.rank, "rank n")->required();
    sub->add_option("--format", cfg.format, "output format");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--jobs", cfg.jobs, "worker threads for pair scans")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* gen = app.add_subcommand("gen", "write a weak-order poset file");
  add_common(gen, true);
  CLI::App* reeb = app.add_subcommand("reeb", "write a pre-Reeb or augmented pre-Reeb graph");
  add_common(reeb, true);
  reeb->add_flag("--augmented", cfg.augmented, "include auxiliary edges");
  CLI::App* lift = app.add_subcommand("lift", "build a tower realization and write the TSV");
  add_common(lift, true);
  lift->add_option("--heights", heights, "nu or minimal")
      ->check(CLI::IsMember({"nu", "minimal"}));
  CLI::App* verify = app.add_subcommand("verify", "run the full check suite for a type and rank");
  add_common(verify, true);
  CLI::App* table = app.add_subcommand("export-table", "write the rank-3 type-B class table");
  add_common(table, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.type = type == "B" ? 'B' : 'A';
  cfg.heights = heights == "nu" ? HeightsKind::nu : HeightsKind::minimal;
  return run_command(cfg, std::cout, std::cerr);
}

}  // namespace reebcube
