#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "intrel/config.hpp"
#include "intrel/errors.hpp"
#include "intrel/family_algebras.hpp"
#include "intrel/families.hpp"
#include "intrel/hopf.hpp"
#include "intrel/json_io.hpp"
#include "intrel/projections.hpp"
#include "intrel/trees.hpp"
#include "intrel/verification.hpp"

namespace intrel::cli {
namespace {

using json_io::Json;

struct Options {
  bool json = false;
  int jobs = 1;
  int n_max = -1;
  int enum_limit = -1;

  std::string count_family;
  std::string count_mode = "construct";
  int count_n = 0;

  std::string suite;

  std::string family;
  std::string style = "quotient";
  std::vector<std::string> files;

  std::string map;

  int dot_n = 0;
  std::string dot_family;
};

std::string read_source(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

// Fills in family and style from the flags when the file leaves them out,
// and rejects files that disagree with the flags.
FamilyElement read_family_element(const std::string& path, const Options& opt) {
  Json j = json_io::parse(read_source(path));
  if (!j.is_object()) throw InputError(path + ": expected a JSON object");
  if (!j.contains("family")) j["family"] = opt.family;
  if (!j.contains("style")) j["style"] = opt.style;
  if (j["family"] != opt.family || j["style"] != opt.style) {
    throw InputError(path + ": element is " + j["family"].dump() + "/" + j["style"].dump() +
                     " but the command asked for " + opt.family + "/" + opt.style);
  }
  return json_io::family_element_from_json(j);
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

int cmd_count(const std::string& what, const Options& opt, std::ostream& out) {
  std::vector<std::string> header{"n"};
  std::vector<std::vector<std::string>> rows;
  Json json_rows = Json::array();
  if (what == "relations") {
    if (opt.count_n < 1 || opt.count_n > 8) throw LimitError("count relations supports n in 1..8");
    header.push_back("relations");
    for (int n = 1; n <= opt.count_n; ++n) {
      const auto total = relation_total(n);
      rows.push_back({std::to_string(n), std::to_string(total)});
      json_rows.push_back({{"n", n}, {"relations", total}});
    }
  } else if (what == "indecomposables") {
    if (opt.count_n < 1) throw InputError("count indecomposables needs n >= 1");
    require_enumerable(opt.count_n, "count indecomposables");
    header.insert(header.end(), {"relations", "indecomposables", "series"});
    for (int n = 1; n <= opt.count_n; ++n) {
      const auto total = relation_total(n);
      const auto counted = count_indecomposables(n);
      const auto series = inclusion_exclusion_in(n);
      rows.push_back({std::to_string(n), std::to_string(total), std::to_string(counted), std::to_string(series)});
      json_rows.push_back({{"n", n}, {"relations", total}, {"indecomposables", counted}, {"series", series}});
    }
  } else {
    const Family f = parse_family(opt.count_family);
    const EnumerationMode mode =
        opt.count_mode == "filter" ? EnumerationMode::Filter : EnumerationMode::Construct;
    if (opt.count_n < 0 || opt.count_n > 8) throw LimitError("count family supports n in 0..8");
    header.push_back(std::string(to_string(f)));
    for (int n = 1; n <= opt.count_n; ++n) {
      const auto size = enumerate_family(n, f, mode).size();
      rows.push_back({std::to_string(n), std::to_string(size)});
      json_rows.push_back({{"n", n}, {"count", size}});
    }
  }
  if (opt.json) {
    Json doc{{"count", what}, {"rows", json_rows}};
    if (what == "family") doc["family"] = opt.count_family;
    out << doc.dump() << '\n';
  } else {
    print_table(out, header, rows);
  }
  return kExitPass;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const int n_max = opt.n_max >= 0 ? opt.n_max : default_n_max(opt.suite);
  const VerificationReport report = run_suite(opt.suite, n_max, opt.jobs);
  if (opt.json) {
    out << to_json(report).dump() << '\n';
  } else {
    out << "suite " << report.suite << " (n-max " << n_max << "): " << report.checks << " checks, "
        << report.failures.size() << " failures, " << std::fixed << std::setprecision(2) << report.seconds
        << " s\n";
    if (!report.passed()) {
      const auto& first = report.failures.front();
      out << "first failure: " << first.check << '\n' << first.counterexample.dump() << '\n';
      for (std::size_t i = 1; i < report.failures.size(); ++i) out << "also failed: " << report.failures[i].check << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kExitPass : kExitFailure;
}

void require_quotient_allowed(const Options& opt) {
  if (opt.style != "quotient") return;
  const Family f = parse_family(opt.family);
  if (!supports_quotient(f)) throw UnsupportedFamily(tamari_quotient_refusal(f));
}

int cmd_product(const Options& opt, std::ostream& out) {
  require_quotient_allowed(opt);
  if (opt.files.size() != 2) throw InputError("product needs exactly two element files");
  const FamilyElement a = read_family_element(opt.files[0], opt);
  const FamilyElement b = read_family_element(opt.files[1], opt);
  const FamilyElement c = a.style == Style::Quotient ? quotient_product(a, b) : subalgebra_product(a, b);
  out << json_io::to_json(c).dump() << '\n';
  return kExitPass;
}

int cmd_coproduct(const Options& opt, std::ostream& out) {
  require_quotient_allowed(opt);
  if (opt.files.size() != 1) throw InputError("coproduct needs exactly one element file");
  const FamilyElement a = read_family_element(opt.files[0], opt);
  const FamilyTensor c = a.style == Style::Quotient ? quotient_coproduct(a) : subalgebra_coproduct(a);
  out << json_io::to_json(c).dump() << '\n';
  return kExitPass;
}

int cmd_project(const Options& opt, std::ostream& out) {
  const ProjectionMap m = parse_projection_map(opt.map);
  if (opt.files.size() != 1) throw InputError("project needs exactly one relation file");
  const Relation p = json_io::relation_from_json(json_io::parse(read_source(opt.files[0])));
  if (!is_poset(p)) throw InputError("project: input relation is not a poset");
  out << json_io::to_json(apply_projection(m, p)).dump() << '\n';
  return kExitPass;
}

void write_dot(std::ostream& out, const std::string& name, const std::vector<Relation>& nodes,
               const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << json_io::pair_label(nodes[i]) << "\"];\n";
  }
  for (const auto& [lo, hi] : edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
}

// Cover relations of weak_le restricted to `nodes`.
std::vector<std::pair<std::size_t, std::size_t>> induced_covers(const std::vector<Relation>& nodes) {
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weak_rank(nodes[a]) < weak_rank(nodes[b]); });
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<std::size_t> minimal;
    for (std::size_t j : order) {
      if (j == i || !weak_le(nodes[i], nodes[j])) continue;
      const bool above_found = std::any_of(minimal.begin(), minimal.end(),
                                           [&](std::size_t k) { return weak_le(nodes[k], nodes[j]); });
      if (!above_found) minimal.push_back(j);
    }
    std::sort(minimal.begin(), minimal.end());
    for (std::size_t j : minimal) edges.emplace_back(i, j);
  }
  return edges;
}

int cmd_export_weak_order(const Options& opt, std::ostream& out) {
  std::vector<Relation> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (opt.dot_family.empty() || opt.dot_family == "IRel") {
    if (opt.dot_n < 0 || opt.dot_n > 4) throw LimitError("export-dot weak-order supports n in 0..4");
    nodes = enumerate_family(opt.dot_n, Family::IRel, EnumerationMode::Filter);
    // The weak order on all relations is boolean: covers flip a single pair.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (weak_rank(nodes[j]) == weak_rank(nodes[i]) + 1 && weak_le(nodes[i], nodes[j])) edges.emplace_back(i, j);
      }
    }
  } else {
    const Family f = parse_family(opt.dot_family);
    if (opt.dot_n < 0 || opt.dot_n > 6) throw LimitError("export-dot weak-order --family supports n in 0..6");
    nodes = enumerate_family(opt.dot_n, f, EnumerationMode::Construct);
    edges = induced_covers(nodes);
  }
  write_dot(out, "weak_order", nodes, edges);
  return kExitPass;
}

int cmd_export_tamari(const Options& opt, std::ostream& out) {
  if (opt.dot_n < 0 || opt.dot_n > 6) throw LimitError("export-dot tamari supports n in 0..6");
  std::vector<Relation> nodes;
  for (const auto& t : all_binary_trees(opt.dot_n)) nodes.push_back(from_binary_tree(t));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : tamari_covers(opt.dot_n)) {
    edges.emplace_back(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
  }
  write_dot(out, "tamari", nodes, edges);
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Integer binary relations and integer posets: counting, algebra and verification", "intrel"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--enum-limit", opt.enum_limit, "Largest n for full sweeps of all relations (overrides " +
                                                     std::string(kEnumLimitEnv) + ")")
      ->check(CLI::Range(0, 8));

  auto* count = app.add_subcommand("count", "Count relations, indecomposables or family members");
  count->require_subcommand(1);
  count->add_flag("--json", opt.json, "Machine-readable output");
  auto* count_rel = count->add_subcommand("relations", "All relations on [n]");
  count_rel->add_option("n", opt.count_n, "Largest size")->required();
  auto* count_ind = count->add_subcommand("indecomposables", "Relations without a nontrivial primitive cut");
  count_ind->add_option("n", opt.count_n, "Largest size")->required();
  auto* count_fam = count->add_subcommand("family", "Members of a family");
  count_fam->add_option("tag", opt.count_family, "Family tag")->required();
  count_fam->add_option("n", opt.count_n, "Largest size")->required();
  count_fam->add_option("--mode", opt.count_mode, "construct or filter")
      ->check(CLI::IsMember({"construct", "filter"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", opt.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("n_max_pos", opt.n_max, "Largest size (same as --n-max)")->check(CLI::Range(0, 6));
  verify->add_option("--n-max", opt.n_max, "Largest size")->check(CLI::Range(0, 6));
  verify->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_flag("--json", opt.json, "Machine-readable report");

  auto add_element_options = [&](CLI::App* sub, const char* what) {
    sub->add_option("--family", opt.family, "Family tag, or fiber-sum family name")->required();
    sub->add_option("--style", opt.style, "quotient or fiber-sum")
        ->check(CLI::IsMember({"quotient", "fiber-sum"}));
    sub->add_option("files", opt.files, what)->required();
    sub->add_flag("--json", opt.json, "Accepted for symmetry; output is always JSON");
  };
  auto* product = app.add_subcommand("product", "Multiply two family elements");
  add_element_options(product, "Two family-element JSON files ('-' reads stdin)");
  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a family element");
  add_element_options(coproduct, "One family-element JSON file ('-' reads stdin)");

  auto* project = app.add_subcommand("project", "Apply a projection map to a poset");
  project->add_option("--map", opt.map, "IWOIPid, DWOIPdd, WOIPd, TOIPd, WOEPid or WOEPdd")->required();
  project->add_option("file", opt.files, "Relation JSON file ('-' reads stdin)")->required()->expected(1);
  project->add_flag("--json", opt.json, "Accepted for symmetry; output is always JSON");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagrams in DOT");
  dot->require_subcommand(1);
  auto* dot_weak = dot->add_subcommand("weak-order", "Weak order on relations or on a family");
  dot_weak->add_option("n", opt.dot_n, "Size")->required();
  dot_weak->add_option("--family", opt.dot_family, "Restrict to a family");
  auto* dot_tamari = dot->add_subcommand("tamari", "Tamari lattice through binary-tree posets");
  dot_tamari->add_option("n", opt.dot_n, "Size")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* target = &app;
    for (auto* sub : app.get_subcommands()) target = sub;
    err << "run '" << target->get_display_name(true) << " --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (opt.enum_limit >= 0) set_enumeration_limit(opt.enum_limit);
    if (count->parsed()) {
      if (count_rel->parsed()) return cmd_count("relations", opt, out);
      if (count_ind->parsed()) return cmd_count("indecomposables", opt, out);
      return cmd_count("family", opt, out);
    }
    if (verify->parsed()) return cmd_verify(opt, out);
    if (product->parsed()) return cmd_product(opt, out);
    if (coproduct->parsed()) return cmd_coproduct(opt, out);
    if (project->parsed()) return cmd_project(opt, out);
    if (dot_weak->parsed()) return cmd_export_weak_order(opt, out);
    if (dot_tamari->parsed()) return cmd_export_tamari(opt, out);
  } catch (const UnsupportedFamily& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ClosureViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace intrel::cli
