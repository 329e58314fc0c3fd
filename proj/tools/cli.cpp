#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bihyper/construction.hpp"
#include "bihyper/document.hpp"
#include "bihyper/enumeration.hpp"
#include "bihyper/minimality.hpp"

namespace bihyper::cli {

namespace {

std::string join(const std::vector<std::size_t>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << '}';
  return os.str();
}

// Classes of a coloring, naming vertices by label when the document has them.
std::string describe_partition(const Partition& p, const std::vector<LabeledVertex>& labels) {
  if (labels.empty()) return p.to_string();
  std::ostringstream os;
  const auto classes = p.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c) os << " | ";
    os << '{';
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      os << (i ? "," : "") << labels[classes[c][i]].to_string();
    }
    os << '}';
  }
  return os.str();
}

std::string describe_hypergraph(const MixedHypergraph& h) {
  std::ostringstream os;
  os << h.vertex_count() << " vertices, ";
  if (h.is_bi()) {
    os << h.c_edges().size() << " bi-edges";
  } else {
    os << h.c_edges().size() << " C-edges, " << h.d_edges().size() << " D-edges";
  }
  return os.str();
}

struct ConstructArgs {
  std::string set;
  std::string variant = "auto";
  std::string out;
  std::string reduction;
  bool drop_special = false;
};

int do_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const FeasibleSpec spec = FeasibleSpec::parse(a.set);
  const LabeledHypergraph lh =
      construct(spec, {.variant = parse_variant(a.variant), .drop_special_edge = a.drop_special});
  if (lh.unproven_regime) {
    err << "warning: variant II for " << spec.to_string()
        << " (n2 != n1-1) is not known to be a one-realization\n";
  }
  const std::string doc = serialize(lh);
  if (a.out.empty()) {
    out << doc;
  } else {
    write_file(a.out, doc);
    out << "wrote " << a.out << ": " << describe_hypergraph(lh.hypergraph) << ", variant "
        << to_string(lh.variant) << "\n";
  }
  if (!a.reduction.empty()) {
    const Reduction r = reduction_bijection(spec);
    std::vector<LabeledVertex> sub_labels;
    for (Vertex x : r.subset) sub_labels.push_back(r.full.labels[x]);
    HypergraphDocument sub = to_document(r.restricted, "restriction of construct " + spec.to_string() +
                                                           " I to vertices with x1 = x2");
    sub.labels = std::move(sub_labels);
    sub.s = spec.length();
    write_file(a.reduction + ".sub.hg", serialize(sub));
    write_file(a.reduction + ".tail.hg", serialize(r.tail));
    write_file(a.reduction + ".map", serialize_map(r.map));
    out << "wrote " << a.reduction << ".sub.hg, " << a.reduction << ".tail.hg, " << a.reduction
        << ".map (" << r.subset.size() << " vertices)\n";
  }
  return kOk;
}

struct SpectrumArgs {
  std::string file;
  bool json = false;
  bool list = false;
  unsigned threads = 1;
};

int do_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const HypergraphDocument doc = parse_document(read_file(a.file));
  EnumerationOptions opts;
  opts.threads = a.threads;
  if (!a.list && !a.json) opts.limit = 0;
  const EnumerationReport rep = enumerate_strict_colorings(doc.hypergraph, opts);
  if (a.json) {
    nlohmann::ordered_json j;
    j["vertices"] = doc.hypergraph.vertex_count();
    j["spectrum"] = rep.spectrum.counts;
    j["upper_chromatic"] = rep.spectrum.upper_chromatic();
    j["feasible"] = rep.feasible;
    j["strict_colorings"] = rep.spectrum.total();
    j["nodes_explored"] = rep.nodes_explored;
    if (a.list) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const Partition& p : rep.colorings) {
        list.push_back({{"classes", p.class_count()}, {"encoding", p.encoding()}});
      }
      j["colorings"] = std::move(list);
    }
    out << j.dump() << "\n";
    return kOk;
  }
  out << describe_hypergraph(doc.hypergraph) << "\n";
  out << "  k  r_k\n";
  for (std::size_t k = 1; k <= rep.spectrum.upper_chromatic(); ++k) {
    out << std::setw(3) << k << "  " << rep.spectrum.r(k) << "\n";
  }
  out << "feasible set " << join(rep.feasible) << "\n";
  out << "strict colorings " << rep.spectrum.total() << "\n";
  out << "nodes explored " << rep.nodes_explored << "\n";
  if (a.list) {
    for (const Partition& p : rep.colorings) {
      out << "  [" << p.class_count() << "] " << describe_partition(p, doc.labels) << "\n";
    }
  }
  return kOk;
}

int do_verify(const std::string& file, const std::string& set, std::ostream& out) {
  const HypergraphDocument doc = parse_document(read_file(file));
  const FeasibleSpec spec = FeasibleSpec::parse(set);
  const auto target = spec.as_set();
  const OneRealizationResult res = is_one_realization(doc.hypergraph, target);
  out << describe_hypergraph(doc.hypergraph) << "\n";
  out << "target " << join(target) << ": " << res.describe() << "\n";
  for (const Partition& p : res.witnesses) {
    out << "  witness [" << p.class_count() << "] " << describe_partition(p, doc.labels) << "\n";
  }
  return res.holds ? kOk : kRefuted;
}

struct MinSearchArgs {
  std::string set;
  std::optional<std::size_t> max_vertices;
  bool iso = false;
  std::string resume;
  std::optional<std::uint64_t> budget;
  std::size_t vertex_cap = kDefaultVertexCap;
  unsigned threads = 1;
};

int do_min_search(const MinSearchArgs& a, std::ostream& out) {
  const FeasibleSpec spec = FeasibleSpec::parse(a.set);
  const std::size_t bound = min_size(spec);
  SearchOptions opts;
  opts.max_vertices = a.max_vertices.value_or(bound - 1);
  opts.iso_reduce = a.iso;
  opts.budget = a.budget ? *a.budget : default_budget();
  opts.vertex_cap = a.vertex_cap;
  opts.threads = a.threads;
  if (!a.resume.empty()) opts.resume = SearchCursor::parse(a.resume);

  const SearchReport rep = certify_lower_bound(spec, opts);
  out << "target " << join(spec.as_set()) << ", minimum order " << bound << ", searching up to "
      << opts.max_vertices << " vertices" << (a.iso ? " (isomorphism-reduced)" : "") << "\n";
  for (const auto& p : rep.progress) {
    out << "  v=" << p.vertices << ": scanned " << p.scanned << ", tested " << p.examined
        << (p.complete ? "" : " (incomplete)") << "\n";
  }
  out << "instances tested " << rep.total_examined() << "\n";
  bool below_bound = false;
  for (const Witness& w : rep.witnesses) {
    below_bound = below_bound || w.vertices < bound;
    out << "  witness on " << w.vertices << " vertices (mask " << w.mask << "):";
    for (const Edge& e : w.hypergraph.c_edges()) out << ' ' << edge_to_string(e);
    out << "\n";
  }
  if (rep.witness_count > rep.witnesses.size()) {
    out << "  ... " << rep.witness_count - rep.witnesses.size() << " more witnesses\n";
  }
  out << "verdict " << to_string(rep.verdict) << "\n";
  if (rep.cursor) {
    out << "aborted: " << rep.abort_reason << "\n";
    out << "resume with --resume " << rep.cursor->to_string() << "\n";
  }
  switch (rep.verdict) {
    case Verdict::CertifiedNone: return kOk;
    case Verdict::WitnessFound: return below_bound ? kRefuted : kOk;
    case Verdict::AbortedBudget: return kBudget;
  }
  return kOk;
}

int do_isocheck(const std::string& f1, const std::string& f2, const std::string& map_file,
                std::ostream& out) {
  const HypergraphDocument d1 = parse_document(read_file(f1));
  const HypergraphDocument d2 = parse_document(read_file(f2));
  const VertexBijection map = parse_map(read_file(map_file));
  const bool iso = check_isomorphism_under_map(d1.hypergraph, d2.hypergraph, map);
  out << "isomorphism under map: " << (iso ? "yes" : "no") << "\n";
  return iso ? kOk : kRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify minimum 3-uniform bi-hypergraph one-realizations", "bihyper"};
  app.require_subcommand(1);

  ConstructArgs cons;
  auto* construct_cmd = app.add_subcommand("construct", "Build the labelled construction for a set");
  construct_cmd->add_option("--set", cons.set, "Feasible set n1,n2,... (strictly decreasing)")->required();
  construct_cmd->add_option("--variant", cons.variant, "I, II or auto")
      ->check(CLI::IsMember({"I", "II", "auto"}));
  construct_cmd->add_option("--out", cons.out, "Write the document here instead of stdout");
  construct_cmd->add_flag("--drop-special", cons.drop_special, "Leave out the extra special bi-edge");
  construct_cmd->add_option("--reduction", cons.reduction,
                            "Also write PREFIX.sub.hg, PREFIX.tail.hg and PREFIX.map for the "
                            "first-coordinate reduction (needs at least 3 values)");

  SpectrumArgs spec_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Enumerate strict colorings of a document");
  spectrum_cmd->add_option("file", spec_args.file, "Hypergraph document")->required();
  spectrum_cmd->add_flag("--json", spec_args.json, "Machine-readable output");
  spectrum_cmd->add_flag("--list", spec_args.list, "List every strict coloring");
  spectrum_cmd->add_option("--threads", spec_args.threads, "Worker threads (0 = all cores)");

  std::string verify_file, verify_set;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a document one-realizes a set");
  verify_cmd->add_option("file", verify_file, "Hypergraph document")->required();
  verify_cmd->add_option("--set", verify_set, "Feasible set n1,n2,...")->required();

  MinSearchArgs ms;
  auto* min_cmd = app.add_subcommand("min-search", "Search small bi-hypergraphs for one-realizations");
  min_cmd->add_option("--set", ms.set, "Feasible set n1,n2,...")->required();
  min_cmd->add_option("--max-vertices", ms.max_vertices, "Largest order searched (default: minimum order - 1)");
  min_cmd->add_flag("--iso", ms.iso, "Test one representative per isomorphism class");
  min_cmd->add_option("--resume", ms.resume, "Cursor V:INDEX printed by an aborted run");
  min_cmd->add_option("--budget", ms.budget, "Maximum one-realization tests (default 10^7 or $BIHYPER_BUDGET)");
  min_cmd->add_option("--vertex-cap", ms.vertex_cap, "Refuse orders above this");
  min_cmd->add_option("--threads", ms.threads, "Worker threads (0 = all cores)");

  std::string iso1, iso2, iso_map;
  auto* iso_cmd = app.add_subcommand("isocheck", "Check a vertex map is an isomorphism");
  iso_cmd->add_option("file1", iso1, "Source document")->required();
  iso_cmd->add_option("file2", iso2, "Target document")->required();
  iso_cmd->add_option("--map", iso_map, "Vertex map file")->required();

  std::string formula_set;
  auto* formula_cmd = app.add_subcommand("formula", "Print the minimum order 2*n1 - floor((n2+1)/n1)");
  formula_cmd->add_option("--set", formula_set, "Feasible set n1,n2,...")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*construct_cmd) return do_construct(cons, out, err);
    if (*spectrum_cmd) return do_spectrum(spec_args, out);
    if (*verify_cmd) return do_verify(verify_file, verify_set, out);
    if (*min_cmd) return do_min_search(ms, out);
    if (*iso_cmd) return do_isocheck(iso1, iso2, iso_map, out);
    if (*formula_cmd) {
      out << min_size(FeasibleSpec::parse(formula_set)) << "\n";
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bihyper::cli
