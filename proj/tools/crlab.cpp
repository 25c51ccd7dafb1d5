// Command-line frontend for the graph-invariant laboratory: invariant dumps,
// pairwise comparison, deck operations, corpus enumeration, and the
// corpus-scale verification experiments.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"

#include "crlab/canonical.hpp"
#include "crlab/covers.hpp"
#include "crlab/deck.hpp"
#include "crlab/enumerate.hpp"
#include "crlab/experiments.hpp"
#include "crlab/graph6.hpp"
#include "crlab/wl2.hpp"

namespace {

using namespace crlab;

constexpr int kExitOk = 0;
constexpr int kExitAttention = 1;
constexpr int kExitUsage = 2;

Graph make_multi(int copies, const Graph& part) {
  std::vector<Graph> parts(copies, part);
  return disjoint_union(parts);
}

std::optional<Graph> named_graph(const std::string& name) {
  if (name == "bowtie") {
    Graph g(5);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(0, 2);
    g.add_edge(2, 3); g.add_edge(3, 4); g.add_edge(2, 4);
    return g;
  }
  static const std::regex re(R"(^(\d*)([CPK])(\d+)$)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) return std::nullopt;
  int copies = m[1].str().empty() ? 1 : std::stoi(m[1].str());
  int size = std::stoi(m[3].str());
  Graph base = m[2].str() == "C"   ? Graph::cycle(size)
               : m[2].str() == "P" ? Graph::path(size)
                                   : Graph::complete(size);
  return make_multi(copies, base);
}

/// Accepts a named builtin (C6, 2C3, bowtie, ...), a graph6/sparse6 token,
/// or a path to a file holding either a graph line or an edge list.
Graph resolve_graph(const std::string& arg) {
  if (auto g = named_graph(arg)) return *g;
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    if (!content.empty() && (std::isdigit(content[0]) || std::isspace(content[0]))) {
      return parse_edge_list(content);
    }
    auto eol = content.find('\n');
    return parse_graph_line(content.substr(0, eol));
  }
  return parse_graph_line(arg);
}

struct Options {
  int n = 0;
  int depth = 3;
  std::string mode = "digest";
  std::string format = "text";
  unsigned jobs = 0;
  std::string corpus_path;
  std::size_t guard_nodes = kDefaultNodeGuard;
};

Mode parse_mode(const Options& opt) {
  return opt.mode == "exact" ? Mode::Exact : Mode::Digest;
}

/// Corpus resolution order: explicit --corpus file, then a cache file in
/// $CRLAB_CORPUS_DIR, then built-in enumeration.
Corpus resolve_corpus(const Options& opt, int order) {
  if (!opt.corpus_path.empty()) return load_corpus_graph6(opt.corpus_path);
  if (const char* dir = std::getenv("CRLAB_CORPUS_DIR")) {
    auto path = std::filesystem::path(dir) / ("corpus-n" + std::to_string(order) + ".g6");
    if (std::filesystem::exists(path)) return load_corpus_graph6(path.string());
  }
  return enumerate_graphs(order);
}

void dump_invariant_header(const std::string& tag) {
  std::cout << ">>crlab-dump kind=" << tag << " version=" << kAlgorithmVersion << "\n";
}

int cmd_refine(const Graph& g) {
  dump_invariant_header("refine");
  auto rounds = refine_to_stable(g);
  for (const auto& c : rounds) {
    std::cout << "round " << c.round << ":";
    for (const auto& col : c.assignment) std::cout << " " << col.hex().substr(0, 16);
    std::cout << "\n";
  }
  std::cout << "stable_round " << rounds.back().round - 1 << "\n";
  return kExitOk;
}

int cmd_cr(const Graph& g) {
  dump_invariant_header("cr");
  auto rounds = refine_to_stable(g);
  auto inv = cr_invariant(g);
  std::cout << emit_graph6(g) << "\t" << rounds.back().round - 1;
  for (const auto& c : inv.colors) std::cout << "\t" << c.hex();
  std::cout << "\n";
  return kExitOk;
}

int cmd_dcr(const Graph& g) {
  dump_invariant_header("dcr");
  auto d = dcr_invariant(g);
  std::cout << emit_graph6(g);
  for (const auto& card : d.cards) {
    std::cout << "\t[";
    for (std::size_t i = 0; i < card.colors.size(); i++) {
      std::cout << (i ? " " : "") << card.colors[i].hex().substr(0, 16);
    }
    std::cout << "]";
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_wl2(const Graph& g) {
  dump_invariant_header("wl2");
  auto inv = wl2_invariant(g);
  std::cout << emit_graph6(g) << "\t" << wl2_stable_round(g);
  for (const auto& c : inv.colors) std::cout << "\t" << c.hex().substr(0, 16);
  std::cout << "\n";
  return kExitOk;
}

int cmd_compare(const Graph& g, const Graph& h, const Options& opt) {
  Mode mode = parse_mode(opt);
  bool iso = isomorphic(g, h);
  bool cr = cr_equivalent(g, h, mode);
  bool dcr = g.order() >= 1 && h.order() >= 1 && dcr_equivalent(g, h, mode);
  bool wl2 = wl2_equivalent(g, h, mode);
  bool sim = cr_similar(g, h);
  std::cout << "iso:" << (iso ? "true" : "false")
            << " cr:" << (cr ? "true" : "false")
            << " dcr:" << (dcr ? "true" : "false")
            << " wl2:" << (wl2 ? "true" : "false")
            << " similar:" << (sim ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_deck(const Graph& g) {
  for (const auto& card : deck(g)) std::cout << emit_graph6(card) << "\n";
  return kExitOk;
}

int cmd_unfold(const Graph& g, int x, const Options& opt) {
  auto t = unfold(g, x, opt.depth, opt.guard_nodes);
  std::cout << emit_dot(t);
  return kExitOk;
}

int cmd_blockcut(const Graph& g) {
  auto t = block_cut_tree(g);
  std::cout << "blocks: " << t.blocks.size() << "\n";
  for (const auto& b : t.blocks) {
    std::cout << "  block:";
    for (int v : b) std::cout << " " << v;
    std::cout << "\n";
  }
  std::cout << "cut_vertices:";
  for (int v : t.cut_vertices) std::cout << " " << v;
  std::cout << "\n";
  std::cout << "leaf_blocks:";
  for (int b : t.leaf_blocks) std::cout << " " << b;
  std::cout << "\n";
  return kExitOk;
}

int cmd_enumerate(const Options& opt) {
  const Corpus& c = enumerate_graphs(opt.n);
  std::cout << ">>crlab-corpus order=" << c.order << " count=" << c.graphs.size()
            << " gen=" << c.source << "\n";
  for (const auto& g : c.graphs) std::cout << emit_graph6(g) << "\n";
  return kExitOk;
}

int cmd_classify_deck(const Graph& g, const Options& opt) {
  Corpus corpus = resolve_corpus(opt, g.order());
  auto verdict = connectedness_from_deck(dcr_invariant(g), corpus);
  switch (verdict) {
    case Connectedness::Connected: std::cout << "Connected\n"; break;
    case Connectedness::Disconnected: std::cout << "Disconnected\n"; break;
    case Connectedness::Unknown: std::cout << "Unknown\n"; break;
  }
  return kExitOk;
}

int cmd_deck_index(const Options& opt) {
  Corpus corpus = resolve_corpus(opt, opt.n);
  for (const auto& g : corpus.graphs) std::cout << deck_index_line(g) << "\n";
  return kExitOk;
}

int report_exit(const VerificationReport& r, const Options& opt, bool findings_matter) {
  std::cout << (opt.format == "structured" ? r.to_json() + "\n" : r.to_text());
  if (!r.pass()) return kExitAttention;
  if (findings_matter && !r.findings.empty()) return kExitAttention;
  return kExitOk;
}

int cmd_verify(const std::string& which, const Options& opt) {
  Corpus corpus = resolve_corpus(opt, opt.n);
  VerificationReport r;
  if (which == "main") r = verify_main_theorem(corpus, opt.jobs);
  else if (which == "harary") r = verify_harary(corpus, opt.jobs);
  else if (which == "hierarchy") r = verify_hierarchy(corpus, opt.jobs);
  else if (which == "little") r = verify_little_theorem(corpus, opt.jobs);
  else {
    std::cerr << "unknown experiment '" << which << "' (main|harary|hierarchy|little)\n";
    return kExitUsage;
  }
  return report_exit(r, opt, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crlab: color-refinement deck laboratory"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");
  app.add_option("--format", opt.format, "output format: text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--mode", opt.mode, "comparison mode: digest|exact")
      ->check(CLI::IsMember({"digest", "exact"}));
  app.add_option("--corpus", opt.corpus_path, "graph6 corpus file to use instead of enumeration");
  app.add_option("--guard-nodes", opt.guard_nodes, "unfolding node guard")
      ->check(CLI::PositiveNumber);

  std::string garg, harg, which;
  int root = 0;

  auto* c_refine = app.add_subcommand("refine", "stable coloring dump");
  c_refine->add_option("graph", garg)->required();

  auto* c_cr = app.add_subcommand("cr", "refinement invariant dump");
  c_cr->add_option("graph", garg)->required();

  auto* c_dcr = app.add_subcommand("dcr", "deck invariant dump");
  c_dcr->add_option("graph", garg)->required();

  auto* c_wl2 = app.add_subcommand("wl2", "pair-coloring invariant dump");
  c_wl2->add_option("graph", garg)->required();

  auto* c_compare = app.add_subcommand("compare", "iso / cr / dcr / wl2 / similar verdicts");
  c_compare->add_option("graph", garg)->required();
  c_compare->add_option("other", harg)->required();

  auto* c_deck = app.add_subcommand("deck", "emit all cards as graph6");
  c_deck->add_option("graph", garg)->required();

  auto* c_unfold = app.add_subcommand("unfold", "truncated universal cover as DOT");
  c_unfold->add_option("graph", garg)->required();
  c_unfold->add_option("root", root)->required();
  c_unfold->add_option("--depth", opt.depth, "truncation depth");

  auto* c_blockcut = app.add_subcommand("blockcut", "block-cut decomposition");
  c_blockcut->add_option("graph", garg)->required();

  auto* c_enumerate = app.add_subcommand("enumerate", "emit the corpus of one order");
  c_enumerate->add_option("--n", opt.n, "graph order")->required();

  auto* c_classify = app.add_subcommand("classify-deck", "connectedness from the deck invariant");
  c_classify->add_option("graph", garg)->required();

  auto* c_index = app.add_subcommand("deck-index", "emit deck-index records for a corpus");
  c_index->add_option("--n", opt.n, "graph order")->required();

  auto* c_verify = app.add_subcommand("verify", "run a corpus-scale verification");
  c_verify->add_option("experiment", which, "main|harary|hierarchy|little")->required();
  c_verify->add_option("--n", opt.n, "graph order")->required();

  auto* c_probe = app.add_subcommand("probe-openq", "search for dcr-equivalent, cr-inequivalent pairs");
  c_probe->add_option("--n", opt.n, "graph order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_refine) return cmd_refine(resolve_graph(garg));
    if (*c_cr) return cmd_cr(resolve_graph(garg));
    if (*c_dcr) return cmd_dcr(resolve_graph(garg));
    if (*c_wl2) return cmd_wl2(resolve_graph(garg));
    if (*c_compare) return cmd_compare(resolve_graph(garg), resolve_graph(harg), opt);
    if (*c_deck) return cmd_deck(resolve_graph(garg));
    if (*c_unfold) return cmd_unfold(resolve_graph(garg), root, opt);
    if (*c_blockcut) return cmd_blockcut(resolve_graph(garg));
    if (*c_enumerate) return cmd_enumerate(opt);
    if (*c_classify) return cmd_classify_deck(resolve_graph(garg), opt);
    if (*c_index) return cmd_deck_index(opt);
    if (*c_verify) return cmd_verify(which, opt);
    if (*c_probe) {
      Corpus corpus = resolve_corpus(opt, opt.n);
      return report_exit(probe_open_question(corpus, opt.jobs), opt, true);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAttention;
  }
  return kExitUsage;
}
