#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cwchordal/cwchordal.hpp"

namespace {

using namespace cwc;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Graph read_graph(const std::string& path) {
  auto gs = parse_graph_file(read_file(path));
  if (gs.size() != 1) throw UsageError(path + " holds " + std::to_string(gs.size()) + " graphs, expected one");
  return gs.front();
}

// A catalog name, or graph6 text when no catalog entry matches.
Graph resolve_graph_arg(const std::string& arg) {
  try {
    return catalog_lookup(arg);
  } catch (const UnknownGraphName& unknown) {
    try {
      return parse_graph6(arg);
    } catch (const ParseError&) {
      throw unknown;
    }
  }
}

// Accepts a bare expression or a build report ("expr <term>" line).
CwExpr read_expr(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("expr ", 0) == 0) return parse_expr(line.substr(5));
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return parse_expr(text);
}

std::string witness_text(const std::vector<Vertex>& w) {
  if (w.empty()) return "";
  std::string out = " witness=";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-width toolkit for chordal graph classes"};
  app.require_subcommand(1);

  std::string host, h_arg;
  auto* classify = app.add_subcommand("classify", "Boundedness verdict for H-free graphs in a host class");
  // "--h" names the forbidden graph, so help is long-form only here
  classify->set_help_flag("--help", "Print this help message and exit");
  classify->add_option("--host", host, "chordal, weakly-chordal or split")
      ->required()
      ->check(CLI::IsMember({"chordal", "weakly-chordal", "split"}));
  classify->add_option("--h", h_arg, "catalog name or graph6")->required();

  std::string method = "auto", in_path, out_path;
  auto* build = app.add_subcommand("build", "Build a clique-width expression");
  build->add_option("--method", method)->check(
      CLI::IsMember({"auto", "forest", "kweb", "spider", "dh", "cliquetree", "bullfree", "cochair", "cograph",
                     "maxdeg2", "trivial"}));
  build->add_option("--in", in_path, "graph file")->required();
  build->add_option("--out", out_path, "report file (default stdout)");

  std::string graph_path, expr_path;
  auto* verify = app.add_subcommand("verify", "Check that an expression evaluates to a graph");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--expr", expr_path, "expression or build report")->required();

  int max_k = 0;
  bool show_witness = false;
  auto* exact = app.add_subcommand("exactcw", "Exact clique-width for graphs with at most 12 vertices");
  exact->add_option("--graph", graph_path)->required();
  exact->add_option("--max-k", max_k)->required()->check(CLI::PositiveNumber);
  exact->add_flag("--witness", show_witness, "also print a witness expression");

  std::string model, forbidden, format = "graph6";
  int n = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a random graph");
  gen->add_option("--model", model)->required()->check(CLI::IsMember({"chordal", "split", "hfree-chordal"}));
  gen->add_option("--n", n)->required()->check(CLI::Range(0, kMaxVertices));
  gen->add_option("--seed", seed)->required();
  gen->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--forbidden", forbidden, "catalog name (hfree-chordal)");
  gen->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges"}));
  gen->add_option("--out", out_path);

  std::string theorem;
  auto* decompose = app.add_subcommand("decompose", "Structural decomposition certificate");
  decompose->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"cok13-2p1"}));
  decompose->add_option("--graph", graph_path)->required();
  decompose->add_option("--out", out_path);

  bool list = false;
  std::string name;
  auto* catalog = app.add_subcommand("catalog", "Named graphs");
  auto* list_opt = catalog->add_flag("--list", list);
  auto* name_opt = catalog->add_option("--name", name);
  list_opt->excludes(name_opt);
  catalog->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (classify->parsed()) {
      Graph h = resolve_graph_arg(h_arg);
      ClassificationVerdict v = host == "chordal"  ? classify_chordal(h)
                                : host == "split" ? classify_split(h)
                                                  : classify_weakly_chordal(h);
      std::cout << format_verdict(v) << '\n';
      return kOk;
    }
    if (build->parsed()) {
      Graph g = read_graph(in_path);
      BuildReport r = method == "auto" ? build_auto(g) : build_with(method, g);
      write_output(out_path, serialize(r));
      return kOk;
    }
    if (verify->parsed()) {
      Graph g = read_graph(graph_path);
      CwExpr e = read_expr(expr_path);
      bool ok = false;
      try {
        ok = validate(e, g);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
      std::cout << (ok ? "valid width=" + std::to_string(width(e)) : std::string("invalid")) << '\n';
      return ok ? kOk : kNegative;
    }
    if (exact->parsed()) {
      Graph g = read_graph(graph_path);
      ExactCwResult r = exact_cw(g, max_k);
      if (!r.cw) {
        std::cout << "> " << max_k << '\n';
        return kNegative;
      }
      std::cout << *r.cw << '\n';
      if (show_witness) std::cout << serialize(*r.witness) << '\n';
      return kOk;
    }
    if (gen->parsed()) {
      GenSpec spec;
      spec.model = model == "chordal" ? GenModel::Chordal : model == "split" ? GenModel::Split : GenModel::HFreeChordal;
      spec.n = n;
      spec.density = density;
      spec.seed = seed;
      if (!forbidden.empty()) spec.forbidden = forbidden;
      if (spec.model == GenModel::HFreeChordal && !spec.forbidden) throw UsageError("hfree-chordal needs --forbidden");
      auto g = generate(spec);
      if (!g) {
        std::cerr << "no graph found within " << kRejectionBudget << " attempts\n";
        return kNegative;
      }
      write_output(out_path, format == "edges" ? write_edge_list(*g) : write_graph6(*g) + "\n");
      return kOk;
    }
    if (decompose->parsed()) {
      Graph g = read_graph(graph_path);
      DecompositionCertificate c = decompose_cok13_2p1(g);
      if (!verify_certificate(g, c)) {
        std::cerr << "certificate failed replay\n";
        return kNegative;
      }
      write_output(out_path, serialize(c));
      return kOk;
    }
    if (catalog->parsed()) {
      if (list) {
        for (const auto& e : catalog_entries()) {
          std::cout << e.name;
          for (const auto& a : e.aliases) std::cout << ' ' << a;
          std::cout << '\n';
        }
        return kOk;
      }
      Graph g = catalog_lookup(name);
      std::cout << write_graph6(g) << '\n' << write_edge_list(g);
      return kOk;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << witness_text(e.witness()) << '\n';
    return kNegative;
  } catch (const ClaimViolation& e) {
    std::cerr << e.what() << witness_text(e.witness()) << '\n';
    return kNegative;
  } catch (const UnknownGraphName& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
