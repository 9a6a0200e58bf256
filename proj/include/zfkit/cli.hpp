#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zfkit/catalog.hpp"
#include "zfkit/enumerate.hpp"
#include "zfkit/forcing.hpp"
#include "zfkit/graph_io.hpp"
#include "zfkit/structure.hpp"
#include "zfkit/verify.hpp"

namespace zfkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for invocations that parse but make no sense (two graph sources, bad --blue).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GraphSourceOptions {
  std::string graph6;
  std::string edges_path;
  std::string named;
  std::string stream_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph6", graph6, "graph6 record");
    cmd->add_option("--edges", edges_path, "edge-list file");
    cmd->add_option("--named", named, "catalog graph, NAME[:P1,P2]");
    cmd->add_option("--stream", stream_path, "file of graph6 records ('-' for stdin)");
  }

  int given() const {
    return !graph6.empty() + !edges_path.empty() + !named.empty() + !stream_path.empty();
  }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Graph> read_stream(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return read_graph6_stream(stdin_stream);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_graph6_stream(in);
}

/// The graphs named by exactly one source option.
inline std::vector<Graph> load_graphs(const GraphSourceOptions& src, std::istream& stdin_stream) {
  if (src.given() != 1) throw UsageError("give exactly one of --graph6, --edges, --named, --stream");
  if (!src.graph6.empty()) return {parse_graph6(src.graph6)};
  if (!src.edges_path.empty()) return {parse_edge_list(read_file(src.edges_path))};
  if (!src.named.empty()) return {named_graph(src.named)};
  return read_stream(src.stream_path, stdin_stream);
}

inline VertexSet parse_blue(const std::string& text, const Graph& g) {
  VertexSet s;
  if (text.empty()) return s;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw UsageError("--blue: bad vertex '" + tok + "'");
    if (v < 0 || v >= g.order()) throw UsageError("--blue: vertex " + tok + " outside the graph");
    s.insert(v);
  }
  return s;
}

inline nlohmann::ordered_json vertices_json(VertexSet s) { return s.to_vector(); }

inline nlohmann::ordered_json hit_json(const std::optional<PatternHit>& h) {
  if (!h) return nullptr;
  return h->vertices;
}

inline nlohmann::ordered_json closure_json(const Graph& g, VertexSet blue) {
  const ClosureResult c = closure(g, blue);
  nlohmann::ordered_json j;
  j["graph6"] = to_graph6(g);
  j["initial"] = vertices_json(blue);
  j["final"] = vertices_json(c.final_set);
  j["stalled_immediately"] = c.stalled_immediately;
  j["failed"] = c.final_set != g.vertices();
  j["trace"] = nlohmann::ordered_json::array();
  for (const Force& f : c.trace.steps) j["trace"].push_back({f.forcer, f.forced, f.round});
  return j;
}

inline nlohmann::ordered_json detect_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["graph6"] = to_graph6(g);
  const auto cherries = find_cherries(g);
  const auto modules = modules_of_order_2(g);
  j["cherry_count"] = cherries.size();
  j["cherries"] = nlohmann::ordered_json::array();
  for (const auto& h : cherries) j["cherries"].push_back(h.vertices);
  j["pendant_triangle"] = hit_json(has_pendant_triangle(g));
  j["pendant_v"] = hit_json(has_pendant_v(g));
  j["module2_count"] = modules.size();
  j["modules2"] = nlohmann::ordered_json::array();
  for (const auto& h : modules) j["modules2"].push_back(h.vertices);
  j["cut_vertices"] = vertices_json(cut_vertices(g));
  return j;
}

inline nlohmann::ordered_json classify_json(const Graph& g, bool exact) {
  const Prediction p = predict_F(g);
  nlohmann::ordered_json j;
  j["graph6"] = to_graph6(g);
  j["prediction"] = to_string(p.kind);
  if (p.kind == Prediction::Kind::compute)
    j["value"] = nullptr;
  else
    j["value"] = p.value;
  j["rule"] = p.rule;
  if (exact) {
    const int f = failed_zero_forcing_number(g);
    j["F"] = f;
    j["holds"] = prediction_holds(p, f);
  }
  return j;
}

/// Runs one invocation. Arguments exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"zfkit: zero forcing and failed zero forcing toolkit"};
  app.name("zfkit");
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output")->configurable(false);

  GraphSourceOptions src;
  auto per_graph = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    src.attach(cmd);
    cmd->add_flag("--pretty", pretty, "human-readable output");
    return cmd;
  };

  std::string blue;
  CLI::App* closure_cmd = per_graph("closure", "forcing closure of a blue set, with trace");
  closure_cmd->add_option("--blue", blue, "comma-separated blue vertices");
  CLI::App* zf_cmd = per_graph("zf", "zero forcing number Z(G)");
  CLI::App* fzf_cmd = per_graph("fzf", "failed zero forcing number F(G)");
  CLI::App* fort_cmd = per_graph("fort", "a minimum fort");
  CLI::App* detect_cmd = per_graph("detect", "structural patterns");
  bool exact = false;
  CLI::App* classify_cmd = per_graph("classify", "predict F from known characterizations");
  classify_cmd->add_flag("--exact", exact, "also compute F and check the prediction");
  bool connected = false;
  CLI::App* extend_cmd = per_graph("extend", "one-vertex extensions with their F");
  extend_cmd->add_flag("--connected", connected, "nonempty neighbourhoods only");

  int gap_n = 0;
  CLI::App* gap_cmd = app.add_subcommand("gap", "gap construction G, H of order n");
  gap_cmd->add_option("--n", gap_n, "order (>= 6)")->required();
  gap_cmd->add_flag("--pretty", pretty, "human-readable output");

  std::string campaign;
  std::optional<int> max_n;
  std::optional<int> order;
  std::string stream_path;
  std::string output_path;
  bool timing = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->add_option("campaign", campaign, "campaign name")->required();
  verify_cmd->add_option("--max-n", max_n, "largest order scanned");
  verify_cmd->add_option("--n", order, "single order (theorem21)");
  verify_cmd->add_option("--stream", stream_path, "graph6 file used instead of the internal generator");
  verify_cmd->add_option("--output", output_path, "write the report here instead of stdout");
  verify_cmd->add_flag("--timing", timing, "include runtime_seconds in the report");
  verify_cmd->add_flag("--pretty", pretty, "human-readable output");

  int enum_n = 0;
  bool enum_connected = false;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "all graphs of an order, as graph6 lines");
  enum_cmd->add_option("--n", enum_n, "order")->required();
  enum_cmd->add_flag("--connected", enum_connected, "connected graphs only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "zfkit: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    auto each_graph = [&](auto&& emit) {
      const auto graphs = load_graphs(src, in);
      for (const Graph& g : graphs) emit(g, graphs.size() > 1);
    };

    if (*closure_cmd) {
      each_graph([&](const Graph& g, bool) {
        const auto j = closure_json(g, parse_blue(blue, g));
        if (!pretty) {
          out << j.dump() << "\n";
          return;
        }
        VertexSet fin;
        for (const auto& v : j["final"]) fin.insert(v.get<int>());
        out << "final " << fin.to_string() << "\n" << (j["stalled_immediately"].get<bool>() ? "stalled\n" : "forcing\n");
        for (const auto& step : j["trace"])
          out << "  round " << step[2] << ": " << step[0] << " -> " << step[1] << "\n";
      });
    } else if (*zf_cmd || *fzf_cmd) {
      const bool failed = fzf_cmd->parsed();
      each_graph([&](const Graph& g, bool many) {
        const int value = failed ? failed_zero_forcing_number(g) : zero_forcing_number(g);
        if (many) out << to_graph6(g) << " ";
        if (pretty) out << (failed ? "F = " : "Z = ");
        out << value << "\n";
      });
    } else if (*fort_cmd) {
      each_graph([&](const Graph& g, bool) {
        const VertexSet t = min_fort(g);
        nlohmann::ordered_json j;
        j["graph6"] = to_graph6(g);
        j["size"] = t.size();
        j["fort"] = vertices_json(t);
        j["F"] = g.order() - t.size();
        out << (pretty ? j.dump(2) : j.dump()) << "\n";
      });
    } else if (*detect_cmd) {
      each_graph([&](const Graph& g, bool) {
        const auto j = detect_json(g);
        out << (pretty ? j.dump(2) : j.dump()) << "\n";
      });
    } else if (*classify_cmd) {
      each_graph([&](const Graph& g, bool) {
        const auto j = classify_json(g, exact);
        out << (pretty ? j.dump(2) : j.dump()) << "\n";
      });
    } else if (*extend_cmd) {
      each_graph([&](const Graph& g, bool) {
        nlohmann::ordered_json j;
        j["graph6"] = to_graph6(g);
        j["extensions"] = nlohmann::ordered_json::array();
        for (const Graph& x : one_vertex_extensions(g, connected))
          j["extensions"].push_back({{"graph6", to_graph6(x)}, {"F", failed_zero_forcing_number(x)}});
        j["count"] = j["extensions"].size();
        out << (pretty ? j.dump(2) : j.dump()) << "\n";
      });
    } else if (*gap_cmd) {
      if (gap_n < 6) throw UsageError("gap: --n must be at least 6");
      const CampaignReport r = gap_report(gap_n);
      out << (pretty ? to_pretty(r) : to_json(r).dump(2) + "\n");
    } else if (*verify_cmd) {
      CampaignParams params;
      params.max_n = max_n;
      params.order = order;
      if (!stream_path.empty()) params.source = GraphSource(read_stream(stream_path, in));
      const CampaignReport r = run_campaign(campaign, params);
      const std::string text = pretty ? to_pretty(r) : to_json(r, timing).dump(2) + "\n";
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + output_path + "'");
        file << text;
      }
      return r.ok() ? kExitOk : kExitDiscrepancy;
    } else if (*enum_cmd) {
      for (const Graph& g : graphs_of_order(enum_n, enum_connected)) out << to_graph6(g) << "\n";
    }
  } catch (const UsageError& e) {
    err << "zfkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "zfkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "zfkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "zfkit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace zfkit::cli
