#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "szeged/szeged.hpp"

namespace szeged::cli {

enum class Command { index, theta, quotient, gen, bench };
enum class MethodChoice { cut, direct, compare };
enum class PartitionSource { theta_star, direction_labels, file };
enum class OutputFormat { json, text };
enum class GenKind { benzenoid, phenylene, ph };
enum class BenchFamily { ph, benzenoid, both };

// Process exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParseError = 2;
inline constexpr int kDisconnected = 3;
inline constexpr int kInvalidCPartition = 4;
inline constexpr int kMismatch = 5;
inline constexpr int kBadMolecule = 6;

struct RunConfig {
  Command command = Command::index;
  std::string input = "-";  // "-" reads standard input
  MethodChoice method = MethodChoice::cut;
  PartitionSource partition = PartitionSource::theta_star;
  std::string partition_file;
  std::string labels_file;
  bool starred = false;
  OutputFormat format = OutputFormat::json;

  GenKind gen_kind = GenKind::ph;
  std::size_t gen_n = 2;
  std::string output;  // empty: standard output

  BenchFamily bench_family = BenchFamily::both;
  std::vector<std::size_t> bench_sizes{100, 1000, 10000};
  std::size_t bench_reps = 3;
  std::size_t bench_direct_max = 100;

  unsigned threads = 1;
};

namespace detail {

struct Input {
  std::unique_ptr<std::ifstream> file;
  std::istream* stream = nullptr;
};

inline Input open_input(const std::string& path, std::istream& stdin_stream) {
  Input in;
  if (path.empty() || path == "-") {
    in.stream = &stdin_stream;
    return in;
  }
  in.file = std::make_unique<std::ifstream>(path);
  if (!*in.file) throw ParseError("cannot open '" + path + "'");
  in.stream = in.file.get();
  return in;
}

struct LoadedGraph {
  Graph graph;
  bool nonstandard_region = false;  // the generator's `# nonstandard_region` marker
};

inline LoadedGraph read_graph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  LoadedGraph out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("# nonstandard_region", 0) == 0) out.nonstandard_region = true;
  }
  std::istringstream parse(text);
  out.graph = read_edge_list(parse);
  return out;
}

inline std::vector<std::size_t> read_labels_file(const std::string& path, std::size_t m) {
  if (path.empty()) throw ParseError("this partition source needs a label file");
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_edge_labels(in, m);
}

// Direction labels are trusted as a c-partition only after validation;
// partition files likewise.
inline EdgePartition load_partition(const RunConfig& cfg, const Graph& g) {
  switch (cfg.partition) {
    case PartitionSource::theta_star:
      return theta_star_partition(g);
    case PartitionSource::direction_labels:
      return certify_c_partition(g, EdgePartition::from_labels(read_labels_file(cfg.labels_file, g.edge_count())));
    case PartitionSource::file:
      return certify_c_partition(g, EdgePartition::from_labels(read_labels_file(cfg.partition_file, g.edge_count())));
  }
  return theta_star_partition(g);
}

inline void print_report(const RunConfig& cfg, const IndexReport& r, std::ostream& out) {
  if (cfg.format == OutputFormat::json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    write_text(out, r);
  }
}

inline int run_index(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  auto input = open_input(cfg.input, in);
  const auto [g, nonstandard] = read_graph(*input.stream);
  require_connected(g);
  if (cfg.method == MethodChoice::direct) {
    auto direct = weighted_suite_direct(g, cfg.starred);
    direct.nonstandard_region = nonstandard;
    print_report(cfg, direct, out);
    return kOk;
  }
  const auto p = load_partition(cfg, g);
  auto cut = weighted_suite_cut(g, p, cfg.starred);
  cut.nonstandard_region = nonstandard;
  if (cfg.method == MethodChoice::compare) {
    const auto direct = weighted_suite_direct(g, cfg.starred);
    if (!(direct.totals == cut.totals)) {
      std::ostringstream msg;
      msg << "mismatch: cut " << cut.totals << " vs direct " << direct.totals;
      err << "error: " << msg.str() << '\n';
      return kMismatch;
    }
  }
  print_report(cfg, cut, out);
  return kOk;
}

inline int run_theta(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  auto input = open_input(cfg.input, in);
  const Graph g = read_edge_list(*input.stream);
  write_classes(out, g, theta_star_partition(g));
  return kOk;
}

inline int run_quotient(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  auto input = open_input(cfg.input, in);
  const Graph g = read_edge_list(*input.stream);
  require_connected(g);
  const auto p = load_partition(cfg, g);
  const auto qs = quotients_for(g, degree_weights(g, cfg.starred), p);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto& q = qs[i];
    out << "quotient " << i << " class_edges " << p.members(i).size() << " vertices "
        << q.graph().vertex_count() << " edges " << q.graph().edge_count() << '\n';
    out << "# v <component> <w> <lambda>\n";
    for (std::size_t c = 0; c < q.component_count(); ++c) {
      out << "v " << c << ' ' << q.w()[c] << ' ' << q.lambda()[c] << '\n';
    }
    out << "# e <U> <V> <lambda'> <w'>\n";
    for (EdgeId e = 0; e < q.graph().edge_count(); ++e) {
      const Edge& qe = q.graph().edge(e);
      out << "e " << qe.u << ' ' << qe.v << ' ' << q.lambda_edge()[e] << ' ' << q.w_edge()[e]
          << '\n';
    }
  }
  return kOk;
}

inline int run_gen(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  DirectionLabeledGraph mol;
  if (cfg.gen_kind == GenKind::ph) {
    mol = linear_phenylene(cfg.gen_n);
  } else {
    auto input = open_input(cfg.input, in);
    const HexSpec spec = read_hex_spec(*input.stream);
    mol = cfg.gen_kind == GenKind::benzenoid ? build_benzenoid(spec) : build_phenylene(spec);
  }

  std::string labels_path = cfg.labels_file;
  if (labels_path.empty() && !cfg.output.empty()) labels_path = cfg.output + ".labels";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw Error("cannot write '" + cfg.output + "'");
    sink = &file;
  }
  if (mol.nonstandard_region) *sink << "# nonstandard_region\n";
  write_edge_list(*sink, mol.graph);

  if (!labels_path.empty()) {
    std::ofstream labels(labels_path);
    if (!labels) throw Error("cannot write '" + labels_path + "'");
    write_edge_labels(labels, mol.labels());
  }
  return kOk;
}

template <typename Fn>
double median_seconds(std::size_t reps, Fn&& fn) {
  std::vector<double> times;
  for (std::size_t i = 0; i < std::max<std::size_t>(reps, 1); ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

inline int run_bench(const RunConfig& cfg, std::ostream& out) {
  out << "family,hexagons,vertices,edges,method,median_seconds\n";
  auto sweep = [&](const char* family, auto make) {
    for (std::size_t n : cfg.bench_sizes) {
      const DirectionLabeledGraph mol = make(n);
      const auto p = mol.partition();
      const double cut = median_seconds(cfg.bench_reps, [&] { weighted_suite_cut(mol.graph, p, cfg.starred); });
      out << family << ',' << n << ',' << mol.graph.vertex_count() << ',' << mol.graph.edge_count()
          << ",cut," << cut << '\n';
      if (n <= cfg.bench_direct_max) {
        const double direct =
            median_seconds(cfg.bench_reps, [&] { weighted_suite_direct(mol.graph, cfg.starred); });
        out << family << ',' << n << ',' << mol.graph.vertex_count() << ','
            << mol.graph.edge_count() << ",direct," << direct << '\n';
      }
    }
  };
  if (cfg.bench_family != BenchFamily::benzenoid) sweep("ph", [](std::size_t n) { return linear_phenylene(n); });
  if (cfg.bench_family != BenchFamily::ph) sweep("benzenoid", [](std::size_t n) { return linear_benzenoid(n); });
  return kOk;
}

}  // namespace detail

// Runs one command. Reports go to `out`, diagnostics to `err`; the return
// value is the process exit status.
inline int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  set_thread_limit(cfg.threads);
  try {
    switch (cfg.command) {
      case Command::index: return detail::run_index(cfg, in, out, err);
      case Command::theta: return detail::run_theta(cfg, in, out);
      case Command::quotient: return detail::run_quotient(cfg, in, out);
      case Command::gen: return detail::run_gen(cfg, in, out);
      case Command::bench: return detail::run_bench(cfg, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Disconnected& e) {
    err << "disconnected graph: " << e.what() << '\n';
    return kDisconnected;
  } catch (const InvalidCPartition& e) {
    err << "invalid c-partition: " << e.what() << '\n';
    return kInvalidCPartition;
  } catch (const PartitionNotCovering& e) {
    err << "invalid c-partition: " << e.what() << '\n';
    return kInvalidCPartition;
  } catch (const DisconnectedCells& e) {
    err << "invalid hex spec: " << e.what() << '\n';
    return kBadMolecule;
  } catch (const DuplicateCell& e) {
    err << "invalid hex spec: " << e.what() << '\n';
    return kBadMolecule;
  } catch (const NotCatacondensed& e) {
    err << "invalid hex spec: " << e.what() << '\n';
    return kBadMolecule;
  } catch (const CellsNotTree& e) {
    err << "invalid hex spec: " << e.what() << '\n';
    return kBadMolecule;
  } catch (const NTooSmall& e) {
    err << "invalid size: " << e.what() << '\n';
    return kBadMolecule;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace szeged::cli
