#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

using szeged::cli::BenchFamily;
using szeged::cli::Command;
using szeged::cli::GenKind;
using szeged::cli::MethodChoice;
using szeged::cli::OutputFormat;
using szeged::cli::PartitionSource;
using szeged::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Weighted Szeged and PI indices by the quotient-graph cut method"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "Maximum worker threads")->check(CLI::PositiveNumber);

  const std::map<std::string, MethodChoice> methods{
      {"cut", MethodChoice::cut}, {"direct", MethodChoice::direct}, {"compare", MethodChoice::compare}};
  const std::map<std::string, PartitionSource> sources{
      {"theta-star", PartitionSource::theta_star},
      {"direction-labels", PartitionSource::direction_labels},
      {"file", PartitionSource::file}};
  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json},
                                                    {"text", OutputFormat::text}};

  auto add_partition_options = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Edge-list file ('-' for stdin)");
    sub->add_option("--partition", cfg.partition, "theta-star | direction-labels | file")
        ->transform(CLI::CheckedTransformer(sources, CLI::ignore_case));
    sub->add_option("--partition-file", cfg.partition_file, "`edge_id class_id` lines");
    sub->add_option("--labels", cfg.labels_file, "Direction-label sidecar (`edge_id label` lines)");
    sub->add_flag("--starred", cfg.starred, "Use deg(u)*deg(v) instead of deg(u)+deg(v)");
  };

  auto* index = app.add_subcommand("index", "Compute wSz, wPI_v, wSz_e and wPI");
  add_partition_options(index);
  index->add_option("--method", cfg.method, "cut | direct | compare")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  index->add_option("--format", cfg.format, "json | text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  index->callback([&] { cfg.command = Command::index; });

  auto* theta = app.add_subcommand("theta", "Print Theta*-classes, one per line");
  theta->add_option("input", cfg.input, "Edge-list file ('-' for stdin)");
  theta->callback([&] { cfg.command = Command::theta; });

  auto* quotient = app.add_subcommand("quotient", "Print weighted quotient graphs");
  add_partition_options(quotient);
  quotient->callback([&] { cfg.command = Command::quotient; });

  auto* gen = app.add_subcommand("gen", "Generate molecular graphs");
  gen->require_subcommand(1);
  auto add_gen_outputs = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Edge-list output (default stdout)");
    sub->add_option("--labels", cfg.labels_file, "Direction-label output (default <output>.labels)");
  };
  auto* gen_benz = gen->add_subcommand("benzenoid", "Benzenoid system from a hex spec");
  gen_benz->add_option("spec", cfg.input, "Hex-spec file ('-' for stdin)")->required();
  add_gen_outputs(gen_benz);
  gen_benz->callback([&] { cfg.command = Command::gen; cfg.gen_kind = GenKind::benzenoid; });
  auto* gen_phen = gen->add_subcommand("phenylene", "Phenylene from a catacondensed hex spec");
  gen_phen->add_option("spec", cfg.input, "Hex-spec file ('-' for stdin)")->required();
  add_gen_outputs(gen_phen);
  gen_phen->callback([&] { cfg.command = Command::gen; cfg.gen_kind = GenKind::phenylene; });
  auto* gen_ph = gen->add_subcommand("ph", "Linear phenylene PH_n");
  gen_ph->add_option("n", cfg.gen_n, "Number of hexagons (>= 2)")->required();
  add_gen_outputs(gen_ph);
  gen_ph->callback([&] { cfg.command = Command::gen; cfg.gen_kind = GenKind::ph; });

  const std::map<std::string, BenchFamily> families{
      {"ph", BenchFamily::ph}, {"benzenoid", BenchFamily::benzenoid}, {"both", BenchFamily::both}};
  auto* bench = app.add_subcommand("bench", "Time cut vs direct over a size sweep (CSV)");
  bench->add_option("--family", cfg.bench_family, "ph | benzenoid | both")
      ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
  bench->add_option("--sizes", cfg.bench_sizes, "Hexagon counts")->delimiter(',');
  bench->add_option("--reps", cfg.bench_reps, "Repetitions per size (median reported)");
  bench->add_option("--direct-max", cfg.bench_direct_max, "Largest size also timed with the direct method");
  bench->add_flag("--starred", cfg.starred, "Use the starred indices");
  bench->callback([&] { cfg.command = Command::bench; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : szeged::cli::kParseError;
  }
  return szeged::cli::run(cfg, std::cin, std::cout, std::cerr);
}
