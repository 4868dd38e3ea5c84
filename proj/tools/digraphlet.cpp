// Copyright 2026 The digraphlet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// digraphlet: directed graphlet signatures, correlation matrices, cohort
// statistics, direction randomization, pruning and clustering.
//
// Exit codes: 0 ok, 1 usage, 2 input error, 3 internal invariant violation.
// DIGRAPHLET_WORKERS sets the worker count (default: OpenMP's choice).

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "digraphlet/census.hpp"
#include "digraphlet/cluster.hpp"
#include "digraphlet/correlation.hpp"
#include "digraphlet/errors.hpp"
#include "digraphlet/io.hpp"
#include "digraphlet/null_model.hpp"
#include "digraphlet/oracle.hpp"
#include "digraphlet/prune.hpp"
#include "digraphlet/report.hpp"
#include "digraphlet/signature.hpp"
#include "digraphlet/svg.hpp"

namespace fs = std::filesystem;
using namespace digraphlet;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct RunConfig {
  std::string input;
  std::string out_dir;  // empty: primary output to stdout
  double theta = kDefaultTheta;
  std::uint64_t seed = 0;
  bool normalized = false;
  bool spearman = false;
  bool standardize = true;
  bool oracle_check = false;
  bool raw = false;
  bool from_signatures = false;
  std::string format = "csv";
  std::size_t clusters = 0;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::string degree = "total";
  bool signed_weights = false;
  int workers = 0;
};

int workers_from_env() {
  const char* env = std::getenv("DIGRAPHLET_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096)
    throw std::invalid_argument(std::string("DIGRAPHLET_WORKERS must be a positive integer, got '") +
                                env + "'");
  return static_cast<int>(v);
}

void require_file(const std::string& path) {
  if (!fs::is_regular_file(path)) throw InputError("input file not found: " + path);
}

// Writes to out_dir/name, or to stdout when no directory was given.
class Sink {
 public:
  explicit Sink(const RunConfig& cfg) : dir_(cfg.out_dir) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }
  bool to_stdout() const { return dir_.empty(); }
  void write(const std::string& name, const std::string& text) const {
    if (dir_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(fs::path(dir_) / name, std::ios::binary);
    f << text;
    if (!f) throw InputError("cannot write " + (fs::path(dir_) / name).string());
  }
  void write_file_only(const std::string& name, const std::string& text) const {
    if (!dir_.empty()) write(name, text);
  }

 private:
  std::string dir_;
};

DirectedGraph load_graph(const std::string& path) {
  require_file(path);
  auto loaded = load_edge_list(path);
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
  return std::move(loaded.graph);
}

template <typename Fn>
std::string to_text(Fn&& fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

FeatureMatrix signature_features(const DirectedGraph& g, const RunConfig& cfg) {
  auto sig = aggregate(raw_census(g, cfg.workers), g.labels());
  return cfg.normalized ? normalize(sig).features() : sig.features();
}

CorrelationMethod method(const RunConfig& cfg) {
  return cfg.spearman ? CorrelationMethod::Spearman : CorrelationMethod::Pearson;
}

int cmd_census(const RunConfig& cfg) {
  const DirectedGraph g = load_graph(cfg.input);
  const RawCensus census = raw_census(g, cfg.workers);
  check_census_invariants(g, census);
  if (cfg.oracle_check) {
    auto mismatches = diff_census(oracle_census(g, cfg.oracle_cap), census);
    if (!mismatches.empty()) {
      std::ostringstream msg;
      msg << "census disagrees with oracle:";
      for (const auto& m : mismatches)
        msg << "\n  vertex " << g.label(static_cast<VertexId>(m.vertex)) << " " << m.quantity
            << ": oracle " << m.expected << ", census " << m.actual;
      throw InvariantError(msg.str());
    }
    std::cerr << "oracle check passed (" << g.num_vertices() << " vertices)\n";
  }

  const Sink sink(cfg);
  const bool json = cfg.format == "json";
  const SignatureMatrix sig = aggregate(census, g.labels());
  std::string main_text;
  if (cfg.normalized) {
    auto norm = normalize(sig);
    main_text = json ? dump(normalized_json(norm)) : to_text([&](auto& s) { write_normalized_csv(s, norm); });
  } else {
    main_text = json ? dump(signature_json(sig)) : to_text([&](auto& s) { write_signature_csv(s, sig); });
  }
  std::string raw_text;
  if (cfg.raw)
    raw_text = json ? dump(raw_census_json(census, g.labels()))
                    : to_text([&](auto& s) { write_raw_census_csv(s, census, g.labels()); });

  const std::string ext = json ? ".json" : ".csv";
  if (sink.to_stdout()) {
    std::cout << (cfg.raw ? raw_text : main_text);
  } else {
    sink.write(std::string(cfg.normalized ? "normalized_signatures" : "signatures") + ext, main_text);
    if (cfg.raw) sink.write("raw_census" + ext, raw_text);
  }
  return 0;
}

FeatureMatrix load_features(const std::string& path) {
  require_file(path);
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file: " + path);
  return parse_feature_csv(in, path);
}

int cmd_gcm(const RunConfig& cfg) {
  const FeatureMatrix features =
      cfg.from_signatures ? load_features(cfg.input) : signature_features(load_graph(cfg.input), cfg);
  if (features.rows() < 3)
    throw InputError(cfg.input + ": correlation needs at least 3 vertices, got " +
                     std::to_string(features.rows()));
  const CorrelationMatrix m = correlation_matrix(features, method(cfg));
  const SignificanceMask mask = significance_mask(m, cfg.theta);
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (m.constant_column[c]) std::cerr << "warning: constant column " << m.names[c] << '\n';

  const Sink sink(cfg);
  if (cfg.format == "json") {
    sink.write("gcm.json", dump(correlation_json(m, mask)));
  } else {
    sink.write("gcm.csv", to_text([&](auto& s) { write_square_csv(s, m.names, m.r); }));
    sink.write_file_only("mask.csv", to_text([&](auto& s) { write_mask_csv(s, mask); }));
  }
  sink.write_file_only("heatmap.svg", render_correlation_svg(m, cfg.theta));
  return 0;
}

int cmd_cohort(const RunConfig& cfg) {
  if (!fs::is_directory(cfg.input)) throw InputError("not a directory: " + cfg.input);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cfg.input))
    if (e.path().filename().string().front() != '.' && !e.is_directory()) files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  if (files.empty()) throw InputError("no subject files in " + cfg.input);

  const auto count = static_cast<std::int64_t>(files.size());
  std::vector<CorrelationMatrix> subjects(files.size());
  std::vector<std::string> errors(files.size());
  const int threads = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      auto loaded = load_edge_list(files[idx]);
      RunConfig one = cfg;
      one.workers = 1;
      auto features = signature_features(loaded.graph, one);
      if (features.rows() < 3) throw InputError("fewer than 3 vertices");
      subjects[idx] = correlation_matrix(features, method(cfg));
    } catch (const std::exception& e) {
      errors[idx] = files[idx].string() + ": " + e.what();
    }
  }
  std::string failed;
  for (const auto& e : errors)
    if (!e.empty()) failed += "\n  " + e;
  if (!failed.empty()) throw InputError("cannot process subject files:" + failed);

  const CohortStats stats = cohort_stats(subjects, cfg.theta);
  std::vector<std::string> names;
  for (const auto& f : files) names.push_back(f.filename().string());

  const Sink sink(cfg);
  if (cfg.format == "json") {
    sink.write("cohort.json", dump(cohort_json(stats, names)));
  } else {
    std::string listing;
    for (const auto& n : names) listing += n + "\n";
    if (sink.to_stdout()) {
      std::cout << "# positive percent (r > " << format_number(cfg.theta) << "), " << stats.subjects
                << " subjects\n";
      write_square_csv(std::cout, stats.names, stats.pos_pct);
      std::cout << "# negative percent (r < -" << format_number(cfg.theta) << ")\n";
      write_square_csv(std::cout, stats.names, stats.neg_pct);
    } else {
      sink.write("pos_pct.csv", to_text([&](auto& s) { write_square_csv(s, stats.names, stats.pos_pct); }));
      sink.write("neg_pct.csv", to_text([&](auto& s) { write_square_csv(s, stats.names, stats.neg_pct); }));
      sink.write("subjects.txt", listing);
    }
  }
  sink.write_file_only("cohort.svg", render_cohort_svg(stats));
  return 0;
}

int cmd_randomize(const RunConfig& cfg) {
  const DirectedGraph g = load_graph(cfg.input);
  Sink(cfg).write("randomized.edgelist", serialize_edge_list(randomize_directions(g, cfg.seed)));
  return 0;
}

int cmd_prune(const RunConfig& cfg) {
  require_file(cfg.input);
  const WeightedMatrix w = load_weighted_matrix(cfg.input);
  PruneOptions opts;
  opts.use_magnitude = !cfg.signed_weights;
  opts.degree = cfg.degree == "in"    ? DegreeCriterion::In
                : cfg.degree == "out" ? DegreeCriterion::Out
                                      : DegreeCriterion::Total;
  const PruneResult r = prune_weighted(w, opts);
  // Round-trip precision: the threshold sits one ulp below a weight level.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", r.threshold);
  const std::string t = buf;
  std::cerr << "threshold " << t << ": " << r.graph.num_edges() << " connected pairs ("
            << r.graph.num_arcs() << " arcs, " << r.graph.num_reciprocal() << " reciprocal)\n";
  const Sink sink(cfg);
  sink.write("pruned.edgelist", "# threshold=" + t + "\n" + serialize_edge_list(r.graph));
  sink.write_file_only("threshold.txt", t + "\n");
  return 0;
}

int cmd_cluster(const RunConfig& cfg) {
  const FeatureMatrix features = load_features(cfg.input);
  if (features.rows() < 2) throw InputError(cfg.input + ": clustering needs at least 2 rows");
  if (cfg.clusters > features.rows())
    throw std::invalid_argument("--clusters exceeds the number of rows");
  const Dendrogram d = ward_cluster(features, cfg.standardize);

  const Sink sink(cfg);
  if (cfg.format == "json") {
    auto j = dendrogram_json(d);
    if (cfg.clusters > 0) j["clusters"] = d.cut(cfg.clusters);
    sink.write("dendrogram.json", dump(j));
    return 0;
  }
  std::vector<std::size_t> membership;
  if (cfg.clusters > 0) membership = d.cut(cfg.clusters);
  std::string order;
  for (std::size_t leaf : d.leaf_order()) {
    order += d.labels[leaf];
    if (!membership.empty()) order += "\t" + std::to_string(membership[leaf]);
    order += '\n';
  }
  if (sink.to_stdout()) {
    std::cout << d.newick() << '\n' << order;
  } else {
    sink.write("dendrogram.nwk", d.newick() + "\n");
    sink.write("leaf_order.txt", order);
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  const DirectedGraph g = load_graph(cfg.input);
  const RawCensus census = oracle_census(g, cfg.oracle_cap);
  const bool json = cfg.format == "json";
  Sink(cfg).write(json ? "oracle_census.json" : "oracle_census.csv",
                  json ? dump(raw_census_json(census, g.labels()))
                       : to_text([&](auto& s) { write_raw_census_csv(s, census, g.labels()); }));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed graphlet signatures and graphlet correlation analysis"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto theta_check = CLI::Validator(
      [](std::string& s) -> std::string {
        double v = std::stod(s);
        return v > 0.0 && v < 1.0 ? "" : "theta must lie strictly between 0 and 1";
      },
      "(0,1)");
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_dir, "Output directory (default: primary output to stdout)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_signature_flags = [&](CLI::App* sub) {
    sub->add_flag("--normalized", cfg.normalized, "Use block-normalized signatures");
    sub->add_flag("--spearman", cfg.spearman, "Rank (Spearman) instead of Pearson correlation");
    sub->add_option("--theta", cfg.theta, "Significance threshold")->check(theta_check);
  };

  auto* census = app.add_subcommand("census", "Per-vertex 16-class signature vectors");
  census->add_option("edgelist", cfg.input, "Edge list")->required();
  census->add_flag("--raw", cfg.raw, "Also emit the 39 raw quantities");
  census->add_flag("--normalized", cfg.normalized, "Emit block-normalized signatures");
  census->add_flag("--oracle-check", cfg.oracle_check, "Verify against the brute-force oracle");
  census->add_option("--oracle-cap", cfg.oracle_cap, "Vertex cap for the oracle");
  add_format(census);
  add_out(census);

  auto* gcm = app.add_subcommand("gcm", "Graphlet correlation matrix, mask and heat-map");
  gcm->add_option("input", cfg.input, "Edge list (or signature CSV with --from-signatures)")->required();
  gcm->add_flag("--from-signatures", cfg.from_signatures, "Input is a signature CSV");
  add_signature_flags(gcm);
  add_format(gcm);
  add_out(gcm);

  auto* cohort = app.add_subcommand("cohort", "Significance percentages over a directory of edge lists");
  cohort->add_option("directory", cfg.input, "Directory of edge lists")->required();
  add_signature_flags(cohort);
  add_format(cohort);
  add_out(cohort);

  auto* randomize = app.add_subcommand("randomize", "Resample every edge direction uniformly");
  randomize->add_option("edgelist", cfg.input, "Edge list")->required();
  randomize->add_option("--seed", cfg.seed, "Random seed");
  add_out(randomize);

  auto* prune = app.add_subcommand("prune", "Threshold a weighted connectivity matrix");
  prune->add_option("matrix", cfg.input, "Weighted matrix CSV")->required();
  prune->add_option("--degree", cfg.degree, "Degree used by the minimum-degree criterion")
      ->check(CLI::IsMember({"total", "in", "out"}));
  prune->add_flag("--signed", cfg.signed_weights, "Threshold signed weights instead of |w|");
  add_out(prune);

  auto* cluster = app.add_subcommand("cluster", "Ward clustering of signature rows");
  cluster->add_option("signatures", cfg.input, "Signature CSV")->required();
  cluster->add_flag("--standardize,!--no-standardize", cfg.standardize,
                    "Z-score columns before clustering (default on)");
  cluster->add_option("--clusters", cfg.clusters, "Also report a flat cut into K clusters");
  add_format(cluster);
  add_out(cluster);

  auto* oracle = app.add_subcommand("oracle", "Brute-force raw census (verification)");
  oracle->add_option("edgelist", cfg.input, "Edge list")->required();
  oracle->add_option("--cap", cfg.oracle_cap, "Vertex cap");
  add_format(oracle);
  add_out(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.workers = workers_from_env();
    if (census->parsed()) return cmd_census(cfg);
    if (gcm->parsed()) return cmd_gcm(cfg);
    if (cohort->parsed()) return cmd_cohort(cfg);
    if (randomize->parsed()) return cmd_randomize(cfg);
    if (prune->parsed()) return cmd_prune(cfg);
    if (cluster->parsed()) return cmd_cluster(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}
