#pragma once

#include <cstdint>
#include <memory>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "infoclust/discrete_source.hpp"
#include "infoclust/gaussian_source.hpp"
#include "infoclust/hypergraph.hpp"
#include "infoclust/oracle.hpp"
#include "infoclust/psp.hpp"

namespace infoclust {

using Json = nlohmann::json;

/// { "variables": [{"name", "alphabet_size"}...],
///   "pmf": [{"outcome": [ints], "p": real}...], "log_base": real }
DiscreteSource parse_pmf_json(const std::string& text, std::optional<double> log_base = std::nullopt);

/// Header of m names, then m rows of m reals.
GaussianSource parse_covariance_csv(const std::string& text, std::optional<double> log_base = std::nullopt);

/// One edge per line: `<weight> <v1> [<v2> ...] [-> <head>]`. Blank lines
/// and text after '#' are ignored. Vertices are ordered numerically when
/// every name is an integer, otherwise by first appearance.
WeightedHypergraph parse_hypergraph(const std::string& text);

/// Header of variable names, then one row of reals per sample.
EmpiricalSource parse_samples_csv(const std::string& text, std::size_t bins, std::optional<double> log_base = std::nullopt);

/// { "variables": [names] | "size": m, "log_base": real,
///   "table": [2^m values indexed by bitmask] |
///   "values": [{"set": [elements], "value": real}...], "default": real }
/// Elements are 1-based indices or names.
TableSource parse_table_json(const std::string& text, std::vector<std::string>* names = nullptr,
                             std::optional<double> log_base = std::nullopt);

/// A source read from a file, with what the commands need to know about it.
struct LoadedSource {
  OraclePtr oracle;
  std::vector<std::string> names;
  std::string format;
  std::shared_ptr<const DiscreteSource> discrete;        // pmf and samples
  std::shared_ptr<const WeightedHypergraph> hypergraph;  // hypergraph
};

struct LoadOptions {
  std::optional<double> log_base;
  std::size_t bins = 8;
};

/// format is one of pmf, cov, hypergraph, samples, table.
LoadedSource load_source(const std::string& text, const std::string& format, const LoadOptions& options = {});

/// x rounded to 12 significant digits (the precision of every document).
double round_sig(double x, int digits = 12);

/// FNV-1a 64-bit hash, used to tag documents with their input.
std::uint64_t fnv1a(const std::string& data);

Json subset_to_json(const Subset& s, const std::vector<std::string>& names);
Subset subset_from_json(const Json& j, const std::vector<std::string>& names);

/// { "log_base", "variables", "critical_values", "psp", "clusters" } with
/// sets as lists of variable names.
Json solution_to_json(const ClusteringSolution& solution, const std::vector<std::string>& names);
ClusteringSolution solution_from_json(const Json& doc, std::vector<std::string>* names = nullptr);

/// Dendrogram: one node per chain level and one per cluster labelled with
/// its value; edges follow refinement.
std::string solution_to_dot(const ClusteringSolution& solution, const std::vector<std::string>& names);

}  // namespace infoclust
