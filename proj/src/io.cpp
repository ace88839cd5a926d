#include "infoclust/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "infoclust/error.hpp"

namespace infoclust {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string at_line(std::size_t line, const std::string& what) { return "line " + std::to_string(line) + ": " + what; }

std::optional<double> parse_real(const std::string& token) {
  if (token.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::uint64_t> parse_index(const std::string& token) {
  std::uint64_t v = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto r = std::from_chars(first, last, v);
  if (token.empty() || r.ec != std::errc() || r.ptr != last) return std::nullopt;
  return v;
}

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> cells;
};

/// Non-blank lines split on commas, cells trimmed.
std::vector<CsvRow> read_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (trim(raw).empty()) continue;
    CsvRow row{line, {}};
    std::size_t start = 0;
    while (true) {
      const auto comma = raw.find(',', start);
      row.cells.push_back(trim(std::string_view(raw).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> read_header(const CsvRow& row) {
  std::vector<std::string> names = row.cells;
  for (const auto& n : names) {
    if (n.empty()) throw InputError(at_line(row.line, "empty variable name in header"));
  }
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError(at_line(row.line, "duplicate variable name in header"));
  }
  return names;
}

std::vector<double> read_reals(const CsvRow& row, std::size_t expected) {
  if (row.cells.size() != expected) {
    throw InputError(at_line(row.line, "expected " + std::to_string(expected) + " values, found " +
                                           std::to_string(row.cells.size())));
  }
  std::vector<double> out;
  for (const auto& c : row.cells) {
    const auto v = parse_real(c);
    if (!v) throw InputError(at_line(row.line, "not a finite number: '" + c + "'"));
    out.push_back(*v);
  }
  return out;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

template <typename F>
auto json_field(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

std::vector<std::string> default_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back(std::to_string(i + 1));
  return names;
}

double check_log_base(double b) {
  if (!(b > 0.0) || b == 1.0 || !std::isfinite(b)) throw InputError("log base must be positive and not 1");
  return b;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string named_set(const Subset& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ",") + names.at(i);
    first = false;
  });
  return out + "}";
}

}  // namespace

DiscreteSource parse_pmf_json(const std::string& text, std::optional<double> log_base) {
  const Json doc = parse_json(text, "pmf JSON");
  return json_field("pmf JSON", [&] {
    if (!doc.is_object()) throw InputError("pmf JSON: top level must be an object");
    std::vector<std::size_t> alphabet;
    std::vector<std::string> names;
    for (const auto& v : doc.at("variables")) {
      names.push_back(v.contains("name") ? v.at("name").get<std::string>() : std::to_string(names.size() + 1));
      const auto a = v.at("alphabet_size").get<std::int64_t>();
      if (a < 1) throw InputError("pmf JSON: alphabet_size must be positive for " + names.back());
      alphabet.push_back(static_cast<std::size_t>(a));
    }
    std::vector<PmfEntry> pmf;
    std::size_t k = 0;
    for (const auto& e : doc.at("pmf")) {
      PmfEntry entry;
      for (const auto& z : e.at("outcome")) {
        const auto zi = z.get<std::int64_t>();
        if (zi < 0) throw InputError("pmf JSON: negative outcome in entry " + std::to_string(k));
        entry.outcome.push_back(static_cast<std::size_t>(zi));
      }
      entry.p = e.at("p").get<double>();
      pmf.push_back(std::move(entry));
      ++k;
    }
    const double base = check_log_base(log_base ? *log_base : doc.value("log_base", 2.0));
    return DiscreteSource(std::move(alphabet), std::move(pmf), base, std::move(names));
  });
}

GaussianSource parse_covariance_csv(const std::string& text, std::optional<double> log_base) {
  const auto rows = read_csv(text);
  if (rows.empty()) throw InputError("covariance CSV is empty");
  auto names = read_header(rows.front());
  const std::size_t m = names.size();
  if (rows.size() != m + 1) {
    throw InputError("covariance CSV: expected " + std::to_string(m) + " rows after the header, found " +
                     std::to_string(rows.size() - 1));
  }
  Eigen::MatrixXd cov(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = read_reals(rows[i + 1], m);
    for (std::size_t j = 0; j < m; ++j) cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r[j];
  }
  return GaussianSource(std::move(cov), check_log_base(log_base.value_or(std::numbers::e)), std::move(names));
}

WeightedHypergraph parse_hypergraph(const std::string& text) {
  struct RawEdge {
    std::size_t line;
    double weight;
    std::vector<std::string> vertices;
    std::optional<std::string> head;
  };
  std::vector<RawEdge> raw;
  std::vector<std::string> order;  // first appearance
  std::unordered_map<std::string, std::size_t> seen;
  auto note = [&](const std::string& v) {
    if (seen.emplace(v, order.size()).second) order.push_back(v);
  };

  std::istringstream in(text);
  std::string line_text;
  std::size_t line = 0;
  while (std::getline(in, line_text)) {
    ++line;
    const auto hash = line_text.find('#');
    if (hash != std::string::npos) line_text.erase(hash);
    std::istringstream tokens(line_text);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    RawEdge e{line, 0.0, {}, std::nullopt};
    const auto w = parse_real(tok[0]);
    if (!w) throw InputError(at_line(line, "weight is not a finite number: '" + tok[0] + "'"));
    if (*w < 0.0) throw InputError(at_line(line, "weight must be non-negative"));
    e.weight = *w;
    std::size_t i = 1;
    for (; i < tok.size() && tok[i] != "->"; ++i) e.vertices.push_back(tok[i]);
    if (e.vertices.empty()) throw InputError(at_line(line, "edge has no vertices"));
    if (i < tok.size()) {
      if (i + 2 != tok.size()) throw InputError(at_line(line, "'->' must be followed by exactly one head vertex"));
      e.head = tok[i + 1];
      if (std::find(e.vertices.begin(), e.vertices.end(), *e.head) == e.vertices.end()) {
        throw InputError(at_line(line, "head " + *e.head + " is not a vertex of the edge"));
      }
    }
    for (const auto& v : e.vertices) note(v);
    raw.push_back(std::move(e));
  }
  if (raw.empty()) throw InputError("hypergraph has no edges");

  bool numeric = true;
  for (const auto& v : order) numeric = numeric && parse_index(v).has_value();
  std::vector<std::string> names = order;
  if (numeric) {
    std::stable_sort(names.begin(), names.end(),
                     [](const std::string& a, const std::string& b) { return *parse_index(a) < *parse_index(b); });
    for (std::size_t k = 1; k < names.size(); ++k) {
      if (*parse_index(names[k]) == *parse_index(names[k - 1])) {
        throw InputError("vertices '" + names[k - 1] + "' and '" + names[k] + "' denote the same number");
      }
    }
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < names.size(); ++k) index[names[k]] = k;

  WeightedHypergraph g(names.size(), names);
  for (const auto& e : raw) {
    Subset s;
    for (const auto& v : e.vertices) {
      const auto id = index.at(v);
      if (s.contains(id)) throw InputError(at_line(e.line, "vertex " + v + " repeated in edge"));
      s.insert(id);
    }
    std::optional<std::size_t> head;
    if (e.head) head = index.at(*e.head);
    try {
      g.add_edge(s, e.weight, head);
    } catch (const InputError& err) {
      throw InputError(at_line(e.line, err.what()));
    }
  }
  return g;
}

EmpiricalSource parse_samples_csv(const std::string& text, std::size_t bins, std::optional<double> log_base) {
  const auto rows = read_csv(text);
  if (rows.empty()) throw InputError("samples CSV is empty");
  auto names = read_header(rows.front());
  if (rows.size() < 2) throw InputError("samples CSV has no samples");
  std::vector<std::vector<double>> samples;
  for (std::size_t r = 1; r < rows.size(); ++r) samples.push_back(read_reals(rows[r], names.size()));
  return EmpiricalSource(samples, bins, check_log_base(log_base.value_or(2.0)), std::move(names));
}

TableSource parse_table_json(const std::string& text, std::vector<std::string>* names_out,
                             std::optional<double> log_base) {
  const Json doc = parse_json(text, "table JSON");
  return json_field("table JSON", [&] {
    if (!doc.is_object()) throw InputError("table JSON: top level must be an object");
    std::vector<std::string> names;
    if (doc.contains("variables")) {
      names = doc.at("variables").get<std::vector<std::string>>();
    } else {
      const auto m = doc.at("size").get<std::int64_t>();
      if (m < 1) throw InputError("table JSON: size must be positive");
      names = default_names(static_cast<std::size_t>(m));
    }
    const std::size_t m = names.size();
    if (m > 24) throw InputError("table JSON: at most 24 variables");
    const double base = log_base ? *log_base : doc.value("log_base", 0.0);
    if (base != 0.0) check_log_base(base);
    std::optional<TableSource> table;
    if (doc.contains("table")) {
      auto values = doc.at("table").get<std::vector<double>>();
      if (values.size() != (std::size_t{1} << m)) {
        throw InputError("table JSON: 'table' needs 2^" + std::to_string(m) + " values");
      }
      table.emplace(m, std::move(values), base);
    } else {
      std::vector<std::pair<Subset, double>> entries;
      for (const auto& e : doc.at("values")) entries.emplace_back(subset_from_json(e.at("set"), names), e.at("value").get<double>());
      std::optional<double> missing;
      if (doc.contains("default")) missing = doc.at("default").get<double>();
      auto t = TableSource::from_entries(m, entries, missing);
      table.emplace(m, t.values(), base);
    }
    if (names_out) *names_out = names;
    return std::move(*table);
  });
}

LoadedSource load_source(const std::string& text, const std::string& format, const LoadOptions& options) {
  LoadedSource out;
  out.format = format;
  if (format == "pmf") {
    auto d = std::make_shared<DiscreteSource>(parse_pmf_json(text, options.log_base));
    out.names = d->names().empty() ? default_names(d->size()) : d->names();
    out.discrete = d;
    out.oracle = d;
  } else if (format == "cov") {
    auto g = std::make_shared<GaussianSource>(parse_covariance_csv(text, options.log_base));
    out.names = g->names();
    out.oracle = g;
  } else if (format == "hypergraph") {
    auto g = std::make_shared<WeightedHypergraph>(parse_hypergraph(text));
    out.names = g->names();
    out.hypergraph = g;
    out.oracle = hypergraph_entropy(*g, check_log_base(options.log_base.value_or(2.0)));
  } else if (format == "samples") {
    if (options.bins < 2) throw InputError("bins must be at least 2");
    auto e = std::make_shared<EmpiricalSource>(parse_samples_csv(text, options.bins, options.log_base));
    out.names = e->discrete().names();
    out.discrete = std::shared_ptr<const DiscreteSource>(e, &e->discrete());
    out.oracle = e;
  } else if (format == "table") {
    std::vector<std::string> names;
    out.oracle = std::make_shared<TableSource>(parse_table_json(text, &names, options.log_base));
    out.names = names;
  } else {
    throw InputError("unknown input format '" + format + "' (expected pmf, cov, hypergraph, samples or table)");
  }
  if (out.names.size() != out.oracle->size()) out.names = default_names(out.oracle->size());
  return out;
}

double round_sig(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json subset_to_json(const Subset& s, const std::vector<std::string>& names) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(names.at(i)); });
  return out;
}

Subset subset_from_json(const Json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) throw InputError("a set must be a JSON array");
  Subset s;
  for (const auto& e : j) {
    std::size_t id = 0;
    if (e.is_string()) {
      const auto it = std::find(names.begin(), names.end(), e.get<std::string>());
      if (it == names.end()) throw InputError("unknown variable '" + e.get<std::string>() + "'");
      id = static_cast<std::size_t>(it - names.begin());
    } else if (e.is_number_integer()) {
      const auto k = e.get<std::int64_t>();
      if (k < 1 || static_cast<std::size_t>(k) > names.size()) {
        throw InputError("element " + std::to_string(k) + " is out of range 1.." + std::to_string(names.size()));
      }
      id = static_cast<std::size_t>(k - 1);
    } else {
      throw InputError("set elements must be names or 1-based indices");
    }
    if (s.contains(id)) throw InputError("element " + names[id] + " repeated in a set");
    s.insert(id);
  }
  return s;
}

Json solution_to_json(const ClusteringSolution& solution, const std::vector<std::string>& names) {
  if (names.size() != solution.ground_size) throw InputError("names do not match the solution");
  Json doc;
  doc["log_base"] = round_sig(solution.log_base);
  doc["variables"] = names;
  Json values = Json::array();
  for (double g : solution.critical_values) values.push_back(round_sig(g));
  doc["critical_values"] = values;
  Json chain = Json::array();
  for (const auto& p : solution.chain) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks()) blocks.push_back(subset_to_json(b, names));
    chain.push_back(blocks);
  }
  doc["psp"] = chain;
  Json clusters = Json::array();
  for (const auto& r : solution.clusters()) {
    clusters.push_back({{"set", subset_to_json(r.set, names)}, {"value", round_sig(r.value)}});
  }
  doc["clusters"] = clusters;
  return doc;
}

ClusteringSolution solution_from_json(const Json& doc, std::vector<std::string>* names_out) {
  return json_field("solution JSON", [&] {
    const auto names = doc.at("variables").get<std::vector<std::string>>();
    ClusteringSolution sol;
    sol.ground_size = names.size();
    sol.log_base = doc.value("log_base", 0.0);
    sol.critical_values = doc.at("critical_values").get<std::vector<double>>();
    for (const auto& p : doc.at("psp")) {
      std::vector<Subset> blocks;
      for (const auto& b : p) blocks.push_back(subset_from_json(b, names));
      sol.chain.emplace_back(names.size(), std::move(blocks));
    }
    sol.validate();
    if (names_out) *names_out = names;
    return sol;
  });
}

std::string solution_to_dot(const ClusteringSolution& solution, const std::vector<std::string>& names) {
  if (names.size() != solution.ground_size) throw InputError("names do not match the solution");
  std::ostringstream os;
  os << "digraph psp {\n  rankdir=TB;\n  node [fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < solution.chain.size(); ++i) {
    std::string label = "P" + std::to_string(i) + " = {";
    const auto& blocks = solution.chain[i].blocks();
    for (std::size_t k = 0; k < blocks.size(); ++k) label += (k ? "," : "") + named_set(blocks[k], names);
    label += "}";
    if (i > 0) label += "\\ngamma >= " + fmt12(solution.critical_values[i - 1]);
    os << "  level" << i << " [shape=box,label=\"" << escape_dot(label) << "\"];\n";
    if (i > 0) os << "  level" << i - 1 << " -> level" << i << ";\n";
  }

  const auto clusters = solution.clusters();
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const auto label = named_set(clusters[k].set, names) + "\\nI = " + fmt12(clusters[k].value);
    os << "  cluster" << k << " [shape=ellipse,label=\"" << escape_dot(label) << "\"];\n";
  }
  // Each cluster hangs below the smallest cluster strictly containing it.
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    std::optional<std::size_t> parent;
    for (std::size_t j = 0; j < clusters.size(); ++j) {
      if (j == k || clusters[j].set == clusters[k].set || !clusters[k].set.is_subset_of(clusters[j].set)) continue;
      if (!parent || clusters[j].set.count() < clusters[*parent].set.count()) parent = j;
    }
    if (parent) os << "  cluster" << *parent << " -> cluster" << k << ";\n";
  }
  // Dashed edge from the first level holding the cluster as a block.
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    for (std::size_t i = 0; i < solution.chain.size(); ++i) {
      const auto& blocks = solution.chain[i].blocks();
      if (std::find(blocks.begin(), blocks.end(), clusters[k].set) != blocks.end()) {
        os << "  level" << i << " -> cluster" << k << " [style=dashed];\n";
        break;
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace infoclust
