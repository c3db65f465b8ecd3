// Copyright 2026 The Authors.
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

#include "submod/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "submod/objectives.hpp"

namespace submod {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& token, const std::string& context) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw std::invalid_argument(context + ": bad number '" + token + "'");
  }
  return v;
}

long long parse_int(const std::string& token, const std::string& context) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const long long v = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw std::invalid_argument(context + ": bad integer '" + token + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep,
                               bool keep_empty = false) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      if (keep_empty || !cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (keep_empty || !cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> whitespace_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Line cursor over an instance file, skipping blanks and '#' comments while
// keeping line numbers for error messages.
class LineReader {
 public:
  LineReader(const std::string& text, std::string origin)
      : origin_(std::move(origin)) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines_.emplace_back(number, line);
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const std::string& peek() const { return lines_[pos_].second; }
  std::string next(const std::string& what) {
    if (done()) {
      throw std::invalid_argument(origin_ + ": unexpected end of file, " +
                                  "expected " + what);
    }
    return lines_[pos_++].second;
  }
  std::string where() const {
    if (done()) return origin_ + ":eof";
    return origin_ + ":" + std::to_string(lines_[pos_].first);
  }

 private:
  std::string origin_;
  std::vector<std::pair<int, std::string>> lines_;
  std::size_t pos_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::map<std::string, std::string> parse_kv_options(
    const std::vector<std::string>& tokens, std::size_t start,
    const std::string& context) {
  std::map<std::string, std::string> options;
  for (std::size_t i = start; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(context + ": expected key=value, got '" +
                                  tokens[i] + "'");
    }
    options[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
  }
  return options;
}

}  // namespace

GraphData load_graph(const std::string& path, int degree_q,
                     double mean_cost_target) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  GraphData data;
  std::map<long long, int> id_map;
  std::vector<std::set<int>> arcs;
  auto dense_id = [&](long long raw) {
    auto [it, inserted] = id_map.emplace(raw, static_cast<int>(arcs.size()));
    if (inserted) arcs.emplace_back();
    return it->second;
  };

  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tokens = whitespace_tokens(line);
    if (tokens.size() != 2) {
      throw std::invalid_argument(path + ":" + std::to_string(line_number) +
                                  ": expected 'u v'");
    }
    const std::string context = path + ":" + std::to_string(line_number);
    const int u = dense_id(parse_int(tokens[0], context));
    const int v = dense_id(parse_int(tokens[1], context));
    arcs[u].insert(v);
  }

  const int n = static_cast<int>(arcs.size());
  data.adjacency.resize(n);
  for (int u = 0; u < n; ++u) {
    data.adjacency[u].assign(arcs[u].begin(), arcs[u].end());
  }
  data.weights.assign(n, 1.0);

  data.raw_costs.resize(n);
  double total = 0.0;
  for (int u = 0; u < n; ++u) {
    const int d = static_cast<int>(data.adjacency[u].size());
    data.raw_costs[u] = 1.0 + std::max(0, d - degree_q);
    total += data.raw_costs[u];
  }
  if (n > 0 && total > 0.0) {
    const double scale = mean_cost_target * n / total;
    for (double& c : data.raw_costs) c *= scale;
  }
  return data;
}

FeatureMatrix load_features(const std::string& path, double lambda) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string context = path + ":" + std::to_string(line_number);
    std::vector<double> row;
    for (const auto& tok : split(line, ',')) {
      row.push_back(parse_double(tok, context));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument(context + ": ragged row (" +
                                  std::to_string(row.size()) + " vs " +
                                  std::to_string(rows.front().size()) +
                                  " columns)");
    }
    rows.push_back(std::move(row));
  }

  FeatureMatrix fm;
  fm.n = static_cast<int>(rows.size());
  fm.similarity.assign(static_cast<std::size_t>(fm.n) * fm.n, 0.0);
  for (int i = 0; i < fm.n; ++i) {
    fm.similarity[i * fm.n + i] = 1.0;
    for (int j = i + 1; j < fm.n; ++j) {
      double dist2 = 0.0;
      for (std::size_t d = 0; d < rows[i].size(); ++d) {
        const double diff = rows[i][d] - rows[j][d];
        dist2 += diff * diff;
      }
      const double sim = std::exp(-lambda * std::sqrt(dist2));
      fm.similarity[i * fm.n + j] = sim;
      fm.similarity[j * fm.n + i] = sim;
    }
  }
  return fm;
}

std::string instance_to_string(const ProblemInstance& instance) {
  const int n = instance.n();
  std::ostringstream out;
  out << "submod-instance v1\n";
  out << "n " << n << "\n";

  const SubmodularOracle* obj = &instance.objective();
  if (auto* vc = dynamic_cast<const VertexCoverObjective*>(obj)) {
    out << "objective coverage\n";
    int arc_count = 0;
    for (const auto& neighbors : vc->adjacency()) {
      arc_count += static_cast<int>(neighbors.size());
    }
    out << "arcs " << arc_count << "\n";
    for (int u = 0; u < n; ++u) {
      for (int v : vc->adjacency()[u]) out << u << " " << v << "\n";
    }
    out << "weights";
    for (double w : vc->weights()) out << " " << fmt_double(w);
    out << "\n";
  } else if (auto* fl = dynamic_cast<const FacilityLocationObjective*>(obj)) {
    out << "objective facility\n";
    out << "matrix\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out << (j ? " " : "") << fmt_double(fl->similarity()[i * n + j]);
      }
      out << "\n";
    }
  } else if (auto* ld = dynamic_cast<const LogDetObjective*>(obj)) {
    out << "objective logdet\n";
    out << "alpha " << fmt_double(ld->alpha()) << "\n";
    out << "matrix\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out << (j ? " " : "") << fmt_double(ld->similarity()[i * n + j]);
      }
      out << "\n";
    }
  } else if (auto* cm =
                 dynamic_cast<const ConcaveOverModularObjective*>(obj)) {
    out << "objective concave-modular\n";
    out << "words " << cm->word_count() << "\n";
    int entry_count = 0;
    for (const auto& list : cm->entries_by_element()) {
      entry_count += static_cast<int>(list.size());
    }
    out << "entries " << entry_count << "\n";
    for (int e = 0; e < n; ++e) {
      for (const auto& [word, score] : cm->entries_by_element()[e]) {
        out << e << " " << word << " " << fmt_double(score) << "\n";
      }
    }
  } else {
    throw std::invalid_argument(
        "instance_to_string: objective type is not serializable");
  }

  for (const auto& m : instance.matchoid().matroids()) {
    if (auto* um = dynamic_cast<const UniformMatroid*>(m.get())) {
      out << "matroid uniform limit=" << um->limit();
      if (um->ground().size() != n) {
        out << " ground=";
        bool first = true;
        for (int e : um->ground()) {
          out << (first ? "" : ",") << e;
          first = false;
        }
      }
      out << "\n";
    } else if (auto* pm = dynamic_cast<const PartitionMatroid*>(m.get())) {
      out << "matroid partition blocks=";
      for (int e = 0; e < n; ++e) {
        const auto& blocks = pm->blocks();
        out << (e ? "," : "")
            << (e < static_cast<int>(blocks.size()) ? blocks[e] : -1);
      }
      out << " limits=";
      for (std::size_t b = 0; b < pm->limits().size(); ++b) {
        out << (b ? "," : "") << pm->limits()[b];
      }
      out << "\n";
    } else if (dynamic_cast<const FreeMatroid*>(m.get())) {
      out << "matroid free\n";
    } else {
      throw std::invalid_argument(
          "instance_to_string: matroid type is not serializable");
    }
  }

  for (int i = 0; i < instance.knapsacks().count(); ++i) {
    out << "knapsack";
    for (double c : instance.knapsacks().costs(i)) {
      out << " " << fmt_double(c);
    }
    out << "\n";
  }
  return out.str();
}

void save_instance(const ProblemInstance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_string(instance);
}

ProblemInstance instance_from_string(const std::string& text,
                                     const std::string& origin) {
  LineReader reader(text, origin);
  if (whitespace_tokens(reader.next("header")) !=
      std::vector<std::string>{"submod-instance", "v1"}) {
    throw std::invalid_argument(origin + ": missing 'submod-instance v1'");
  }

  auto expect_keyword = [&](const std::string& keyword) {
    const auto where = reader.where();
    auto tokens = whitespace_tokens(reader.next(keyword));
    if (tokens.empty() || tokens[0] != keyword) {
      throw std::invalid_argument(where + ": expected '" + keyword + "'");
    }
    return tokens;
  };

  auto n_tokens = expect_keyword("n");
  if (n_tokens.size() != 2) {
    throw std::invalid_argument(origin + ": malformed 'n' line");
  }
  const int n = static_cast<int>(parse_int(n_tokens[1], origin));

  auto obj_tokens = expect_keyword("objective");
  if (obj_tokens.size() != 2) {
    throw std::invalid_argument(origin + ": malformed 'objective' line");
  }
  const std::string kind = obj_tokens[1];

  std::shared_ptr<const SubmodularOracle> objective;
  if (kind == "coverage") {
    auto arcs_tokens = expect_keyword("arcs");
    const int arc_count = static_cast<int>(parse_int(arcs_tokens[1], origin));
    std::vector<std::vector<int>> adjacency(n);
    for (int i = 0; i < arc_count; ++i) {
      const auto where = reader.where();
      auto tokens = whitespace_tokens(reader.next("arc"));
      if (tokens.size() != 2) {
        throw std::invalid_argument(where + ": expected 'u v'");
      }
      const int u = static_cast<int>(parse_int(tokens[0], where));
      const int v = static_cast<int>(parse_int(tokens[1], where));
      if (u < 0 || u >= n) {
        throw std::invalid_argument(where + ": arc source out of range");
      }
      adjacency[u].push_back(v);
    }
    auto weight_tokens = expect_keyword("weights");
    if (static_cast<int>(weight_tokens.size()) != n + 1) {
      throw std::invalid_argument(origin + ": expected " + std::to_string(n) +
                                  " weights");
    }
    std::vector<double> weights(n);
    for (int e = 0; e < n; ++e) {
      weights[e] = parse_double(weight_tokens[e + 1], origin);
    }
    objective = std::make_shared<VertexCoverObjective>(std::move(adjacency),
                                                       std::move(weights));
  } else if (kind == "facility" || kind == "logdet") {
    double alpha = 1.0;
    if (kind == "logdet") {
      auto alpha_tokens = expect_keyword("alpha");
      alpha = parse_double(alpha_tokens[1], origin);
    }
    expect_keyword("matrix");
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      const auto where = reader.where();
      auto tokens = whitespace_tokens(reader.next("matrix row"));
      if (static_cast<int>(tokens.size()) != n) {
        throw std::invalid_argument(where + ": expected " + std::to_string(n) +
                                    " matrix entries");
      }
      for (int j = 0; j < n; ++j) m[i * n + j] = parse_double(tokens[j], where);
    }
    if (kind == "facility") {
      objective = std::make_shared<FacilityLocationObjective>(n, std::move(m));
    } else {
      objective = std::make_shared<LogDetObjective>(n, std::move(m), alpha);
    }
  } else if (kind == "concave-modular") {
    auto words_tokens = expect_keyword("words");
    const int word_count =
        static_cast<int>(parse_int(words_tokens[1], origin));
    auto entries_tokens = expect_keyword("entries");
    const int entry_count =
        static_cast<int>(parse_int(entries_tokens[1], origin));
    std::vector<ConcaveOverModularObjective::Entry> entries;
    entries.reserve(entry_count);
    for (int i = 0; i < entry_count; ++i) {
      const auto where = reader.where();
      auto tokens = whitespace_tokens(reader.next("entry"));
      if (tokens.size() != 3) {
        throw std::invalid_argument(where + ": expected 'element word score'");
      }
      entries.push_back({static_cast<int>(parse_int(tokens[0], where)),
                         static_cast<int>(parse_int(tokens[1], where)),
                         parse_double(tokens[2], where)});
    }
    objective = std::make_shared<ConcaveOverModularObjective>(n, word_count,
                                                              entries);
  } else {
    throw std::invalid_argument(origin + ": unknown objective '" + kind + "'");
  }

  std::vector<std::shared_ptr<const MatroidOracle>> matroids;
  std::vector<std::vector<double>> knapsack_costs;
  while (!reader.done()) {
    const auto where = reader.where();
    auto tokens = whitespace_tokens(reader.next("matroid or knapsack"));
    if (tokens[0] == "matroid") {
      if (tokens.size() < 2) {
        throw std::invalid_argument(where + ": malformed matroid line");
      }
      if (tokens[1] == "free") {
        matroids.push_back(std::make_shared<FreeMatroid>(n));
      } else if (tokens[1] == "uniform") {
        auto options = parse_kv_options(tokens, 2, where);
        if (!options.count("limit")) {
          throw std::invalid_argument(where + ": uniform matroid needs limit=");
        }
        const int limit =
            static_cast<int>(parse_int(options.at("limit"), where));
        if (options.count("ground")) {
          ElementSet ground;
          for (const auto& tok : split(options.at("ground"), ',')) {
            ground.insert(static_cast<int>(parse_int(tok, where)));
          }
          matroids.push_back(
              std::make_shared<UniformMatroid>(std::move(ground), limit));
        } else {
          matroids.push_back(std::make_shared<UniformMatroid>(n, limit));
        }
      } else if (tokens[1] == "partition") {
        auto options = parse_kv_options(tokens, 2, where);
        if (!options.count("blocks") || !options.count("limits")) {
          throw std::invalid_argument(
              where + ": partition matroid needs blocks= and limits=");
        }
        std::vector<int> blocks;
        for (const auto& tok : split(options.at("blocks"), ',')) {
          blocks.push_back(static_cast<int>(parse_int(tok, where)));
        }
        if (static_cast<int>(blocks.size()) != n) {
          throw std::invalid_argument(where + ": expected " +
                                      std::to_string(n) + " block ids");
        }
        std::vector<int> limits;
        for (const auto& tok : split(options.at("limits"), ',')) {
          limits.push_back(static_cast<int>(parse_int(tok, where)));
        }
        matroids.push_back(std::make_shared<PartitionMatroid>(
            std::move(blocks), std::move(limits)));
      } else {
        throw std::invalid_argument(where + ": unknown matroid kind '" +
                                    tokens[1] + "'");
      }
    } else if (tokens[0] == "knapsack") {
      if (static_cast<int>(tokens.size()) != n + 1) {
        throw std::invalid_argument(where + ": expected " + std::to_string(n) +
                                    " knapsack costs");
      }
      std::vector<double> costs(n);
      for (int e = 0; e < n; ++e) {
        costs[e] = parse_double(tokens[e + 1], where);
      }
      knapsack_costs.push_back(std::move(costs));
    } else {
      throw std::invalid_argument(where + ": unexpected '" + tokens[0] + "'");
    }
  }

  const int k = MatchoidConstraint::max_overlap(matroids);
  MatchoidConstraint matchoid(std::move(matroids), k);
  KnapsackSet knapsacks =
      KnapsackSet::from_normalized(std::move(knapsack_costs));
  return ProblemInstance(GroundSet(n), std::move(objective),
                         std::move(matchoid), std::move(knapsacks));
}

ProblemInstance load_instance(const std::string& path) {
  return instance_from_string(read_file(path), path);
}

// ---- Experiment CSV --------------------------------------------------------

bool operator==(const ExperimentRow& a, const ExperimentRow& b) {
  return a.algorithm == b.algorithm && a.sweep_var == b.sweep_var &&
         a.sweep_value == b.sweep_value && a.seed == b.seed &&
         a.objective == b.objective && a.feasible == b.feasible &&
         a.oracle_calls == b.oracle_calls && a.wall_ms == b.wall_ms &&
         a.set == b.set;
}

std::string csv_header() {
  return "algorithm,sweep_var,sweep_value,seed,objective,feasible,"
         "oracle_calls,wall_ms,set";
}

std::string emit_row(const ExperimentRow& row) {
  std::ostringstream out;
  out << row.algorithm << ',' << row.sweep_var << ','
      << fmt_double(row.sweep_value) << ',' << row.seed << ','
      << fmt_double(row.objective) << ',' << (row.feasible ? "true" : "false")
      << ',' << row.oracle_calls << ',' << fmt_double(row.wall_ms) << ',';
  bool first = true;
  for (int e : row.set) {
    out << (first ? "" : ";") << e;
    first = false;
  }
  return out.str();
}

ExperimentRow parse_row(const std::string& line) {
  const auto fields = split(line, ',', /*keep_empty=*/true);
  if (fields.size() != 9) {
    throw std::invalid_argument("csv row: expected 9 fields, got " +
                                std::to_string(fields.size()));
  }
  ExperimentRow row;
  row.algorithm = fields[0];
  row.sweep_var = fields[1];
  row.sweep_value = parse_double(fields[2], "csv sweep_value");
  row.seed = static_cast<std::uint64_t>(
      std::strtoull(fields[3].c_str(), nullptr, 10));
  row.objective = parse_double(fields[4], "csv objective");
  if (fields[5] == "true") {
    row.feasible = true;
  } else if (fields[5] == "false") {
    row.feasible = false;
  } else {
    throw std::invalid_argument("csv row: bad feasible flag '" + fields[5] +
                                "'");
  }
  row.oracle_calls = parse_int(fields[6], "csv oracle_calls");
  row.wall_ms = parse_double(fields[7], "csv wall_ms");
  for (const auto& tok : split(fields[8], ';')) {
    row.set.insert(static_cast<int>(parse_int(tok, "csv set")));
  }
  return row;
}

std::string csv_without_wall_ms(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::ostringstream out;
  std::string line;
  bool first_line = true;
  while (std::getline(in, line)) {
    if (!first_line || line != csv_header()) {
      auto fields = split(line, ',', /*keep_empty=*/true);
      if (fields.size() == 9) {
        fields[7] = "0";
        std::string joined;
        for (std::size_t i = 0; i < fields.size(); ++i) {
          joined += (i ? "," : "") + fields[i];
        }
        line = joined;
      }
    }
    out << line << "\n";
    first_line = false;
  }
  return out.str();
}

}  // namespace submod
