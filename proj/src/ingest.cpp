#include "axioclust/ingest.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace axioclust {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delim)) out.push_back(field);
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

double parse_number(const std::string& token, const std::string& path, std::size_t line_no) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw ingest_error(path + ":" + std::to_string(line_no) + ": non-numeric cell '" + token + "'");
  }
  while (pos < token.size() && (token[pos] == ' ' || token[pos] == '\t' || token[pos] == '\r')) {
    ++pos;
  }
  if (pos != token.size()) {
    throw ingest_error(path + ":" + std::to_string(line_no) + ": non-numeric cell '" + token + "'");
  }
  return v;
}

std::vector<std::vector<double>> read_rows(const std::string& path, bool header) {
  std::ifstream in(path);
  if (!in) throw ingest_error("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool skipped_header = !header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!skipped_header) {
      skipped_header = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& token : split(line, ',')) row.push_back(parse_number(token, path, line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ingest_error(path + ":" + std::to_string(line_no) + ": ragged row (" +
                         std::to_string(row.size()) + " cells, expected " +
                         std::to_string(rows.front().size()) + ")");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ingest_error(path + ": no data rows");
  return rows;
}

Matrix rows_to_matrix(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

DataSet ingest_edgelist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ingest_error("cannot open " + path);
  struct Edge {
    std::size_t k, l;
    double w;
  };
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) tokens.push_back(t);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ingest_error(path + ":" + std::to_string(line_no) +
                         ": expected 'k l [w]', got " + std::to_string(tokens.size()) + " fields");
    }
    double kf = parse_number(tokens[0], path, line_no);
    double lf = parse_number(tokens[1], path, line_no);
    double w = tokens.size() == 3 ? parse_number(tokens[2], path, line_no) : 1.0;
    if (kf < 0 || lf < 0 || kf != static_cast<std::size_t>(kf) || lf != static_cast<std::size_t>(lf)) {
      throw ingest_error(path + ":" + std::to_string(line_no) + ": node ids must be nonnegative integers");
    }
    if (w < 0) {
      throw ingest_error(path + ":" + std::to_string(line_no) + ": negative edge weight");
    }
    Edge e{static_cast<std::size_t>(kf), static_cast<std::size_t>(lf), w};
    n = std::max(n, std::max(e.k, e.l) + 1);
    edges.push_back(e);
  }
  if (edges.empty()) throw ingest_error(path + ": no edges");
  Matrix adj(n, n);
  for (const auto& e : edges) {
    adj(e.k, e.l) += e.w;
    if (e.k != e.l) adj(e.l, e.k) += e.w;
  }
  return DataSet::from_adjacency(std::move(adj));
}

}  // namespace

Matrix read_csv_matrix(const std::string& path, bool header) {
  return rows_to_matrix(read_rows(path, header));
}

DataSet ingest(const std::string& path, const std::string& view, bool header) {
  if (view == "features-csv") {
    return DataSet::from_features(read_csv_matrix(path, header));
  }
  if (view == "similarity-csv") {
    try {
      return DataSet::from_similarity(read_csv_matrix(path, header));
    } catch (const structural_error& e) {
      throw ingest_error(path + ": " + e.what());
    }
  }
  if (view == "edgelist") {
    return ingest_edgelist(path);
  }
  throw config_error("unknown view kind: " + view +
                     " (expected features-csv, similarity-csv, or edgelist)");
}

Partition read_partition_csv(const std::string& path, PartitionKind kind) {
  Partition p;
  p.kind = kind;
  p.u = read_csv_matrix(path, /*header=*/false);
  return p;
}

}  // namespace axioclust
