#include "segclust/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace segclust {

namespace {

double parse_real(const std::string& text, const std::string& what, int line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(what + ": malformed number '" + text + "' at line " +
                                std::to_string(line));
  }
  return value;
}

int parse_int(const std::string& text, const std::string& what, int line) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(what + ": malformed integer '" + text + "' at line " +
                                std::to_string(line));
  }
  return value;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  return fields;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

void write_signal(const std::filesystem::path& path, const Signal& y) {
  std::ofstream out = open_for_write(path);
  for (int i = 0; i < y.size(); ++i) out << format_real(y[i]) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

Signal read_signal(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    values.push_back(parse_real(line, path.string(), line_no));
  }
  if (values.empty()) {
    throw std::invalid_argument(path.string() + ": no values found");
  }
  return Signal(std::move(values));
}

void write_spec_table(const std::filesystem::path& path, const PiecewiseSpec& spec) {
  std::ofstream out = open_for_write(path);
  out << "cluster_index,level,seg_start,seg_end\n";
  for (const auto& segment : spec.segments_in_order()) {
    out << segment.cluster + 1 << ','
        << format_real(spec.clusters()[static_cast<std::size_t>(segment.cluster)].level) << ','
        << segment.span.first << ',' << segment.span.last << '\n';
  }
  if (!out) throw IoError("failed writing " + path.string());
}

PiecewiseSpec read_spec_table(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "cluster_index,level,seg_start,seg_end") {
    throw std::invalid_argument(path.string() + ": unexpected header at line 1");
  }

  std::map<int, Cluster> clusters;  // keyed by 1-based cluster index
  int n = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields = split_csv_row(line);
    if (fields.size() != 4) {
      throw std::invalid_argument(path.string() + ": expected 4 fields at line " +
                                  std::to_string(line_no));
    }
    int cluster_index = parse_int(fields[0], path.string(), line_no);
    double level = parse_real(fields[1], path.string(), line_no);
    Interval span{parse_int(fields[2], path.string(), line_no),
                  parse_int(fields[3], path.string(), line_no)};
    if (cluster_index < 1) {
      throw std::invalid_argument(path.string() + ": cluster index must be >= 1 at line " +
                                  std::to_string(line_no));
    }
    auto [it, inserted] = clusters.try_emplace(cluster_index, Cluster{level, {}});
    if (!inserted && it->second.level != level) {
      throw std::invalid_argument(path.string() + ": conflicting level for cluster " +
                                  std::to_string(cluster_index) + " at line " +
                                  std::to_string(line_no));
    }
    it->second.segments.push_back(span);
    n = std::max(n, span.last);
  }
  if (clusters.empty()) throw std::invalid_argument(path.string() + ": no segment rows");

  std::vector<Cluster> ordered;
  ordered.reserve(clusters.size());
  for (auto& [index, cluster] : clusters) ordered.push_back(std::move(cluster));
  return PiecewiseSpec(std::move(ordered), n);
}

}  // namespace segclust
