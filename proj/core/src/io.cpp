#include "graphharm/io.hpp"

#include "graphharm/error.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

namespace graphharm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(tok) + "'", line);
  }
  return value;
}

double parse_real(std::string_view tok, std::size_t line) {
  std::string copy(tok);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid number '" + copy + "'", line);
  }
  if (used != copy.size()) throw ParseError("invalid number '" + copy + "'", line);
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::optional<std::size_t> declared_n;
  bool seen_data = false;
  std::size_t max_vertex = 0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = split_ws(line);
    if (tok.front() == "n") {
      if (seen_data) throw ParseError("header 'n <count>' must precede all edges", line_no);
      if (tok.size() != 2) throw ParseError("header must be 'n <count>'", line_no);
      declared_n = parse_index(tok[1], line_no, "vertex count");
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (tok.size() < 2 || tok.size() > 3) {
      throw ParseError("expected 'u v [w]', got " + std::to_string(tok.size()) + " fields",
                       line_no);
    }
    Edge e;
    e.u = parse_index(tok[0], line_no, "vertex");
    e.v = parse_index(tok[1], line_no, "vertex");
    e.w = tok.size() == 3 ? parse_real(tok[2], line_no) : 1.0;
    max_vertex = std::max({max_vertex, e.u, e.v});
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }
  if (in.bad()) throw ParseError("read error");

  const std::size_t n = declared_n ? *declared_n : (edges.empty() ? 0 : max_vertex + 1);
  try {
    return Graph::build(n, std::move(edges));
  } catch (const GraphError& err) {
    throw ParseError(err.what(), edge_lines.at(err.edge_index()));
  }
}

Graph load_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.vertex_count() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  write_edge_list(g, out);
  if (!out) throw ParseError("write failed for '" + path.string() + "'");
}

PointSet read_points_csv(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<std::string_view> header;
  std::string header_line;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!trim(raw).empty()) {
      header_line = raw;
      break;
    }
  }
  if (header_line.empty()) throw ParseError("missing CSV header row");
  std::size_t columns = 1;
  for (char c : header_line) columns += c == ',' ? 1 : 0;
  const auto last_comma = header_line.rfind(',');
  const std::string_view last_field =
      trim(std::string_view(header_line).substr(last_comma == std::string::npos ? 0 : last_comma + 1));
  const bool has_labels = last_field == "label";
  const std::size_t dims = has_labels ? columns - 1 : columns;
  if (dims == 0) throw ParseError("CSV has no coordinate columns", line_no);

  std::vector<double> coords;
  std::vector<int> labels;
  std::size_t rows = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != columns) {
      throw ParseError("expected " + std::to_string(columns) + " columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    for (std::size_t j = 0; j < dims; ++j) coords.push_back(parse_real(fields[j], line_no));
    if (has_labels) {
      int label = 0;
      const auto f = fields.back();
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), label);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw ParseError("invalid label '" + std::string(f) + "'", line_no);
      }
      labels.push_back(label);
    }
    ++rows;
  }

  PointSet set;
  set.points.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(dims));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < dims; ++j) {
      set.points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = coords[i * dims + j];
    }
  }
  if (has_labels) set.labels = std::move(labels);
  return set;
}

PointSet load_points_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_points_csv(in);
}

std::vector<int> load_labels(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<int> labels;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    int label = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), label);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      throw ParseError("invalid label '" + std::string(line) + "'", line_no);
    }
    labels.push_back(label);
  }
  return labels;
}

void save_labels(const std::vector<int>& labels, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  for (int l : labels) out << l << '\n';
}

}  // namespace graphharm
