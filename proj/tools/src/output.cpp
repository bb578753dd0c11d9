#include "output.hpp"

#include <graphharm/error.hpp>
#include <graphharm/io.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

namespace graphharm::cli {

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << bytes;
  if (!out) throw ParseError("write failed for '" + path.string() + "'");
}

std::string file_sha256(const std::filesystem::path& path) { return sha256_hex(read_file(path)); }

std::string graph_digest(const Graph& g) {
  std::ostringstream os;
  write_edge_list(g, os);
  return sha256_hex(os.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string number(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return {buf.data(), res.ptr};
}

namespace {

struct Row {
  std::size_t index;
  Vertex u;
  Vertex v;
  double score;
};

EdgeScores from_rows(std::vector<Row> rows, const std::string& meaning) {
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.index < b.index; });
  EdgeScores out;
  out.meaning = meaning;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].index != i) throw ParseError("scores file: edge indices are not 0..m-1");
    out.values.push_back(rows[i].score);
    out.endpoints.emplace_back(rows[i].u, rows[i].v);
  }
  return out;
}

EdgeScores scores_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("scores file: ") + ex.what());
  }
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("scores file: missing \"edges\" array");
  std::vector<Row> rows;
  try {
    for (const auto& e : j["edges"]) {
      rows.push_back({e.at("index").get<std::size_t>(), e.at("u").get<Vertex>(), e.at("v").get<Vertex>(),
                      e.at("score").get<double>()});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("scores file: ") + ex.what());
  }
  std::string meaning;
  if (j.contains("meta") && j["meta"].contains("measure")) meaning = j["meta"]["measure"].get<std::string>();
  return from_rows(std::move(rows), meaning);
}

EdgeScores scores_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;  // header
    std::istringstream fields(line);
    std::string index, u, v, score;
    if (!std::getline(fields, index, ',') || !std::getline(fields, u, ',') || !std::getline(fields, v, ',') ||
        !std::getline(fields, score, ',')) {
      throw ParseError("expected index,u,v,score,rank", line_no);
    }
    try {
      rows.push_back({std::stoul(index), std::stoul(u), std::stoul(v), std::stod(score)});
    } catch (const std::exception&) {
      throw ParseError("malformed scores row", line_no);
    }
  }
  return from_rows(std::move(rows), "");
}

}  // namespace

EdgeScores load_scores(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return scores_from_json(text);
  return scores_from_csv(text);
}

Json to_json(const std::vector<CheckReport>& reports) {
  Json arr = Json::array();
  for (const CheckReport& r : reports) {
    arr.push_back({{"name", r.name},
                   {"family", r.family},
                   {"seed", r.seed},
                   {"instances", r.instances},
                   {"worst_abs", r.worst_abs},
                   {"worst_rel", r.worst_rel},
                   {"tolerance_kind", r.tolerance_kind},
                   {"threshold", r.threshold},
                   {"failures", r.failures},
                   {"pass", r.pass},
                   {"note", r.note}});
  }
  return arr;
}

}  // namespace graphharm::cli
