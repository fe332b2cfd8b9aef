#include "hpd/profile_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hpd {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

ParseError::ParseError(const std::string& msg, int line_, int column_)
    : std::runtime_error(line_ > 0 ? std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg
                                   : msg),
      line(line_),
      column(column_) {}

void offset_to_line_col(const std::string& text, size_t offset, int& line, int& column) {
  line = 1;
  column = 1;
  const size_t end = std::min(offset, text.size());
  for (size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

namespace {

// Semantic errors have no parser position; point at the first occurrence
// of the offending key instead.
[[noreturn]] void fail_at_key(const std::string& text, const std::string& key, const std::string& msg) {
  int line = 0, col = 0;
  const size_t pos = text.find("\"" + key + "\"");
  if (pos != std::string::npos) offset_to_line_col(text, pos, line, col);
  throw ParseError(msg, line, col);
}

long long get_int(const std::string& text, const json& v, const std::string& key) {
  if (!v.is_number_integer()) fail_at_key(text, key, "field '" + key + "' must be an integer");
  return v.get<long long>();
}

}  // namespace

LefschetzProfile parse_profile(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 0, col = 0;
    // nlohmann reports the byte just past the failure, 1-based.
    offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
    throw ParseError(std::string("malformed profile: ") + e.what(), line, col);
  }
  if (!doc.is_object()) throw ParseError("profile must be a JSON object", 1, 1);

  for (const auto& [k, _] : doc.items())
    if (k != "name" && k != "N" && k != "orientation" && k != "blocks")
      fail_at_key(text, k, "unknown field '" + k + "'");
  for (const char* req : {"name", "N", "orientation", "blocks"})
    if (!doc.contains(req)) throw ParseError(std::string("missing field '") + req + "'", 0, 0);

  LefschetzProfile p;
  if (!doc["name"].is_string()) fail_at_key(text, "name", "field 'name' must be a string");
  p.name = doc["name"].get<std::string>();
  const long long N = get_int(text, doc["N"], "N");
  if (N <= 0 || N > 1000000) fail_at_key(text, "N", "field 'N' must be a positive integer");
  p.N = static_cast<int>(N);
  const auto& o = doc["orientation"];
  if (o == "lefschetz") p.orientation = Orientation::Lefschetz;
  else if (o == "dual") p.orientation = Orientation::DualLefschetz;
  else fail_at_key(text, "orientation", "field 'orientation' must be \"lefschetz\" or \"dual\"");

  if (!doc["blocks"].is_array()) fail_at_key(text, "blocks", "field 'blocks' must be an array");
  for (const auto& b : doc["blocks"]) {
    if (!b.is_object()) fail_at_key(text, "blocks", "each block must be an object");
    for (const auto& [k, _] : b.items())
      if (k != "label" && k != "euler" && k != "nonzero")
        fail_at_key(text, k, "unknown block field '" + k + "'");
    if (!b.contains("label") || !b["label"].is_string())
      fail_at_key(text, "label", "block needs a string 'label'");
    if (!b.contains("euler")) fail_at_key(text, "blocks", "block needs an integer 'euler'");
    PrimitiveBlock blk;
    blk.label = b["label"].get<std::string>();
    blk.euler = get_int(text, b["euler"], "euler");
    blk.nonzero = blk.euler != 0;
    if (b.contains("nonzero")) {
      if (!b["nonzero"].is_boolean()) fail_at_key(text, "nonzero", "field 'nonzero' must be a boolean");
      blk.nonzero = b["nonzero"].get<bool>();
    }
    p.blocks.push_back(std::move(blk));
  }
  return p;
}

std::string serialize_profile(const LefschetzProfile& p) {
  ojson doc;
  doc["name"] = p.name;
  doc["N"] = p.N;
  doc["orientation"] = to_string(p.orientation);
  doc["blocks"] = ojson::array();
  for (const auto& b : p.blocks) {
    ojson jb;
    jb["label"] = b.label;
    jb["euler"] = b.euler;
    jb["nonzero"] = b.nonzero;
    doc["blocks"].push_back(std::move(jb));
  }
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << bytes;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

LefschetzProfile load_profile(const std::string& path) { return parse_profile(read_file(path)); }

void save_profile(const LefschetzProfile& p, const std::string& path) {
  write_file(path, serialize_profile(p));
}

}  // namespace hpd
