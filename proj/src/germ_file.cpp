#include "germcalc/germ_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace germcalc {

namespace {

std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : value) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

long long parse_integer(const std::string& text, int line, const char* key) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error("line " + std::to_string(line) + ": " + key +
                " needs an integer, got '" + text + "'");
  return v;
}

std::vector<std::uint32_t> parse_positive_list(const std::string& value,
                                               int line, const char* key) {
  std::vector<std::uint32_t> out;
  for (const std::string& item : split_list(value)) {
    long long v = parse_integer(item, line, key);
    if (v < 1 || v > 0xffff)
      throw Error("line " + std::to_string(line) + ": " + key +
                  " entries must be in [1, 65535]");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace

GermFile parse_germ_file(std::string_view text) {
  GermFile f;
  std::set<std::string> seen;
  bool in_components = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string line(raw);
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;

    if (in_components) {
      if (line.find('=') != std::string::npos)
        throw Error("line " + std::to_string(line_no) +
                    ": key after the components section");
      f.components.push_back(line);
      continue;
    }
    if (line == "components:") {
      in_components = true;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("line " + std::to_string(line_no) +
                  ": expected 'key = value' or 'components:'");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (!seen.insert(key).second)
      throw Error("line " + std::to_string(line_no) + ": duplicate key '" +
                  key + "'");
    if (value.empty())
      throw Error("line " + std::to_string(line_no) + ": empty value for '" +
                  key + "'");
    if (key == "source_vars") {
      f.source_vars = split_list(value);
    } else if (key == "target_vars") {
      f.target_vars = split_list(value);
    } else if (key == "weights") {
      f.weights = parse_positive_list(value, line_no, "weights");
    } else if (key == "degrees") {
      f.degrees = parse_positive_list(value, line_no, "degrees");
    } else if (key == "characteristic") {
      long long v = parse_integer(value, line_no, "characteristic");
      if (v < 2 || v > 0x7fffffff)
        throw Error("line " + std::to_string(line_no) +
                    ": characteristic out of range");
      f.characteristic = static_cast<std::uint32_t>(v);
    } else if (key == "mu_image") {
      f.mu_image = parse_integer(value, line_no, "mu_image");
    } else if (key == "family_k") {
      f.family_k = parse_integer(value, line_no, "family_k");
    } else {
      throw Error("line " + std::to_string(line_no) + ": unknown key '" +
                  key + "'");
    }
  }
  for (const char* key : {"source_vars", "target_vars", "weights", "degrees"})
    if (!seen.count(key))
      throw Error(std::string("missing required key '") + key + "'");
  if (f.components.empty()) throw Error("missing components section");
  return f;
}

GermFile read_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_file(buf.str());
}

MapGerm load_germ(const GermFile& file,
                  std::optional<std::uint32_t> char_override) {
  std::uint32_t p = char_override ? *char_override : file.characteristic;
  return MapGerm(PrimeField(p), file.source_vars, file.weights,
                 file.target_vars, file.degrees, file.components);
}

std::optional<long long> file_mu(const GermFile& file) {
  if (file.mu_image) return file.mu_image;
  if (file.family_k) return mu_image_family(*file.family_k);
  return std::nullopt;
}

}  // namespace germcalc
