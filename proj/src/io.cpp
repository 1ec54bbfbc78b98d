#include "divps/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace divps {

namespace {

using nlohmann::json;

// external labels -> dense 1..n ascending; returns the inverse table
std::vector<int> make_label_table(const std::vector<int>& external, std::map<int, int>& to_internal)
{
  std::vector<int> sorted = external;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw error(errc::bad_config, "duplicate point label");
  std::vector<int> table(sorted.size() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1) throw error(errc::bad_config, "labels must be positive");
    to_internal[sorted[i]] = static_cast<int>(i) + 1;
    table[i + 1] = sorted[i];
  }
  return table;
}

label_set read_label_array(const json& arr, const std::map<int, int>& to_internal)
{
  if (!arr.is_array()) throw error(errc::bad_config, "expected a label array");
  label_set s = 0;
  for (const json& v : arr) {
    if (!v.is_number_integer()) throw error(errc::bad_config, "labels must be integers");
    const auto it = to_internal.find(v.get<int>());
    if (it == to_internal.end())
      throw error(errc::bad_config, "label " + v.dump() + " is not in points");
    s |= label_bit(it->second);
  }
  return s;
}

json label_array(label_set s, const std::vector<int>& external)
{
  json arr = json::array();
  std::vector<int> out;
  for (int l : labels_of(s)) out.push_back(external.empty() ? l : external[static_cast<std::size_t>(l)]);
  std::sort(out.begin(), out.end());
  for (int l : out) arr.push_back(l);
  return arr;
}

}  // namespace

config_document load_config(const std::string& text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::bad_config, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw error(errc::bad_config, "missing points array");

  std::vector<int> external;
  for (const json& v : doc["points"]) {
    if (!v.is_number_integer()) throw error(errc::bad_config, "points must be integers");
    external.push_back(v.get<int>());
  }
  if (external.size() > static_cast<std::size_t>(max_labels))
    throw error(errc::bad_config, "too many points");

  config_document out;
  std::map<int, int> to_internal;
  out.external_labels = make_label_table(external, to_internal);
  label_set points = 0;
  for (std::size_t i = 1; i < out.external_labels.size(); ++i)
    points |= label_bit(static_cast<int>(i));

  const bool has_dividons = doc.contains("dividons");
  const bool has_unit = doc.contains("unit_dividons");
  if (has_dividons == has_unit)
    throw error(errc::bad_config, "exactly one of dividons / unit_dividons required");

  if (has_dividons) {
    if (!doc["dividons"].is_array()) throw error(errc::bad_config, "dividons must be an array");
    std::vector<dividon> ds;
    for (const json& rec : doc["dividons"]) {
      if (!rec.is_object() || !rec.contains("divider") || !rec.contains("divs") ||
          !rec["divs"].is_array() || rec["divs"].size() != 2)
        throw error(errc::bad_config, "dividon records need divider and two divs");
      ds.push_back(make_dividon(read_label_array(rec["divider"], to_internal),
                                read_label_array(rec["divs"][0], to_internal),
                                read_label_array(rec["divs"][1], to_internal)));
    }
    out.dps = validate_dps(points, ds);
  } else {
    if (!doc["unit_dividons"].is_array())
      throw error(errc::bad_config, "unit_dividons must be an array");
    std::vector<unit_dividon> us;
    for (const json& rec : doc["unit_dividons"]) {
      if (!rec.is_object() || !rec.contains("divider") || !rec.contains("tbd") ||
          !rec.contains("same_div") || !rec["same_div"].is_number_integer())
        throw error(errc::bad_config, "unit dividon records need divider, tbd, same_div");
      const int bit = rec["same_div"].get<int>();
      if (bit != 0 && bit != 1) throw error(errc::bad_config, "same_div must be 0 or 1");
      us.push_back({read_label_array(rec["divider"], to_internal),
                    read_label_array(rec["tbd"], to_internal), static_cast<std::uint8_t>(bit)});
    }
    out.udps = validate_udps(points, us);
  }
  return out;
}

std::string save_dps(const div_point_set& x, const std::vector<int>& external_labels)
{
  json doc;
  doc["points"] = label_array(x.points, external_labels);
  json ds = json::array();
  for (const dividon& d : x.dividons) {
    json rec;
    rec["divider"] = label_array(d.divider, external_labels);
    rec["divs"] = json::array({label_array(d.div1, external_labels),
                               label_array(d.div2, external_labels)});
    ds.push_back(rec);
  }
  doc["dividons"] = ds;
  return doc.dump(2) + "\n";
}

std::string save_udps(const unit_div_point_set& u, const std::vector<int>& external_labels)
{
  json doc;
  doc["points"] = label_array(u.points, external_labels);
  json us = json::array();
  for (const unit_dividon& d : u.unit_dividons) {
    json rec;
    rec["divider"] = label_array(d.divider, external_labels);
    rec["tbd"] = label_array(d.tbd, external_labels);
    rec["same_div"] = static_cast<int>(d.same_div);
    us.push_back(rec);
  }
  doc["unit_dividons"] = us;
  return doc.dump(2) + "\n";
}

planar_point_set load_points(const std::string& text)
{
  planar_point_set pts;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw error(errc::bad_config, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("points") || !doc["points"].is_array())
      throw error(errc::bad_config, "missing points array");
    for (const json& rec : doc["points"]) {
      if (!rec.is_object() || !rec.contains("label") || !rec.contains("x") || !rec.contains("y"))
        throw error(errc::bad_config, "point records need label, x, y");
      pts.push_back({rec["label"].get<int>(), rec["x"].get<std::int64_t>(),
                     rec["y"].get<std::int64_t>()});
    }
    return pts;
  }
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    planar_point p;
    if (!(ls >> p.label >> p.x >> p.y))
      throw error(errc::bad_config, "bad point row at line " + std::to_string(line_no));
    std::string extra;
    if (ls >> extra) throw error(errc::bad_config, "trailing data at line " + std::to_string(line_no));
    pts.push_back(p);
  }
  return pts;
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::bad_config, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::bad_config, "cannot write " + path);
  out << content;
}

}  // namespace divps
