#ifndef DIVPS_IO_HPP
#define DIVPS_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "divps/core.hpp"
#include "divps/geometry.hpp"

namespace divps {

// A configuration document: either the dividon form (`dividons`) or the
// unit form (`unit_dividons`). External labels may be any distinct positive
// integers; they are mapped onto dense labels 1..n in ascending order and
// the table is kept for round-tripping.
struct config_document {
  std::optional<div_point_set> dps;
  std::optional<unit_div_point_set> udps;
  std::vector<int> external_labels;  // external label of internal label i at [i], [0] unused

  int external_of(int internal) const { return external_labels[static_cast<std::size_t>(internal)]; }
};

// Parses a JSON configuration with fields `points` and `dividons` (records
// {divider:[a,b], divs:[[...],[...]]}) or `unit_dividons` (records
// {divider:[a,b], tbd:[c,d], same_div:0|1}). Throws bad_config, plus the
// structural validation errors.
config_document load_config(const std::string& text);

// Canonical JSON output: arrays ascending, dividons by divider, unit
// dividons by (divider, tbd); labels written through the external table
// (identity when absent).
std::string save_dps(const div_point_set& x, const std::vector<int>& external_labels = {});
std::string save_udps(const unit_div_point_set& u, const std::vector<int>& external_labels = {});

// Point files: CSV rows `label,x,y`, or a JSON document with a `points`
// array of {label,x,y} records. A leading `{` selects JSON.
planar_point_set load_points(const std::string& text);

std::string read_file(const std::string& path);   // throws bad_config
void write_file(const std::string& path, const std::string& content);

}  // namespace divps

#endif
