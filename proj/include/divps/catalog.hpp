#ifndef DIVPS_CATALOG_HPP
#define DIVPS_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "divps/core.hpp"

namespace divps {

enum class config_name { conc41, conv4, xempty4, conv5, conc51, conc52 };

// Canonical spellings used by the CLI --name selector.
const char* config_name_spelling(config_name n);
std::optional<config_name> parse_config_name(const std::string& s);

// The exact labeled reference configurations.
div_point_set named_config(config_name n);

// Convex-position configuration on points {1..n}: for each divider, one div
// holds the labels strictly between its endpoints, the other holds the rest.
div_point_set conv_n(int n);

// A structure-preserving relabeling, mapping[l] = image of label l
// (index 0 unused).
using bijection = std::vector<int>;

// Searches for a dividon-structure-preserving bijection between two
// configurations; nullopt when none exists.
std::optional<bijection> isomorphism(const div_point_set& a, const div_point_set& b);

// Lexicographically minimal serialization over all relabelings. Two
// configurations share a canonical form iff they are isomorphic.
// Exponential in the point count; intended for desk-scale inputs.
std::string canonical_form(const div_point_set& x);

enum class four_class { concave_one, convex, unlawful };

const char* four_class_name(four_class c);

// Classifies a 4-point configuration against the catalog. Throws
// not_four_points.
four_class classify4(const div_point_set& x);

// Classification keyed by the 6 psi bits of a 4-point configuration, bit k
// for the k-th divider in lexicographic order. Backed by a table built from
// classify4 over all 64 configurations.
four_class classify4_bits(unsigned bits);

// psi bits of a 4-point configuration, for use with classify4_bits.
unsigned psi_bits4(const div_point_set& x);

}  // namespace divps

#endif
