#ifndef DIVPS_ERROR_HPP
#define DIVPS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace divps {

enum class errc {
  // structural validation
  wrong_dividon_count,
  overlapping_divs,
  bad_divider_size,
  duplicate_divider,
  // phi / psi preconditions
  tbd_not_in_divs,
  not_two_tbd,
  // transformations
  too_few_points,
  more_than_two_divs,
  inconsistent_same_div,
  // catalog / classification
  not_four_points,
  bad_n,
  unknown_name,
  // sub configurations
  subset_too_small,
  not_a_subset,
  bad_parameters,
  // geometry
  collinear_triple,
  duplicate_point,
  coordinate_out_of_range,
  // sat pipeline
  out_of_range,
  too_large,
  partial_assignment,
  malformed_dimacs,
  resource_limit,
  // io
  bad_config,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
  {
  }

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace divps

#endif
