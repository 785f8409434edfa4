// SPDX-License-Identifier: Apache-2.0
//
// Grid files: 16-byte header ("TLWG", u16 version, u16 D, u16 P, u16 G,
// 4 reserved bytes) followed by little-endian float64 (re, im) pairs.
// Coefficient CSV: lambda_bits, j, k0[, k1], re, im.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tlwavelab/grid.hpp"

namespace tlwavelab {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint16_t kGridFileVersion = 1;

void write_grid(std::ostream& out, const GridFunction& f);
void write_grid_file(const std::string& path, const GridFunction& f);
/// The scale window of the returned spec is the widest admissible one.
GridFunction read_grid(std::istream& in);
GridFunction read_grid_file(const std::string& path);

void write_coefficients_csv(std::ostream& out, const CoefficientField& c, double threshold = 0.0);
void write_coefficients_csv_file(const std::string& path, const CoefficientField& c,
                                 double threshold = 0.0);
CoefficientField read_coefficients_csv(std::istream& in, const GridSpec& spec);
CoefficientField read_coefficients_csv_file(const std::string& path, const GridSpec& spec);

}  // namespace tlwavelab
