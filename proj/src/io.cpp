// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace tlwavelab {
namespace {

static_assert(std::endian::native == std::endian::little, "grid files assume a little-endian host");

constexpr std::array<char, 4> kMagic{'T', 'L', 'W', 'G'};

void put_u16(std::ostream& out, std::uint16_t v) {
  const char bytes[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
  out.write(bytes, 2);
}

std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

void write_grid(std::ostream& out, const GridFunction& f) {
  out.write(kMagic.data(), 4);
  put_u16(out, kGridFileVersion);
  put_u16(out, static_cast<std::uint16_t>(f.spec.dim));
  put_u16(out, static_cast<std::uint16_t>(f.spec.period_exp));
  put_u16(out, static_cast<std::uint16_t>(f.spec.grid_exp));
  const char reserved[4] = {0, 0, 0, 0};
  out.write(reserved, 4);
  out.write(reinterpret_cast<const char*>(f.samples.data()),
            static_cast<std::streamsize>(f.samples.size() * sizeof(cplx)));
  if (!out) throw IoError("failed writing grid data");
}

void write_grid_file(const std::string& path, const GridFunction& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_grid(out, f);
}

GridFunction read_grid(std::istream& in) {
  unsigned char header[16];
  if (!in.read(reinterpret_cast<char*>(header), 16)) throw IoError("grid file: truncated header");
  if (std::memcmp(header, kMagic.data(), 4) != 0) throw IoError("grid file: bad magic");
  if (get_u16(header + 4) != kGridFileVersion) throw IoError("grid file: unsupported version");
  GridSpec spec;
  try {
    spec = GridSpec::make(get_u16(header + 6), get_u16(header + 8), get_u16(header + 10));
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("grid file: invalid header: ") + e.what());
  }
  GridFunction f(spec);
  const auto bytes = static_cast<std::streamsize>(f.samples.size() * sizeof(cplx));
  if (!in.read(reinterpret_cast<char*>(f.samples.data()), bytes)) {
    throw IoError("grid file: truncated sample data");
  }
  if (in.peek() != std::char_traits<char>::eof()) throw IoError("grid file: trailing bytes");
  return f;
}

GridFunction read_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_grid(in);
}

void write_coefficients_csv(std::ostream& out, const CoefficientField& c, double threshold) {
  const int dim = c.spec().dim;
  out << "lambda_bits,j,k0" << (dim == 2 ? ",k1" : "") << ",re,im\n";
  out << std::setprecision(17);
  c.for_each(
      [&](const WaveletIndex& idx, cplx v) {
        out << idx.label.bits << ',' << idx.j << ',' << idx.k[0];
        if (dim == 2) out << ',' << idx.k[1];
        out << ',' << v.real() << ',' << v.imag() << '\n';
      },
      threshold);
  if (!out) throw IoError("failed writing coefficient CSV");
}

void write_coefficients_csv_file(const std::string& path, const CoefficientField& c,
                                 double threshold) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_coefficients_csv(out, c, threshold);
}

CoefficientField read_coefficients_csv(std::istream& in, const GridSpec& spec) {
  CoefficientField c(spec);
  std::string line;
  if (!std::getline(in, line)) throw IoError("coefficient CSV: missing header");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    WaveletIndex idx;
    double re = 0.0;
    double im = 0.0;
    row >> idx.label.bits >> idx.j >> idx.k[0];
    if (spec.dim == 2) row >> idx.k[1];
    row >> re >> im;
    if (!row) throw IoError("coefficient CSV: malformed line " + std::to_string(line_no));
    try {
      c.set(idx, {re, im});
    } catch (const std::invalid_argument& e) {
      throw IoError("coefficient CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return c;
}

CoefficientField read_coefficients_csv_file(const std::string& path, const GridSpec& spec) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_coefficients_csv(in, spec);
}

}  // namespace tlwavelab
