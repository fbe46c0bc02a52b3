// 2-D slice rasterization of Green estimates.
//
// Pixel (row i, col j) maps to base + u*dir_u + v*dir_v with
//   u = u_min + (u_max - u_min) * (j + 0.5) / width
//   v = v_min + (v_max - v_min) * (i + 0.5) / height
// Grids are row-major starting at row 0 = v_min. Pixels are independent, so
// the worker split cannot change results: identical spec and options give
// bit-identical grids at any thread count.

#pragma once

#include <string>

#include "hs/green.hpp"

namespace hs {

struct SliceSpec {
    std::vector<std::complex<double>> base;
    std::vector<std::complex<double>> dir_u;
    std::vector<std::complex<double>> dir_v;
    double u_min = -2.0, u_max = 2.0;
    double v_min = -2.0, v_max = 2.0;
    int width = 256, height = 256;

    void validate(int k) const;  // throws std::invalid_argument
};

struct RasterGrid {
    int width = 0, height = 0;
    std::vector<GreenEstimate> cells;  // row-major

    const GreenEstimate& at(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                     static_cast<std::size_t>(col)];
    }
    int escaped_count() const;
};

RasterGrid raster_slice(const FloatMap& F, int d, const SliceSpec& spec,
                        const GreenOptions& opts = {}, int threads = 1);

// binary "P5" with gray = round(255 * min(value / v_cap, 1))
std::string encode_pgm(const RasterGrid& grid, double v_cap);
// one "value,iterations" line per pixel, row-major
std::string encode_csv(const RasterGrid& grid);

void write_file(const std::string& path, const std::string& bytes);

}  // namespace hs
