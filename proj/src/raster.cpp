#include "hs/raster.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

namespace hs {

void SliceSpec::validate(int k) const {
    auto dim_ok = [&](const std::vector<std::complex<double>>& v) {
        return static_cast<int>(v.size()) == k;
    };
    if (!dim_ok(base) || !dim_ok(dir_u) || !dim_ok(dir_v))
        throw std::invalid_argument("slice: base/dir dimension mismatch");
    if (width < 1 || height < 1) throw std::invalid_argument("slice: resolution must be positive");
    if (!(u_min < u_max) || !(v_min < v_max)) throw std::invalid_argument("slice: empty window");
    double nu = sup_norm(dir_u), nv = sup_norm(dir_v);
    if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("slice: zero direction");
    // dir_u, dir_v must be linearly independent over C: some 2x2 minor nonzero
    double best = 0.0;
    for (std::size_t a = 0; a < dir_u.size(); ++a)
        for (std::size_t b = a + 1; b < dir_u.size(); ++b)
            best = std::max(best, std::abs(dir_u[a] * dir_v[b] - dir_u[b] * dir_v[a]));
    if (best <= 1e-12 * nu * nv) throw std::invalid_argument("slice: directions are dependent");
}

int RasterGrid::escaped_count() const {
    int n = 0;
    for (const auto& c : cells) n += c.escaped ? 1 : 0;
    return n;
}

RasterGrid raster_slice(const FloatMap& F, int d, const SliceSpec& spec, const GreenOptions& opts,
                        int threads) {
    spec.validate(F.dim());
    RasterGrid grid;
    grid.width = spec.width;
    grid.height = spec.height;
    grid.cells.resize(static_cast<std::size_t>(spec.width) * static_cast<std::size_t>(spec.height));

    // surface option errors (degree, radius) here; workers must not throw
    {
        std::vector<std::complex<double>> probe(spec.base.begin(), spec.base.end());
        green_plus(F, d, probe, opts);
    }

    auto run_rows = [&](int row_begin, int row_end) {
        std::vector<std::complex<double>> z(static_cast<std::size_t>(F.dim()));
        for (int i = row_begin; i < row_end; ++i) {
            double v = spec.v_min + (spec.v_max - spec.v_min) * (i + 0.5) / spec.height;
            for (int j = 0; j < spec.width; ++j) {
                double u = spec.u_min + (spec.u_max - spec.u_min) * (j + 0.5) / spec.width;
                for (std::size_t t = 0; t < z.size(); ++t)
                    z[t] = spec.base[t] + u * spec.dir_u[t] + v * spec.dir_v[t];
                grid.cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(spec.width) +
                           static_cast<std::size_t>(j)] = green_plus(F, d, z, opts);
            }
        }
    };

    threads = std::max(1, std::min(threads, spec.height));
    if (threads == 1) {
        run_rows(0, spec.height);
    } else {
        std::vector<std::thread> pool;
        int chunk = (spec.height + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int lo = t * chunk, hi = std::min(spec.height, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

std::string encode_pgm(const RasterGrid& grid, double v_cap) {
    if (v_cap <= 0.0) throw std::invalid_argument("encode_pgm: v_cap must be positive");
    std::string out = "P5\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) + "\n255\n";
    out.reserve(out.size() + grid.cells.size());
    for (const auto& c : grid.cells) {
        double g = 255.0 * std::min(c.value / v_cap, 1.0);
        out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(g))));
    }
    return out;
}

std::string encode_csv(const RasterGrid& grid) {
    std::string out;
    char buf[64];
    for (const auto& c : grid.cells) {
        std::snprintf(buf, sizeof(buf), "%.17g,%d\n", c.value, c.iterations_used);
        out += buf;
    }
    return out;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace hs
