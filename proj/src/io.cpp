#include "stencilnet/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace stencilnet {

namespace {

constexpr char kMagic[4] = {'S', 'T', 'N', '1'};

void put_u64(std::ostream& os, uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& os, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(os, bits);
}

double get_f64(std::istream& is) {
    uint64_t bits = get_u64(is);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

void write_stn1_matrix(const std::string& path, const Grid& grid, double dt, int n_rows,
                       std::span<const double> values) {
    if (values.size() != static_cast<size_t>(n_rows) * grid.n_points)
        throw io_error("stn1 write: value count does not match shape");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + path);
    os.write(kMagic, 4);
    put_u64(os, static_cast<uint64_t>(grid.n_points));
    put_u64(os, static_cast<uint64_t>(n_rows));
    put_f64(os, grid.length);
    put_f64(os, dt);
    for (double v : values) put_f64(os, v);
    if (!os) throw io_error("write failed: " + path);
}

void write_stn1(const std::string& path, const Trajectory& traj) {
    write_stn1_matrix(path, traj.grid, traj.dt, traj.n_steps, traj.data);
}

Trajectory read_stn1(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open: " + path);

    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw io_error("not an STN1 file: " + path);

    const uint64_t nx = get_u64(is);
    const uint64_t nt = get_u64(is);
    const double length = get_f64(is);
    const double dt = get_f64(is);
    if (!is || nx < 3 || nt < 1 || !(length > 0.0) || !(dt > 0.0))
        throw io_error("corrupt STN1 header: " + path);

    is.seekg(0, std::ios::end);
    const auto file_size = static_cast<uint64_t>(is.tellg());
    const uint64_t expected = 4 + 8 * 4 + 8 * nx * nt;
    if (file_size != expected)
        throw io_error("STN1 size mismatch (" + std::to_string(file_size) + " vs expected " +
                       std::to_string(expected) + "): " + path);
    is.seekg(36);

    Trajectory traj = make_trajectory(make_grid(length, static_cast<int>(nx)), dt,
                                      static_cast<int>(nt));
    for (double& v : traj.data) v = get_f64(is);
    if (!is) throw io_error("truncated STN1 payload: " + path);
    return traj;
}

bool files_identical(const std::string& a, const std::string& b) {
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    if (!fa || !fb) throw io_error("cannot open files for comparison");
    std::string da((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string db((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    return da == db;
}

}  // namespace stencilnet
