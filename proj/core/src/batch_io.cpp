#include "levyclt/batch_io.hpp"
#include "levyclt/errors.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

namespace levyclt {
namespace {

constexpr char kMagic[4] = {'L', 'C', 'L', 'B'};
constexpr std::uint16_t kVersion = 1;

template <typename T>
void write_pod(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
void read_pod(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
}

} // namespace

void write_lclb(const SampleBatch& batch, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open for writing: " + path);
    os.write(kMagic, 4);
    write_pod(os, kVersion);
    write_pod(os, batch.t);
    write_pod(os, batch.n);
    write_pod(os, batch.d);
    os.write(reinterpret_cast<const char*>(batch.values.data()),
             static_cast<std::streamsize>(batch.values.size() * sizeof(double)));
    write_pod(os, batch.seed);
    if (!os)
        throw IoError("write failed: " + path);
}

SampleBatch read_lclb(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw IoError("cannot open for reading: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("bad magic in " + path);
    std::uint16_t version = 0;
    read_pod(is, version);
    if (version != kVersion)
        throw IoError("unsupported batch version in " + path);
    SampleBatch batch;
    read_pod(is, batch.t);
    read_pod(is, batch.n);
    read_pod(is, batch.d);
    batch.values.resize(static_cast<size_t>(batch.n) * batch.d);
    is.read(reinterpret_cast<char*>(batch.values.data()),
            static_cast<std::streamsize>(batch.values.size() * sizeof(double)));
    read_pod(is, batch.seed);
    if (!is)
        throw IoError("truncated batch file: " + path);
    return batch;
}

void write_batch_csv(const SampleBatch& batch, const std::string& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os)
        throw IoError("cannot open for writing: " + path);
    for (std::uint32_t j = 0; j < batch.d; ++j)
        os << (j ? ",x" : "x") << j;
    os << "\n";
    char buf[40];
    for (std::uint32_t i = 0; i < batch.n; ++i) {
        const double* r = batch.row(i);
        for (std::uint32_t j = 0; j < batch.d; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", r[j]);
            if (j)
                os << ',';
            os << buf;
        }
        os << "\n";
    }
    if (!os)
        throw IoError("write failed: " + path);
}

} // namespace levyclt
