#pragma once

#include "levyclt/simulate.hpp"

#include <string>

namespace levyclt {

// Columnar binary format: magic "LCLB", version u16, t f64, n u32, d u32,
// row-major f64 payload, trailing seed u64. Little-endian as written.
void write_lclb(const SampleBatch& batch, const std::string& path);
SampleBatch read_lclb(const std::string& path);

// CSV with '.' decimal separator and 17 significant digits.
void write_batch_csv(const SampleBatch& batch, const std::string& path);

} // namespace levyclt
