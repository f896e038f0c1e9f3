// sample_io.hpp — Homodyne sample files: first line `# theta=<radians>`,
// then one quadrature value per line.

#pragma once

#include "phasediff/homodyne.hpp"

#include <span>
#include <string>
#include <vector>

namespace phasediff::sample_io {

struct SampleFile {
  std::string path;
  double theta = 0.0;
  std::vector<double> records;
};

/// Parses a sample file; errors name the offending line.
SampleFile read_sample_file(const std::string& path);

/// Round-trip exact (17 significant digits).
void write_sample_file(const std::string& path, double theta,
                       std::span<const double> records);

/// Order-preserving conversion to HomodyneSample records.
std::vector<homodyne::HomodyneSample> ingest_samples(const std::string& path);

}  // namespace phasediff::sample_io
