#include "phasediff/sample_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace phasediff::sample_io {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& path, int line, const std::string& text) {
  size_t consumed = 0;
  double value;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    fail(path, line, "malformed number '" + text + "'");
  }
  // allow trailing whitespace only
  for (size_t i = consumed; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      fail(path, line, "malformed number '" + text + "'");
  if (!std::isfinite(value)) fail(path, line, "non-finite value");
  return value;
}

}  // namespace

SampleFile read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sample file: " + path);

  SampleFile file;
  file.path = path;

  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) fail(path, 1, "missing header");
  const std::string prefix = "# theta=";
  if (line.rfind(prefix, 0) != 0)
    fail(path, 1, "expected header '# theta=<radians>'");
  file.theta = parse_double(path, 1, line.substr(prefix.size()));

  while (std::getline(in, line)) {
    ++line_no;
    // tolerate blank trailing lines
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    file.records.push_back(parse_double(path, line_no, line));
  }
  if (file.records.empty()) fail(path, line_no, "no sample records");
  return file;
}

void write_sample_file(const std::string& path, double theta,
                       std::span<const double> records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write sample file: " + path);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  out << "# theta=" << buf << "\n";
  for (double x : records) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<homodyne::HomodyneSample> ingest_samples(const std::string& path) {
  const SampleFile file = read_sample_file(path);
  std::vector<homodyne::HomodyneSample> samples;
  samples.reserve(file.records.size());
  for (double x : file.records) samples.push_back({x, file.theta});
  return samples;
}

}  // namespace phasediff::sample_io
