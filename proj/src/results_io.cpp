#include "shellbar/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shellbar/error.hpp"

namespace shellbar {
namespace {

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_results(std::vector<StudyResult> results, bool with_timing) {
  sort_results(results);
  std::string out = kResultsHeader;
  out += '\n';
  for (const StudyResult& r : results) {
    out += r.case_name + ',' + to_string(r.method) + ',' + std::to_string(r.degree) + ',' + std::to_string(r.mesh) +
           ',' + number(r.thickness) + ',' + number(r.monitor) + ',' + number(r.normalized) + ',' +
           number(r.rel_error) + ',' + (r.rank >= 0 ? std::to_string(r.rank) : "") + ',' +
           (with_timing ? number(r.seconds) : "") + '\n';
  }
  return out;
}

void write_results(const std::vector<StudyResult>& results, const std::string& path, bool with_timing) {
  if (results.empty()) throw ArgumentError("no results to write");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << format_results(results, with_timing);
  if (!f) throw IoError("failed writing '" + path + "'");
}

std::vector<StudyResult> read_results(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(f, line) || line != kResultsHeader) throw IoError("'" + path + "' is not a results file");
  std::vector<StudyResult> out;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto c = split(line);
    if (c.size() != 10) throw IoError("malformed results row: " + line);
    StudyResult r;
    try {
      r.case_name = c[0];
      const auto m = method_from_string(c[1]);
      if (!m) throw IoError("unknown method '" + c[1] + "'");
      r.method = *m;
      r.degree = std::stoi(c[2]);
      r.mesh = std::stoi(c[3]);
      r.thickness = std::stod(c[4]);
      r.monitor = std::stod(c[5]);
      r.normalized = std::stod(c[6]);
      r.rel_error = std::stod(c[7]);
      r.rank = c[8].empty() ? -1 : std::stoi(c[8]);
      r.seconds = c[9].empty() ? 0.0 : std::stod(c[9]);
    } catch (const std::logic_error&) {
      throw IoError("malformed results row: " + line);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace shellbar
