#pragma once

#include <string>
#include <vector>

#include "shellbar/study.hpp"

namespace shellbar {

inline constexpr const char* kResultsHeader =
    "case,method,degree,mesh,thickness,monitor,normalized,rel_error,rank,seconds";

/// CSV text: header plus one row per result in sorted order. Numbers use 17
/// significant digits; `rank` is empty when not computed and `seconds` is
/// empty unless `with_timing` (keeps repeated runs byte-identical).
std::string format_results(std::vector<StudyResult> results, bool with_timing = false);

/// Throws ArgumentError for an empty result list and IoError if the file
/// cannot be written.
void write_results(const std::vector<StudyResult>& results, const std::string& path, bool with_timing = false);

/// Parses a file written by write_results (error text is not stored).
std::vector<StudyResult> read_results(const std::string& path);

}  // namespace shellbar
