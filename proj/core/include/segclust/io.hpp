#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "segclust/signal.hpp"

namespace segclust {

/// Filesystem-level failure (unreadable/unwritable path). Malformed file
/// contents raise std::invalid_argument with the offending line number.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Formats with 12 significant digits ("%.12g"), '.' decimal separator.
std::string format_real(double v);

/// Signal files: one decimal real per line, UTF-8, LF line endings.
void write_signal(const std::filesystem::path& path, const Signal& y);
Signal read_signal(const std::filesystem::path& path);

/// Ground-truth tables: header "cluster_index,level,seg_start,seg_end",
/// one row per segment in positional order, cluster indices 1-based.
void write_spec_table(const std::filesystem::path& path, const PiecewiseSpec& spec);
PiecewiseSpec read_spec_table(const std::filesystem::path& path);

}  // namespace segclust
