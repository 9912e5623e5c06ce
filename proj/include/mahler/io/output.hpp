#pragma once

#include "mahler/approx/best_poly.hpp"
#include "mahler/approx/classify.hpp"

#include <map>
#include <string>
#include <vector>

namespace mahler::io {

/// RFC 4180 field quoting: quoted when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string csv_line(const std::vector<std::string>& fields);

/// Header and rows of the ApproxRecord table schema.
std::string approx_csv_header();
std::string approx_csv_row(const ApproxRecord& r);
/// Skipped cells keep their (d, H) and carry the error in the coeffs column.
std::string approx_csv_row(const TableRow& row);
std::string spectra_csv(const std::vector<SpectraCell>& cells, int d);

/// key=value file; '#' starts a comment, blank lines ignored.
/// Throws ParseError on a line without '='.
std::map<std::string, std::string> read_config(const std::string& path);

struct RunConfig {
  long precision_cap = 1L << 20;
  unsigned threads = 0;
  std::string output_dir = ".";
};
/// Applies known keys (precision_cap, threads, output_dir); rejects others.
RunConfig apply_config(const std::map<std::string, std::string>& kv, RunConfig base = {});

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

struct RunManifest {
  std::string command_line;
  std::map<std::string, std::string> config;
  long precision_cap = 0;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string wall_clock;                      // ISO 8601 UTC start time
  double elapsed_seconds = 0;
  std::map<std::string, std::string> digests;  // file name -> sha256
};
std::string manifest_json(const RunManifest& m);

/// Writes `text` to dir/name, creating dir. Returns the path.
std::string write_file(const std::string& dir, const std::string& name, const std::string& text);

}  // namespace mahler::io
