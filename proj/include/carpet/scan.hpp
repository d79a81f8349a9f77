#pragma once

#include <string>

namespace carpet {

enum class ScanComputation { Cohomology, Beta, Alpha, NormalK, ClassifyFano, ClassifyMukai };
enum class ScanFormat { Text, Json, Csv };

// Inclusive manifest range. Manifest bounds are machine integers; the math
// behind each point still runs in arbitrary precision.
struct Span {
  long long lo = 0;
  long long hi = 0;
};

// A grid scan: deterministic row order (lexicographic in (e, a, b), or
// (n, r, g) for classification), byte-identical output for any worker count.
struct ScanManifest {
  ScanComputation computation = ScanComputation::Beta;
  Span e{0, 0};
  Span a{1, 1};
  Span b{1, 1};
  Span n{4, 4};
  Span r{2, 2};
  Span g{3, 3};
  long long k = 2;  // NormalK only
  ScanFormat format = ScanFormat::Csv;
  std::string out_path;  // empty: caller handles the rendered text
};

// Renders the whole scan. Points are evaluated in parallel; rows are
// buffered and emitted in canonical order. The b range is intersected with
// b >= ae+1 (and a with a >= 1) at every point. Per-point rule gaps become
// status values in the row, never exceptions.
std::string run_scan(const ScanManifest& manifest, unsigned workers);

// run_scan plus an atomic write to manifest.out_path: output lands via a
// temporary file and rename, so failures leave nothing behind.
void write_scan_file(const ScanManifest& manifest, unsigned workers);

ScanManifest parse_manifest_json(const std::string& text);

// CARPET_EXT_THREADS when set, hardware concurrency otherwise.
unsigned default_workers();

}  // namespace carpet
