#pragma once

#include <string>

#include "derivlab/globalize.hpp"
#include "derivlab/jordan.hpp"
#include "derivlab/localcheck.hpp"

namespace derivlab {

std::string to_json(const RingSpec& spec);
RingSpec ring_spec_from_json(const std::string& text);

/// Accepts the JSON form or the compact spellings gf(p), gf(p^k), q |
/// rationals, z | integers, z/m | mod(m).
RingSpec ring_spec_from_string(const std::string& text);

std::string to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& ring, const std::string& text);

/// Map files: {"ring": ..., "n": ..., "carrier": "full"|"jordan",
/// "basis_images": [matrix, ...]} in module basis order.
std::string to_json(const AdditiveMap& f);
AdditiveMap map_from_json(const std::string& text);

std::string to_json(const Verdict& v);
std::string to_json(const ReconstructReport& r);
std::string to_json(const JordanGlobalizeOutcome& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Copy of a report with every "timing_ms" / "timings_ms" /
/// "elapsed_seconds" field removed; the determinism contract compares
/// reports through this.
std::string report_without_timings(const std::string& report_json);

} // namespace derivlab
