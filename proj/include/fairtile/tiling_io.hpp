#pragma once

#include <string>

#include "fairtile/patch.hpp"
#include "fairtile/verify.hpp"

namespace fairtile {

// The document is malformed: broken JSON, missing fields, wrong version.
class TilingFormatError : public Error {
 public:
  using Error::Error;
};

// The document parses but its geometry violates the tiling contract
// (non-convex pentagon, wrong vertex count per pentagon, unsorted ids).
class TilingValidationError : public Error {
 public:
  using Error::Error;
};

// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

// Canonical byte-deterministic JSON document (format_version 1): coordinates
// as shortest round-trip decimals, targets as decimal strings, pentagons
// sorted by id.
std::string serialize_tiling(const Tiling& tiling);

Tiling parse_tiling(const std::string& text);

// JSON verification report; non-finite measurements serialize as null.
std::string serialize_report(const VerifyReport& report);

// One SVG polygon per pentagon in id order, fill keyed by pentagon index,
// viewBox fitted to the bounding box with a 5% margin.
std::string render_svg(const Tiling& tiling);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fairtile
