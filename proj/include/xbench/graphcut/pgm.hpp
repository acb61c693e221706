#pragma once

#include <filesystem>
#include <iosfwd>

#include "xbench/graphcut/image.hpp"

namespace xbench::graphcut {

// Reads P2 (ASCII) or P5 (binary) PGM with maxval <= 255. Comments are
// accepted in the header. Throws ParseError on malformed input.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm(const std::filesystem::path& path);

enum class PgmEncoding { ascii, binary };

void write_pgm(const GrayImage& img, std::ostream& out, PgmEncoding encoding = PgmEncoding::binary);
void write_pgm(const GrayImage& img, const std::filesystem::path& path,
               PgmEncoding encoding = PgmEncoding::binary);

}  // namespace xbench::graphcut
