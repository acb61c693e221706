#include "xbench/graphcut/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "xbench/errors.hpp"

namespace xbench::graphcut {

namespace {

constexpr std::size_t kMaxPgmPixels = std::size_t{1} << 28;

// Header tokens are separated by whitespace; '#' starts a comment running to
// the end of the line.
class HeaderReader {
 public:
  explicit HeaderReader(std::istream& in) : in_(in) {}

  std::size_t next_number(const char* what) {
    skip_space_and_comments();
    std::string digits;
    while (std::isdigit(in_.peek())) digits.push_back(static_cast<char>(in_.get()));
    if (digits.empty() || digits.size() > 9) {
      throw ParseError(std::string("PGM: bad ") + what, line_);
    }
    return std::stoul(digits);
  }

  // Exactly one whitespace byte separates maxval from binary raster data.
  void consume_single_whitespace() {
    const int c = in_.get();
    if (c == EOF || !std::isspace(c)) throw ParseError("PGM: missing whitespace before raster", line_);
    if (c == '\n') ++line_;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  void skip_space_and_comments() {
    while (true) {
      const int c = in_.peek();
      if (c == '#') {
        while (in_.peek() != '\n' && in_.peek() != EOF) in_.get();
      } else if (c != EOF && std::isspace(c)) {
        if (in_.get() == '\n') ++line_;
      } else {
        return;
      }
    }
  }

  std::istream& in_;
  std::size_t line_ = 1;
};

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
    throw ParseError("PGM: expected magic P2 or P5", 1);
  }
  const bool binary = magic[1] == '5';

  HeaderReader header(in);
  const std::size_t width = header.next_number("width");
  const std::size_t height = header.next_number("height");
  const std::size_t maxval = header.next_number("maxval");
  if (width == 0 || height == 0) throw ParseError("PGM: zero dimension", header.line());
  if (maxval == 0 || maxval > 255) throw ParseError("PGM: maxval must be 1..255", header.line());
  if (width > kMaxPgmPixels / height) throw ParseError("PGM: image too large", header.line());

  std::vector<std::uint8_t> pixels(width * height);
  if (binary) {
    header.consume_single_whitespace();
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(pixels.size())) {
      throw ParseError("PGM: truncated raster", header.line());
    }
    for (auto v : pixels) {
      if (v > maxval) throw ParseError("PGM: sample exceeds maxval", header.line());
    }
  } else {
    for (auto& v : pixels) {
      const std::size_t sample = header.next_number("sample");
      if (sample > maxval) throw ParseError("PGM: sample exceeds maxval", header.line());
      v = static_cast<std::uint8_t>(sample);
    }
  }
  if (maxval != 255) {
    for (auto& v : pixels) v = static_cast<std::uint8_t>((v * 255u + maxval / 2) / maxval);
  }
  return GrayImage(width, height, std::move(pixels));
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  return read_pgm(in);
}

void write_pgm(const GrayImage& img, std::ostream& out, PgmEncoding encoding) {
  out << (encoding == PgmEncoding::binary ? "P5" : "P2") << '\n'
      << img.width() << ' ' << img.height() << '\n'
      << 255 << '\n';
  if (encoding == PgmEncoding::binary) {
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.size()));
    return;
  }
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (x) out << ' ';
      out << static_cast<unsigned>(img.at(x, y));
    }
    out << '\n';
  }
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path, PgmEncoding encoding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_pgm(img, out, encoding);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace xbench::graphcut
