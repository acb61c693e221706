#include "xbench/graphcut/image.hpp"

#include <algorithm>
#include <string>

#include "xbench/errors.hpp"

namespace xbench::graphcut {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(width * height, fill) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != width * height) {
    raise<ShapeError>("GrayImage: " + std::to_string(width) + "x" + std::to_string(height) +
                      " needs " + std::to_string(width * height) + " pixels, got " +
                      std::to_string(pixels_.size()));
  }
}

GrayImage threshold(const GrayImage& img, std::uint8_t t) {
  GrayImage out(img.width(), img.height());
  for (std::size_t i = 0; i < img.size(); ++i) out[i] = img[i] >= t ? 255 : 0;
  return out;
}

Pattern parse_pattern(std::string_view name) {
  if (name == "blobs") return Pattern::blobs;
  if (name == "stripes") return Pattern::stripes;
  if (name == "noise") return Pattern::noise;
  raise<ConfigError>("unknown image pattern '" + std::string(name) +
                     "' (expected blobs, stripes or noise)");
}

std::string_view pattern_name(Pattern p) noexcept {
  switch (p) {
    case Pattern::blobs:
      return "blobs";
    case Pattern::stripes:
      return "stripes";
    case Pattern::noise:
      return "noise";
  }
  return "noise";
}

namespace {

std::uint8_t clamp_u8(std::int64_t v) {
  return static_cast<std::uint8_t>(std::clamp<std::int64_t>(v, 0, 255));
}

}  // namespace

GrayImage generate_test_image(std::size_t width, std::size_t height, Pattern pattern, Rng& rng) {
  GrayImage img(width, height);
  const auto w = static_cast<std::int64_t>(width);
  const auto h = static_cast<std::int64_t>(height);

  switch (pattern) {
    case Pattern::noise:
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = clamp_u8(rng.next_int(0, 256));
      break;

    case Pattern::stripes: {
      const std::int64_t band = std::max<std::int64_t>(1, w / 8);
      for (std::int64_t y = 0; y < h; ++y) {
        for (std::int64_t x = 0; x < w; ++x) {
          const std::int64_t base = (x / band) % 2 == 0 ? 60 : 190;
          img.at(x, y) = clamp_u8(base + rng.next_int(-30, 31));
        }
      }
      break;
    }

    case Pattern::blobs: {
      // Dark noisy background with a few bright noisy discs.
      struct Disc {
        std::int64_t cx, cy, r;
      };
      const std::int64_t side = std::max<std::int64_t>(1, std::min(w, h));
      const std::int64_t count = 1 + (w * h) / 400;
      std::vector<Disc> discs;
      for (std::int64_t i = 0; i < count; ++i) {
        const std::int64_t cx = rng.next_int(0, std::max<std::int64_t>(1, w));
        const std::int64_t cy = rng.next_int(0, std::max<std::int64_t>(1, h));
        const std::int64_t r = 1 + rng.next_int(side / 10, side / 4 + 1);
        discs.push_back({cx, cy, r});
      }
      for (std::int64_t y = 0; y < h; ++y) {
        for (std::int64_t x = 0; x < w; ++x) {
          bool inside = false;
          for (const auto& d : discs) {
            const std::int64_t dx = x - d.cx;
            const std::int64_t dy = y - d.cy;
            if (dx * dx + dy * dy <= d.r * d.r) {
              inside = true;
              break;
            }
          }
          const std::int64_t base = inside ? 200 : 50;
          img.at(x, y) = clamp_u8(base + rng.next_int(-45, 46));
        }
      }
      break;
    }
  }
  return img;
}

}  // namespace xbench::graphcut
