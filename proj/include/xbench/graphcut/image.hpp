#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "xbench/rng.hpp"

namespace xbench::graphcut {

// 8-bit grayscale image, row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  // Throws ShapeError if pixels.size() != width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t x, std::size_t y) const noexcept { return pixels_[y * width_ + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) noexcept { return pixels_[y * width_ + x]; }
  std::uint8_t operator[](std::size_t i) const noexcept { return pixels_[i]; }
  std::uint8_t& operator[](std::size_t i) noexcept { return pixels_[i]; }

  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// pixel >= t -> 255, else 0.
GrayImage threshold(const GrayImage& img, std::uint8_t t);

enum class Pattern { blobs, stripes, noise };

// Throws ConfigError for an unknown name.
Pattern parse_pattern(std::string_view name);
std::string_view pattern_name(Pattern p) noexcept;

// Deterministic synthetic input for a given rng state.
GrayImage generate_test_image(std::size_t width, std::size_t height, Pattern pattern, Rng& rng);

}  // namespace xbench::graphcut
