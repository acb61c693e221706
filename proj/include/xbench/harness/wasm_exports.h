#pragma once

// Flat numeric entry points exported by the WebAssembly module (and linked
// natively for testing). Each run_* call performs one repetition: untimed
// input setup from the seed, then the timed inner loop; it returns the elapsed
// milliseconds measured with the host clock (imported as env.now_ms in WASM).
// The repetition's checksum is then available through get_checksum (low 32
// bits) and get_checksum_hi (high 32 bits). Invalid parameters or kernel
// errors trap in WASM and throw in native builds.

#include <cstdint>

extern "C" {

double run_fill_array_rand(std::uint32_t seed_lo, std::uint32_t seed_hi,
                           std::uint32_t inner_iterations, std::uint32_t n);
double run_rec_fib(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner_iterations,
                   std::uint32_t n);
double run_int_compare(std::uint32_t seed_lo, std::uint32_t seed_hi,
                       std::uint32_t inner_iterations, std::uint32_t n);
double run_floyd_warshall(std::uint32_t seed_lo, std::uint32_t seed_hi,
                          std::uint32_t inner_iterations, std::uint32_t vertices,
                          std::uint32_t max_weight);
double run_huffman(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner_iterations);
double run_permutations(std::uint32_t seed_lo, std::uint32_t seed_hi,
                        std::uint32_t inner_iterations, std::uint32_t n);
double run_fft(std::uint32_t seed_lo, std::uint32_t seed_hi, std::uint32_t inner_iterations,
               std::uint32_t n);
double run_mincut_single(std::uint32_t seed_lo, std::uint32_t seed_hi,
                         std::uint32_t inner_iterations, std::uint32_t size,
                         std::uint32_t threshold, std::uint32_t lambda);
double run_mincut_expansion(std::uint32_t seed_lo, std::uint32_t seed_hi,
                            std::uint32_t inner_iterations, std::uint32_t size,
                            std::uint32_t threshold, std::uint32_t lambda);

std::uint32_t get_checksum();
std::uint32_t get_checksum_hi();

}
