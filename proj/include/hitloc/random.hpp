#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace hitloc {

/// Draws per deterministic chunk. Output is a pure function of
/// (seed, stream, chunk index), so any thread schedule reproduces it.
inline constexpr std::size_t kDrawChunk = 4096;

/// Paths per chunk in the SDE simulator.
inline constexpr std::size_t kPathChunk = 256;

/// Tags separating independent consumers of the same user seed.
enum class Stream : std::uint64_t {
  inverse_gaussian = 1,
  gaussian_mixture = 2,
  sde_paths = 3,
};

using Engine = std::mt19937_64;

/// Engine for one chunk of one stream.
Engine chunk_engine(std::uint64_t seed, Stream stream, std::uint64_t chunk);

/// Number of chunks of size `chunk` covering `count` items.
constexpr std::size_t chunk_count(std::size_t count, std::size_t chunk) { return (count + chunk - 1) / chunk; }

}  // namespace hitloc
