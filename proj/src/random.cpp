#include "hitloc/random.hpp"

#include <array>

namespace hitloc {

Engine chunk_engine(std::uint64_t seed, Stream stream, std::uint64_t chunk) {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  const auto tag = static_cast<std::uint64_t>(stream);
  std::seed_seq seq{lo(seed), hi(seed), lo(tag), lo(chunk), hi(chunk), 0x9e3779b9u};
  return Engine(seq);
}

}  // namespace hitloc
