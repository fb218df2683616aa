#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hintgen {

/// SHA-256 of `data`, as a 64-char lowercase hex string.
std::string sha256_hex(std::string_view data);

/// First 8 digest bytes interpreted as a big-endian unsigned 64-bit value.
std::uint64_t sha256_prefix64(std::string_view data);

}  // namespace hintgen
