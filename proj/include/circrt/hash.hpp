#pragma once

#include <string>
#include <string_view>

namespace circrt {

/// Lowercase hexadecimal SHA-256 digest of `bytes`.
std::string sha256_hex(std::string_view bytes);

} // namespace circrt
