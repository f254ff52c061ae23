#pragma once

#include <cstdint>

#include "dtnscope/bytes.hpp"

namespace dtnscope {

/// CRC-32C (Castagnoli), reflected, init/xorout 0xFFFFFFFF.
/// Check value: crc32c("123456789") == 0xE3069283.
std::uint32_t crc32c(const std::uint8_t* data, std::size_t len);
inline std::uint32_t crc32c(const Bytes& b) { return crc32c(b.data(), b.size()); }

/// CRC-16/X-25 (the BPv7 "standard X-25 CRC-16").
/// Check value: crc16_x25("123456789") == 0x906E.
std::uint16_t crc16_x25(const std::uint8_t* data, std::size_t len);
inline std::uint16_t crc16_x25(const Bytes& b) { return crc16_x25(b.data(), b.size()); }

}  // namespace dtnscope
