#include "dtnscope/crc.hpp"

#include <array>

namespace dtnscope {
namespace {

template <typename T>
constexpr std::array<T, 256> make_table(T poly_reflected) {
    std::array<T, 256> table{};
    for (unsigned i = 0; i < 256; ++i) {
        T crc = static_cast<T>(i);
        for (int bit = 0; bit < 8; ++bit) {
            crc = (crc & 1) ? static_cast<T>((crc >> 1) ^ poly_reflected)
                            : static_cast<T>(crc >> 1);
        }
        table[i] = crc;
    }
    return table;
}

constexpr auto kCrc32cTable = make_table<std::uint32_t>(0x82F63B78u);
constexpr auto kCrc16X25Table = make_table<std::uint16_t>(0x8408u);

}  // namespace

std::uint32_t crc32c(const std::uint8_t* data, std::size_t len) {
    std::uint32_t crc = 0xFFFFFFFFu;
    for (std::size_t i = 0; i < len; ++i) {
        crc = (crc >> 8) ^ kCrc32cTable[(crc ^ data[i]) & 0xFFu];
    }
    return crc ^ 0xFFFFFFFFu;
}

std::uint16_t crc16_x25(const std::uint8_t* data, std::size_t len) {
    std::uint16_t crc = 0xFFFFu;
    for (std::size_t i = 0; i < len; ++i) {
        crc = static_cast<std::uint16_t>((crc >> 8) ^
                                         kCrc16X25Table[(crc ^ data[i]) & 0xFFu]);
    }
    return static_cast<std::uint16_t>(crc ^ 0xFFFFu);
}

}  // namespace dtnscope
