#ifndef SVDMARK_BLOCKAUTH_HPP
#define SVDMARK_BLOCKAUTH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "svdmark/chaos.hpp"
#include "svdmark/image.hpp"

namespace svdmark::blockauth {

/// One 4x4 pixel tile in row-major order.
struct Block {
    std::array<std::uint8_t, 16> pixels{};
};

/// Row-major grid of 4x4 blocks carved from a grayscale image.
struct BlockGrid {
    int rows = 0;
    int cols = 0;
    std::vector<Block> blocks;
};

/// Per-block authentication payload: 10-bit block number plus the 6-bit
/// number of its group, 16 bits in total.
struct AuthBits {
    int ban = 0;  // [0, 1023]
    int gan = 0;  // [0, 63]
};

/// 4x4 tile of payload bits, row-major like Block.
using BitTile = std::array<std::uint8_t, 16>;

/// Consecutive run of linear block indices forming one group,
/// half-open [begin, end).
struct GroupRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const { return end - begin; }
};

inline constexpr std::size_t kGroupSize = 5;

/// Cuts an image whose sides are multiples of 4 into 4x4 blocks.
BlockGrid split_blocks(const GrayImage& image);

/// Reassembles the image; exact inverse of split_blocks.
GrayImage merge_blocks(const BlockGrid& grid);

/// Clears the least significant bit of every pixel.
Block zero_lsb(const Block& block);

/// Block authentication number: the sum of the block's singular values
/// folded into [0, 1023]. Expects an LSB-zeroed block so that embedding
/// and extraction see the same data.
int block_ban(const Block& block7);

/// Runs of five consecutive linear indices; the final group keeps the
/// remainder when the total is not a multiple of five.
std::vector<GroupRange> group_ranges(std::size_t total_blocks);

/// Group authentication number: mean of the group's BANs folded into
/// [0, 63], in exact integer arithmetic ((sum mod 64g) div g) so embed
/// and extract cannot disagree.
int group_gan(std::span<const int> bans);

/// Logistic parameters adapted to the block statistics: x0 from the mean,
/// mu from the fractional part of the population standard deviation.
/// Expects an LSB-zeroed block.
chaos::LogisticParams chaotic_params(const Block& block7);

/// Places the 16 payload bits into a tile: the position holding the
/// largest chaotic-sequence value receives the BAN's most significant
/// bit, descending rank by rank down to the GAN's least significant bit
/// at the smallest value. perm is a rank permutation over 16 positions.
BitTile pack_auth_bits(const AuthBits& auth, std::span<const std::size_t> perm);

/// Exact inverse of pack_auth_bits.
AuthBits unpack_auth_bits(const BitTile& tile, std::span<const std::size_t> perm);

} // namespace svdmark::blockauth

#endif
