#include "svdmark/pipeline.hpp"

#include <cmath>
#include <limits>

#include "svdmark/blockauth.hpp"
#include "svdmark/chaos.hpp"
#include "parallel.hpp"

namespace svdmark::pipeline {

namespace blk = svdmark::blockauth;

namespace {

struct Layout {
    long n = 0;  // block-grid side
    long period = 0;
};

Layout check_contract(const GrayImage& image, const AuthKey& key) {
    if (image.width != image.height)
        throw Error(errc::dimension, "host must be square");
    if (image.width % 4 != 0)
        throw Error(errc::dimension, "host side must be a multiple of 4");
    if (image.width < 8)
        throw Error(errc::dimension, "host must hold at least a 2x2 block grid");
    if (key.watermark.width != image.width || key.watermark.height != image.height)
        throw Error(errc::key, "watermark dimensions must equal the host dimensions");
    if (key.a < 1 || key.b < 1)
        throw Error(errc::key, "Arnold parameters a and b must be >= 1");
    if (key.k < 0)
        throw Error(errc::key, "scrambling count must be >= 0");

    Layout layout;
    layout.n = image.width / 4;
    layout.period = chaos::arnold_period(key.a, key.b, layout.n);
    if (key.k >= layout.period)
        throw Error(errc::key, "scrambling count must stay below the Arnold period " +
                                   std::to_string(layout.period));
    return layout;
}

// Watermark bits for block i of an n-wide grid, row-major 4x4.
blk::BitTile watermark_tile(const BinaryImage& wm, long n, std::size_t i) {
    const long br = static_cast<long>(i) / n;
    const long bc = static_cast<long>(i) % n;
    blk::BitTile tile;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            tile[r * 4 + c] = wm.at(static_cast<int>(bc * 4 + c), static_cast<int>(br * 4 + r));
    return tile;
}

std::vector<std::size_t> block_permutation(const blk::Block& block7) {
    const chaos::LogisticParams params = blk::chaotic_params(block7);
    const std::vector<double> seq = chaos::logistic_sequence(params, 16);
    return chaos::rank_permutation(seq);
}

} // namespace

GrayImage embed(const GrayImage& host, const AuthKey& key, int threads) {
    const Layout layout = check_contract(host, key);
    const long n = layout.n;

    // Scramble the block layout, then drop every LSB.
    blk::BlockGrid grid = blk::split_blocks(host);
    grid.blocks = chaos::scramble_grid(grid.blocks, n, key.a, key.b, key.k);

    const std::size_t total = grid.blocks.size();
    std::vector<int> bans(total);
    std::vector<std::vector<std::size_t>> perms(total);
    detail::parallel_for(total, threads, [&](std::size_t i) {
        grid.blocks[i] = blk::zero_lsb(grid.blocks[i]);
        bans[i] = blk::block_ban(grid.blocks[i]);
        perms[i] = block_permutation(grid.blocks[i]);
    });

    // One GAN per run of five scrambled blocks.
    std::vector<int> gans(total);
    for (const blk::GroupRange& g : blk::group_ranges(total)) {
        const int gan = blk::group_gan({bans.data() + g.begin, g.size()});
        for (std::size_t i = g.begin; i < g.end; ++i)
            gans[i] = gan;
    }

    // Authentication tiles XOR the watermark become the new LSB plane.
    detail::parallel_for(total, threads, [&](std::size_t i) {
        const blk::BitTile tile = blk::pack_auth_bits({bans[i], gans[i]}, perms[i]);
        const blk::BitTile wm = watermark_tile(key.watermark, n, i);
        for (int j = 0; j < 16; ++j)
            grid.blocks[i].pixels[j] |= static_cast<std::uint8_t>((tile[j] ^ wm[j]) & 1u);
    });

    // Forward-scramble the remaining period to restore the block layout.
    grid.blocks = chaos::scramble_grid(grid.blocks, n, key.a, key.b, layout.period - key.k);
    return blk::merge_blocks(grid);
}

VerifyReport verify(const GrayImage& image, const AuthKey& key, int threads) {
    const Layout layout = check_contract(image, key);
    const long n = layout.n;

    blk::BlockGrid grid = blk::split_blocks(image);
    grid.blocks = chaos::scramble_grid(grid.blocks, n, key.a, key.b, key.k);

    const std::size_t total = grid.blocks.size();
    std::vector<int> calc_ban(total), orig_ban(total), orig_gan(total);
    detail::parallel_for(total, threads, [&](std::size_t i) {
        // The LSB plane carries watermark XOR payload; everything else is
        // recomputed from the 7 MSB planes.
        const blk::BitTile wm = watermark_tile(key.watermark, n, i);
        blk::BitTile payload;
        for (int j = 0; j < 16; ++j)
            payload[j] = static_cast<std::uint8_t>((grid.blocks[i].pixels[j] ^ wm[j]) & 1u);

        const blk::Block block7 = blk::zero_lsb(grid.blocks[i]);
        const std::vector<std::size_t> perm = block_permutation(block7);
        const blk::AuthBits bits = blk::unpack_auth_bits(payload, perm);
        orig_ban[i] = bits.ban;
        orig_gan[i] = bits.gan;
        calc_ban[i] = blk::block_ban(block7);
    });

    // A block fails when its own number mismatches or when its group
    // disagrees: the extracted GAN must equal the group's most frequent
    // extracted GAN, and so must the GAN recomputed from pixel data.
    std::vector<std::uint8_t> flags(total, 0);
    for (const blk::GroupRange& g : blk::group_ranges(total)) {
        int count[64] = {0};
        for (std::size_t i = g.begin; i < g.end; ++i)
            ++count[orig_gan[i]];
        int freq_gan = 0;
        for (int v = 1; v < 64; ++v)
            if (count[v] > count[freq_gan])
                freq_gan = v;  // ties resolve to the smallest value

        const int calc_gan = blk::group_gan({calc_ban.data() + g.begin, g.size()});
        const bool group_bad = calc_gan != freq_gan;
        for (std::size_t i = g.begin; i < g.end; ++i)
            flags[i] = (calc_ban[i] != orig_ban[i] || orig_gan[i] != freq_gan || group_bad) ? 1 : 0;
    }

    // Extracted watermark: the original tile where the block validates,
    // its complement where it does not.
    VerifyReport report;
    report.extracted_watermark = BinaryImage(image.width, image.height);
    for (std::size_t i = 0; i < total; ++i) {
        const long br = static_cast<long>(i) / n;
        const long bc = static_cast<long>(i) % n;
        const blk::BitTile wm = watermark_tile(key.watermark, n, i);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                report.extracted_watermark.at(static_cast<int>(bc * 4 + c),
                                              static_cast<int>(br * 4 + r)) =
                    static_cast<std::uint8_t>(wm[r * 4 + c] ^ flags[i]);
    }

    // Flags live in scrambled coordinates; finish the period to map them
    // back onto the original block layout.
    report.map.rows = static_cast<int>(n);
    report.map.cols = static_cast<int>(n);
    report.map.flags = chaos::scramble_grid(flags, n, key.a, key.b, layout.period - key.k);
    report.total_blocks = total;
    for (std::uint8_t f : report.map.flags)
        report.flagged_count += f;
    return report;
}

double psnr(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw Error(errc::dimension, "PSNR needs images of equal dimensions");
    if (a.pixels.empty())
        throw Error(errc::dimension, "empty image");

    long long sum_sq = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const long long d = static_cast<long long>(a.pixels[i]) - b.pixels[i];
        sum_sq += d * d;
    }
    if (sum_sq == 0)
        return std::numeric_limits<double>::infinity();
    const double mse = static_cast<double>(sum_sq) / static_cast<double>(a.pixels.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

GrayImage render_tamper_map(const TamperMap& map) {
    if (map.rows <= 0 || map.cols <= 0 ||
        map.flags.size() != static_cast<std::size_t>(map.rows) * map.cols)
        throw Error(errc::dimension, "inconsistent tamper map");

    GrayImage image(map.cols * 4, map.rows * 4);
    for (int br = 0; br < map.rows; ++br)
        for (int bc = 0; bc < map.cols; ++bc) {
            const std::uint8_t value = map.flags[static_cast<std::size_t>(br) * map.cols + bc] ? 255 : 0;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    image.at(bc * 4 + c, br * 4 + r) = value;
        }
    return image;
}

} // namespace svdmark::pipeline
