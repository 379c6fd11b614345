// Command-line front end for the svdmark shared library. Exit codes:
// 0 = success / image authentic, 1 = tamper detected, 2 = usage or
// contract or I/O error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svdmark/svdmark.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTampered = 1;
constexpr int kExitError = 2;

struct ImageDeleter {
    void operator()(svdmark_image* p) const { svdmark_image_free(p); }
};
struct BitmapDeleter {
    void operator()(svdmark_bitmap* p) const { svdmark_bitmap_free(p); }
};
struct ReportDeleter {
    void operator()(svdmark_report* p) const { svdmark_report_free(p); }
};

using ImagePtr = std::unique_ptr<svdmark_image, ImageDeleter>;
using BitmapPtr = std::unique_ptr<svdmark_bitmap, BitmapDeleter>;
using ReportPtr = std::unique_ptr<svdmark_report, ReportDeleter>;

// Exits with code 2 when a library call failed.
void check(int status, const std::string& context) {
    if (status != SVDMARK_OK) {
        std::fprintf(stderr, "error: %s: %s\n", context.c_str(), svdmark_last_error());
        std::exit(kExitError);
    }
}

ImagePtr load_image(const std::string& path) {
    svdmark_image* raw = nullptr;
    check(svdmark_image_load(path.c_str(), &raw), path);
    return ImagePtr(raw);
}

BitmapPtr load_bitmap(const std::string& path) {
    svdmark_bitmap* raw = nullptr;
    check(svdmark_bitmap_load(path.c_str(), &raw), path);
    return BitmapPtr(raw);
}

struct RegionArg {
    int x = 0, y = 0, w = 0, h = 0;
};

// Parses "x,y,w,h" (or "x,y" when only a corner is wanted).
bool parse_region(const std::string& text, RegionArg& out, int wanted) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                return false;
        } catch (...) {
            return false;
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (static_cast<int>(parts.size()) != wanted)
        return false;
    out.x = parts[0];
    out.y = parts[1];
    if (wanted == 4) {
        out.w = parts[2];
        out.h = parts[3];
    }
    return true;
}

void write_region_sidecar(const std::string& out_path, const RegionArg& r) {
    const std::string sidecar = out_path + ".regions";
    std::ofstream f(sidecar, std::ios::trunc);
    if (!f) {
        std::fprintf(stderr, "error: cannot write %s\n", sidecar.c_str());
        std::exit(kExitError);
    }
    f << r.x << " " << r.y << " " << r.w << " " << r.h << "\n";
}

int run_embed(const std::string& host_path, const std::string& wm_path,
              const std::string& out_path, long a, long b, long k) {
    ImagePtr host = load_image(host_path);
    BitmapPtr wm = load_bitmap(wm_path);

    svdmark_image* marked_raw = nullptr;
    check(svdmark_embed(host.get(), wm.get(), a, b, k, &marked_raw), "embed");
    ImagePtr marked(marked_raw);

    check(svdmark_image_save(marked.get(), out_path.c_str()), out_path);

    double db = 0.0;
    check(svdmark_psnr(host.get(), marked.get(), &db), "psnr");
    if (std::isinf(db))
        std::printf("PSNR: inf dB\n");
    else
        std::printf("PSNR: %.4f dB\n", db);
    return kExitOk;
}

int run_verify(const std::string& image_path, const std::string& wm_path,
               const std::string& map_out, const std::string& wext_out,
               long a, long b, long k) {
    ImagePtr image = load_image(image_path);
    BitmapPtr wm = load_bitmap(wm_path);

    svdmark_report* report_raw = nullptr;
    check(svdmark_verify(image.get(), wm.get(), a, b, k, &report_raw), "verify");
    ReportPtr report(report_raw);

    if (!map_out.empty()) {
        svdmark_image* map_raw = nullptr;
        check(svdmark_report_tamper_map(report.get(), &map_raw), "tamper map");
        ImagePtr map(map_raw);
        check(svdmark_image_save(map.get(), map_out.c_str()), map_out);
    }
    if (!wext_out.empty()) {
        svdmark_bitmap* wext_raw = nullptr;
        check(svdmark_report_extracted_watermark(report.get(), &wext_raw), "extracted watermark");
        BitmapPtr wext(wext_raw);
        check(svdmark_bitmap_save(wext.get(), wext_out.c_str()), wext_out);
    }

    const size_t flagged = svdmark_report_flagged(report.get());
    const size_t total = svdmark_report_total(report.get());
    std::printf("flagged: %zu/%zu\n", flagged, total);
    return flagged == 0 ? kExitOk : kExitTampered;
}

int run_attack(const std::string& kind, const std::string& image_path,
               const std::string& out_path, const std::string& region_text,
               const std::string& dst_text, const std::string& src_path, int ink) {
    ImagePtr image = load_image(image_path);
    svdmark_image* out_raw = nullptr;
    RegionArg changed;

    if (kind == "copy-paste") {
        RegionArg src, dst;
        if (!parse_region(region_text, src, 4)) {
            std::fprintf(stderr, "error: copy-paste needs --region x,y,w,h\n");
            return kExitError;
        }
        if (!parse_region(dst_text, dst, 2)) {
            std::fprintf(stderr, "error: copy-paste needs --dst x,y\n");
            return kExitError;
        }
        check(svdmark_attack_copy_paste(image.get(), src.x, src.y, src.w, src.h, dst.x, dst.y,
                                        &out_raw),
              "copy-paste");
        changed = {dst.x, dst.y, src.w, src.h};
    } else if (kind == "splice") {
        RegionArg region;
        if (!parse_region(region_text, region, 4)) {
            std::fprintf(stderr, "error: splice needs --region x,y,w,h\n");
            return kExitError;
        }
        if (src_path.empty()) {
            std::fprintf(stderr, "error: splice needs --src <image>\n");
            return kExitError;
        }
        ImagePtr src = load_image(src_path);
        check(svdmark_attack_splice(image.get(), src.get(), region.x, region.y, region.w,
                                    region.h, &out_raw),
              "splice");
        changed = region;
    } else if (kind == "fill") {
        RegionArg region;
        if (!parse_region(region_text, region, 4)) {
            std::fprintf(stderr, "error: fill needs --region x,y,w,h\n");
            return kExitError;
        }
        check(svdmark_attack_fill(image.get(), region.x, region.y, region.w, region.h, ink,
                                  &out_raw),
              "fill");
        changed = region;
    } else if (kind == "stamp") {
        RegionArg at;
        if (!parse_region(region_text, at, 2) && !parse_region(region_text, at, 4)) {
            std::fprintf(stderr, "error: stamp needs --region x,y (placement corner)\n");
            return kExitError;
        }
        if (src_path.empty()) {
            std::fprintf(stderr, "error: stamp needs --src <bitmap>\n");
            return kExitError;
        }
        BitmapPtr stamp = load_bitmap(src_path);
        check(svdmark_attack_stamp(image.get(), stamp.get(), at.x, at.y, ink, &out_raw), "stamp");
        changed = {at.x, at.y, svdmark_bitmap_width(stamp.get()),
                   svdmark_bitmap_height(stamp.get())};
    } else {
        std::fprintf(stderr, "error: unknown attack kind '%s'\n", kind.c_str());
        return kExitError;
    }

    ImagePtr out(out_raw);
    check(svdmark_image_save(out.get(), out_path.c_str()), out_path);
    write_region_sidecar(out_path, changed);
    return kExitOk;
}

int run_period(long a, long b, long n) {
    long period = 0;
    check(svdmark_arnold_period(a, b, n, &period), "period");
    std::printf("T = %ld\n", period);
    return kExitOk;
}

int run_psnr(const std::string& a_path, const std::string& b_path) {
    ImagePtr a = load_image(a_path);
    ImagePtr b = load_image(b_path);
    double db = 0.0;
    check(svdmark_psnr(a.get(), b.get(), &db), "psnr");
    if (std::isinf(db))
        std::printf("inf\n");
    else
        std::printf("%.4f\n", db);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"svdmark - fragile image watermarking for tamper detection"};
    app.require_subcommand(1);

    long a = 1, b = 1, k = 0, n = 0;
    std::string host_path, image_path, wm_path, out_path, map_out, wext_out;
    std::string kind, region_text, dst_text, src_path, a_path, b_path;
    int ink = 0;

    CLI::App* embed = app.add_subcommand("embed", "embed a watermark into a host image");
    embed->add_option("host", host_path, "host PGM image")->required();
    embed->add_option("--watermark", wm_path, "binary watermark image (PBM or PGM)")->required();
    embed->add_option("--out", out_path, "output watermarked PGM")->required();
    embed->add_option("--a", a, "Arnold parameter a");
    embed->add_option("--b", b, "Arnold parameter b");
    embed->add_option("--k", k, "Arnold scrambling count");

    CLI::App* verify = app.add_subcommand("verify", "authenticate a watermarked image");
    verify->add_option("image", image_path, "image to verify")->required();
    verify->add_option("--watermark", wm_path, "binary watermark image")->required();
    verify->add_option("--map-out", map_out, "write rendered tamper map PGM here");
    verify->add_option("--wext-out", wext_out, "write extracted watermark PBM here");
    verify->add_option("--a", a, "Arnold parameter a");
    verify->add_option("--b", b, "Arnold parameter b");
    verify->add_option("--k", k, "Arnold scrambling count");

    CLI::App* attack = app.add_subcommand("attack", "apply a tamper operation");
    attack->add_option("image", image_path, "input image")->required();
    attack->add_option("--kind", kind, "copy-paste | splice | fill | stamp")->required();
    attack->add_option("--out", out_path, "output image path")->required();
    attack->add_option("--region", region_text, "x,y,w,h (or x,y for stamp placement)");
    attack->add_option("--dst", dst_text, "x,y destination corner for copy-paste");
    attack->add_option("--src", src_path, "second image (splice) or stamp bitmap (stamp)");
    attack->add_option("--ink", ink, "fill/stamp intensity in [0,255]");

    CLI::App* period = app.add_subcommand("period", "print the Arnold period of an N x N grid");
    period->add_option("--a", a, "Arnold parameter a");
    period->add_option("--b", b, "Arnold parameter b");
    period->add_option("--n", n, "grid side length")->required();

    CLI::App* psnr = app.add_subcommand("psnr", "peak signal-to-noise ratio between two images");
    psnr->add_option("a", a_path, "first image")->required();
    psnr->add_option("b", b_path, "second image")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    if (embed->parsed())
        return run_embed(host_path, wm_path, out_path, a, b, k);
    if (verify->parsed())
        return run_verify(image_path, wm_path, map_out, wext_out, a, b, k);
    if (attack->parsed())
        return run_attack(kind, image_path, out_path, region_text, dst_text, src_path, ink);
    if (period->parsed())
        return run_period(a, b, n);
    if (psnr->parsed())
        return run_psnr(a_path, b_path);
    return kExitError;
}
