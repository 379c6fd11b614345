/*
 * svdmark: fragile image watermarking with SVD-derived authentication
 * bits, chaotic bit placement and grouped scrambled blocks.
 *
 * C interface of the shared library. All objects are opaque handles
 * created and released through these functions; every fallible call
 * returns a status code from svdmark_status and leaves a human-readable
 * message in svdmark_last_error() (thread-local) on failure. Output
 * handle parameters are written only on SVDMARK_OK.
 */
#ifndef SVDMARK_H
#define SVDMARK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum svdmark_status {
    SVDMARK_OK = 0,
    SVDMARK_ERR_ARGUMENT = 1,  /* bad parameter value */
    SVDMARK_ERR_IO = 2,        /* file missing / unreadable / unwritable */
    SVDMARK_ERR_FORMAT = 3,    /* malformed or unsupported file content */
    SVDMARK_ERR_DIMENSION = 4, /* image/grid size contract violated */
    SVDMARK_ERR_KEY = 5,       /* invalid key material */
    SVDMARK_ERR_BOUNDS = 6,    /* region outside the target image */
    SVDMARK_ERR_INTERNAL = 7
} svdmark_status;

typedef struct svdmark_image svdmark_image;   /* 8-bit grayscale raster */
typedef struct svdmark_bitmap svdmark_bitmap; /* bit raster, values 0/1 */
typedef struct svdmark_report svdmark_report; /* verification result */

/* Message for the most recent failure on this thread; empty string if
 * the last call succeeded. */
const char* svdmark_last_error(void);

/* Symbolic name of a status code ("SVDMARK_ERR_IO", ...). */
const char* svdmark_status_name(int status);

/* ---- grayscale images (binary PGM, P5, maxval 255) ---- */

/* pixels may be NULL for a zero-filled image; otherwise row-major
 * width*height bytes are copied. */
int svdmark_image_create(int width, int height, const uint8_t* pixels, svdmark_image** out);
int svdmark_image_load(const char* path, svdmark_image** out);
int svdmark_image_save(const svdmark_image* image, const char* path);
int svdmark_image_width(const svdmark_image* image);
int svdmark_image_height(const svdmark_image* image);
/* Borrowed pointer to row-major pixel data; valid until the handle is freed. */
const uint8_t* svdmark_image_data(const svdmark_image* image);
void svdmark_image_free(svdmark_image* image);

/* ---- bit images (binary PBM, P4; loads also accept P5 thresholded at 128) ---- */

int svdmark_bitmap_create(int width, int height, const uint8_t* bits, svdmark_bitmap** out);
int svdmark_bitmap_load(const char* path, svdmark_bitmap** out);
int svdmark_bitmap_save(const svdmark_bitmap* bitmap, const char* path);
int svdmark_bitmap_width(const svdmark_bitmap* bitmap);
int svdmark_bitmap_height(const svdmark_bitmap* bitmap);
const uint8_t* svdmark_bitmap_data(const svdmark_bitmap* bitmap);
void svdmark_bitmap_free(svdmark_bitmap* bitmap);

/* ---- watermarking ---- */

/* Embeds authentication bits into the LSB plane of a square host whose
 * side is a multiple of 4. The watermark bitmap must match the host
 * dimensions and, together with a, b and the scrambling count k, forms
 * the secret key. k must stay below the Arnold period of the block grid. */
int svdmark_embed(const svdmark_image* host, const svdmark_bitmap* watermark,
                  long a, long b, long k, svdmark_image** out_watermarked);

/* Authenticates an image against the key used at embedding time. */
int svdmark_verify(const svdmark_image* image, const svdmark_bitmap* watermark,
                   long a, long b, long k, svdmark_report** out_report);

size_t svdmark_report_flagged(const svdmark_report* report);
size_t svdmark_report_total(const svdmark_report* report);
/* 1 if the block at (row, col) of the block grid is flagged, 0 if not,
 * -1 when the coordinates are out of range. */
int svdmark_report_block_flagged(const svdmark_report* report, int row, int col);
/* Tamper map rendered at image resolution: white = tampered. */
int svdmark_report_tamper_map(const svdmark_report* report, svdmark_image** out_map);
int svdmark_report_extracted_watermark(const svdmark_report* report, svdmark_bitmap** out_wm);
void svdmark_report_free(svdmark_report* report);

/* ---- measurements ---- */

/* Writes PSNR in dB to out_db; +infinity for identical images. */
int svdmark_psnr(const svdmark_image* a, const svdmark_image* b, double* out_db);

/* Period of the Arnold transform [[1,a],[b,ab+1]] on an n-by-n grid. */
int svdmark_arnold_period(long a, long b, long n, long* out_period);

/* ---- tamper generators ---- */

int svdmark_attack_copy_paste(const svdmark_image* image, int src_x, int src_y, int w, int h,
                              int dst_x, int dst_y, svdmark_image** out);
int svdmark_attack_splice(const svdmark_image* dst, const svdmark_image* src, int x, int y,
                          int w, int h, svdmark_image** out);
int svdmark_attack_fill(const svdmark_image* image, int x, int y, int w, int h, int value,
                        svdmark_image** out);
int svdmark_attack_stamp(const svdmark_image* image, const svdmark_bitmap* stamp, int x, int y,
                         int ink, svdmark_image** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SVDMARK_H */
