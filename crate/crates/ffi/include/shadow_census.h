#ifndef SHADOW_CENSUS_H
#define SHADOW_CENSUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum ShcStatus {
  SHC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SHC_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  SHC_STATUS_INVALID_UTF8 = 2,
  SHC_STATUS_PARSE = 3,
  /**
   * Unsupported format version in a parsed document.
   */
  SHC_STATUS_VERSION = 4,
  SHC_STATUS_PRECONDITION = 5,
  SHC_STATUS_STRUCTURAL = 6,
  SHC_STATUS_INVARIANT_VIOLATION = 7,
  SHC_STATUS_OVERFLOW = 8,
  SHC_STATUS_RESOURCE_LIMIT = 9,
  SHC_STATUS_INTERNAL = 10,
  /**
   * The library panicked; the call had no effect on its outputs.
   */
  SHC_STATUS_PANIC = 11,
} ShcStatus;

/**
 * A census catalog.
 */
typedef struct ShcCatalog ShcCatalog;

/**
 * A graph encoding of a simple polyhedron without true vertices.
 */
typedef struct ShcEncoding ShcEncoding;

/**
 * A polyhedron model.
 */
typedef struct ShcModel ShcModel;

/**
 * Integral homology summary; torsion coefficients are read with
 * [`shc_model_torsion`].
 */
typedef struct ShcHomology {
  size_t betti[3];
  size_t torsion_1_count;
  size_t torsion_2_count;
  bool acyclic;
} ShcHomology;

/**
 * Outcome of [`shc_encoding_check`].
 */
typedef struct ShcEncodingReport {
  /**
   * No structural violation was found.
   */
  bool clean;
  /**
   * The reconstructed polyhedron is acyclic.
   */
  bool acyclic;
  size_t violation_count;
} ShcEncodingReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *shc_version(void);

/**
 * Message for the last failed call on this thread, or null after a
 * successful call. The pointer stays valid until the next call on this
 * thread.
 */
const char *shc_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void shc_string_free(char *s);

/**
 * Enumerates the census for `vertices` true vertices with `jobs` worker
 * threads (0 means 1) and runs the canceling-pair search on every record.
 *
 * # Safety
 * `out` points to writable storage for a handle.
 */
enum ShcStatus shc_catalog_enumerate(uint32_t vertices, uint32_t jobs, struct ShcCatalog **out);

/**
 * Parses a catalog document.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` points to writable storage.
 */
enum ShcStatus shc_catalog_parse(const char *document, struct ShcCatalog **out);

/**
 * Renders a catalog document into a new string.
 *
 * # Safety
 * `catalog` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_catalog_render(const struct ShcCatalog *catalog, char **out);

/**
 * # Safety
 * `catalog` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_catalog_record_count(const struct ShcCatalog *catalog, size_t *out);

/**
 * Number of classes by region count; entry `i` counts classes with
 * `i + 1` regions.
 *
 * # Safety
 * `catalog` is a live handle; `buf` is valid for `capacity` writes;
 * `len_out` points to writable storage.
 */
enum ShcStatus shc_catalog_histogram(const struct ShcCatalog *catalog,
                                     size_t *buf,
                                     size_t capacity,
                                     size_t *len_out);

/**
 * # Safety
 * `catalog` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_catalog_acyclic_count(const struct ShcCatalog *catalog, size_t *out);

/**
 * The closed special polyhedron of record `index`.
 *
 * # Safety
 * `catalog` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_catalog_model(const struct ShcCatalog *catalog,
                                 size_t index,
                                 struct ShcModel **out);

/**
 * Releases a catalog. Null is ignored.
 *
 * # Safety
 * `catalog` is null or a handle not yet freed.
 */
void shc_catalog_free(struct ShcCatalog *catalog);

/**
 * Parses a model document.
 *
 * # Safety
 * `document` is a NUL-terminated string; `out` points to writable storage.
 */
enum ShcStatus shc_model_parse(const char *document, struct ShcModel **out);

/**
 * # Safety
 * `model` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_model_render(const struct ShcModel *model, char **out);

/**
 * # Safety
 * `model` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_model_homology(const struct ShcModel *model, struct ShcHomology *out);

/**
 * Torsion coefficients of `H_degree` for degree 1 or 2.
 *
 * # Safety
 * `model` is a live handle; `buf` is valid for `capacity` writes;
 * `len_out` points to writable storage.
 */
enum ShcStatus shc_model_torsion(const struct ShcModel *model,
                                 uint32_t degree,
                                 uint64_t *buf,
                                 size_t capacity,
                                 size_t *len_out);

/**
 * Whether the model is certified as a shadow of the 4-ball. When it is not,
 * the reasons are available from [`shc_last_error_message`] even though the
 * status is `Ok`.
 *
 * # Safety
 * `model` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_model_certify(const struct ShcModel *model, bool *out);

/**
 * Releases a model. Null is ignored.
 *
 * # Safety
 * `model` is null or a handle not yet freed.
 */
void shc_model_free(struct ShcModel *model);

/**
 * Parses an encoding document.
 *
 * # Safety
 * `document` is a NUL-terminated string; `out` points to writable storage.
 */
enum ShcStatus shc_encoding_parse(const char *document, struct ShcEncoding **out);

/**
 * Builds the polyhedron described by an encoding.
 *
 * # Safety
 * `encoding` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_encoding_reconstruct(const struct ShcEncoding *encoding, struct ShcModel **out);

/**
 * Whether the graph's first mod-2 homology injects into that of the
 * reconstructed polyhedron.
 *
 * # Safety
 * `encoding` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_encoding_retraction_check(const struct ShcEncoding *encoding, bool *out);

/**
 * Structural checks for an encoding with exactly one boundary vertex.
 *
 * # Safety
 * `encoding` is a live handle; `out` points to writable storage.
 */
enum ShcStatus shc_encoding_check(const struct ShcEncoding *encoding,
                                  struct ShcEncodingReport *out);

/**
 * Releases an encoding. Null is ignored.
 *
 * # Safety
 * `encoding` is null or a handle not yet freed.
 */
void shc_encoding_free(struct ShcEncoding *encoding);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHADOW_CENSUS_H */
