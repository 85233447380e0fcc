#ifndef ISAONTO_H
#define ISAONTO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  ISA_STATUS_OK = 0,
  ISA_STATUS_NULL_POINTER = 1,
  ISA_STATUS_INVALID_UTF8 = 2,
  ISA_STATUS_PARSE = 3,
  ISA_STATUS_IO = 4,
  ISA_STATUS_INCONSISTENT = 5,
  ISA_STATUS_INTERNAL = 6,
} IsaStatus;

typedef enum {
  ISA_FORMAT_DL_TEXT = 0,
  ISA_FORMAT_OWL_FUNCTIONAL = 1,
} IsaFormat;

/**
 * Opaque ontology handle.
 */
typedef struct IsaOntology IsaOntology;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, static storage.
 */
const char *isa_version(void);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call on the same thread.
 */
const char *isa_last_error(void);

/**
 * Compiles corpus text (one sentence per line) with the bundled lexicon.
 *
 * # Safety
 * `corpus` must be a NUL-terminated string; `out` must be writable.
 */
IsaStatus isa_ontology_from_corpus(const char *corpus, IsaOntology **out);

/**
 * Parses an ontology document.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
IsaStatus isa_ontology_parse(const char *src, IsaFormat format, IsaOntology **out);

/**
 * Reads and parses an ontology file; `.ofn`/`.owl` are OWL functional
 * syntax, anything else DL text.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
IsaStatus isa_ontology_load(const char *path, IsaOntology **out);

/**
 * # Safety
 * `onto` must be null or a handle from this library not yet freed.
 */
void isa_ontology_free(IsaOntology *onto);

/**
 * # Safety
 * `onto` must be a live handle; `out` must be writable.
 */
IsaStatus isa_ontology_axiom_count(const IsaOntology *onto, size_t *out);

/**
 * Serializes to the requested format.
 *
 * # Safety
 * `onto` must be a live handle; `out` must be writable. The result is
 * released with `isa_string_free`.
 */
IsaStatus isa_ontology_serialize(const IsaOntology *onto, IsaFormat format, char **out);

/**
 * Classifies and writes the taxonomy as `child<TAB>parent` lines.
 *
 * # Safety
 * `onto` must be a live handle; `out` must be writable. The result is
 * released with `isa_string_free`.
 */
IsaStatus isa_ontology_classify(const IsaOntology *onto, char **out);

/**
 * Writes the consistency report as JSON. Returns `INCONSISTENT` (with
 * the report still written) when the ontology has a clash.
 *
 * # Safety
 * `onto` must be a live handle; `out` must be writable. The result is
 * released with `isa_string_free`.
 */
IsaStatus isa_ontology_check(const IsaOntology *onto, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void isa_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISAONTO_H */
