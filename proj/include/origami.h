#ifndef ORIGAMI_H
#define ORIGAMI_H

/* C interface to the origami census library.
 *
 * Every function returns an orc_status. On failure a one-line message is
 * available from orc_last_error() until the next call on the same thread.
 * Strings returned through char** are owned by the caller and released with
 * orc_string_free(). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orc_status {
  ORC_OK = 0,
  ORC_INVALID_ARGUMENT = 1,
  ORC_PARSE = 2,
  ORC_DISCONNECTED = 3,
  ORC_NOT_FOUND = 4,
  ORC_IO = 5,
  ORC_CACHE_CORRUPT = 6,
  ORC_RESOURCE = 7,
  ORC_INTERNAL = 8
} orc_status;

typedef enum orc_format { ORC_FORMAT_JSON = 0, ORC_FORMAT_CSV = 1, ORC_FORMAT_TEXT = 2 } orc_format;

typedef struct orc_store orc_store;   /* locked cache directory */
typedef struct orc_census orc_census; /* isomorphism classes of one degree */
typedef struct orc_curves orc_curves; /* action tables and curve components */

typedef struct orc_census_summary {
  int degree;
  size_t abelian_classes;
  size_t nonabelian_classes;
} orc_census_summary;

typedef struct orc_curves_summary {
  int degree;
  size_t abelian_components;
  size_t nonabelian_components;
  int abelian_genus_min, abelian_genus_max;       /* -1 when there are no components */
  int nonabelian_genus_min, nonabelian_genus_max; /* -1 when there are no components */
} orc_curves_summary;

const char* orc_last_error(void);
const char* orc_status_name(orc_status s);
void orc_string_free(char* s);

/* Cache directory. Fails with ORC_RESOURCE if another process holds it. */
orc_status orc_store_open(const char* dir, orc_store** out);
void orc_store_close(orc_store* store);

/* In-memory census, or one loaded from / written to the store. `reused`
 * (optional) reports whether a valid cached copy was used. */
orc_status orc_census_build(int degree, int workers, orc_census** out);
orc_status orc_census_load(orc_store* store, int degree, int workers, int force, orc_census** out, int* reused);
void orc_census_free(orc_census* census);
orc_status orc_census_summarize(const orc_census* census, orc_census_summary* out);
/* Class id of any connected origami of the census degree. */
orc_status orc_census_find(const orc_census* census, const char* origami, uint32_t* id);
/* Canonical representative of a class in origami text form. */
orc_status orc_census_representative(const orc_census* census, uint32_t id, char** out);

orc_status orc_curves_build(const orc_census* census, int workers, orc_curves** out);
orc_status orc_curves_load(orc_store* store, const orc_census* census, int workers, int force, orc_curves** out,
                           int* reused);
void orc_curves_free(orc_curves* curves);
orc_status orc_curves_summarize(const orc_curves* curves, orc_curves_summary* out);
orc_status orc_curves_component_count(const orc_curves* curves, size_t* out);

/* Report of components sharing all classical invariants (json, csv or text). */
orc_status orc_report(const orc_census* census, const orc_curves* curves, orc_format format, char** out);

/* Parses an origami; reports its degree and whether it is connected. */
orc_status orc_origami_check(const char* origami, int* degree, int* connected);

/* Inspection of one origami. census and curves may be NULL; they must have
 * the degree of the origami otherwise. Formats: json or text. */
orc_status orc_info(const char* origami, const orc_census* census, const orc_curves* curves, orc_format format,
                    char** out);

/* Graph description (DOT) of one component. */
orc_status orc_diagram(const orc_curves* curves, uint32_t component, char** out);

/* Writes `text` to a file of the store (report or diagram) and returns its path. */
orc_status orc_store_write_report(orc_store* store, int degree, orc_format format, const char* text, char** path);
orc_status orc_store_write_diagram(orc_store* store, int degree, uint32_t component, const char* text, char** path);

#ifdef __cplusplus
}
#endif

#endif
