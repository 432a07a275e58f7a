#ifndef GMPI_H
#define GMPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gmpi_status {
  GMPI_OK = 0,
  GMPI_ERR_INPUT = 1,
  GMPI_ERR_VALIDATION = 2,
  GMPI_ERR_SIZE_LIMIT = 3,
  GMPI_ERR_CONTEXT = 4,
  GMPI_ERR_INVARIANT = 5,
  GMPI_ERR_NULL_ARGUMENT = 6,
  GMPI_ERR_INTERNAL = 7
} gmpi_status;

typedef struct gmpi_ideal gmpi_ideal;
typedef struct gmpi_resolution gmpi_resolution;
typedef struct gmpi_instance gmpi_instance;
typedef struct gmpi_construction gmpi_construction;

/* Message of the last failing call on this thread; never NULL. */
const char* gmpi_last_error(void);
const char* gmpi_status_name(gmpi_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
void gmpi_free_string(char* s);

/* Ideals: {"variables": [...], "generators": [[...], ...]}. */
gmpi_status gmpi_ideal_from_json(const char* json, gmpi_ideal** out);
gmpi_status gmpi_ideal_to_json(const gmpi_ideal* ideal, char** out);
gmpi_status gmpi_ideal_num_generators(const gmpi_ideal* ideal, size_t* out);
void gmpi_ideal_free(gmpi_ideal* ideal);

/* Minimal resolution of S/I; max_taylor <= 0 selects the default cap. */
gmpi_status gmpi_resolve(const gmpi_ideal* ideal, int max_taylor, gmpi_resolution** out);
gmpi_status gmpi_resolution_betti_text(const gmpi_resolution* res, char** out);
gmpi_status gmpi_resolution_betti_json(const gmpi_resolution* res, char** out);
/* reg of the ideal, pd of the quotient. */
gmpi_status gmpi_resolution_regularity(const gmpi_resolution* res, int* out);
gmpi_status gmpi_resolution_projdim(const gmpi_resolution* res, int* out);
void gmpi_resolution_free(gmpi_resolution* res);

/* Instance documents; max_taylor <= 0 keeps the document's option. */
gmpi_status gmpi_instance_from_json(const char* json, int max_taylor, gmpi_instance** out);
gmpi_status gmpi_instance_to_json(const gmpi_instance* inst, char** out);
gmpi_status gmpi_random_instance(uint64_t seed, gmpi_instance** out);
/* The generalized mixed product ideal L as an ideal handle. */
gmpi_status gmpi_instance_ideal(const gmpi_instance* inst, gmpi_ideal** out);
void gmpi_instance_free(gmpi_instance* inst);

/* Builds the star complex, double complex and Tot(D), checking that Tot(D)
 * is a minimal resolution of T/L. */
gmpi_status gmpi_construct(const gmpi_instance* inst, int max_taylor, gmpi_construction** out);
/* {"L": [...], "betti": {...}, "reg_I": n, "reg_L": n, "pd": n, ...} */
gmpi_status gmpi_construction_summary_json(const gmpi_construction* c, char** out);
gmpi_status gmpi_construction_betti_text(const gmpi_construction* c, char** out);
/* Runs every check; *all_passed is 1 iff no check reports FAIL. */
gmpi_status gmpi_construction_check(const gmpi_construction* c, uint64_t seed, char** report_json, int* all_passed);
void gmpi_construction_free(gmpi_construction* c);
/* Builds and checks in one step; a failed build becomes a FAIL entry
 * named "construction" instead of an error status. */
gmpi_status gmpi_instance_check(const gmpi_instance* inst, int max_taylor, uint64_t seed, char** report_json,
                                int* all_passed);

/* Family request such as {"family": "path-ideal", "parts": [2, 2], "t": 2};
 * yields an ideal or instance document. */
gmpi_status gmpi_family_json(const char* request_json, char** out);

/* Runs the seeded suite; seeds == NULL selects the pinned seeds. */
gmpi_status gmpi_run_suite(const uint64_t* seeds, size_t num_seeds, char** report_json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* GMPI_H */
