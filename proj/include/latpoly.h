/* latpoly.h - C interface to the lattice-polytope verification library.
 *
 * All functions are thread-compatible: handles are immutable after
 * creation and may be shared across threads; error messages are stored
 * per thread.  Reports are JSON documents in malloc'd NUL-terminated
 * strings owned by the caller (release with lp_string_free).  Every
 * computed integer in a report is a decimal string and every rational is
 * "p/q", so no precision is lost to JSON number types.
 */
#ifndef LATPOLY_H
#define LATPOLY_H

#if defined(__GNUC__)
#define LP_API __attribute__((visibility("default")))
#else
#define LP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lp_status {
    LP_OK = 0,
    LP_EPARSE = 1,       /* malformed input text or schema violation */
    LP_EINVALID = 2,     /* structurally valid input outside a contract */
    LP_EINCONSISTENT = 3, /* a formula and its oracle disagreed: library bug */
    LP_EINTERNAL = 4     /* unexpected failure (allocation, logic error) */
} lp_status;

typedef struct lp_polytope lp_polytope;
typedef struct lp_poset lp_poset;

/* Parse {"dim": d, "vertices": [[int,...],...]} into a polytope handle. */
LP_API lp_status lp_polytope_parse(const char* json_text, lp_polytope** out);
LP_API void lp_polytope_free(lp_polytope* p);

/* Parse {"size": d, "covers": [[lower, upper],...]} into a poset handle. */
LP_API lp_status lp_poset_parse(const char* json_text, lp_poset** out);
LP_API void lp_poset_free(lp_poset* q);

/* Reports.  On LP_OK, *out_json receives a malloc'd JSON document. */
LP_API lp_status lp_ehrhart_report(const lp_polytope* p, long m_max, char** out_json);
LP_API lp_status lp_boundary_volume_report(const lp_polytope* p, char** out_json);
LP_API lp_status lp_volume_report(const lp_polytope* p, char** out_json);
LP_API lp_status lp_reflexive_report(const lp_polytope* p, char** out_json);
LP_API lp_status lp_delta_report(const lp_polytope* p, char** out_json);
LP_API lp_status lp_f_vector_report(const lp_polytope* p, char** out_json);
LP_API lp_status lp_order_report(const lp_poset* q, long k_max, char** out_json);

/* checks: comma-separated subset of
 * "reciprocity,reflexive,volume,identity,bound"; NULL or "" = all
 * applicable.  m_max < 0 selects the default listing range. */
LP_API lp_status lp_birkhoff_report(int d, const char* checks, long m_max,
                             char** out_json);
LP_API lp_status lp_table1(int d, char** out_json);

/* True (1) when every "agree"/"all_hold" flag in the report is true. */
LP_API int lp_report_agrees(const char* report_json);

LP_API void lp_string_free(char* s);

/* Message and short machine tag for the calling thread's last failure;
 * both remain valid until the thread's next latpoly call. */
LP_API const char* lp_last_error(void);
LP_API const char* lp_last_error_tag(void);

#ifdef __cplusplus
}
#endif

#endif /* LATPOLY_H */
