#ifndef FOCAL_H
#define FOCAL_H

/* C interface to the condensation/focal-tower engine.  All functions are
 * exception-free; errors travel as reports carrying a status code, a JSON
 * body, and a flattened text body.  Reports returned by any focal_run_* or
 * focal_problem_run call are never NULL except on allocation failure. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum focal_status {
  FOCAL_OK = 0,              /* computed, all checks / expectations met   */
  FOCAL_FAILED = 1,          /* computed, but a structural check failed   */
  FOCAL_INVALID_INPUT = 2,   /* malformed or unsuitable input document    */
  FOCAL_INTERNAL_ERROR = 3   /* engine invariant violated                 */
} focal_status;

typedef struct focal_problem focal_problem;
typedef struct focal_report focal_report;

int focal_abi_version(void);

/* Parses a JSON problem document (an algebra with atom subspaces, or an
 * abstract hyperoperation table).  On success returns a handle; on failure
 * returns NULL and, when error_report is non-NULL, stores a report
 * describing the defect (free it with focal_report_free). */
focal_problem* focal_problem_parse(const char* document_json, focal_report** error_report);
void focal_problem_free(focal_problem* problem);

/* command: "verify" | "table" | "condense" | "tower" | "hyper".
 * max_depth bounds the tower height; 0 means unbounded. */
focal_report* focal_problem_run(const focal_problem* problem, const char* command, int max_depth);

/* One-shot convenience: parse and run in a single call. */
focal_report* focal_run_document(const char* command, const char* document_json, int max_depth);

/* Runs a named corpus item against its recorded expectations, or every item
 * when name is NULL or "all". */
focal_report* focal_run_corpus(const char* name);

/* Scripted subspace checks for the dependent-atom example over Q(zeta_3). */
focal_report* focal_run_a4_checks(void);

focal_status focal_report_status(const focal_report* report);
/* UTF-8, owned by the report, valid until focal_report_free. */
const char* focal_report_json(const focal_report* report);
const char* focal_report_text(const focal_report* report);
void focal_report_free(focal_report* report);

/* Newline-terminated list of corpus item names; free with focal_string_free. */
char* focal_corpus_names(void);
void focal_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FOCAL_H */
