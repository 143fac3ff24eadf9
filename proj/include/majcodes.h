/*
 * majcodes - exact construction and verification of Majorana-fermion
 * stabilizer codes, with the occupancy embeddings, the glueing procedure
 * behind the [16,3,4] code, and the E8 invariants of its code subspace.
 *
 * C API over an opaque handle. All returned strings are heap-allocated and
 * owned by the caller; release them with mjc_string_free(). Functions return
 * MJC_OK on success; on any other status mjc_last_error() holds a message
 * (thread-local, valid until the next API call on the same thread).
 */

#ifndef MAJCODES_H
#define MAJCODES_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MJC_API __declspec(dllexport)
#else
#define MJC_API __attribute__((visibility("default")))
#endif

typedef enum mjc_status {
    MJC_OK = 0,
    MJC_CHECK_FAILED = 1,     /* ran to completion, some verification failed */
    MJC_PARSE_ERROR = 2,      /* malformed input text */
    MJC_INVALID_ARGUMENT = 3, /* bad parameter (unknown name, range, ...) */
    MJC_INTERNAL_ERROR = 4
} mjc_status;

typedef struct mjc_code mjc_code; /* opaque */

typedef struct mjc_build_options {
    int l;                  /* hastings: 2^l Majorana modes, l >= 3 */
    int n;                  /* single-occupancy: embedded qubit count */
    const char* occupancy;  /* four-qubit-embedded: "single" or "double" */
} mjc_build_options;

MJC_API const char* mjc_version(void);
MJC_API const char* mjc_status_name(mjc_status status);
MJC_API const char* mjc_last_error(void);
MJC_API void mjc_string_free(char* s);

/*
 * Named constructions: "four-qubit", "single-occupancy", "four-qubit-embedded",
 * "hastings", "glued". Unused option fields may be zero/NULL; options itself
 * may be NULL where no parameter is needed.
 */
MJC_API mjc_status mjc_code_build(const char* name, const mjc_build_options* options,
                                  mjc_code** out_code);

/* Parses a code-spec text: "modes: M" header, then one generator per line. */
MJC_API mjc_status mjc_code_parse(const char* spec_text, mjc_code** out_code);

MJC_API void mjc_code_free(mjc_code* code);

/* Queries. Kind is "majorana" or "qubit" (the four-qubit code). */
MJC_API const char* mjc_code_kind(const mjc_code* code);
MJC_API int mjc_code_majorana_modes(const mjc_code* code);
MJC_API int mjc_code_generator_count(const mjc_code* code);
MJC_API int mjc_code_is_valid(const mjc_code* code);
MJC_API int mjc_code_logical_qubits(const mjc_code* code); /* -1 if invalid */
MJC_API int mjc_code_basis_count(const mjc_code* code);

/*
 * Full verification report as JSON. Deterministic for identical inputs.
 * max_weight bounds the distance search (0 picks the default of 4); jobs 0/1
 * runs single-threaded. command_echo, when non-NULL, is echoed into the
 * report. Returns MJC_OK when every check in the report passed and
 * MJC_CHECK_FAILED when the report contains failures (the JSON is still
 * produced).
 */
MJC_API mjc_status mjc_code_report(const mjc_code* code, int max_weight, int jobs,
                                   const char* command_echo, char** out_json);

/* Code-spec text for the generators (empty for the qubit-level code). */
MJC_API mjc_status mjc_code_spec_text(const mjc_code* code, char** out_text);

/* Basis vectors in the state-file format, one vector per call. */
MJC_API mjc_status mjc_code_basis_vector(const mjc_code* code, int index, char** out_text);

/*
 * Operator conversion. target is "pauli" or "majorana"; modes = 0 infers the
 * mode count (from the largest index, or the Pauli string length).
 */
MJC_API mjc_status mjc_operator_convert(const char* operator_text, const char* target, int modes,
                                        char** out_text);
MJC_API mjc_status mjc_convert_report(const char* operator_text, const char* target, int modes,
                                      const char* command_echo, char** out_json);

/*
 * Embedding. amplitude_lines holds 2^n scalar lines (binary order, most
 * significant qubit first); occupancy_bits is the length-n occupancy label
 * ("0..0" single, "1..1" double). Outputs the embedded state file text.
 */
MJC_API mjc_status mjc_embed_state(const char* amplitude_lines, const char* occupancy_bits,
                                   char** out_state_text);
MJC_API mjc_status mjc_embed_report(const char* amplitude_lines, const char* occupancy_bits,
                                    const char* command_echo, char** out_json);

/*
 * E8 invariants of eight exact amplitudes ("3/2", "-1/2", ... whitespace
 * separated). include_decimals adds a truncated decimal rendering.
 */
MJC_API mjc_status mjc_invariants_report(const char* amplitudes_text, int include_decimals,
                                         const char* command_echo, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* MAJCODES_H */
