#ifndef BLOCKALG_H
#define BLOCKALG_H

#include <stdbool.h>
#include <stdint.h>

typedef enum BlockalgStatus {
  BLOCKALG_STATUS_OK = 0,
  BLOCKALG_STATUS_NULL_ARGUMENT = 1,
  BLOCKALG_STATUS_INVALID_UTF8 = 2,
  BLOCKALG_STATUS_PARSE = 3,
  BLOCKALG_STATUS_DOMAIN = 4,
  BLOCKALG_STATUS_PANIC = 5,
} BlockalgStatus;

typedef struct BlockalgElement BlockalgElement;

typedef struct BlockalgModule BlockalgModule;

typedef struct BlockalgVector BlockalgVector;

/**
 * `coeff * x(a, i)`, or zero when `is_zero` is set.
 */
typedef struct BlockalgBracket {
  bool is_zero;
  int64_t coeff;
  int64_t a;
  int64_t i;
} BlockalgBracket;

/**
 * Message for the last failed call on this thread, or null.
 */
const char *blockalg_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void blockalg_string_free(char *s);

/**
 * `[x(a, i), x(b, j)]`.
 *
 * # Safety
 * `result` must be null or valid for writes.
 */
enum BlockalgStatus blockalg_bracket(int64_t a,
                                     int64_t i,
                                     int64_t b,
                                     int64_t j,
                                     struct BlockalgBracket *result);

/**
 * Parses a canonical element document.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string; `result` must be null or
 * valid for writes.
 */
enum BlockalgStatus blockalg_element_from_json(const char *json, struct BlockalgElement **result);

/**
 * # Safety
 * `element` must be null or a live handle; `result` must be null or valid
 * for writes.
 */
enum BlockalgStatus blockalg_element_to_json(const struct BlockalgElement *element, char **result);

/**
 * # Safety
 * `element` must be null or a handle not yet freed.
 */
void blockalg_element_free(struct BlockalgElement *element);

/**
 * Normal form of `lhs * rhs`.
 *
 * # Safety
 * Handles must be null or live; `result` must be null or valid for writes.
 */
enum BlockalgStatus blockalg_element_multiply(const struct BlockalgElement *lhs,
                                              const struct BlockalgElement *rhs,
                                              struct BlockalgElement **result);

/**
 * `lhs * rhs - rhs * lhs`.
 *
 * # Safety
 * Handles must be null or live; `result` must be null or valid for writes.
 */
enum BlockalgStatus blockalg_element_commutator(const struct BlockalgElement *lhs,
                                                const struct BlockalgElement *rhs,
                                                struct BlockalgElement **result);

/**
 * Height of a nonzero element; the zero element is a domain error.
 *
 * # Safety
 * `element` must be null or live; `result` must be null or valid for writes.
 */
enum BlockalgStatus blockalg_element_height(const struct BlockalgElement *element,
                                            uint64_t *result);

/**
 * Module from a character document and an ideal document.
 *
 * # Safety
 * Strings must be null or NUL-terminated; `result` must be null or valid
 * for writes.
 */
enum BlockalgStatus blockalg_module_new(const char *character_json,
                                        const char *ideal_json,
                                        struct BlockalgModule **result);

/**
 * # Safety
 * `module` must be null or a handle not yet freed.
 */
void blockalg_module_free(struct BlockalgModule *module);

/**
 * Parses a vector document in `module`; coefficients are reduced modulo
 * the module's ideal.
 *
 * # Safety
 * `module` must be null or live; `json` null or NUL-terminated; `result`
 * null or valid for writes.
 */
enum BlockalgStatus blockalg_vector_from_json(const struct BlockalgModule *module,
                                              const char *json,
                                              struct BlockalgVector **result);

/**
 * # Safety
 * `vector` must be null or live; `result` null or valid for writes.
 */
enum BlockalgStatus blockalg_vector_to_json(const struct BlockalgVector *vector, char **result);

/**
 * # Safety
 * `vector` must be null or a handle not yet freed.
 */
void blockalg_vector_free(struct BlockalgVector *vector);

/**
 * `element . vector`.
 *
 * # Safety
 * Handles must be null or live; `result` null or valid for writes.
 */
enum BlockalgStatus blockalg_act(const struct BlockalgModule *module,
                                 const struct BlockalgElement *element,
                                 const struct BlockalgVector *vector,
                                 struct BlockalgVector **result);

/**
 * `x(a, i) v - phi(x(a, i)) v` for `a + i >= 2`.
 *
 * # Safety
 * Handles must be null or live; `result` null or valid for writes.
 */
enum BlockalgStatus blockalg_defect(const struct BlockalgModule *module,
                                    int64_t a,
                                    int64_t i,
                                    const struct BlockalgVector *vector,
                                    struct BlockalgVector **result);

/**
 * Whether every defect with `2 <= a + i <= sum_max`, `i <= i_max` vanishes.
 *
 * # Safety
 * Handles must be null or live; `result` null or valid for writes.
 */
enum BlockalgStatus blockalg_is_whittaker(const struct BlockalgModule *module,
                                          const struct BlockalgVector *vector,
                                          int64_t sum_max,
                                          int64_t i_max,
                                          bool *result);

/**
 * Hankel goodness report as JSON. `m_max = 0` uses `n + 1` rows.
 *
 * # Safety
 * `character_json` must be null or NUL-terminated; `result` null or valid
 * for writes.
 */
enum BlockalgStatus blockalg_check_character_json(const char *character_json,
                                                  uint32_t n_max,
                                                  uint32_t s_max,
                                                  uint32_t m_max,
                                                  char **result);

/**
 * Solver report as JSON for the truncation and cutoff given.
 *
 * # Safety
 * `module` must be null or live; `result` null or valid for writes.
 */
enum BlockalgStatus blockalg_solve_json(const struct BlockalgModule *module,
                                        int64_t pi_min,
                                        int64_t part_i_max,
                                        uint32_t len_max,
                                        int64_t sum_max,
                                        int64_t i_max,
                                        char **result);

#endif  /* BLOCKALG_H */
