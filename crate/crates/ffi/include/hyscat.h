#ifndef HYSCAT_H
#define HYSCAT_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HyscatStatus {
  HYSCAT_STATUS_OK = 0,
  HYSCAT_STATUS_NULL_POINTER = 1,
  HYSCAT_STATUS_INVALID_PARAMETER = 2,
  HYSCAT_STATUS_POLE = 3,
  HYSCAT_STATUS_NON_CONVERGENCE = 4,
  HYSCAT_STATUS_DEGENERATE_PARAMETERS = 5,
  HYSCAT_STATUS_DOMAIN = 6,
  HYSCAT_STATUS_EVANESCENT_CHANNEL = 7,
  HYSCAT_STATUS_NO_BRACKET = 8,
  HYSCAT_STATUS_NONE_FOUND = 9,
  HYSCAT_STATUS_ILL_CONDITIONED = 10,
  HYSCAT_STATUS_BUFFER_TOO_SMALL = 11,
  HYSCAT_STATUS_PANIC = 12,
} HyscatStatus;

typedef enum HyscatAngleUnit {
  HYSCAT_ANGLE_UNIT_RADIANS = 0,
  HYSCAT_ANGLE_UNIT_DEGREES = 1,
} HyscatAngleUnit;

/**
 * Opaque potential handle.
 */
typedef struct HyscatPotential HyscatPotential;

/**
 * δ_l with its ingredients, all in the requested unit.
 */
typedef struct HyscatPhaseShift {
  double delta_l;
  double theta_l;
  double theta_l_free;
  double arg_gamma_eta1_star;
  double arg_gamma_eta2_star;
  double arg_gamma_a_star;
  double arg_gamma_b_star;
} HyscatPhaseShift;

/**
 * Phase shift from direct integration, radians in (−π/2, π/2].
 */
typedef struct HyscatOraclePhase {
  double delta;
  double halving_change;
  bool converged;
} HyscatOraclePhase;

typedef struct HyscatComplex {
  double re;
  double im;
} HyscatComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a potential handle. ħ = μ = 1 gives atomic units.
 *
 * # Safety
 * `out_handle` must be valid for writes.
 */
enum HyscatStatus hyscat_potential_new(double v0,
                                       double a,
                                       double alpha,
                                       double mu,
                                       double hbar,
                                       struct HyscatPotential **out_handle);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `handle` must come from [`hyscat_potential_new`] and not be used again.
 */
void hyscat_potential_free(struct HyscatPotential *handle);

/**
 * Analytic phase shift of partial wave `l` at wave number `k`.
 *
 * # Safety
 * `handle` must be live; `out_result` valid for writes.
 */
enum HyscatStatus hyscat_phase_shift(const struct HyscatPotential *handle,
                                     uint32_t l,
                                     double k,
                                     enum HyscatAngleUnit unit,
                                     struct HyscatPhaseShift *out_result);

/**
 * Bound-state energies for n = 0..=n_max, deepest first.
 *
 * Writes the number of levels to `out_count`. If it exceeds `capacity`,
 * nothing is copied and `HYSCAT_STATUS_BUFFER_TOO_SMALL` is returned. A
 * potential without bound states yields count 0 and `HYSCAT_STATUS_OK`.
 *
 * # Safety
 * `energies` must hold `capacity` doubles (may be null if capacity is 0).
 */
enum HyscatStatus hyscat_bound_states(const struct HyscatPotential *handle,
                                      uint32_t l,
                                      uint32_t n_max,
                                      double *energies,
                                      size_t capacity,
                                      size_t *out_count);

/**
 * Phase shift by Numerov integration with the default layout. `exact`
 * selects the full interaction instead of the approximated equation.
 *
 * # Safety
 * `handle` must be live; `out_result` valid for writes.
 */
enum HyscatStatus hyscat_oracle_phase_shift(const struct HyscatPotential *handle,
                                            uint32_t l,
                                            double k,
                                            bool exact,
                                            struct HyscatOraclePhase *out_result);

/**
 * Principal branch of log Γ(z).
 *
 * # Safety
 * `out_value` must be valid for writes.
 */
enum HyscatStatus hyscat_log_gamma(struct HyscatComplex z, struct HyscatComplex *out_value);

/**
 * ₂F₁(a, b; c; z).
 *
 * # Safety
 * `out_value` must be valid for writes.
 */
enum HyscatStatus hyscat_gauss_2f1(struct HyscatComplex a,
                                   struct HyscatComplex b,
                                   struct HyscatComplex c,
                                   struct HyscatComplex z,
                                   struct HyscatComplex *out_value);

/**
 * Static description of a status code.
 */
const char *hyscat_status_message(enum HyscatStatus status);

/**
 * Detail of the last failure on this thread, or "" after a success. Valid
 * until the next call into this library from the same thread.
 */
const char *hyscat_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYSCAT_H */
