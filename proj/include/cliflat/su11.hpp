#pragma once

#include <optional>
#include <vector>

#include "cliflat/operators.hpp"

namespace cliflat {

// ---------------------------------------------------------------------------
// Hypergeometric coefficients
// ---------------------------------------------------------------------------

// Rising factorial (a)_r = a (a+1) ... (a+r-1), with (a)_0 = 1.
rational pochhammer(const rational& a, unsigned r);

// gamma_s = sum_{r=0}^{s} (-1)^r (-s-n-1)_r / (-2s-n+2)_r * C(s,r).
// A zero Pochhammer factor in a denominator makes the pair (s, n) singular;
// the offending index is reported rather than skipped.
struct gamma_value {
    std::optional<rational> value; // empty iff singular
    int singular_r = -1;           // first r with a vanishing denominator factor
    bool singular() const { return !value.has_value(); }
};

gamma_value gamma_direct(unsigned s, int n);

// Truncated 2F1(a, b; c; 1) with a = -s-n-1, b = -s, c = -2s-n+2, summed to
// the s-th term.
gamma_value gamma_2f1(unsigned s, int n);

// [0F1(-2s-n+2; d/dt) t^s]_{t=1} = sum_r C(s,r) / (-2s-n+2)_r.
// This is the printed differential shortcut; it does NOT reproduce
// gamma_direct in general (see the gamma adjudication relation).
gamma_value gamma_0f1(unsigned s, int n);

// [1F1(-s-n-1; -2s-n+2; -d/dt) t^s]_{t=1}: the differential form with the
// missing numerator parameter restored; agrees with gamma_direct termwise.
gamma_value gamma_1f1_corrected(unsigned s, int n);

struct gamma_row {
    unsigned s;
    int n;
    gamma_value direct, f21, f01, corrected;
};

std::vector<gamma_row> gamma_table(unsigned s_max, int n_max);

// ---------------------------------------------------------------------------
// Ladder bases w_s and Appell sequences m_s
// ---------------------------------------------------------------------------

// w_s = ((1/h) W_h^{+-})^s m0 with m0 in the joint kernel of E_h^+ and E_h^-.
// Each w_s is verified to satisfy E_h^{+-} w_s = s w_s exactly (matching
// sign), and the lowering constants c(s, n) with
// (E_h^+ - E_h^-) w_s = c(s, n) w_{s-1} are extracted exactly.
struct ladder_basis {
    int sign;
    std::vector<clifford_poly> w;          // w_0 .. w_{s_max}
    std::vector<rational> lowering_c;      // c(s, n) for s = 1 .. s_max
};

ladder_basis build_ladder(int sign, const clifford_poly& m0, unsigned s_max);

// Appell sequence m_s = lambda_s (M_h^{+-})^s m0, normalized so that
// D_h^{-+} m_s = s m_{s-1} exactly. The proportionality constants c_s with
// D_h^{-+} u_s = c_s u_{s-1} are measured, not assumed.
struct appell_sequence {
    int sign;
    std::vector<rational> lambda;          // lambda_0 .. lambda_{s_max}
    std::vector<rational> c;               // c_1 .. c_{s_max}
    std::vector<clifford_poly> m;          // normalized m_s
};

appell_sequence build_appell(int sign, unsigned s_max, const lattice_params& params);

// exp(t D_h^{-+}) p as an exact finite sum (the Dirac operators lower degree).
clifford_poly dirac_exp(const rational& t, int dirac_sign, const clifford_poly& p);

// ---------------------------------------------------------------------------
// Casimir operator
// ---------------------------------------------------------------------------

// The positive/negative series realization
//   pi^{+-}(K_h) = (E^{+-} + n/2)(E^{+-} + n/2 - 1) - (1/h) W_h^{+-} (E^+ - E^-).
clifford_poly casimir_apply(const clifford_poly& p, int series_sign);

op_ptr casimir_expr(int series_sign, const lattice_params& params);

// ---------------------------------------------------------------------------
// Joint eigenspaces and the Fourier decomposition
// ---------------------------------------------------------------------------

// Exact basis of { p scalar : E_h^+ p = E_h^- p = s p, deg p <= d }.
// The operators are Clifford-scalar, so the Clifford-valued eigenspace is
// the tensor product of this basis with the 2^n blades.
struct eigen_basis {
    int degree_bound;
    long eigenvalue;
    std::vector<clifford_poly> basis; // scalar-blade polynomials, RREF-canonical
};

eigen_basis eigenspace(const lattice_params& params, int d, long s);

// One component of the Fourier decomposition: p = sum ((1/h) W_h^{+-})^r q
// with q in the joint eigenspace for eigenvalue s - r.
struct fourier_component {
    long s;
    unsigned r;
    clifford_poly q;
};

std::vector<fourier_component> fourier_decompose(const clifford_poly& p, int sign);

// ---------------------------------------------------------------------------
// Reconstruction of joint eigenfunctions from a ladder element
// ---------------------------------------------------------------------------

// Runs the printed recursion c_{r+1,s} = c_{r,s} / ((r+1)(-2s-n+r+2)) on
// M = sum_r c_{r,s} ((1/h)W^{+-})^r (E^+-E^-)^r w_s, then verifies the
// eigenvalue equations and the proportionality M = gamma_s w_s. Verification
// failures are recorded, not fatal: the record is the product.
struct almansi_record {
    unsigned s;
    int sign;
    std::vector<rational> c;               // c_{0,s} .. c_{s,s}
    clifford_poly constructed;             // M
    bool eigen_ok;                         // E^+ M = E^- M = s M
    std::optional<rational> gamma;         // gamma_s (empty if singular)
    bool matches_gamma_scaling;            // M == gamma_s * w_s
    std::optional<rational> actual_ratio;  // a with M == a * w_s, if proportional
};

almansi_record almansi_reconstruct(unsigned s, int sign, const clifford_poly& w_s);

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

// (1/h) (W_h^{+j} + ... ), i.e. the raising operator of the chosen series.
clifford_poly raise_over_h(const clifford_poly& p, int sign);

// If a == c * b for a rational c, return c (b must be nonzero).
std::optional<rational> proportionality(const clifford_poly& a, const clifford_poly& b);


} // namespace cliflat
