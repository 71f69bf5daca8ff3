#pragma once

#include <cstdint>

#include "rational.hpp"
#include "verdict.hpp"

namespace cremona {

/// 2x2x2 array of rational coefficients a_ijk of a trilinear form
/// sum a_ijk x_i y_j z_k on P1 x P1 x P1 (indices 0-based).
struct TrilinearForm {
    Rational a[2][2][2];
};

/// Named forms (a)..(e) of the trilinear classification.
TrilinearForm canonical_trilinear_form(char which);

/// Cayley's 2x2x2 hyperdeterminant; zero iff the (1,1,1) divisor is
/// singular.
Rational hyperdeterminant(const TrilinearForm& f);

/// Exhaustive singular-point search for the reduction mod p over
/// P1(F_{p^2})^3: true iff all six partials vanish somewhere. Throws
/// when p divides a denominator or the form reduces to zero mod p.
bool finite_field_singular(const TrilinearForm& f, int p);

Verdict verify_tau0();
Verdict verify_g0();
Verdict verify_s_alpha_lines();
Verdict verify_quadric_rotation();

/// Hyperdeterminant-vs-oracle agreement on the five canonical forms and
/// on `samples` random small-integer forms, over primes 5 and 7.
Verdict verify_trilinear_forms(int samples = 100, uint64_t seed = 12345);

}  // namespace cremona
