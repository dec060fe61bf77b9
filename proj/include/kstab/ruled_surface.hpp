#ifndef KSTAB_RULED_SURFACE_HPP
#define KSTAB_RULED_SURFACE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kstab/polynomial.hpp"
#include "kstab/rational.hpp"
#include "kstab/root_isolation.hpp"
#include "kstab/weight_system.hpp"

namespace kstab {

// Deformation to the normal cone of the infinity section of the ruled
// surface P(O + M) over a genus-g curve, deg M = d, polarised by the
// fibre class plus m times the zero section, blow-up parameter c. The
// Seshadri bound keeps c strictly below m.
struct RuledSurfaceConfig {
    int genus = 2;
    int degree = 1;
    Rational m;
    Rational c;

    void validate() const; // throws invalid_config
};

// Weight system of the induced action on the central fibre: one block per
// torus weight l = 0..mk with multiplicity k + l*d + 1 - g and
// configuration weight -max(ck - l, 0).
WeightSystem build_weight_system(const RuledSurfaceConfig& cfg);

// Top coefficients of the five trace sequences in closed form. Only the
// genus-2, degree-1 surface has closed forms for these.
struct ExpansionLeads {
    Rational dim_k2, dim_k1;     // dimension: k^2, k^1
    Rational alpha_k3, alpha_k2; // configuration trace: k^3, k^2
    Rational beta_k3, beta_k2;   // torus trace: k^3, k^2
    Rational alpha_beta_k4;      // mixed trace product: k^4
    Rational beta_beta_k4;       // torus trace square: k^4

    friend bool operator==(const ExpansionLeads&, const ExpansionLeads&) = default;
};

// Closed forms for the genus-2, degree-1 family. The config overloads
// throw unsupported_parameters for any other (genus, degree).
ExpansionLeads closed_form_expansions(const Rational& m, const Rational& c);
ExpansionLeads closed_form_expansions(const RuledSurfaceConfig& cfg);
Rational closed_form_relative_futaki(const Rational& m, const Rational& c);
Rational closed_form_relative_futaki(const RuledSurfaceConfig& cfg);

// Quadratic factor in c whose sign on (0, m) is the sign of the relative
// Futaki invariant; the cofactor c(m-c)(m+2)/(4(m^2+6m+6)) is positive
// there. Returned with ascending coefficients.
Polynomial stability_quadratic(const Rational& m);

// The same quadratic with its coefficients kept as polynomials in m,
// ascending in c.
std::array<Polynomial, 3> stability_quadratic_coeffs();

// Discriminant of the stability quadratic as a polynomial in m.
Polynomial stability_discriminant();

struct StabilityVerdict {
    enum class Kind { strictly_destabilized, boundary_destabilized, no_witness_found };
    Kind kind = Kind::no_witness_found;
    std::optional<Rational> witness_c; // a destabilizing blow-up parameter
    std::optional<Rational> value;     // relative Futaki invariant at the witness
};

std::string to_string(StabilityVerdict::Kind kind);

// Searches (0, m) for a rational c with nonpositive stability quadratic,
// smallest denominator first and then smallest numerator up to the given
// bound. no_witness_found means the quadratic was proven positive on the
// whole interval by root isolation.
StabilityVerdict find_destabilizer(const Rational& m, std::int64_t denominator_bound);

// Isolating interval of width <= precision around the smallest m > 0 at
// which the stability quadratic first has a root in (0, m), located via
// the discriminant's real roots.
std::pair<Rational, Rational> critical_parameter(const Rational& precision);

// Existence test for the known extremal metrics at polarisation parameter
// m+1: the defining polynomial is positive exactly when the stability
// quadratic is positive on (0, m), after the variable change recorded in
// the report.
struct TfEquivalenceReport {
    Rational m;
    Rational tf_polarisation; // m + 1
    bool metric_exists = false;
    Polynomial quadratic;
    std::vector<RootInterval> destabilizing_roots;
    std::string variable_change;
};

TfEquivalenceReport tf_equivalence_check(const Rational& m);

} // namespace kstab

#endif
