#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/char_fraction.hpp"
#include "ratcells/cone.hpp"

namespace ratcells {

/// Equivariant multiplicity of an affine toric chart at its attractive fixed
/// point: a homogeneous fraction of degree minus the dimension.
struct EqMult {
    CharFraction value;
    int homogeneity_degree = 0;
};

/// Weights of the torus action on the chart of a full-dimensional cone: the
/// primitive extremal generators of the dual cone. For a simplicial cone
/// these are exactly dim-many and are the characters of the invariant curves
/// through the fixed point.
inline std::vector<Character> orbifold_tangent_weights(const Cone& sigma) {
    if (!sigma.is_full_dimensional())
        throw precondition_error("unsupported: tangent weights need a full-dimensional cone");
    Cone dual = sigma.dual();
    std::vector<Character> out;
    out.reserve(dual.rays().size());
    for (const Vec& r : dual.rays()) out.push_back(Character(r));
    return out;
}

/// e_0 of the affine chart of sigma, computed as the sum over a triangulation
/// of the dual cone of multiplicity(piece) / product(piece generators).
///
/// Each summand is the leading term of the lattice-point generating function
/// of a simplicial subcone; overlaps between pieces are lower-dimensional and
/// do not contribute in this degree, so the sum is independent of the
/// triangulation (tested, not assumed).
inline EqMult eq_mult(const Cone& sigma) {
    if (!sigma.is_full_dimensional())
        throw precondition_error("equivariant multiplicity needs a full-dimensional cone");
    int d = sigma.ambient_rank();
    if (d == 0) {
        EqMult e;
        e.value = CharFraction::constant(0, 1);
        e.homogeneity_degree = 0;
        return e;
    }
    Cone dual = sigma.dual();
    std::vector<CharFraction> terms;
    for (const Cone& piece : dual.triangulate()) {
        std::vector<Character> chars;
        for (const Vec& r : piece.rays()) chars.push_back(Character(r));
        terms.push_back(
            CharFraction::reciprocal_product(d, Rat(piece.multiplicity()), chars));
    }
    EqMult e;
    e.value = frac_sum(terms);
    e.homogeneity_degree = -d;
    if (e.value.is_zero() || !e.value.is_homogeneous() || e.value.degree() != -d)
        throw internal_error("equivariant multiplicity failed its homogeneity check");
    return e;
}

/// Data of the finite toric cover of the chart by affine space: the cover's
/// coordinate weights and its degree. Only simplicial cones admit a cover
/// with isolated central fiber.
struct FiniteCover {
    std::vector<Character> weights;
    Int degree;
};

inline FiniteCover finite_cover_certificate(const Cone& sigma) {
    if (!sigma.is_full_dimensional())
        throw precondition_error("finite cover certificate needs a full-dimensional cone");
    if (!sigma.is_simplicial()) {
        std::ostringstream os;
        os << "no finite cover with isolated central fiber: the chart has "
           << sigma.facets().size() << " invariant curves through the fixed point, "
           << "more than its dimension " << sigma.ambient_rank();
        throw precondition_error(os.str());
    }
    FiniteCover c;
    c.weights = orbifold_tangent_weights(sigma);
    c.degree = lattice_index(c.weights);
    // Exact identity: e_0 = degree / product(weights).
    CharFraction expected =
        CharFraction::reciprocal_product(sigma.ambient_rank(), Rat(c.degree), c.weights);
    if (!(eq_mult(sigma).value == expected))
        throw internal_error("cover-degree identity failed");
    return c;
}

/// Certificate answering whether the affine chart of sigma is an algebraic
/// rational cell.
///
/// Simplicial implies yes: the chart is finitely covered by affine space
/// with the recorded weights and degree, so its rational Chow groups match
/// those of affine space and its projectivization matches a weighted
/// projective space. Non-simplicial implies no: the chart carries more
/// invariant curves through the fixed point than its dimension, which a
/// cell cannot do.
struct RationalCellCertificate {
    bool verdict = false;
    int ray_count = 0;
    int dimension = 0;
    std::optional<Int> cover_degree;
    std::vector<Character> cover_weights;
    std::vector<Character> curve_characters;
    std::optional<std::string> failure_reason;
};

inline RationalCellCertificate is_algebraic_rational_cell(const Cone& sigma) {
    if (!sigma.is_full_dimensional())
        throw precondition_error("rational-cell decision needs a full-dimensional cone");
    RationalCellCertificate cert;
    cert.ray_count = sigma.ray_count();
    cert.dimension = sigma.ambient_rank();
    cert.curve_characters = orbifold_tangent_weights(sigma);
    cert.verdict = sigma.is_simplicial();
    if (cert.verdict) {
        FiniteCover c = finite_cover_certificate(sigma);
        cert.cover_weights = c.weights;
        cert.cover_degree = c.degree;
    } else {
        std::ostringstream os;
        os << "curve count l(x) = " << cert.curve_characters.size()
           << " exceeds dim X = " << cert.dimension;
        cert.failure_reason = os.str();
    }
    return cert;
}

/// The positive integer d with e_0 * product(curve characters) = d; equals
/// the lattice index of the dual weights.
inline Int product_formula_check(const Cone& sigma) {
    if (!sigma.is_simplicial() || !sigma.is_full_dimensional())
        throw precondition_error("product formula check needs a simplicial full-dimensional cone");
    std::vector<Character> weights = orbifold_tangent_weights(sigma);
    Polynomial prod = Polynomial::constant(sigma.ambient_rank(), 1);
    for (const Character& chi : weights) prod = prod * Polynomial::linear(chi);
    CharFraction d = eq_mult(sigma).value.times(prod);
    if (!d.is_polynomial() || !d.numerator().is_constant())
        throw internal_error("product formula did not clear the denominator");
    Rat val = d.numerator().constant_value();
    if (val <= 0 || denominator(val) != 1)
        throw internal_error("product formula value is not a positive integer");
    Int result = numerator(val);
    if (result != lattice_index(weights))
        throw internal_error("product formula disagrees with the dual lattice index");
    return result;
}

} // namespace ratcells
