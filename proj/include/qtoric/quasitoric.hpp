#pragma once
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/composition.hpp"
#include "qtoric/intmat.hpp"

namespace qtoric {

// Combinatorial model of an omnioriented quasitoric manifold of dimension 2m:
// the dual simplicial sphere K_P (vertices + facets), the characteristic
// vectors lambda_v in Z^m, and a distinguished base facet anchoring the
// fundamental-class normalization. Vertex order is part of the structure and
// is never canonicalized.
struct QuasitoricData {
    std::string name;
    int m = 0;
    std::vector<std::string> vertices;          // labels; order significant
    std::vector<std::vector<int>> facets;       // m vertex indices each
    std::vector<std::vector<Integer>> lambda;   // one length-m vector per vertex
    std::optional<int> base_facet;              // default: lexicographically least facet

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int facet_count() const { return static_cast<int>(facets.size()); }
    // Resolves the default. Facets are compared as sorted index sets.
    int base_facet_index() const;
    // m x |V| matrix with the lambda vectors as columns.
    IntMat lambda_matrix() const;
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> issues;
    // Per facet, det of the lambda columns in the facet's listed vertex
    // order; filled only when the shape checks pass.
    std::vector<Integer> facet_dets;
};

// Structural invariants plus the simplicial-sphere proxy: purity,
// the pseudomanifold condition (every (m-1)-subset of a facet lies in
// exactly two facets) and the Euler characteristic of S^{m-1}.
ValidationReport validate(const QuasitoricData& d);

// det of the base facet's lambda columns, vertices ascending; the value the
// base facet's square-free monomial is normalized to.
Integer base_facet_determinant(const QuasitoricData& d);

// A monomial in the vertex generators; exps holds (vertex, exponent >= 1)
// pairs with strictly increasing vertex indices. The empty monomial is the
// unit and only appears as the degree-0 basis element.
struct Monomial {
    std::vector<std::pair<int, int>> exps;

    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> e);

    int degree() const;
    std::vector<int> support() const;
    std::string str() const;  // e.g. "x0^2.x2"

    auto operator<=>(const Monomial&) const = default;
};

// One graded component of the face-ring quotient k*(K_P) (x)_{P(Theta*)} Z:
// the admissible monomial basis, the relation matrix (rows theta_j * mu over
// the degree-(k-1) basis, non-face terms dropped), and the cokernel data
// certified by Smith normal form. For k = m the evaluation functional against
// the fundamental class is attached.
struct GradedPiece {
    int degree = 0;
    std::vector<Monomial> basis;
    IntMat relations;
    std::vector<Integer> invariant_factors;
    int cokernel_rank = 0;
    std::vector<Integer> torsion;     // invariant factors > 1
    std::vector<Integer> eval;        // degree == m only; one value per basis monomial

    int basis_index(const Monomial& mu) const;  // -1 if absent
    Integer eval_monomial(const Monomial& mu) const;
};

// Throws ArgumentError if the data is invalid or k out of range, and
// IntegrityError if k = m and the cokernel is not free of rank one.
// Results are memoized per (data, degree); see also QTORIC_CACHE_DIR.
std::shared_ptr<const GradedPiece> graded_piece(const QuasitoricData& d, int k);

// Image of mu in H^{2m}; 0 when support(mu) is not a face. degree(mu) must
// equal m.
Integer top_eval(const QuasitoricData& d, const Monomial& mu);

// [alpha]_P: sum of top_eval over all strictly increasing tuples of vertex
// indices carrying the parts of alpha in order. weight(alpha) must equal m.
Integer char_number(const QuasitoricData& d, const Composition& alpha);

// char_number on every composition of m, in canonical order.
struct CharFunction {
    int degree = 0;
    std::map<Composition, Integer> values;
};
CharFunction char_function(const QuasitoricData& d);

// The product manifold: join of the spheres, P-then-Q vertex order,
// block-diagonal lambda, base facet the union of the base facets.
QuasitoricData product(const QuasitoricData& p, const QuasitoricData& q);

// CP^n: boundary of the n-simplex, lambda_0 = -(e_1+...+e_n), lambda_i = e_i.
// The base facet is {1,...,n}, whose lambda block is the identity.
QuasitoricData preset_cpn(int n);

// Hirzebruch surface: square polytope, lambda (1,0),(0,1),(-1,a),(0,-1).
QuasitoricData preset_hirzebruch(int a);

struct FHVector {
    std::vector<Integer> f;  // f[i] = number of i-dimensional faces
    std::vector<Integer> h;  // h[0..m]
};
FHVector f_h_vector(const QuasitoricData& d);

// Hermite-reduced integer basis of ker(Lambda: Z^V -> Z^m). Lambda must be
// surjective over Z (all Smith invariants 1); IntegrityError otherwise.
struct KernelLattice {
    IntMat basis;  // rank x |V|
    int rank = 0;
};
KernelLattice kernel_lattice(const QuasitoricData& d);

}  // namespace qtoric
