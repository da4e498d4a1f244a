#pragma once
#include <array>
#include <string>
#include <utility>

#include "qtoric/composition.hpp"
#include "qtoric/lincomb.hpp"
#include "qtoric/ring.hpp"

namespace qtoric {

// NSymm: the free associative ring Z<Z_1, Z_2, ...>; a composition alpha
// stands for the word Z_{alpha_1}...Z_{alpha_r}, the empty word for 1.
using NSymmElement = LinComb<Composition, struct NSymmWordBasis>;

// QSymm in the monomial basis M_alpha. Only the additive structure, the
// deconcatenation coproduct and the pairing with NSymm are provided.
using QSymmElement = LinComb<Composition, struct QSymmMonomialBasis>;

using CompositionPair = std::pair<Composition, Composition>;
using CompositionTriple = std::array<Composition, 3>;

// NSymm (x) NSymm, basis Z_alpha (x) Z_beta. All generators sit in even
// topological degree, so the componentwise product carries no signs.
using TensorElement = LinComb<CompositionPair, struct TensorWordBasis>;

// Threefold tensors, used by the coassociativity checks.
using Tensor3Element = LinComb<CompositionTriple, struct Tensor3WordBasis>;

// QSymm (x) QSymm in the monomial basis; the target of deconcatenation.
using QSymmTensor = LinComb<CompositionPair, struct QSymmTensorBasis>;

NSymmElement nsymm_one();
// Z_i for i >= 1; Z_0 is the unit.
NSymmElement nsymm_generator(int i);
NSymmElement nsymm_word(const Composition& alpha);
QSymmElement qsymm_monomial(const Composition& alpha);

TensorElement tensor_one();
TensorElement tensor_of(const NSymmElement& a, const NSymmElement& b);

NSymmElement operator*(const NSymmElement& a, const NSymmElement& b);
TensorElement operator*(const TensorElement& a, const TensorElement& b);

// <Z_alpha, M_beta> = delta_{alpha,beta}, extended bilinearly.
Integer pairing(const NSymmElement& a, const QSymmElement& q);

// Delta M_gamma = sum over the length(gamma)+1 splits gamma = alpha.beta
// of M_alpha (x) M_beta.
QSymmTensor deconcatenation_coproduct(const QSymmElement& q);

// Coefficient of the empty word.
Integer counit(const NSymmElement& a);

// True iff every term has the given weight (the zero element is homogeneous
// of every weight).
bool is_homogeneous(const NSymmElement& a, int weight);
NSymmElement homogeneous_part(const NSymmElement& a, int weight);
int max_weight(const NSymmElement& a);  // 0 for the zero element

// Printing. Words render as "Z2" / "Z1.Z1", the empty word as "1";
// terms are joined with " + " / " - " and unit coefficients are dropped.
// NSymm terms print in canonical composition order; tensor terms are ordered
// by total weight, then by left weight descending, then canonically.
std::string format_word(const Composition& alpha);
std::string format_nsymm(const NSymmElement& a);
std::string format_tensor(const TensorElement& t);

template <>
struct RingTraits<NSymmElement> {
    static NSymmElement zero() { return {}; }
    static NSymmElement one() { return nsymm_one(); }
};

template <>
struct RingTraits<TensorElement> {
    static TensorElement zero() { return {}; }
    static TensorElement one() { return tensor_one(); }
};

}  // namespace qtoric
