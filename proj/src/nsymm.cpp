#include "qtoric/nsymm.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <vector>

#include "qtoric/error.hpp"

namespace qtoric {

NSymmElement nsymm_one() {
    return NSymmElement::term(Composition());
}

NSymmElement nsymm_generator(int i) {
    if (i < 0)
        throw ArgumentError("generator index must be >= 0");
    if (i == 0)
        return nsymm_one();
    return NSymmElement::term(Composition({i}));
}

NSymmElement nsymm_word(const Composition& alpha) {
    return NSymmElement::term(alpha);
}

QSymmElement qsymm_monomial(const Composition& alpha) {
    return QSymmElement::term(alpha);
}

TensorElement tensor_one() {
    return TensorElement::term({Composition(), Composition()});
}

TensorElement tensor_of(const NSymmElement& a, const NSymmElement& b) {
    TensorElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add_term({ka, kb}, ca * cb);
    return out;
}

NSymmElement operator*(const NSymmElement& a, const NSymmElement& b) {
    return NSymmElement::product(
        a, b, [](const Composition& x, const Composition& y) { return x.concat(y); });
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    return TensorElement::product(a, b, [](const CompositionPair& x, const CompositionPair& y) {
        return CompositionPair{x.first.concat(y.first), x.second.concat(y.second)};
    });
}

Integer pairing(const NSymmElement& a, const QSymmElement& q) {
    Integer out = 0;
    // Both term maps share the composition order; walk the smaller one.
    const auto& small = a.term_count() <= q.term_count() ? a.terms() : q.terms();
    for (const auto& [k, c] : small) {
        if (&small == &a.terms())
            out += c * q.coeff(k);
        else
            out += c * a.coeff(k);
    }
    return out;
}

QSymmTensor deconcatenation_coproduct(const QSymmElement& q) {
    QSymmTensor out;
    for (const auto& [gamma, c] : q.terms())
        for (int i = 0; i <= gamma.length(); ++i) {
            auto [head, tail] = gamma.split_at(i);
            out.add_term({std::move(head), std::move(tail)}, c);
        }
    return out;
}

Integer counit(const NSymmElement& a) {
    return a.coeff(Composition());
}

bool is_homogeneous(const NSymmElement& a, int weight) {
    for (const auto& [k, c] : a.terms())
        if (k.weight() != weight)
            return false;
    return true;
}

NSymmElement homogeneous_part(const NSymmElement& a, int weight) {
    NSymmElement out;
    for (const auto& [k, c] : a.terms())
        if (k.weight() == weight)
            out.add_term(k, c);
    return out;
}

int max_weight(const NSymmElement& a) {
    int w = 0;
    for (const auto& [k, c] : a.terms())
        w = std::max(w, k.weight());
    return w;
}

std::string format_word(const Composition& alpha) {
    if (alpha.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < alpha.parts().size(); ++i) {
        if (i)
            os << '.';
        os << 'Z' << alpha.parts()[i];
    }
    return os.str();
}

namespace {

void append_term(std::ostringstream& os, bool first, const Integer& c, const std::string& word) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
        os << (c < 0 ? "-" : "");
    else
        os << (c < 0 ? " - " : " + ");
    if (mag != 1)
        os << mag << ' ';
    os << word;
}

}  // namespace

std::string format_nsymm(const NSymmElement& a) {
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        append_term(os, first, c, format_word(k));
        first = false;
    }
    return os.str();
}

std::string format_tensor(const TensorElement& t) {
    if (t.is_zero())
        return "0";
    std::vector<const std::pair<const CompositionPair, Integer>*> terms;
    terms.reserve(t.term_count());
    for (const auto& term : t.terms())
        terms.push_back(&term);
    std::stable_sort(terms.begin(), terms.end(), [](const auto* x, const auto* y) {
        const auto& [xl, xr] = x->first;
        const auto& [yl, yr] = y->first;
        int xt = xl.weight() + xr.weight(), yt = yl.weight() + yr.weight();
        return std::tuple(xt, -xl.weight(), xl.split_mask(), xr.split_mask()) <
               std::tuple(yt, -yl.weight(), yl.split_mask(), yr.split_mask());
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* term : terms) {
        append_term(os, first, term->second,
                    format_word(term->first.first) + "⊗" + format_word(term->first.second));
        first = false;
    }
    return os.str();
}

}  // namespace qtoric
