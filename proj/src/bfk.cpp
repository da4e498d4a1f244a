#include "qtoric/bfk.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "qtoric/error.hpp"

namespace qtoric {

Series<NSymmElement> z_series(int order) {
    Series<NSymmElement> z(order);
    for (int i = 0; i + 1 <= order; ++i)
        z.set_coeff(i + 1, nsymm_generator(i));
    return z;
}

Series<TensorElement> z_series_right(int order) {
    Series<TensorElement> z(order);
    for (int i = 0; i + 1 <= order; ++i)
        z.set_coeff(i + 1, tensor_of(nsymm_one(), nsymm_generator(i)));
    return z;
}

Series<TensorElement> delta_bfk_series(int order) {
    if (order < 1)
        throw ArgumentError("delta_bfk_series: order must be >= 1");
    using TS = Series<TensorElement>;
    const TS zt_right = z_series_right(order);

    // (u - Z(t))^{-1} as a Laurent series in u; Z(t)^k contributes nothing
    // beyond k = order since its lowest t-exponent is k.
    LaurentSeries<TS> resolvent(order + 1);
    TS power = TS::one(order);
    for (int k = 0; k <= order; ++k) {
        resolvent.set_coeff(-k - 1, power);
        power = power * zt_right;
    }

    // Z(u) (x) 1, coefficients constant in t.
    LaurentSeries<TS> z_of_u(0);
    for (int i = 0; i + 1 <= order; ++i)
        z_of_u.set_coeff(i + 1,
                         TS::monomial(0, tensor_of(nsymm_generator(i), nsymm_one()), order));

    const LaurentSeries<TS> integrand = z_of_u * resolvent;
    const TS* res = integrand.find(-1);
    return res ? *res : TS(order);
}

GeneratorTable::GeneratorTable(int max_weight) {
    if (max_weight < 0)
        throw ArgumentError("generator table needs max_weight >= 0");
    const Series<TensorElement> series = delta_bfk_series(max_weight + 1);
    delta_.reserve(max_weight + 1);
    for (int n = 0; n <= max_weight; ++n)
        delta_.push_back(series.coeff(n + 1));
}

const TensorElement& GeneratorTable::delta(int n) const {
    if (n < 0 || n > max_weight())
        throw ArgumentError("generator index outside table range");
    return delta_[n];
}

void GeneratorTable::drop_one_term(int weight) {
    if (weight < 0 || weight > max_weight() || delta_[weight].is_zero())
        throw ArgumentError("no term to drop at this weight");
    const auto& last = std::prev(delta_[weight].terms().end());
    delta_[weight].add_term(last->first, -last->second);
}

TensorElement GeneratorTable::delta_word(const Composition& alpha) const {
    TensorElement out = tensor_one();
    for (int part : alpha.parts())
        out = out * delta(part);
    return out;
}

TensorElement GeneratorTable::delta_element(const NSymmElement& a) const {
    TensorElement out;
    for (const auto& [alpha, c] : a.terms())
        out += delta_word(alpha) * c;
    return out;
}

namespace {

std::mutex g_table_mutex;
std::vector<NSymmElement> g_antipode_memo;  // guarded by g_table_mutex

const GeneratorTable& shared_table(int min_weight) {
    static GeneratorTable table(8);
    if (table.max_weight() < min_weight)
        table = GeneratorTable(std::max(min_weight, 2 * table.max_weight()));
    return table;
}

NSymmElement antipode_generator_locked(int n, std::vector<NSymmElement>& memo) {
    while (static_cast<int>(memo.size()) <= n) {
        const int w = static_cast<int>(memo.size());
        if (w == 0) {
            memo.push_back(nsymm_one());
            continue;
        }
        // m(S (x) id) Delta(Z_w) = 0 solved for S(Z_w); the extreme terms are
        // Z_w (x) 1 and 1 (x) Z_w.
        NSymmElement s = -nsymm_generator(w);
        for (const auto& [key, c] : shared_table(w).delta(w).terms()) {
            const auto& [left, right] = key;
            if (left.weight() == 0 || left.weight() == w)
                continue;
            NSymmElement s_left = nsymm_one();
            const auto& parts = left.parts();
            for (auto it = parts.rbegin(); it != parts.rend(); ++it)
                s_left = s_left * memo[*it];
            s -= (s_left * nsymm_word(right)) * c;
        }
        memo.push_back(std::move(s));
    }
    return memo[n];
}

}  // namespace

TensorElement delta_bfk_generator(int n) {
    if (n < 0)
        throw ArgumentError("generator index must be >= 0");
    std::scoped_lock lock(g_table_mutex);
    return shared_table(n).delta(n);
}

TensorElement delta_bfk(const NSymmElement& a, int order) {
    for (const auto& [alpha, c] : a.terms())
        if (alpha.weight() > order)
            throw ArgumentError("composition weight exceeds truncation order");
    std::scoped_lock lock(g_table_mutex);
    return shared_table(order).delta_element(a);
}

NSymmElement antipode_generator(int n) {
    if (n < 0)
        throw ArgumentError("generator index must be >= 0");
    std::scoped_lock lock(g_table_mutex);
    return antipode_generator_locked(n, g_antipode_memo);
}

NSymmElement antipode(const NSymmElement& a, int order) {
    for (const auto& [alpha, c] : a.terms())
        if (alpha.weight() > order)
            throw ArgumentError("composition weight exceeds truncation order");
    std::scoped_lock lock(g_table_mutex);
    NSymmElement out;
    for (const auto& [alpha, c] : a.terms()) {
        NSymmElement s = nsymm_one();
        const auto& parts = alpha.parts();
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            s = s * antipode_generator_locked(*it, g_antipode_memo);
        out += s * c;
    }
    return out;
}

Series<NSymmElement> lambda_br_substitute(const Series<Integer>& f, int order) {
    if (f.coeff(0) != 0)
        throw ArgumentError("lambda_br_substitute: nonzero constant term");
    Series<NSymmElement> lifted(std::min(f.order(), order));
    for (const auto& [e, c] : f.coeffs())
        lifted.set_coeff(e, nsymm_one() * c);
    return substitute(lifted, z_series(order));
}

Series<TensorElement> delta_bt_substitute(const Series<NSymmElement>& f, int order) {
    Series<TensorElement> lifted(std::min(f.order(), order));
    for (const auto& [e, c] : f.coeffs())
        lifted.set_coeff(e, tensor_of(c, nsymm_one()));
    return substitute(lifted, z_series_right(order));
}

bool CheckReport::all_ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeCheck& d) { return d.ok; });
}

const DegreeCheck* CheckReport::first_failure() const {
    for (const auto& d : degrees)
        if (!d.ok)
            return &d;
    return nullptr;
}

CheckReport check_conjecture15(int order) {
    std::scoped_lock lock(g_table_mutex);
    return check_conjecture15(order, shared_table(std::max(0, order - 1)));
}

CheckReport check_conjecture15(int order, const GeneratorTable& table) {
    if (order < 1)
        throw ArgumentError("check_conjecture15: order must be >= 1");
    if (table.max_weight() < order - 1)
        throw ArgumentError("generator table too small for requested order");

    Series<TensorElement> lhs(order);
    for (int n = 0; n + 1 <= order; ++n)
        lhs.set_coeff(n + 1, table.delta(n));
    const Series<TensorElement> rhs = delta_bt_substitute(z_series(order), order);

    CheckReport report;
    for (int d = 1; d <= order; ++d) {
        DegreeCheck check{d, true, {}};
        const TensorElement l = lhs.coeff(d), r = rhs.coeff(d);
        if (l != r) {
            check.ok = false;
            std::ostringstream os;
            os << "c^" << d << ": coefficientwise coproduct " << format_tensor(l)
               << " != substitution side " << format_tensor(r);
            check.detail = os.str();
        }
        report.degrees.push_back(std::move(check));
    }
    return report;
}

namespace {

Tensor3Element delta_on_left(const TensorElement& t, const GeneratorTable& table) {
    Tensor3Element out;
    for (const auto& [key, c] : t.terms()) {
        const TensorElement inner = table.delta_word(key.first);
        for (const auto& [ikey, ic] : inner.terms())
            out.add_term({ikey.first, ikey.second, key.second}, c * ic);
    }
    return out;
}

Tensor3Element delta_on_right(const TensorElement& t, const GeneratorTable& table) {
    Tensor3Element out;
    for (const auto& [key, c] : t.terms()) {
        const TensorElement inner = table.delta_word(key.second);
        for (const auto& [ikey, ic] : inner.terms())
            out.add_term({key.first, ikey.first, ikey.second}, c * ic);
    }
    return out;
}

NSymmElement counit_on_left(const TensorElement& t) {
    NSymmElement out;
    for (const auto& [key, c] : t.terms())
        if (key.first.empty())
            out.add_term(key.second, c);
    return out;
}

NSymmElement counit_on_right(const TensorElement& t) {
    NSymmElement out;
    for (const auto& [key, c] : t.terms())
        if (key.second.empty())
            out.add_term(key.first, c);
    return out;
}

}  // namespace

CheckReport check_coassociativity(int max_weight) {
    std::scoped_lock lock(g_table_mutex);
    return check_coassociativity(max_weight, shared_table(std::max(0, max_weight)));
}

CheckReport check_coassociativity(int max_weight, const GeneratorTable& table) {
    if (max_weight < 1)
        throw ArgumentError("check_coassociativity: max_weight must be >= 1");
    if (table.max_weight() < max_weight)
        throw ArgumentError("generator table too small for requested weight");

    CheckReport report;
    for (int w = 1; w <= max_weight; ++w) {
        DegreeCheck check{w, true, {}};
        for (const Composition& alpha : compositions_of(w)) {
            const TensorElement d = table.delta_word(alpha);
            if (delta_on_left(d, table) != delta_on_right(d, table)) {
                check.ok = false;
                check.detail = "coassociativity fails on " + format_word(alpha);
                break;
            }
            if (counit_on_left(d) != nsymm_word(alpha) ||
                counit_on_right(d) != nsymm_word(alpha)) {
                check.ok = false;
                check.detail = "counit law fails on " + format_word(alpha);
                break;
            }
            bool mult_ok = true;
            for (int i = 1; i < alpha.length() && mult_ok; ++i) {
                auto [head, tail] = alpha.split_at(i);
                mult_ok = d == table.delta_word(head) * table.delta_word(tail);
            }
            if (!mult_ok) {
                check.ok = false;
                check.detail = "multiplicativity fails on " + format_word(alpha);
                break;
            }
        }
        report.degrees.push_back(std::move(check));
    }
    return report;
}

}  // namespace qtoric
