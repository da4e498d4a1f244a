#pragma once
#include <string>
#include <vector>

#include "qtoric/nsymm.hpp"
#include "qtoric/series.hpp"

namespace qtoric {

// Z(t) = sum_{i>=0} Z_i t^{i+1} with Z_0 = 1, truncated at the given order.
Series<NSymmElement> z_series(int order);
// 1 (x) Z(t).
Series<TensorElement> z_series_right(int order);

// Generator coproducts read off the residue formula
//   Delta Z(t) = res_{u=0} Z(u) (x) (u - Z(t))^{-1},
// expanding (u - Z(t))^{-1} = sum_{k>=0} u^{-k-1} Z(t)^k with u central and
// the Z(u) coefficients landing in the left tensor factor. The t^{n+1}
// coefficient of the result is Delta(Z_n), for n+1 <= order.
Series<TensorElement> delta_bfk_series(int order);

// Table of generator coproducts Delta(Z_n), n = 0..max_weight, filled once
// from delta_bfk_series. The checks accept a table so the fault-injection
// hooks can perturb a private copy.
class GeneratorTable {
  public:
    explicit GeneratorTable(int max_weight);

    int max_weight() const { return static_cast<int>(delta_.size()) - 1; }
    const TensorElement& delta(int n) const;
    // Removes the largest-key term of Delta(Z_weight). Fault hook for tests.
    void drop_one_term(int weight);

    TensorElement delta_word(const Composition& alpha) const;
    TensorElement delta_element(const NSymmElement& a) const;

  private:
    std::vector<TensorElement> delta_;
};

// Delta_BFK(Z_n); backed by a process-wide write-once memo table.
TensorElement delta_bfk_generator(int n);

// Algebra-map extension of the generator coproduct. Every composition in a
// must have weight <= order.
TensorElement delta_bfk(const NSymmElement& a, int order);

// Antipode, by the graded recursion on generators and anti-multiplicative
// extension to words. Every composition in a must have weight <= order.
NSymmElement antipode(const NSymmElement& a, int order);
NSymmElement antipode_generator(int n);

// z -> Z(c): substitutes c + sum_{i>=1} Z_i c^{i+1} into f, truncated at
// order. f must have zero constant term.
Series<NSymmElement> lambda_br_substitute(const Series<Integer>& f, int order);

// Coefficientwise a -> a (x) 1 followed by c -> 1 (x) Z(c), i.e.
// sum_k (a_k (x) 1)(1 (x) Z(c))^k, truncated at order.
Series<TensorElement> delta_bt_substitute(const Series<NSymmElement>& f, int order);

struct DegreeCheck {
    int degree;
    bool ok = true;
    std::string detail;  // empty when ok
};

struct CheckReport {
    std::vector<DegreeCheck> degrees;
    bool all_ok() const;
    const DegreeCheck* first_failure() const;
};

// Coefficientwise Delta_BFK of Z(c) compared against
// Delta_BT(Z(c)) = sum_i (Z_i (x) 1)(1 (x) Z(c))^{i+1}, degree by degree.
CheckReport check_conjecture15(int order);
CheckReport check_conjecture15(int order, const GeneratorTable& table);

// Coassociativity, the counit laws and multiplicativity of Delta_BFK on all
// words of weight <= max_weight.
CheckReport check_coassociativity(int max_weight);
CheckReport check_coassociativity(int max_weight, const GeneratorTable& table);

}  // namespace qtoric
