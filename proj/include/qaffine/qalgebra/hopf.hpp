#pragma once

#include <vector>

#include "qaffine/qalgebra/report.hpp"
#include "qaffine/qalgebra/representation.hpp"

namespace qaffine {

// A product of generators; the empty word is the unit.
using Word = std::vector<Generator>;

struct WordTerm {
  RatFunc coeff;
  Word word;
};

struct TensorTerm {
  RatFunc coeff;
  Word left;
  Word right;
};

// Delta(E+-_i) = E+-_i (x) K_i^-1 + K_i (x) E+-_i, Delta(K) = K (x) K,
// Delta(H) = H (x) 1 + 1 (x) H.
std::vector<TensorTerm> coproduct_terms(const Generator& g, const CartanData& c);
// S(E+-_i) = -q_i^(-+1) E+-_i, S(K) = K^-1, S(H) = -H, extended anti-multiplicatively.
WordTerm antipode(const Word& w, const CartanData& c);
// epsilon(K) = 1, epsilon(E) = epsilon(H) = 0.
RatFunc counit(const Word& w);

Mat word_matrix(const Word& w, const Representation& rho);

// (rho1 (x) rho2) Delta(g). Error("algebra-mismatch") if the Cartan data differ.
Mat tensor_coproduct_matrix(const Generator& g, const Representation& rho1, const Representation& rho2);

// Representation on rho1 (x) rho2 with every generator acting through Delta.
Representation tensor_product(const Representation& rho1, const Representation& rho2);

// Group-form weight relations, [E+_i, E-_j], and q-Serre relations.
Report verify_defining_relations(const Representation& rho);

// Coassociativity on rho1 (x) rho2 (x) rho3, counit and antipode axioms on rho1,
// for every Chevalley generator.
Report verify_hopf_axioms(const Representation& rho1, const Representation& rho2, const Representation& rho3);

}  // namespace qaffine
