#pragma once

#include "qtgc/gqc.hpp"

namespace qtgc {

// The four antipode-correction element families. Each entry is a two-leg
// tensor: ir, jr in H_a⊗H_b built from Phi at (a, b, b^{-1}); il, jl built
// from Phi at (a^{-1}, a, b).
struct LemmaElements {
    TensorElement ir;
    TensorElement jr;
    TensorElement il;
    TensorElement jl;
};

LemmaElements lemma_elements(const QuasiTuraevCoalgebra& h, long a, long b);

// Verifies the eight identities these elements satisfy on a validated
// instance: four "slide" identities moving an element across the coproduct
// (quantified over every basis element), and four cancellations collapsing
// to 1⊗1. Identities are checked for every index pair.
Report check_lemma_identities(const QuasiTuraevCoalgebra& h);

} // namespace qtgc
