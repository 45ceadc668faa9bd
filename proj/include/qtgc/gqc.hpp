#pragma once

#include <tuple>
#include <vector>

#include "qtgc/fingroup.hpp"
#include "qtgc/linmap.hpp"
#include "qtgc/report.hpp"

namespace qtgc {

// Element of one graded component, as coordinates over its basis.
using Vec = std::vector<Scalar>;

Vec basis_vec(const Field& f, long dim, long i);
std::string vec_str(const Vec& v);

// One component H_a: an associative unital algebra given by structure
// constants. `mult` maps H_a⊗H_a to H_a (dim x dim^2, flat column (i,j)).
struct GradedComponent {
    long dim = 0;
    Vec unit;
    LinMap mult;
};

class GradedAlgebra {
  public:
    GradedAlgebra() = default;
    GradedAlgebra(FinGroup group, std::vector<GradedComponent> comps, Field field);

    const FinGroup& group() const { return group_; }
    const Field& field() const { return field_; }
    long n() const { return group_.order(); }

    long dim(long a) const { return comp(a).dim; }
    const Vec& unit(long a) const { return comp(a).unit; }
    const LinMap& mult(long a) const { return comp(a).mult; }
    const GradedComponent& comp(long a) const;

    // Product of elements of H_a.
    Vec mul(long a, const Vec& x, const Vec& y) const;
    Vec basis(long a, long i) const { return basis_vec(field_, dim(a), i); }

  private:
    FinGroup group_;
    std::vector<GradedComponent> comps_;
    Field field_;
};

// The full structure tuple ({H_a}, Delta, counit, Phi, S, p, q, crossing).
// Constructed in unvalidated state; validate_all promotes it. All maps are
// stored as exact matrices, Phi and the antipode with their inverses.
struct QuasiTuraevCoalgebra {
    GradedAlgebra algebra;
    std::vector<LinMap> delta;          // (a*n+b): H_{ab} -> H_a⊗H_b
    LinMap counit;                      // 1 x dim(H_1)
    std::vector<TensorElement> phi;     // ((a*n+b)*n+c): element of H_a⊗H_b⊗H_c
    std::vector<TensorElement> phi_inv;
    std::vector<LinMap> antipode;       // a: S_a: H_a -> H_{a^{-1}}
    std::vector<LinMap> antipode_inv;   // a: S_a^{-1}: H_{a^{-1}} -> H_a
    std::vector<Vec> p_elem;            // a: p_a in H_a
    std::vector<Vec> q_elem;            // a: q_a in H_a
    std::vector<LinMap> crossing;       // (b*n+a): phi_b: H_a -> H_{bab^{-1}}
    bool validated = false;

    long n() const { return algebra.n(); }
    const FinGroup& group() const { return algebra.group(); }
    const Field& field() const { return algebra.field(); }
    long dim(long a) const { return algebra.dim(a); }

    const LinMap& delta_at(long a, long b) const;
    const TensorElement& phi_at(long a, long b, long c) const;
    const TensorElement& phi_inv_at(long a, long b, long c) const;
    const LinMap& antipode_at(long a) const;
    const LinMap& antipode_inv_at(long a) const;
    const Vec& p_at(long a) const;
    const Vec& q_at(long a) const;
    const LinMap& crossing_at(long b, long a) const;

    bool structurally_equal(const QuasiTuraevCoalgebra& rhs) const;
};

// ---- element utilities ----

// Delta_{a,b}(h) for h in H_{ab}, as a two-leg tensor graded (a, b).
TensorElement delta_elem(const QuasiTuraevCoalgebra& h, long a, long b, const Vec& x);
Scalar counit_elem(const QuasiTuraevCoalgebra& h, const Vec& x);
Vec antipode_elem(const QuasiTuraevCoalgebra& h, long a, const Vec& x);     // S_a(x)
Vec antipode_inv_elem(const QuasiTuraevCoalgebra& h, long a, const Vec& x); // S_a^{-1}(x)
Vec crossing_elem(const QuasiTuraevCoalgebra& h, long b, long a, const Vec& x);

// 1_{g1}⊗...⊗1_{gm}.
TensorElement unit_tensor(const QuasiTuraevCoalgebra& h, const std::vector<long>& grading);
// Two-leg tensor x⊗y with x in H_a, y in H_b.
TensorElement tensor2(const QuasiTuraevCoalgebra& h, long a, const Vec& x, long b, const Vec& y);

// Componentwise product in H_{g1}⊗...⊗H_{gm}; gradings must agree.
TensorElement mul_tensor(const QuasiTuraevCoalgebra& h, const TensorElement& x,
                         const TensorElement& y);

// Applies Delta_{a,b} to leg `leg` (graded ab), splitting it in two.
TensorElement apply_delta_at(const QuasiTuraevCoalgebra& h, const TensorElement& t,
                             std::size_t leg, long a, long b);
// Applies the counit to leg `leg` (graded 1), removing it.
TensorElement apply_counit_at(const QuasiTuraevCoalgebra& h, const TensorElement& t,
                              std::size_t leg);
// Applies the crossing phi_b to leg `leg`.
TensorElement apply_crossing_at(const QuasiTuraevCoalgebra& h, const TensorElement& t,
                                std::size_t leg, long b);

// Sweedler expansion of Delta_{a,b}(e_k) as (i, j, coefficient) terms.
struct SweedlerTerm {
    long i;
    long j;
    Scalar coeff;
};
std::vector<SweedlerTerm> sweedler_basis(const QuasiTuraevCoalgebra& h, long a, long b, long k);

// Nonzero terms of a three-leg tensor as (i, j, k, coefficient).
std::vector<std::tuple<long, long, long, Scalar>> tensor3_terms(const TensorElement& t);
// Nonzero terms of a two-leg tensor as (i, j, coefficient).
std::vector<std::tuple<long, long, Scalar>> tensor2_terms(const TensorElement& t);

// ---- validators (section-by-section axiom suites) ----

Report validate_algebra(const GradedAlgebra& alg);
Report validate_coalgebra(const QuasiTuraevCoalgebra& h);
Report validate_antipode(const QuasiTuraevCoalgebra& h);
Report validate_crossing(const QuasiTuraevCoalgebra& h);

// Runs all four suites; sets h.validated when everything passes.
Report validate_all(QuasiTuraevCoalgebra& h);

} // namespace qtgc
