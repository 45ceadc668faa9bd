#include "qtgc/lemma.hpp"

namespace qtgc {

LemmaElements lemma_elements(const QuasiTuraevCoalgebra& h, long a, long b) {
    const Field& f = h.field();
    long ai = h.group().inverse(a);
    long bi = h.group().inverse(b);

    TensorElement ir({h.dim(a), h.dim(b)}, {a, b}, f);
    for (const auto& [y1, y2, y3, c] : tensor3_terms(h.phi_inv_at(a, b, bi))) {
        // y1 ⊗ y2 q_b S_{b^{-1}}(y3)
        Vec right = h.algebra.mul(b, h.algebra.basis(b, y2), h.q_at(b));
        right = h.algebra.mul(b, right, antipode_elem(h, bi, h.algebra.basis(bi, y3)));
        for (long j = 0; j < h.dim(b); ++j)
            if (!right[static_cast<std::size_t>(j)].is_zero())
                ir.coeff({y1, j}) += c * right[static_cast<std::size_t>(j)];
    }

    TensorElement jr({h.dim(a), h.dim(b)}, {a, b}, f);
    for (const auto& [y1, y2, y3, c] : tensor3_terms(h.phi_at(a, b, bi))) {
        // Y1 ⊗ S_b^{-1}(p_{b^{-1}} Y3) Y2
        Vec inner = h.algebra.mul(bi, h.p_at(bi), h.algebra.basis(bi, y3));
        Vec right = h.algebra.mul(b, antipode_inv_elem(h, b, inner), h.algebra.basis(b, y2));
        for (long j = 0; j < h.dim(b); ++j)
            if (!right[static_cast<std::size_t>(j)].is_zero())
                jr.coeff({y1, j}) += c * right[static_cast<std::size_t>(j)];
    }

    TensorElement il({h.dim(a), h.dim(b)}, {a, b}, f);
    for (const auto& [y1, y2, y3, c] : tensor3_terms(h.phi_at(ai, a, b))) {
        // Y2 S_a^{-1}(Y1 q_{a^{-1}}) ⊗ Y3
        Vec inner = h.algebra.mul(ai, h.algebra.basis(ai, y1), h.q_at(ai));
        Vec left = h.algebra.mul(a, h.algebra.basis(a, y2), antipode_inv_elem(h, a, inner));
        for (long i = 0; i < h.dim(a); ++i)
            if (!left[static_cast<std::size_t>(i)].is_zero())
                il.coeff({i, y3}) += c * left[static_cast<std::size_t>(i)];
    }

    TensorElement jl({h.dim(a), h.dim(b)}, {a, b}, f);
    for (const auto& [y1, y2, y3, c] : tensor3_terms(h.phi_inv_at(ai, a, b))) {
        // S_{a^{-1}}(y1) p_a y2 ⊗ y3
        Vec left = h.algebra.mul(a, antipode_elem(h, ai, h.algebra.basis(ai, y1)), h.p_at(a));
        left = h.algebra.mul(a, left, h.algebra.basis(a, y2));
        for (long i = 0; i < h.dim(a); ++i)
            if (!left[static_cast<std::size_t>(i)].is_zero())
                jl.coeff({i, y3}) += c * left[static_cast<std::size_t>(i)];
    }

    return {std::move(ir), std::move(jr), std::move(il), std::move(jl)};
}

namespace {

struct Tally {
    CheckResult res;
    bool live = true;
    explicit Tally(std::string id) { res.id = std::move(id); }
    void fail(std::string indices, const TensorElement& lhs, const TensorElement& rhs) {
        res.status = CheckResult::Status::fail;
        res.indices = std::move(indices);
        res.lhs = lhs.str();
        res.rhs = rhs.str();
        live = false;
    }
};

std::string at(long a, long b, long k = -1) {
    std::string s = "(alpha=" + std::to_string(a) + ", beta=" + std::to_string(b);
    if (k >= 0)
        s += ", h=" + std::to_string(k);
    return s + ")";
}

} // namespace

Report check_lemma_identities(const QuasiTuraevCoalgebra& h) {
    Report rep;
    long n = h.n();

    Tally slide_ir("lemma.slide_ir");
    Tally slide_jr("lemma.slide_jr");
    Tally slide_il("lemma.slide_il");
    Tally slide_jl("lemma.slide_jl");
    Tally cancel_jr_ir("lemma.cancel_jr_ir");
    Tally cancel_ir_jr("lemma.cancel_ir_jr");
    Tally cancel_jl_il("lemma.cancel_jl_il");
    Tally cancel_il_jl("lemma.cancel_il_jl");

    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            long ai = h.group().inverse(a);
            long bi = h.group().inverse(b);
            long ab = h.group().mul(a, b);
            LemmaElements el = lemma_elements(h, a, b);
            TensorElement unit2 = unit_tensor(h, {a, b});

            // slide identities, quantified over basis elements
            for (long k = 0; k < h.dim(a) && slide_ir.live; ++k) {
                ++slide_ir.res.cases;
                // Delta_{a,b}(h_(1,ab)) IR [1 ⊗ S_{b^{-1}}(h_(2,b^{-1}))] = IR [h ⊗ 1]
                TensorElement lhs({h.dim(a), h.dim(b)}, {a, b}, h.field());
                for (const auto& t : sweedler_basis(h, ab, bi, k)) {
                    TensorElement part = mul_tensor(
                        h, mul_tensor(h, delta_elem(h, a, b, h.algebra.basis(ab, t.i)), el.ir),
                        tensor2(h, a, h.algebra.unit(a), b,
                                antipode_elem(h, bi, h.algebra.basis(bi, t.j))));
                    lhs = lhs + part.scaled(t.coeff);
                }
                TensorElement rhs = mul_tensor(
                    h, el.ir, tensor2(h, a, h.algebra.basis(a, k), b, h.algebra.unit(b)));
                if (lhs != rhs)
                    slide_ir.fail(at(a, b, k), lhs, rhs);
            }

            for (long k = 0; k < h.dim(a) && slide_jr.live; ++k) {
                ++slide_jr.res.cases;
                // [1 ⊗ S_b^{-1}(h_(2,b^{-1}))] JR Delta_{a,b}(h_(1,ab)) = [h ⊗ 1] JR
                TensorElement lhs({h.dim(a), h.dim(b)}, {a, b}, h.field());
                for (const auto& t : sweedler_basis(h, ab, bi, k)) {
                    TensorElement part = mul_tensor(
                        h,
                        mul_tensor(h,
                                   tensor2(h, a, h.algebra.unit(a), b,
                                           antipode_inv_elem(h, b, h.algebra.basis(bi, t.j))),
                                   el.jr),
                        delta_elem(h, a, b, h.algebra.basis(ab, t.i)));
                    lhs = lhs + part.scaled(t.coeff);
                }
                TensorElement rhs = mul_tensor(
                    h, tensor2(h, a, h.algebra.basis(a, k), b, h.algebra.unit(b)), el.jr);
                if (lhs != rhs)
                    slide_jr.fail(at(a, b, k), lhs, rhs);
            }

            for (long k = 0; k < h.dim(b) && slide_il.live; ++k) {
                ++slide_il.res.cases;
                // Delta_{a,b}(a_(2,ab)) IL [S_a^{-1}(a_(1,a^{-1})) ⊗ 1] = IL [1 ⊗ a]
                TensorElement lhs({h.dim(a), h.dim(b)}, {a, b}, h.field());
                for (const auto& t : sweedler_basis(h, ai, ab, k)) {
                    TensorElement part = mul_tensor(
                        h, mul_tensor(h, delta_elem(h, a, b, h.algebra.basis(ab, t.j)), el.il),
                        tensor2(h, a, antipode_inv_elem(h, a, h.algebra.basis(ai, t.i)), b,
                                h.algebra.unit(b)));
                    lhs = lhs + part.scaled(t.coeff);
                }
                TensorElement rhs = mul_tensor(
                    h, el.il, tensor2(h, a, h.algebra.unit(a), b, h.algebra.basis(b, k)));
                if (lhs != rhs)
                    slide_il.fail(at(a, b, k), lhs, rhs);
            }

            for (long k = 0; k < h.dim(b) && slide_jl.live; ++k) {
                ++slide_jl.res.cases;
                // [S_{a^{-1}}(a_(1,a^{-1})) ⊗ 1] JL Delta_{a,b}(a_(2,ab)) = JL [1 ⊗ a]
                TensorElement lhs({h.dim(a), h.dim(b)}, {a, b}, h.field());
                for (const auto& t : sweedler_basis(h, ai, ab, k)) {
                    TensorElement part = mul_tensor(
                        h,
                        mul_tensor(h,
                                   tensor2(h, a,
                                           antipode_elem(h, ai, h.algebra.basis(ai, t.i)), b,
                                           h.algebra.unit(b)),
                                   el.jl),
                        delta_elem(h, a, b, h.algebra.basis(ab, t.j)));
                    lhs = lhs + part.scaled(t.coeff);
                }
                TensorElement rhs = mul_tensor(
                    h, el.jl, tensor2(h, a, h.algebra.unit(a), b, h.algebra.basis(b, k)));
                if (lhs != rhs)
                    slide_jl.fail(at(a, b, k), lhs, rhs);
            }

            // cancellation identities (element identities, one per pair)
            if (cancel_jr_ir.live) {
                ++cancel_jr_ir.res.cases;
                // Delta_{a,b}(J1_{ab}) IR [1 ⊗ S_{b^{-1}}(J2_{b^{-1}})] = 1 ⊗ 1
                LemmaElements shifted = lemma_elements(h, ab, bi);
                TensorElement lhs({h.dim(a), h.dim(b)}, {a, b}, h.field());
                for (const auto& [j1, j2, c] : tensor2_terms(shifted.jr)) {
                    TensorElement part = mul_tensor(
                        h, mul_tensor(h, delta_elem(h, a, b, h.algebra.basis(ab, j1)), el.ir),
                        tensor2(h, a, h.algebra.unit(a), b,
                                antipode_elem(h, bi, h.algebra.basis(bi, j2))));
                    lhs = lhs + part.scaled(c);
                }
                if (lhs != unit2)
                    cancel_jr_ir.fail(at(a, b), lhs, unit2);
            }

            if (cancel_ir_jr.live) {
                ++cancel_ir_jr.res.cases;
                // [1 ⊗ S_b^{-1}(I2_{b^{-1}})] JR Delta_{a,b}(I1_{ab}) = 1 ⊗ 1
                LemmaElements shifted = lemma_elements(h, ab, bi);
                TensorElement lhs({h.dim(a), h.dim(b)}, {a, b}, h.field());
                for (const auto& [i1, i2, c] : tensor2_terms(shifted.ir)) {
                    TensorElement part = mul_tensor(
                        h,
                        mul_tensor(h,
                                   tensor2(h, a, h.algebra.unit(a), b,
                                           antipode_inv_elem(h, b, h.algebra.basis(bi, i2))),
                                   el.jr),
                        delta_elem(h, a, b, h.algebra.basis(ab, i1)));
                    lhs = lhs + part.scaled(c);
                }
                if (lhs != unit2)
                    cancel_ir_jr.fail(at(a, b), lhs, unit2);
            }

            if (cancel_jl_il.live) {
                ++cancel_jl_il.res.cases;
                // Delta_{a,b}(JL2_{ab}) IL [S_a^{-1}(JL1_{a^{-1}}) ⊗ 1] = 1 ⊗ 1
                LemmaElements shifted = lemma_elements(h, ai, ab);
                TensorElement lhs({h.dim(a), h.dim(b)}, {a, b}, h.field());
                for (const auto& [t1, t2, c] : tensor2_terms(shifted.jl)) {
                    TensorElement part = mul_tensor(
                        h, mul_tensor(h, delta_elem(h, a, b, h.algebra.basis(ab, t2)), el.il),
                        tensor2(h, a, antipode_inv_elem(h, a, h.algebra.basis(ai, t1)), b,
                                h.algebra.unit(b)));
                    lhs = lhs + part.scaled(c);
                }
                if (lhs != unit2)
                    cancel_jl_il.fail(at(a, b), lhs, unit2);
            }

            if (cancel_il_jl.live) {
                ++cancel_il_jl.res.cases;
                // [S_{a^{-1}}(IL1_{a^{-1}}) ⊗ 1] JL Delta_{a,b}(IL2_{ab}) = 1 ⊗ 1
                LemmaElements shifted = lemma_elements(h, ai, ab);
                TensorElement lhs({h.dim(a), h.dim(b)}, {a, b}, h.field());
                for (const auto& [t1, t2, c] : tensor2_terms(shifted.il)) {
                    TensorElement part = mul_tensor(
                        h,
                        mul_tensor(h,
                                   tensor2(h, a,
                                           antipode_elem(h, ai, h.algebra.basis(ai, t1)), b,
                                           h.algebra.unit(b)),
                                   el.jl),
                        delta_elem(h, a, b, h.algebra.basis(ab, t2)));
                    lhs = lhs + part.scaled(c);
                }
                if (lhs != unit2)
                    cancel_il_jl.fail(at(a, b), lhs, unit2);
            }
        }

    rep.add(std::move(slide_ir.res));
    rep.add(std::move(slide_jr.res));
    rep.add(std::move(slide_il.res));
    rep.add(std::move(slide_jl.res));
    rep.add(std::move(cancel_jr_ir.res));
    rep.add(std::move(cancel_ir_jr.res));
    rep.add(std::move(cancel_jl_il.res));
    rep.add(std::move(cancel_il_jl.res));
    return rep;
}

} // namespace qtgc
