#include "qtgc/ydmod.hpp"

namespace qtgc {

RepModule regular_module(const QuasiTuraevCoalgebra& h, long lambda) {
    long d = h.dim(lambda);
    RepModule m{lambda, d, {}};
    m.action.reserve(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) {
        LinMap a(d, d, h.field());
        for (long j = 0; j < d; ++j) {
            Vec prod = h.algebra.mul(lambda, h.algebra.basis(lambda, i), h.algebra.basis(lambda, j));
            for (long k = 0; k < d; ++k)
                a.entry(k, j) = prod[static_cast<std::size_t>(k)];
        }
        m.action.push_back(std::move(a));
    }
    return m;
}

RepModule conjugate_module(const QuasiTuraevCoalgebra& h, long g, const RepModule& m) {
    long t = h.group().conjugate(g, m.degree);
    long gi = h.group().inverse(g);
    RepModule out{t, m.dim, {}};
    out.action.reserve(static_cast<std::size_t>(h.dim(t)));
    for (long i = 0; i < h.dim(t); ++i) {
        Vec mapped = crossing_elem(h, gi, t, basis_vec(h.field(), h.dim(t), i));
        out.action.push_back(act_elem(h.field(), m.action, mapped));
    }
    return out;
}

RepModule tensor_module(const QuasiTuraevCoalgebra& h, const RepModule& x, const RepModule& y) {
    long t = h.group().mul(x.degree, y.degree);
    RepModule out{t, x.dim * y.dim, {}};
    out.action.reserve(static_cast<std::size_t>(h.dim(t)));
    for (long i = 0; i < h.dim(t); ++i) {
        LinMap a(out.dim, out.dim, h.field());
        for (const auto& s : sweedler_basis(h, x.degree, y.degree, i)) {
            LinMap part = kron(x.action[static_cast<std::size_t>(s.i)],
                               y.action[static_cast<std::size_t>(s.j)]);
            a = a + part.scaled(s.coeff);
        }
        out.action.push_back(std::move(a));
    }
    return out;
}

LinMap act_elem(const Field& f, const std::vector<LinMap>& action, const Vec& elem) {
    if (action.empty())
        throw DimensionMismatch("module with no action matrices");
    LinMap out(action[0].rows(), action[0].cols(), f);
    for (std::size_t i = 0; i < elem.size(); ++i) {
        if (elem[i].is_zero())
            continue;
        out = out + action[i].scaled(elem[i]);
    }
    return out;
}

Report validate_rep(const QuasiTuraevCoalgebra& h, const RepModule& m) {
    Report rep;
    CheckResult r = CheckResult::passed("module.representation", 0);
    long d = h.dim(m.degree);
    LinMap unit_act = act_elem(h.field(), m.action, h.algebra.unit(m.degree));
    if (!unit_act.is_identity()) {
        r = CheckResult::failed("module.representation", 1, "(unit)", unit_act.str(), "identity");
    } else {
        bool done = false;
        for (long i = 0; i < d && !done; ++i)
            for (long j = 0; j < d && !done; ++j) {
                ++r.cases;
                Vec prod = h.algebra.mul(m.degree, h.algebra.basis(m.degree, i),
                                         h.algebra.basis(m.degree, j));
                LinMap lhs = compose(m.action[static_cast<std::size_t>(i)],
                                     m.action[static_cast<std::size_t>(j)]);
                LinMap rhs = act_elem(h.field(), m.action, prod);
                if (lhs != rhs) {
                    r = CheckResult::failed("module.representation", r.cases,
                                            "(i=" + std::to_string(i) + ", j=" +
                                                std::to_string(j) + ")",
                                            lhs.str(), rhs.str());
                    done = true;
                }
            }
    }
    rep.add(r);
    return rep;
}

YDModule yd_unit(const QuasiTuraevCoalgebra& h) {
    long e = h.group().identity();
    YDModule m;
    m.name = "unit";
    m.degree = e;
    m.dim = 1;
    for (long i = 0; i < h.dim(e); ++i) {
        LinMap a(1, 1, h.field());
        a.entry(0, 0) = counit_elem(h, h.algebra.basis(e, i));
        m.action.push_back(std::move(a));
    }
    for (long l = 0; l < h.n(); ++l) {
        LinMap co(h.dim(l), 1, h.field());
        const Vec& u = h.algebra.unit(l);
        for (long k = 0; k < h.dim(l); ++k)
            co.entry(k, 0) = u[static_cast<std::size_t>(k)];
        m.coaction.push_back(std::move(co));
    }
    return m;
}

namespace {

struct CoTerm {
    long v0;
    long hh;
    Scalar coeff;
};

// Nonzero entries of the coaction of one basis vector.
std::vector<CoTerm> coaction_terms(const YDModule& m, long lambda, long v_in, long dim_h) {
    const LinMap& co = m.coaction[static_cast<std::size_t>(lambda)];
    std::vector<CoTerm> out;
    for (long r = 0; r < co.rows(); ++r) {
        const Scalar& c = co.entry(r, v_in);
        if (!c.is_zero())
            out.push_back({r / dim_h, r % dim_h, c});
    }
    return out;
}

std::string flat_str(const std::vector<Scalar>& v) {
    return vec_str(v);
}

struct Tally {
    CheckResult res;
    bool live = true;
    explicit Tally(std::string id) { res.id = std::move(id); }
    void fail(std::string indices, std::string lhs, std::string rhs) {
        res.status = CheckResult::Status::fail;
        res.indices = std::move(indices);
        res.lhs = std::move(lhs);
        res.rhs = std::move(rhs);
        live = false;
    }
};

void check_shapes(const QuasiTuraevCoalgebra& h, const YDModule& m) {
    if (m.degree < 0 || m.degree >= h.n())
        throw IndexOutOfRange("module degree " + std::to_string(m.degree));
    if (static_cast<long>(m.action.size()) != h.dim(m.degree))
        throw ShapeError("yd_module", "degree=" + std::to_string(m.degree),
                         std::to_string(h.dim(m.degree)) + " action matrices",
                         std::to_string(m.action.size()));
    for (const auto& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim)
            throw ShapeError("yd_module", "action", std::to_string(m.dim) + "x" +
                                                        std::to_string(m.dim),
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    if (static_cast<long>(m.coaction.size()) != h.n())
        throw ShapeError("yd_module", "coaction", std::to_string(h.n()) + " coactions",
                         std::to_string(m.coaction.size()));
    for (long l = 0; l < h.n(); ++l) {
        const LinMap& co = m.coaction[static_cast<std::size_t>(l)];
        if (co.rows() != m.dim * h.dim(l) || co.cols() != m.dim)
            throw ShapeError("yd_module", "coaction lambda=" + std::to_string(l),
                             std::to_string(m.dim * h.dim(l)) + "x" + std::to_string(m.dim),
                             std::to_string(co.rows()) + "x" + std::to_string(co.cols()));
    }
}

} // namespace

Report validate_yd(const QuasiTuraevCoalgebra& h, const YDModule& m) {
    check_shapes(h, m);
    Report rep;
    long a = m.degree;
    long n = h.n();
    long e = h.group().identity();
    const Field& f = h.field();

    {
        Report r = validate_rep(h, m.as_rep());
        r.checks[0].id = "yd.representation";
        rep.append(std::move(r));
    }

    {
        // (id ⊗ counit) after the coaction at the identity gives the identity.
        Tally t("yd.counitary");
        LinMap acc(m.dim, m.dim, f);
        for (long v = 0; v < m.dim; ++v)
            for (const auto& ct : coaction_terms(m, e, v, h.dim(e)))
                acc.entry(ct.v0, v) +=
                    ct.coeff * counit_elem(h, h.algebra.basis(e, ct.hh));
        t.res.cases = m.dim;
        if (!acc.is_identity())
            t.fail("(rho at identity)", acc.str(), "identity");
        rep.add(std::move(t.res));
    }

    {
        // Twisted coassociativity, for every (lambda1, lambda2) and basis v.
        Tally t("yd.coassoc_twisted");
        for (long l1 = 0; l1 < n && t.live; ++l1)
            for (long l2 = 0; l2 < n && t.live; ++l2) {
                long l12 = h.group().mul(l1, l2);
                long d1 = h.dim(l1), d2 = h.dim(l2);
                for (long v = 0; v < m.dim && t.live; ++v) {
                    ++t.res.cases;
                    std::vector<Scalar> lhs(
                        static_cast<std::size_t>(m.dim * d1 * d2), Scalar::zero(f));
                    std::vector<Scalar> rhs = lhs;

                    for (const auto& [y1, y2, y3, cy] :
                         tensor3_terms(h.phi_inv_at(l1, a, l2)))
                        for (const auto& c2 : coaction_terms(m, l2, v, d2)) {
                            const LinMap& actY2 = m.action[static_cast<std::size_t>(y2)];
                            for (long wi = 0; wi < m.dim; ++wi) {
                                const Scalar& cw = actY2.entry(wi, c2.v0);
                                if (cw.is_zero())
                                    continue;
                                for (const auto& c1 : coaction_terms(m, l1, wi, d1)) {
                                    Vec leg1 = h.algebra.mul(l1, h.algebra.basis(l1, c1.hh),
                                                             h.algebra.basis(l1, y1));
                                    Vec leg2 = h.algebra.mul(l2, h.algebra.basis(l2, y3),
                                                             h.algebra.basis(l2, c2.hh));
                                    Scalar cc = cy * c2.coeff * cw * c1.coeff;
                                    for (long x1 = 0; x1 < d1; ++x1) {
                                        if (leg1[static_cast<std::size_t>(x1)].is_zero())
                                            continue;
                                        for (long x2 = 0; x2 < d2; ++x2) {
                                            if (leg2[static_cast<std::size_t>(x2)].is_zero())
                                                continue;
                                            lhs[static_cast<std::size_t>(
                                                (c1.v0 * d1 + x1) * d2 + x2)] +=
                                                cc * leg1[static_cast<std::size_t>(x1)] *
                                                leg2[static_cast<std::size_t>(x2)];
                                        }
                                    }
                                }
                            }
                        }

                    for (const auto& [z1, z2, z3, cz] :
                         tensor3_terms(h.phi_inv_at(a, l1, l2)))
                        for (const auto& [y1, y2, y3, cy] :
                             tensor3_terms(h.phi_inv_at(l1, l2, a))) {
                            const LinMap& actY3 = m.action[static_cast<std::size_t>(y3)];
                            for (long ui = 0; ui < m.dim; ++ui) {
                                const Scalar& cu = actY3.entry(ui, v);
                                if (cu.is_zero())
                                    continue;
                                for (const auto& ch : coaction_terms(m, l12, ui, h.dim(l12)))
                                    for (const auto& sd :
                                         sweedler_basis(h, l1, l2, ch.hh)) {
                                        Vec leg1 = h.algebra.mul(l1, h.algebra.basis(l1, sd.i),
                                                                 h.algebra.basis(l1, y1));
                                        leg1 = h.algebra.mul(l1, h.algebra.basis(l1, z2), leg1);
                                        Vec leg2 = h.algebra.mul(l2, h.algebra.basis(l2, sd.j),
                                                                 h.algebra.basis(l2, y2));
                                        leg2 = h.algebra.mul(l2, h.algebra.basis(l2, z3), leg2);
                                        const LinMap& actZ1 =
                                            m.action[static_cast<std::size_t>(z1)];
                                        Scalar cc = cz * cy * cu * ch.coeff * sd.coeff;
                                        for (long vf = 0; vf < m.dim; ++vf) {
                                            const Scalar& cv = actZ1.entry(vf, ch.v0);
                                            if (cv.is_zero())
                                                continue;
                                            for (long x1 = 0; x1 < d1; ++x1) {
                                                if (leg1[static_cast<std::size_t>(x1)].is_zero())
                                                    continue;
                                                for (long x2 = 0; x2 < d2; ++x2) {
                                                    if (leg2[static_cast<std::size_t>(x2)]
                                                            .is_zero())
                                                        continue;
                                                    rhs[static_cast<std::size_t>(
                                                        (vf * d1 + x1) * d2 + x2)] +=
                                                        cc * cv *
                                                        leg1[static_cast<std::size_t>(x1)] *
                                                        leg2[static_cast<std::size_t>(x2)];
                                                }
                                            }
                                        }
                                    }
                            }
                        }

                    if (lhs != rhs)
                        t.fail("(lambda1=" + std::to_string(l1) + ", lambda2=" +
                                   std::to_string(l2) + ", v=" + std::to_string(v) + ")",
                               flat_str(lhs), flat_str(rhs));
                }
            }
        rep.add(std::move(t.res));
    }

    {
        // Crossed compatibility, for every beta, basis h, basis v.
        Tally t("yd.cross_compat");
        long ainv = h.group().inverse(a);
        for (long b = 0; b < n && t.live; ++b) {
            long ab = h.group().mul(a, b);
            long abai = h.group().conjugate(a, b);
            long db = h.dim(b);
            for (long k = 0; k < h.dim(ab) && t.live; ++k)
                for (long v = 0; v < m.dim && t.live; ++v) {
                    ++t.res.cases;
                    std::vector<Scalar> lhs(static_cast<std::size_t>(m.dim * db),
                                            Scalar::zero(f));
                    std::vector<Scalar> rhs = lhs;

                    for (const auto& sd : sweedler_basis(h, a, b, k)) {
                        const LinMap& actH1 = m.action[static_cast<std::size_t>(sd.i)];
                        for (const auto& ct : coaction_terms(m, b, v, db)) {
                            Vec leg = h.algebra.mul(b, h.algebra.basis(b, sd.j),
                                                    h.algebra.basis(b, ct.hh));
                            Scalar cc = sd.coeff * ct.coeff;
                            for (long vf = 0; vf < m.dim; ++vf) {
                                const Scalar& cv = actH1.entry(vf, ct.v0);
                                if (cv.is_zero())
                                    continue;
                                for (long x = 0; x < db; ++x)
                                    if (!leg[static_cast<std::size_t>(x)].is_zero())
                                        lhs[static_cast<std::size_t>(vf * db + x)] +=
                                            cc * cv * leg[static_cast<std::size_t>(x)];
                            }
                        }
                    }

                    for (const auto& sd : sweedler_basis(h, abai, a, k)) {
                        Vec mapped = crossing_elem(h, ainv, abai,
                                                   h.algebra.basis(abai, sd.i)); // in H_b
                        const LinMap& actK2 = m.action[static_cast<std::size_t>(sd.j)];
                        for (long ui = 0; ui < m.dim; ++ui) {
                            const Scalar& cu = actK2.entry(ui, v);
                            if (cu.is_zero())
                                continue;
                            for (const auto& ct : coaction_terms(m, b, ui, db)) {
                                Vec leg = h.algebra.mul(b, h.algebra.basis(b, ct.hh), mapped);
                                Scalar cc = sd.coeff * cu * ct.coeff;
                                for (long x = 0; x < db; ++x)
                                    if (!leg[static_cast<std::size_t>(x)].is_zero())
                                        rhs[static_cast<std::size_t>(ct.v0 * db + x)] +=
                                            cc * leg[static_cast<std::size_t>(x)];
                            }
                        }
                    }

                    if (lhs != rhs)
                        t.fail("(beta=" + std::to_string(b) + ", h=" + std::to_string(k) +
                                   ", v=" + std::to_string(v) + ")",
                               flat_str(lhs), flat_str(rhs));
                }
        }
        rep.add(std::move(t.res));
    }

    return rep;
}

Report validate_yd_classical(const QuasiTuraevCoalgebra& h, const YDModule& m) {
    check_shapes(h, m);
    Report rep;
    long a = m.degree;
    long n = h.n();
    long e = h.group().identity();
    const Field& f = h.field();

    {
        Report r = validate_rep(h, m.as_rep());
        r.checks[0].id = "ydh.representation";
        rep.append(std::move(r));
    }

    {
        Tally t("ydh.counitary");
        LinMap acc(m.dim, m.dim, f);
        for (long v = 0; v < m.dim; ++v)
            for (const auto& ct : coaction_terms(m, e, v, h.dim(e)))
                acc.entry(ct.v0, v) += ct.coeff * counit_elem(h, h.algebra.basis(e, ct.hh));
        t.res.cases = m.dim;
        if (!acc.is_identity())
            t.fail("(rho at identity)", acc.str(), "identity");
        rep.add(std::move(t.res));
    }

    {
        // Plain coassociativity across the coaction family.
        Tally t("ydh.coassoc");
        for (long l1 = 0; l1 < n && t.live; ++l1)
            for (long l2 = 0; l2 < n && t.live; ++l2) {
                long l12 = h.group().mul(l1, l2);
                long d1 = h.dim(l1), d2 = h.dim(l2);
                for (long v = 0; v < m.dim && t.live; ++v) {
                    ++t.res.cases;
                    std::vector<Scalar> lhs(static_cast<std::size_t>(m.dim * d1 * d2),
                                            Scalar::zero(f));
                    std::vector<Scalar> rhs = lhs;
                    for (const auto& c2 : coaction_terms(m, l2, v, d2))
                        for (const auto& c1 : coaction_terms(m, l1, c2.v0, d1))
                            lhs[static_cast<std::size_t>((c1.v0 * d1 + c1.hh) * d2 + c2.hh)] +=
                                c2.coeff * c1.coeff;
                    for (const auto& ct : coaction_terms(m, l12, v, h.dim(l12)))
                        for (const auto& sd : sweedler_basis(h, l1, l2, ct.hh))
                            rhs[static_cast<std::size_t>((ct.v0 * d1 + sd.i) * d2 + sd.j)] +=
                                ct.coeff * sd.coeff;
                    if (lhs != rhs)
                        t.fail("(lambda1=" + std::to_string(l1) + ", lambda2=" +
                                   std::to_string(l2) + ", v=" + std::to_string(v) + ")",
                               flat_str(lhs), flat_str(rhs));
                }
            }
        rep.add(std::move(t.res));
    }

    {
        // Crossed compatibility is associator-free and shared verbatim.
        Tally t("ydh.cross_compat");
        long ainv = h.group().inverse(a);
        for (long b = 0; b < n && t.live; ++b) {
            long ab = h.group().mul(a, b);
            long abai = h.group().conjugate(a, b);
            long db = h.dim(b);
            for (long k = 0; k < h.dim(ab) && t.live; ++k)
                for (long v = 0; v < m.dim && t.live; ++v) {
                    ++t.res.cases;
                    std::vector<Scalar> lhs(static_cast<std::size_t>(m.dim * db),
                                            Scalar::zero(f));
                    std::vector<Scalar> rhs = lhs;
                    for (const auto& sd : sweedler_basis(h, a, b, k)) {
                        const LinMap& actH1 = m.action[static_cast<std::size_t>(sd.i)];
                        for (const auto& ct : coaction_terms(m, b, v, db)) {
                            Vec leg = h.algebra.mul(b, h.algebra.basis(b, sd.j),
                                                    h.algebra.basis(b, ct.hh));
                            for (long vf = 0; vf < m.dim; ++vf) {
                                const Scalar& cv = actH1.entry(vf, ct.v0);
                                if (cv.is_zero())
                                    continue;
                                for (long x = 0; x < db; ++x)
                                    if (!leg[static_cast<std::size_t>(x)].is_zero())
                                        lhs[static_cast<std::size_t>(vf * db + x)] +=
                                            sd.coeff * ct.coeff * cv *
                                            leg[static_cast<std::size_t>(x)];
                            }
                        }
                    }
                    for (const auto& sd : sweedler_basis(h, abai, a, k)) {
                        Vec mapped = crossing_elem(h, ainv, abai, h.algebra.basis(abai, sd.i));
                        const LinMap& actK2 = m.action[static_cast<std::size_t>(sd.j)];
                        for (long ui = 0; ui < m.dim; ++ui) {
                            const Scalar& cu = actK2.entry(ui, v);
                            if (cu.is_zero())
                                continue;
                            for (const auto& ct : coaction_terms(m, b, ui, db)) {
                                Vec leg = h.algebra.mul(b, h.algebra.basis(b, ct.hh), mapped);
                                for (long x = 0; x < db; ++x)
                                    if (!leg[static_cast<std::size_t>(x)].is_zero())
                                        rhs[static_cast<std::size_t>(ct.v0 * db + x)] +=
                                            sd.coeff * cu * ct.coeff *
                                            leg[static_cast<std::size_t>(x)];
                            }
                        }
                    }
                    if (lhs != rhs)
                        t.fail("(beta=" + std::to_string(b) + ", h=" + std::to_string(k) +
                                   ", v=" + std::to_string(v) + ")",
                               flat_str(lhs), flat_str(rhs));
                }
        }
        rep.add(std::move(t.res));
    }

    return rep;
}

YDModule yd_tensor(const QuasiTuraevCoalgebra& h, const YDModule& m, const YDModule& n) {
    check_shapes(h, m);
    check_shapes(h, n);
    const Field& f = h.field();
    long a = m.degree, b = n.degree;
    long ab = h.group().mul(a, b);
    long bi = h.group().inverse(b);

    YDModule out;
    out.name = m.name + "(x)" + n.name;
    out.degree = ab;
    out.dim = m.dim * n.dim;

    // action through Delta
    for (long i = 0; i < h.dim(ab); ++i) {
        LinMap act(out.dim, out.dim, f);
        for (const auto& sd : sweedler_basis(h, a, b, i))
            act = act + kron(m.action[static_cast<std::size_t>(sd.i)],
                             n.action[static_cast<std::size_t>(sd.j)])
                            .scaled(sd.coeff);
        out.action.push_back(std::move(act));
    }

    // coaction: three associator copies, coactions of both factors, crossing
    for (long l = 0; l < h.n(); ++l) {
        long dl = h.dim(l);
        long blb = h.group().conjugate(b, l);
        LinMap co(out.dim * dl, out.dim, f);

        // crossing images of the H_{b l b^{-1}} basis, in H_l
        std::vector<Vec> cross_img;
        cross_img.reserve(static_cast<std::size_t>(h.dim(blb)));
        for (long i = 0; i < h.dim(blb); ++i)
            cross_img.push_back(crossing_elem(h, bi, blb, h.algebra.basis(blb, i)));

        for (const auto& [a1, a2, a3, cA] : tensor3_terms(h.phi_inv_at(a, b, l)))
            for (const auto& [b1, b2, b3, cB] : tensor3_terms(h.phi_at(a, l, b)))
                for (const auto& [c1, c2, c3, cC] : tensor3_terms(h.phi_inv_at(l, a, b))) {
                    Scalar outer = cA * cB * cC;
                    Vec va = h.algebra.mul(a, h.algebra.basis(a, a1), h.algebra.basis(a, b1));
                    LinMap act_v_final = act_elem(f, m.action, va);
                    Vec wb = h.algebra.mul(b, h.algebra.basis(b, b3), h.algebra.basis(b, c3));
                    LinMap act_w_pre = act_elem(f, n.action, wb);
                    const LinMap& act_v_pre = m.action[static_cast<std::size_t>(c2)];
                    const LinMap& act_w_final = n.action[static_cast<std::size_t>(a2)];

                    for (long v_in = 0; v_in < m.dim; ++v_in)
                        for (long vi = 0; vi < m.dim; ++vi) {
                            const Scalar& cvp = act_v_pre.entry(vi, v_in);
                            if (cvp.is_zero())
                                continue;
                            for (const auto& cv : coaction_terms(m, blb, vi, h.dim(blb))) {
                                for (long w_in = 0; w_in < n.dim; ++w_in)
                                    for (long wi = 0; wi < n.dim; ++wi) {
                                        const Scalar& cwp = act_w_pre.entry(wi, w_in);
                                        if (cwp.is_zero())
                                            continue;
                                        for (const auto& cw : coaction_terms(n, l, wi, dl)) {
                                            // H_l leg: a3 · hw · b2 · phi(hv) · c1
                                            Vec leg = h.algebra.mul(
                                                l, h.algebra.basis(l, a3),
                                                h.algebra.basis(l, cw.hh));
                                            leg = h.algebra.mul(l, leg,
                                                                h.algebra.basis(l, b2));
                                            leg = h.algebra.mul(
                                                l, leg,
                                                cross_img[static_cast<std::size_t>(cv.hh)]);
                                            leg = h.algebra.mul(l, leg,
                                                                h.algebra.basis(l, c1));
                                            Scalar cc = outer * cvp * cv.coeff * cwp * cw.coeff;
                                            for (long vf = 0; vf < m.dim; ++vf) {
                                                const Scalar& cvf =
                                                    act_v_final.entry(vf, cv.v0);
                                                if (cvf.is_zero())
                                                    continue;
                                                for (long wf = 0; wf < n.dim; ++wf) {
                                                    const Scalar& cwf =
                                                        act_w_final.entry(wf, cw.v0);
                                                    if (cwf.is_zero())
                                                        continue;
                                                    for (long x = 0; x < dl; ++x) {
                                                        const Scalar& cl =
                                                            leg[static_cast<std::size_t>(x)];
                                                        if (cl.is_zero())
                                                            continue;
                                                        co.entry(
                                                            (vf * n.dim + wf) * dl + x,
                                                            v_in * n.dim + w_in) +=
                                                            cc * cvf * cwf * cl;
                                                    }
                                                }
                                            }
                                        }
                                    }
                            }
                        }
                }
        out.coaction.push_back(std::move(co));
    }

    Report check = validate_yd(h, out);
    if (!check.passed())
        throw CheckFailed("tensor module '" + out.name + "' fails validation:\n" +
                          to_text(check));
    return out;
}

YDModule yd_conjugate(const QuasiTuraevCoalgebra& h, long g, const YDModule& m) {
    check_shapes(h, m);
    long t = h.group().conjugate(g, m.degree);
    long gi = h.group().inverse(g);

    YDModule out;
    out.name = "^" + std::to_string(g) + "(" + m.name + ")";
    out.degree = t;
    out.dim = m.dim;
    for (long i = 0; i < h.dim(t); ++i) {
        Vec mapped = crossing_elem(h, gi, t, basis_vec(h.field(), h.dim(t), i));
        out.action.push_back(act_elem(h.field(), m.action, mapped));
    }
    for (long l = 0; l < h.n(); ++l) {
        long inner = h.group().conjugate(gi, l);
        LinMap lift = kron(LinMap::identity(m.dim, h.field()), h.crossing_at(g, inner));
        out.coaction.push_back(compose(lift, m.coaction_at(inner)));
    }
    return out;
}

LinMap half_braiding(const QuasiTuraevCoalgebra& h, const YDModule& v, const RepModule& x) {
    const Field& f = h.field();
    long alpha = v.degree;
    long lam = x.degree;
    long li = h.group().inverse(lam);
    long la = h.group().mul(lam, alpha);
    long dli = h.dim(li);

    TensorElement il = lemma_elements(h, li, alpha).il; // legs (H_{li}, H_alpha)
    TensorElement jr = lemma_elements(h, la, li).jr;    // legs (H_{la}, H_{li})

    LinMap out(x.dim * v.dim, v.dim * x.dim, f);
    for (const auto& [l1, l2, cL] : tensor2_terms(il)) {
        // coaction at lambda^{-1} after acting with the second lemma leg
        LinMap b = compose(v.coaction_at(li), v.action[static_cast<std::size_t>(l2)]);
        for (const auto& [r1, r2, cR] : tensor2_terms(jr))
            for (const auto& sd : sweedler_basis(h, lam, alpha, r1))
                for (const auto& [y1, y2, y3, cY] : tensor3_terms(h.phi_inv_at(lam, alpha, li))) {
                    Scalar cc = cL * cR * sd.coeff * cY;
                    Vec velem = h.algebra.mul(alpha, h.algebra.basis(alpha, sd.j),
                                              h.algebra.basis(alpha, y2));
                    LinMap av = act_elem(f, v.action, velem);
                    Vec prefix = h.algebra.mul(li, h.algebra.basis(li, r2),
                                               h.algebra.basis(li, y3));
                    // X-side operator per coaction leg
                    std::vector<LinMap> mx;
                    mx.reserve(static_cast<std::size_t>(dli));
                    for (long h1 = 0; h1 < dli; ++h1) {
                        Vec tvec = h.algebra.mul(li, prefix, h.algebra.basis(li, h1));
                        tvec = h.algebra.mul(li, tvec, h.algebra.basis(li, l1));
                        Vec s = antipode_elem(h, li, tvec); // lands in H_lambda
                        s = h.algebra.mul(lam, h.algebra.basis(lam, y1), s);
                        s = h.algebra.mul(lam, h.algebra.basis(lam, sd.i), s);
                        mx.push_back(act_elem(f, x.action, s));
                    }
                    for (long v_in = 0; v_in < v.dim; ++v_in)
                        for (long r = 0; r < b.rows(); ++r) {
                            const Scalar& bc = b.entry(r, v_in);
                            if (bc.is_zero())
                                continue;
                            long v0 = r / dli;
                            long h1 = r % dli;
                            const LinMap& xop = mx[static_cast<std::size_t>(h1)];
                            for (long vf = 0; vf < v.dim; ++vf) {
                                const Scalar& ac = av.entry(vf, v0);
                                if (ac.is_zero())
                                    continue;
                                Scalar w = cc * bc * ac;
                                for (long xo = 0; xo < x.dim; ++xo)
                                    for (long xi = 0; xi < x.dim; ++xi) {
                                        const Scalar& xc = xop.entry(xo, xi);
                                        if (!xc.is_zero())
                                            out.entry(xo * v.dim + vf, v_in * x.dim + xi) +=
                                                w * xc;
                                    }
                            }
                        }
                }
    }
    return out;
}

LinMap half_braiding_inv(const QuasiTuraevCoalgebra& h, const YDModule& v, const RepModule& x) {
    long lam = x.degree;
    LinMap out(v.dim * x.dim, x.dim * v.dim, h.field());
    for (long v_in = 0; v_in < v.dim; ++v_in)
        for (const auto& ct : coaction_terms(v, lam, v_in, h.dim(lam))) {
            const LinMap& xop = x.action[static_cast<std::size_t>(ct.hh)];
            for (long xo = 0; xo < x.dim; ++xo)
                for (long xi = 0; xi < x.dim; ++xi) {
                    const Scalar& xc = xop.entry(xo, xi);
                    if (!xc.is_zero())
                        out.entry(ct.v0 * x.dim + xo, xi * v.dim + v_in) += ct.coeff * xc;
                }
        }
    return out;
}

Braiding yd_braiding(const QuasiTuraevCoalgebra& h, const YDModule& m, const YDModule& n) {
    RepModule rep_n = n.as_rep();
    LinMap c = half_braiding(h, m, rep_n);
    LinMap cinv = half_braiding_inv(h, m, rep_n);
    LinMap left = compose(cinv, c);
    if (!left.is_identity()) {
        LinMap residual = left - LinMap::identity(left.rows(), h.field());
        throw BraidingNotInvertible(residual.str());
    }
    LinMap right = compose(c, cinv);
    if (!right.is_identity()) {
        LinMap residual = right - LinMap::identity(right.rows(), h.field());
        throw BraidingNotInvertible(residual.str());
    }
    return {std::move(c), std::move(cinv)};
}

Report check_yd_morphism(const QuasiTuraevCoalgebra& h, const LinMap& f, const YDModule& m,
                         const YDModule& n) {
    Report rep;
    if (m.degree != n.degree)
        throw GradingMismatch("morphism between modules of degrees " +
                              std::to_string(m.degree) + " and " + std::to_string(n.degree));
    if (f.rows() != n.dim || f.cols() != m.dim)
        throw DimensionMismatch("morphism shape");

    Tally lin("morphism.h_linear");
    for (long i = 0; i < h.dim(m.degree) && lin.live; ++i) {
        ++lin.res.cases;
        LinMap lhs = compose(f, m.action[static_cast<std::size_t>(i)]);
        LinMap rhs = compose(n.action[static_cast<std::size_t>(i)], f);
        if (lhs != rhs)
            lin.fail("(h=" + std::to_string(i) + ")", lhs.str(), rhs.str());
    }
    rep.add(std::move(lin.res));

    Tally co("morphism.coaction_compat");
    for (long l = 0; l < h.n() && co.live; ++l) {
        ++co.res.cases;
        LinMap lhs = compose(kron(f, LinMap::identity(h.dim(l), h.field())), m.coaction_at(l));
        LinMap rhs = compose(n.coaction_at(l), f);
        if (lhs != rhs)
            co.fail("(lambda=" + std::to_string(l) + ")", lhs.str(), rhs.str());
    }
    rep.add(std::move(co.res));

    return rep;
}

LinMap associator_action(const QuasiTuraevCoalgebra& h, const RepModule& m1, const RepModule& m2,
                         const RepModule& m3, bool inverse) {
    const TensorElement& phi = inverse ? h.phi_inv_at(m1.degree, m2.degree, m3.degree)
                                       : h.phi_at(m1.degree, m2.degree, m3.degree);
    long total = m1.dim * m2.dim * m3.dim;
    LinMap out(total, total, h.field());
    for (const auto& [i, j, k, c] : tensor3_terms(phi))
        out = out + kron(kron(m1.action[static_cast<std::size_t>(i)],
                              m2.action[static_cast<std::size_t>(j)]),
                         m3.action[static_cast<std::size_t>(k)])
                        .scaled(c);
    return out;
}

Report check_hexagon(const QuasiTuraevCoalgebra& h, const YDModule& u, const YDModule& v,
                     const YDModule& w) {
    Report rep;
    long a = u.degree;
    RepModule ru = u.as_rep(), rv = v.as_rep(), rw = w.as_rep();
    RepModule cv = conjugate_module(h, a, rv);
    RepModule cw = conjugate_module(h, a, rw);

    YDModule vw = yd_tensor(h, v, w);
    LinMap lhs = half_braiding(h, u, vw.as_rep());

    LinMap step1 = associator_action(h, ru, rv, rw, /*inverse=*/true);
    LinMap step2 = kron(half_braiding(h, u, rv), LinMap::identity(w.dim, h.field()));
    LinMap step3 = associator_action(h, cv, ru, rw, /*inverse=*/false);
    LinMap step4 = kron(LinMap::identity(v.dim, h.field()), half_braiding(h, u, rw));
    LinMap step5 = associator_action(h, cv, cw, ru, /*inverse=*/true);
    LinMap rhs = compose(step5, compose(step4, compose(step3, compose(step2, step1))));

    Tally t("braiding.hexagon");
    t.res.cases = 1;
    if (lhs != rhs)
        t.fail("(U=" + u.name + ", V=" + v.name + ", W=" + w.name + ")", lhs.str(), rhs.str());
    rep.add(std::move(t.res));
    return rep;
}

Report check_crossing_invariance(const QuasiTuraevCoalgebra& h, const YDModule& m,
                                 const YDModule& n) {
    Report rep;
    Tally t("braiding.crossing_invariance");
    LinMap base = half_braiding(h, m, n.as_rep());
    for (long g = 0; g < h.n() && t.live; ++g) {
        ++t.res.cases;
        YDModule cm = yd_conjugate(h, g, m);
        YDModule cn = yd_conjugate(h, g, n);
        LinMap conj = half_braiding(h, cm, cn.as_rep());
        if (conj != base)
            t.fail("(g=" + std::to_string(g) + ", M=" + m.name + ", N=" + n.name + ")",
                   conj.str(), base.str());
    }
    rep.add(std::move(t.res));
    return rep;
}

} // namespace qtgc
