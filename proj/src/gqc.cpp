#include "qtgc/gqc.hpp"

#include <initializer_list>
#include <utility>

namespace qtgc {

Vec basis_vec(const Field& f, long dim, long i) {
    if (i < 0 || i >= dim)
        throw IndexOutOfRange("basis index " + std::to_string(i) + " of dim " +
                              std::to_string(dim));
    Vec v(static_cast<std::size_t>(dim), Scalar::zero(f));
    v[static_cast<std::size_t>(i)] = Scalar::one(f);
    return v;
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += v[i].str();
        if (i + 1 < v.size())
            out += ", ";
    }
    return out + ")";
}

GradedAlgebra::GradedAlgebra(FinGroup group, std::vector<GradedComponent> comps, Field field)
    : group_(std::move(group)), comps_(std::move(comps)), field_(std::move(field)) {
    if (static_cast<long>(comps_.size()) != group_.order())
        throw ShapeError("components", "-", std::to_string(group_.order()) + " components",
                         std::to_string(comps_.size()));
    for (long a = 0; a < group_.order(); ++a) {
        const auto& c = comps_[static_cast<std::size_t>(a)];
        if (static_cast<long>(c.unit.size()) != c.dim)
            throw ShapeError("components", "alpha=" + std::to_string(a),
                             "unit of length " + std::to_string(c.dim),
                             std::to_string(c.unit.size()));
        if (c.mult.rows() != c.dim || c.mult.cols() != c.dim * c.dim)
            throw ShapeError("components", "alpha=" + std::to_string(a),
                             std::to_string(c.dim) + "x" + std::to_string(c.dim * c.dim),
                             std::to_string(c.mult.rows()) + "x" + std::to_string(c.mult.cols()));
    }
}

const GradedComponent& GradedAlgebra::comp(long a) const {
    if (a < 0 || a >= n())
        throw IndexOutOfRange("component " + std::to_string(a));
    return comps_[static_cast<std::size_t>(a)];
}

Vec GradedAlgebra::mul(long a, const Vec& x, const Vec& y) const {
    const auto& c = comp(a);
    if (static_cast<long>(x.size()) != c.dim || static_cast<long>(y.size()) != c.dim)
        throw GradingMismatch("multiplying vectors of lengths " + std::to_string(x.size()) +
                              ", " + std::to_string(y.size()) + " in component of dim " +
                              std::to_string(c.dim));
    Vec out(static_cast<std::size_t>(c.dim), Scalar::zero(field_));
    for (long i = 0; i < c.dim; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (long j = 0; j < c.dim; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero())
                continue;
            Scalar cij = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (long k = 0; k < c.dim; ++k) {
                const Scalar& s = c.mult.entry(k, i * c.dim + j);
                if (!s.is_zero())
                    out[static_cast<std::size_t>(k)] += s * cij;
            }
        }
    }
    return out;
}

const LinMap& QuasiTuraevCoalgebra::delta_at(long a, long b) const {
    return delta[static_cast<std::size_t>(a * n() + b)];
}

const TensorElement& QuasiTuraevCoalgebra::phi_at(long a, long b, long c) const {
    return phi[static_cast<std::size_t>((a * n() + b) * n() + c)];
}

const TensorElement& QuasiTuraevCoalgebra::phi_inv_at(long a, long b, long c) const {
    return phi_inv[static_cast<std::size_t>((a * n() + b) * n() + c)];
}

const LinMap& QuasiTuraevCoalgebra::antipode_at(long a) const {
    return antipode[static_cast<std::size_t>(a)];
}

const LinMap& QuasiTuraevCoalgebra::antipode_inv_at(long a) const {
    return antipode_inv[static_cast<std::size_t>(a)];
}

const Vec& QuasiTuraevCoalgebra::p_at(long a) const { return p_elem[static_cast<std::size_t>(a)]; }
const Vec& QuasiTuraevCoalgebra::q_at(long a) const { return q_elem[static_cast<std::size_t>(a)]; }

const LinMap& QuasiTuraevCoalgebra::crossing_at(long b, long a) const {
    return crossing[static_cast<std::size_t>(b * n() + a)];
}

bool QuasiTuraevCoalgebra::structurally_equal(const QuasiTuraevCoalgebra& rhs) const {
    if (!(group() == rhs.group()) || field()->spec().order != rhs.field()->spec().order)
        return false;
    for (long a = 0; a < n(); ++a) {
        if (dim(a) != rhs.dim(a) || algebra.unit(a) != rhs.algebra.unit(a) ||
            algebra.mult(a) != rhs.algebra.mult(a))
            return false;
        if (antipode_at(a) != rhs.antipode_at(a) || antipode_inv_at(a) != rhs.antipode_inv_at(a))
            return false;
        if (p_at(a) != rhs.p_at(a) || q_at(a) != rhs.q_at(a))
            return false;
    }
    if (delta != rhs.delta || !(counit == rhs.counit))
        return false;
    if (phi != rhs.phi || phi_inv != rhs.phi_inv || crossing != rhs.crossing)
        return false;
    return true;
}

TensorElement delta_elem(const QuasiTuraevCoalgebra& h, long a, long b, const Vec& x) {
    long ab = h.group().mul(a, b);
    const LinMap& d = h.delta_at(a, b);
    if (static_cast<long>(x.size()) != h.dim(ab))
        throw GradingMismatch("delta argument not in H_" + std::to_string(ab));
    Vec img = apply_map(d, x);
    TensorElement out({h.dim(a), h.dim(b)}, {a, b}, h.field());
    out.coeffs() = std::move(img);
    return out;
}

Scalar counit_elem(const QuasiTuraevCoalgebra& h, const Vec& x) {
    Vec img = apply_map(h.counit, x);
    return img[0];
}

Vec antipode_elem(const QuasiTuraevCoalgebra& h, long a, const Vec& x) {
    return apply_map(h.antipode_at(a), x);
}

Vec antipode_inv_elem(const QuasiTuraevCoalgebra& h, long a, const Vec& x) {
    return apply_map(h.antipode_inv_at(a), x);
}

Vec crossing_elem(const QuasiTuraevCoalgebra& h, long b, long a, const Vec& x) {
    return apply_map(h.crossing_at(b, a), x);
}

TensorElement unit_tensor(const QuasiTuraevCoalgebra& h, const std::vector<long>& grading) {
    std::vector<long> shape;
    shape.reserve(grading.size());
    for (long g : grading)
        shape.push_back(h.dim(g));
    TensorElement out(shape, grading, h.field());
    // outer product of the component units
    std::vector<Scalar> acc = {Scalar::one(h.field())};
    for (long g : grading) {
        const Vec& u = h.algebra.unit(g);
        std::vector<Scalar> next(acc.size() * u.size(), Scalar::zero(h.field()));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j)
                next[i * u.size() + j] = acc[i] * u[j];
        acc = std::move(next);
    }
    out.coeffs() = std::move(acc);
    return out;
}

TensorElement tensor2(const QuasiTuraevCoalgebra& h, long a, const Vec& x, long b, const Vec& y) {
    TensorElement out({h.dim(a), h.dim(b)}, {a, b}, h.field());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero())
                out.coeffs()[i * y.size() + j] = x[i] * y[j];
    }
    return out;
}

TensorElement mul_tensor(const QuasiTuraevCoalgebra& h, const TensorElement& x,
                         const TensorElement& y) {
    if (x.grading() != y.grading() || x.shape() != y.shape())
        throw GradingMismatch("componentwise tensor product of differently graded tensors");
    TensorElement out(x.shape(), x.grading(), h.field());
    std::size_t legs = x.shape().size();
    std::vector<long> xi(legs), yi(legs);

    // Walks the per-leg structure-constant terms of the basis product,
    // accumulating the flat output index leg by leg. Products of basis
    // elements are sparse in every instance family, so this stays shallow.
    auto walk = [&](auto&& self, std::size_t l, long flat, const Scalar& coeff) -> void {
        if (l == legs) {
            out.coeffs()[static_cast<std::size_t>(flat)] += coeff;
            return;
        }
        long g = x.grading()[l];
        long d = x.shape()[l];
        const LinMap& mu = h.algebra.mult(g);
        long col = xi[l] * d + yi[l];
        for (long k = 0; k < d; ++k) {
            const Scalar& c = mu.entry(k, col);
            if (!c.is_zero())
                self(self, l + 1, flat * d + k, coeff * c);
        }
    };

    for (std::size_t ix = 0; ix < x.coeffs().size(); ++ix) {
        if (x.coeffs()[ix].is_zero())
            continue;
        {
            std::size_t rem = ix;
            for (std::size_t l = legs; l-- > 0;) {
                xi[l] = static_cast<long>(rem % static_cast<std::size_t>(x.shape()[l]));
                rem /= static_cast<std::size_t>(x.shape()[l]);
            }
        }
        for (std::size_t iy = 0; iy < y.coeffs().size(); ++iy) {
            if (y.coeffs()[iy].is_zero())
                continue;
            std::size_t rem = iy;
            for (std::size_t l = legs; l-- > 0;) {
                yi[l] = static_cast<long>(rem % static_cast<std::size_t>(y.shape()[l]));
                rem /= static_cast<std::size_t>(y.shape()[l]);
            }
            walk(walk, 0, 0, x.coeffs()[ix] * y.coeffs()[iy]);
        }
    }
    return out;
}

TensorElement apply_delta_at(const QuasiTuraevCoalgebra& h, const TensorElement& t,
                             std::size_t leg, long a, long b) {
    long ab = h.group().mul(a, b);
    if (t.grading()[leg] != ab)
        throw GradingMismatch("delta applied to leg graded " + std::to_string(t.grading()[leg]) +
                              ", expected " + std::to_string(ab));
    return apply_at_leg(t, leg, h.delta_at(a, b), {h.dim(a), h.dim(b)}, {a, b});
}

TensorElement apply_counit_at(const QuasiTuraevCoalgebra& h, const TensorElement& t,
                              std::size_t leg) {
    if (t.grading()[leg] != h.group().identity())
        throw GradingMismatch("counit applied to leg graded " + std::to_string(t.grading()[leg]));
    return apply_at_leg(t, leg, h.counit, {}, {});
}

TensorElement apply_crossing_at(const QuasiTuraevCoalgebra& h, const TensorElement& t,
                                std::size_t leg, long b) {
    long a = t.grading()[leg];
    long target = h.group().conjugate(b, a);
    return apply_at_leg(t, leg, h.crossing_at(b, a), {h.dim(target)}, {target});
}

std::vector<SweedlerTerm> sweedler_basis(const QuasiTuraevCoalgebra& h, long a, long b, long k) {
    const LinMap& d = h.delta_at(a, b);
    std::vector<SweedlerTerm> out;
    long db = h.dim(b);
    for (long r = 0; r < d.rows(); ++r) {
        const Scalar& c = d.entry(r, k);
        if (!c.is_zero())
            out.push_back({r / db, r % db, c});
    }
    return out;
}

std::vector<std::tuple<long, long, long, Scalar>> tensor3_terms(const TensorElement& t) {
    std::vector<std::tuple<long, long, long, Scalar>> out;
    for (std::size_t f = 0; f < t.coeffs().size(); ++f) {
        if (t.coeffs()[f].is_zero())
            continue;
        auto idx = t.unflatten(f);
        out.emplace_back(idx[0], idx[1], idx[2], t.coeffs()[f]);
    }
    return out;
}

std::vector<std::tuple<long, long, Scalar>> tensor2_terms(const TensorElement& t) {
    std::vector<std::tuple<long, long, Scalar>> out;
    for (std::size_t f = 0; f < t.coeffs().size(); ++f) {
        if (t.coeffs()[f].is_zero())
            continue;
        auto idx = t.unflatten(f);
        out.emplace_back(idx[0], idx[1], t.coeffs()[f]);
    }
    return out;
}

// ---- validators ----

namespace {

struct Checker {
    CheckResult res;
    bool live = true;

    explicit Checker(std::string id) { res.id = std::move(id); }
    bool ok() const { return live; }
    void count() { ++res.cases; }
    void fail(std::string indices, std::string lhs, std::string rhs) {
        res.status = CheckResult::Status::fail;
        res.indices = std::move(indices);
        res.lhs = std::move(lhs);
        res.rhs = std::move(rhs);
        live = false;
    }
    CheckResult take() { return std::move(res); }
};

std::string ix(std::initializer_list<std::pair<const char*, long>> kv) {
    std::string out = "(";
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first)
            out += ", ";
        out += std::string(k) + "=" + std::to_string(v);
        first = false;
    }
    return out + ")";
}

} // namespace

Report validate_algebra(const GradedAlgebra& alg) {
    Report rep;
    long n = alg.n();

    Checker assoc("algebra.associativity");
    for (long a = 0; a < n && assoc.ok(); ++a) {
        long d = alg.dim(a);
        for (long i = 0; i < d && assoc.ok(); ++i)
            for (long j = 0; j < d && assoc.ok(); ++j)
                for (long k = 0; k < d && assoc.ok(); ++k) {
                    assoc.count();
                    Vec lhs = alg.mul(a, alg.mul(a, alg.basis(a, i), alg.basis(a, j)),
                                      alg.basis(a, k));
                    Vec rhs = alg.mul(a, alg.basis(a, i),
                                      alg.mul(a, alg.basis(a, j), alg.basis(a, k)));
                    if (lhs != rhs)
                        assoc.fail(ix({{"alpha", a}, {"i", i}, {"j", j}, {"k", k}}), vec_str(lhs),
                                   vec_str(rhs));
                }
    }
    rep.add(assoc.take());

    Checker unit("algebra.unit");
    for (long a = 0; a < n && unit.ok(); ++a) {
        long d = alg.dim(a);
        for (long i = 0; i < d && unit.ok(); ++i) {
            unit.count();
            Vec l = alg.mul(a, alg.unit(a), alg.basis(a, i));
            Vec r = alg.mul(a, alg.basis(a, i), alg.unit(a));
            if (l != alg.basis(a, i) || r != alg.basis(a, i))
                unit.fail(ix({{"alpha", a}, {"i", i}}), vec_str(l) + " / " + vec_str(r),
                          vec_str(alg.basis(a, i)));
        }
    }
    rep.add(unit.take());

    return rep;
}

Report validate_coalgebra(const QuasiTuraevCoalgebra& h) {
    Report rep;
    rep.notes.push_back(
        "normalization axiom checked in the form (id (x) counit (x) id)(Phi[a,1,b]) = 1_a (x) 1_b");
    long n = h.n();
    long e = h.group().identity();

    Checker morph("coalgebra.delta_morphism");
    for (long a = 0; a < n && morph.ok(); ++a)
        for (long b = 0; b < n && morph.ok(); ++b) {
            long ab = h.group().mul(a, b);
            long d = h.dim(ab);
            {
                morph.count();
                TensorElement lhs = delta_elem(h, a, b, h.algebra.unit(ab));
                TensorElement rhs = unit_tensor(h, {a, b});
                if (lhs != rhs) {
                    morph.fail(ix({{"alpha", a}, {"beta", b}}), lhs.str(), rhs.str());
                    continue;
                }
            }
            for (long i = 0; i < d && morph.ok(); ++i)
                for (long j = 0; j < d && morph.ok(); ++j) {
                    morph.count();
                    Vec prod = h.algebra.mul(ab, h.algebra.basis(ab, i), h.algebra.basis(ab, j));
                    TensorElement lhs = delta_elem(h, a, b, prod);
                    TensorElement rhs = mul_tensor(h, delta_elem(h, a, b, h.algebra.basis(ab, i)),
                                                   delta_elem(h, a, b, h.algebra.basis(ab, j)));
                    if (lhs != rhs)
                        morph.fail(ix({{"alpha", a}, {"beta", b}, {"i", i}, {"j", j}}), lhs.str(),
                                   rhs.str());
                }
        }
    rep.add(morph.take());

    Checker emorph("coalgebra.counit_morphism");
    {
        long d = h.dim(e);
        emorph.count();
        if (!counit_elem(h, h.algebra.unit(e)).is_one())
            emorph.fail("(unit)", counit_elem(h, h.algebra.unit(e)).str(), "1");
        for (long i = 0; i < d && emorph.ok(); ++i)
            for (long j = 0; j < d && emorph.ok(); ++j) {
                emorph.count();
                Scalar lhs =
                    counit_elem(h, h.algebra.mul(e, h.algebra.basis(e, i), h.algebra.basis(e, j)));
                Scalar rhs = counit_elem(h, h.algebra.basis(e, i)) *
                             counit_elem(h, h.algebra.basis(e, j));
                if (lhs != rhs)
                    emorph.fail(ix({{"i", i}, {"j", j}}), lhs.str(), rhs.str());
            }
    }
    rep.add(emorph.take());

    Checker qco("coalgebra.quasi_coassoc");
    for (long a = 0; a < n && qco.ok(); ++a)
        for (long b = 0; b < n && qco.ok(); ++b)
            for (long c = 0; c < n && qco.ok(); ++c) {
                long bc = h.group().mul(b, c);
                long abc = h.group().mul(a, bc);
                for (long k = 0; k < h.dim(abc) && qco.ok(); ++k) {
                    qco.count();
                    TensorElement lhs = mul_tensor(
                        h,
                        apply_delta_at(h, delta_elem(h, a, bc, h.algebra.basis(abc, k)), 1, b, c),
                        h.phi_at(a, b, c));
                    TensorElement rhs = mul_tensor(
                        h, h.phi_at(a, b, c),
                        apply_delta_at(h, delta_elem(h, h.group().mul(a, b), c,
                                                     h.algebra.basis(abc, k)),
                                       0, a, b));
                    if (lhs != rhs)
                        qco.fail(ix({{"alpha", a}, {"beta", b}, {"gamma", c}, {"h", k}}),
                                 lhs.str(), rhs.str());
                }
            }
    rep.add(qco.take());

    Checker cou("coalgebra.counit");
    for (long a = 0; a < n && cou.ok(); ++a)
        for (long k = 0; k < h.dim(a) && cou.ok(); ++k) {
            cou.count();
            TensorElement r1 = apply_counit_at(h, delta_elem(h, a, e, h.algebra.basis(a, k)), 1);
            TensorElement r2 = apply_counit_at(h, delta_elem(h, e, a, h.algebra.basis(a, k)), 0);
            TensorElement want({h.dim(a)}, {a}, h.field());
            want.coeffs() = h.algebra.basis(a, k);
            if (r1 != want || r2 != want)
                cou.fail(ix({{"alpha", a}, {"h", k}}), r1.str() + " / " + r2.str(), want.str());
        }
    rep.add(cou.take());

    Checker pent("coalgebra.pentagon");
    for (long a = 0; a < n && pent.ok(); ++a)
        for (long b = 0; b < n && pent.ok(); ++b)
            for (long c = 0; c < n && pent.ok(); ++c)
                for (long l = 0; l < n && pent.ok(); ++l) {
                    pent.count();
                    long bc = h.group().mul(b, c);
                    long ab = h.group().mul(a, b);
                    long cl = h.group().mul(c, l);
                    TensorElement u_a({h.dim(a)}, {a}, h.field());
                    u_a.coeffs() = h.algebra.unit(a);
                    TensorElement u_l({h.dim(l)}, {l}, h.field());
                    u_l.coeffs() = h.algebra.unit(l);
                    TensorElement p1 = kron_elements(u_a, h.phi_at(b, c, l));
                    TensorElement p2 = apply_delta_at(h, h.phi_at(a, bc, l), 1, b, c);
                    TensorElement p3 = kron_elements(h.phi_at(a, b, c), u_l);
                    TensorElement lhs = mul_tensor(h, mul_tensor(h, p1, p2), p3);
                    TensorElement q1 = apply_delta_at(h, h.phi_at(a, b, cl), 2, c, l);
                    TensorElement q2 = apply_delta_at(h, h.phi_at(ab, c, l), 0, a, b);
                    TensorElement rhs = mul_tensor(h, q1, q2);
                    if (lhs != rhs)
                        pent.fail(ix({{"alpha", a}, {"beta", b}, {"gamma", c}, {"lambda", l}}),
                                  lhs.str(), rhs.str());
                }
    rep.add(pent.take());

    Checker norm("coalgebra.normalization");
    for (long a = 0; a < n && norm.ok(); ++a)
        for (long b = 0; b < n && norm.ok(); ++b) {
            norm.count();
            TensorElement lhs = apply_counit_at(h, h.phi_at(a, e, b), 1);
            TensorElement rhs = unit_tensor(h, {a, b});
            if (lhs != rhs)
                norm.fail(ix({{"alpha", a}, {"beta", b}}), lhs.str(), rhs.str());
        }
    rep.add(norm.take());

    Checker inv("coalgebra.phi_invertible");
    for (long a = 0; a < n && inv.ok(); ++a)
        for (long b = 0; b < n && inv.ok(); ++b)
            for (long c = 0; c < n && inv.ok(); ++c) {
                inv.count();
                TensorElement want = unit_tensor(h, {a, b, c});
                TensorElement l = mul_tensor(h, h.phi_at(a, b, c), h.phi_inv_at(a, b, c));
                TensorElement r = mul_tensor(h, h.phi_inv_at(a, b, c), h.phi_at(a, b, c));
                if (l != want || r != want)
                    inv.fail(ix({{"alpha", a}, {"beta", b}, {"gamma", c}}),
                             l.str() + " / " + r.str(), want.str());
            }
    rep.add(inv.take());

    return rep;
}

Report validate_antipode(const QuasiTuraevCoalgebra& h) {
    Report rep;
    long n = h.n();
    long e = h.group().identity();

    Checker anti("antipode.anti_morphism");
    for (long a = 0; a < n && anti.ok(); ++a) {
        long ai = h.group().inverse(a);
        {
            anti.count();
            Vec lhs = antipode_elem(h, a, h.algebra.unit(a));
            if (lhs != h.algebra.unit(ai)) {
                anti.fail(ix({{"alpha", a}}), vec_str(lhs), vec_str(h.algebra.unit(ai)));
                continue;
            }
        }
        for (long i = 0; i < h.dim(a) && anti.ok(); ++i)
            for (long j = 0; j < h.dim(a) && anti.ok(); ++j) {
                anti.count();
                Vec lhs = antipode_elem(
                    h, a, h.algebra.mul(a, h.algebra.basis(a, i), h.algebra.basis(a, j)));
                Vec rhs = h.algebra.mul(ai, antipode_elem(h, a, h.algebra.basis(a, j)),
                                        antipode_elem(h, a, h.algebra.basis(a, i)));
                if (lhs != rhs)
                    anti.fail(ix({{"alpha", a}, {"i", i}, {"j", j}}), vec_str(lhs), vec_str(rhs));
            }
    }
    rep.add(anti.take());

    Checker sinv("antipode.invertible");
    for (long a = 0; a < n && sinv.ok(); ++a) {
        sinv.count();
        LinMap round = compose(h.antipode_inv_at(a), h.antipode_at(a));
        LinMap round2 = compose(h.antipode_at(a), h.antipode_inv_at(a));
        if (!round.is_identity() || !round2.is_identity())
            sinv.fail(ix({{"alpha", a}}), round.str() + " / " + round2.str(), "identity");
    }
    rep.add(sinv.take());

    Checker cl("antipode.cancel_left");
    for (long a = 0; a < n && cl.ok(); ++a) {
        long ai = h.group().inverse(a);
        for (long k = 0; k < h.dim(e) && cl.ok(); ++k) {
            cl.count();
            Vec acc(static_cast<std::size_t>(h.dim(ai)), Scalar::zero(h.field()));
            for (const auto& t : sweedler_basis(h, a, ai, k)) {
                Vec s = antipode_elem(h, a, h.algebra.basis(a, t.i));
                Vec m = h.algebra.mul(ai, s, h.p_at(ai));
                m = h.algebra.mul(ai, m, h.algebra.basis(ai, t.j));
                for (std::size_t z = 0; z < m.size(); ++z)
                    acc[z] += t.coeff * m[z];
            }
            Scalar eps = counit_elem(h, h.algebra.basis(e, k));
            Vec want = h.p_at(ai);
            for (auto& w : want)
                w = w * eps;
            if (acc != want)
                cl.fail(ix({{"alpha", a}, {"h", k}}), vec_str(acc), vec_str(want));
        }
    }
    rep.add(cl.take());

    Checker cr("antipode.cancel_right");
    for (long a = 0; a < n && cr.ok(); ++a) {
        long ai = h.group().inverse(a);
        for (long k = 0; k < h.dim(e) && cr.ok(); ++k) {
            cr.count();
            Vec acc(static_cast<std::size_t>(h.dim(a)), Scalar::zero(h.field()));
            for (const auto& t : sweedler_basis(h, a, ai, k)) {
                Vec m = h.algebra.mul(a, h.algebra.basis(a, t.i), h.q_at(a));
                m = h.algebra.mul(a, m, antipode_elem(h, ai, h.algebra.basis(ai, t.j)));
                for (std::size_t z = 0; z < m.size(); ++z)
                    acc[z] += t.coeff * m[z];
            }
            Scalar eps = counit_elem(h, h.algebra.basis(e, k));
            Vec want = h.q_at(a);
            for (auto& w : want)
                w = w * eps;
            if (acc != want)
                cr.fail(ix({{"alpha", a}, {"h", k}}), vec_str(acc), vec_str(want));
        }
    }
    rep.add(cr.take());

    Checker pc("antipode.phi_contract");
    for (long a = 0; a < n && pc.ok(); ++a) {
        pc.count();
        long ai = h.group().inverse(a);
        Vec acc(static_cast<std::size_t>(h.dim(a)), Scalar::zero(h.field()));
        for (const auto& [y1, y2, y3, c] : tensor3_terms(h.phi_at(a, ai, a))) {
            Vec m = h.algebra.mul(a, h.algebra.basis(a, y1), h.q_at(a));
            m = h.algebra.mul(a, m, antipode_elem(h, ai, h.algebra.basis(ai, y2)));
            m = h.algebra.mul(a, m, h.p_at(a));
            m = h.algebra.mul(a, m, h.algebra.basis(a, y3));
            for (std::size_t z = 0; z < m.size(); ++z)
                acc[z] += c * m[z];
        }
        if (acc != h.algebra.unit(a))
            pc.fail(ix({{"alpha", a}}), vec_str(acc), vec_str(h.algebra.unit(a)));
    }
    rep.add(pc.take());

    Checker pic("antipode.phi_inv_contract");
    for (long a = 0; a < n && pic.ok(); ++a) {
        pic.count();
        long ai = h.group().inverse(a);
        Vec acc(static_cast<std::size_t>(h.dim(a)), Scalar::zero(h.field()));
        for (const auto& [y1, y2, y3, c] : tensor3_terms(h.phi_inv_at(ai, a, ai))) {
            Vec m = antipode_elem(h, ai, h.algebra.basis(ai, y1));
            m = h.algebra.mul(a, m, h.p_at(a));
            m = h.algebra.mul(a, m, h.algebra.basis(a, y2));
            m = h.algebra.mul(a, m, h.q_at(a));
            m = h.algebra.mul(a, m, antipode_elem(h, ai, h.algebra.basis(ai, y3)));
            for (std::size_t z = 0; z < m.size(); ++z)
                acc[z] += c * m[z];
        }
        if (acc != h.algebra.unit(a))
            pic.fail(ix({{"alpha", a}}), vec_str(acc), vec_str(h.algebra.unit(a)));
    }
    rep.add(pic.take());

    return rep;
}

Report validate_crossing(const QuasiTuraevCoalgebra& h) {
    Report rep;
    long n = h.n();
    long e = h.group().identity();

    Checker iso("crossing.algebra_iso");
    for (long b = 0; b < n && iso.ok(); ++b)
        for (long a = 0; a < n && iso.ok(); ++a) {
            long t = h.group().conjugate(b, a);
            {
                iso.count();
                Vec img = crossing_elem(h, b, a, h.algebra.unit(a));
                if (img != h.algebra.unit(t)) {
                    iso.fail(ix({{"beta", b}, {"alpha", a}}), vec_str(img),
                             vec_str(h.algebra.unit(t)));
                    continue;
                }
                try {
                    (void)invert(h.crossing_at(b, a));
                } catch (const Singular& s) {
                    iso.fail(ix({{"beta", b}, {"alpha", a}}),
                             "rank " + std::to_string(s.rank), "bijective crossing");
                    continue;
                } catch (const DimensionMismatch&) {
                    iso.fail(ix({{"beta", b}, {"alpha", a}}), "non-square crossing",
                             "bijective crossing");
                    continue;
                }
            }
            for (long i = 0; i < h.dim(a) && iso.ok(); ++i)
                for (long j = 0; j < h.dim(a) && iso.ok(); ++j) {
                    iso.count();
                    Vec lhs = crossing_elem(
                        h, b, a, h.algebra.mul(a, h.algebra.basis(a, i), h.algebra.basis(a, j)));
                    Vec rhs = h.algebra.mul(t, crossing_elem(h, b, a, h.algebra.basis(a, i)),
                                            crossing_elem(h, b, a, h.algebra.basis(a, j)));
                    if (lhs != rhs)
                        iso.fail(ix({{"beta", b}, {"alpha", a}, {"i", i}, {"j", j}}),
                                 vec_str(lhs), vec_str(rhs));
                }
        }
    rep.add(iso.take());

    Checker dc("crossing.delta_compat");
    for (long b = 0; b < n && dc.ok(); ++b)
        for (long a = 0; a < n && dc.ok(); ++a)
            for (long c = 0; c < n && dc.ok(); ++c) {
                long ac = h.group().mul(a, c);
                long ta = h.group().conjugate(b, a);
                long tc = h.group().conjugate(b, c);
                for (long k = 0; k < h.dim(ac) && dc.ok(); ++k) {
                    dc.count();
                    TensorElement lhs = apply_crossing_at(
                        h, apply_crossing_at(h, delta_elem(h, a, c, h.algebra.basis(ac, k)), 0, b),
                        1, b);
                    TensorElement rhs =
                        delta_elem(h, ta, tc, crossing_elem(h, b, ac, h.algebra.basis(ac, k)));
                    if (lhs != rhs)
                        dc.fail(ix({{"beta", b}, {"alpha", a}, {"gamma", c}, {"h", k}}), lhs.str(),
                                rhs.str());
                }
            }
    rep.add(dc.take());

    Checker cc("crossing.counit_compat");
    for (long b = 0; b < n && cc.ok(); ++b)
        for (long k = 0; k < h.dim(e) && cc.ok(); ++k) {
            cc.count();
            Scalar lhs = counit_elem(h, crossing_elem(h, b, e, h.algebra.basis(e, k)));
            Scalar rhs = counit_elem(h, h.algebra.basis(e, k));
            if (lhs != rhs)
                cc.fail(ix({{"beta", b}, {"h", k}}), lhs.str(), rhs.str());
        }
    rep.add(cc.take());

    Checker mult("crossing.multiplicative");
    {
        for (long a = 0; a < n && mult.ok(); ++a) {
            mult.count();
            if (!h.crossing_at(e, a).is_identity()) {
                mult.fail(ix({{"alpha", a}}), h.crossing_at(e, a).str(), "identity");
                break;
            }
        }
        for (long b = 0; b < n && mult.ok(); ++b)
            for (long b2 = 0; b2 < n && mult.ok(); ++b2)
                for (long a = 0; a < n && mult.ok(); ++a) {
                    mult.count();
                    long inner = h.group().conjugate(b2, a);
                    LinMap lhs = compose(h.crossing_at(b, inner), h.crossing_at(b2, a));
                    const LinMap& rhs = h.crossing_at(h.group().mul(b, b2), a);
                    if (lhs != rhs)
                        mult.fail(ix({{"beta", b}, {"beta2", b2}, {"alpha", a}}), lhs.str(),
                                  rhs.str());
                }
    }
    rep.add(mult.take());

    Checker pi("crossing.phi_invariant");
    for (long g1 = 0; g1 < n && pi.ok(); ++g1)
        for (long g2 = 0; g2 < n && pi.ok(); ++g2)
            for (long g3 = 0; g3 < n && pi.ok(); ++g3)
                for (long a = 0; a < n && pi.ok(); ++a)
                    for (long b = 0; b < n && pi.ok(); ++b)
                        for (long c = 0; c < n && pi.ok(); ++c) {
                            pi.count();
                            TensorElement lhs = apply_crossing_at(
                                h,
                                apply_crossing_at(
                                    h, apply_crossing_at(h, h.phi_at(a, b, c), 0, g1), 1, g2),
                                2, g3);
                            const TensorElement& rhs =
                                h.phi_at(h.group().conjugate(g1, a), h.group().conjugate(g2, b),
                                         h.group().conjugate(g3, c));
                            if (lhs != rhs)
                                pi.fail(ix({{"eta", g1},
                                            {"theta", g2},
                                            {"vartheta", g3},
                                            {"alpha", a},
                                            {"beta", b},
                                            {"gamma", c}}),
                                        lhs.str(), rhs.str());
                        }
    rep.add(pi.take());

    return rep;
}

Report validate_all(QuasiTuraevCoalgebra& h) {
    Report rep = validate_algebra(h.algebra);
    if (!rep.passed()) {
        rep.add(CheckResult::skip("coalgebra", "algebra suite failed"));
        rep.add(CheckResult::skip("antipode", "algebra suite failed"));
        rep.add(CheckResult::skip("crossing", "algebra suite failed"));
        return rep;
    }
    Report co = validate_coalgebra(h);
    bool co_ok = co.passed();
    rep.append(std::move(co));
    if (!co_ok) {
        rep.add(CheckResult::skip("antipode", "coalgebra suite failed"));
        rep.add(CheckResult::skip("crossing", "coalgebra suite failed"));
        return rep;
    }
    rep.append(validate_antipode(h));
    rep.append(validate_crossing(h));
    h.validated = rep.passed();
    return rep;
}

} // namespace qtgc
