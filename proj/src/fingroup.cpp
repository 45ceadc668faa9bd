#include "qtgc/fingroup.hpp"

#include <array>

namespace qtgc {

FinGroup::FinGroup(long order, std::vector<long> table, long identity)
    : order_(order), table_(std::move(table)), identity_(identity) {
    if (order < 1)
        throw IndexOutOfRange("group order must be >= 1");
    if (static_cast<long>(table_.size()) != order * order)
        throw ShapeError("group", "-", std::to_string(order) + "x" + std::to_string(order),
                         std::to_string(table_.size()) + " entries");
    if (identity < 0 || identity >= order)
        throw IndexOutOfRange("identity index " + std::to_string(identity));
    for (long v : table_)
        if (v < 0 || v >= order)
            throw IndexOutOfRange("table entry " + std::to_string(v));
}

long FinGroup::inverse(long a) const {
    check_index(a);
    for (long b = 0; b < order_; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_)
            return b;
    throw IndexOutOfRange("element " + std::to_string(a) + " has no inverse");
}

FinGroup FinGroup::cyclic(long n) {
    std::vector<long> t(static_cast<std::size_t>(n * n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
    return FinGroup(n, std::move(t), 0);
}

FinGroup FinGroup::symmetric3() {
    // Permutations of {0,1,2} in lexicographic order; composition
    // (s*t)(x) = s(t(x)).
    const std::array<std::array<long, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto index_of = [&](const std::array<long, 3>& p) -> long {
        for (long i = 0; i < 6; ++i)
            if (perms[static_cast<std::size_t>(i)] == p)
                return i;
        throw IndexOutOfRange("not a permutation");
    };
    std::vector<long> t(36);
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b) {
            std::array<long, 3> c{};
            for (long x = 0; x < 3; ++x)
                c[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
            t[static_cast<std::size_t>(a * 6 + b)] = index_of(c);
        }
    return FinGroup(6, std::move(t), 0);
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
    long n = a.order() * b.order();
    std::vector<long> t(static_cast<std::size_t>(n * n));
    auto enc = [&](long x, long y) { return x * b.order() + y; };
    for (long x1 = 0; x1 < a.order(); ++x1)
        for (long y1 = 0; y1 < b.order(); ++y1)
            for (long x2 = 0; x2 < a.order(); ++x2)
                for (long y2 = 0; y2 < b.order(); ++y2)
                    t[static_cast<std::size_t>(enc(x1, y1) * n + enc(x2, y2))] =
                        enc(a.mul(x1, x2), b.mul(y1, y2));
    return FinGroup(n, std::move(t), enc(a.identity(), b.identity()));
}

Report validate_group(const FinGroup& g) {
    Report rep;
    long n = g.order();
    long e = g.identity();

    // closure is enforced by the constructor; re-checked here for tables
    // assembled by hand.
    {
        bool ok = true;
        CheckResult r = CheckResult::passed("group.closure", n * n);
        for (long a = 0; a < n && ok; ++a)
            for (long b = 0; b < n && ok; ++b) {
                long v = g.table()[static_cast<std::size_t>(a * n + b)];
                if (v < 0 || v >= n) {
                    r = CheckResult::failed("group.closure", n * n,
                                            "(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                                ")",
                                            std::to_string(v),
                                            "element index in [0," + std::to_string(n) + ")");
                    ok = false;
                }
            }
        rep.add(r);
    }

    {
        CheckResult r = CheckResult::passed("group.identity", 2 * n);
        for (long a = 0; a < n; ++a) {
            if (g.mul(e, a) != a || g.mul(a, e) != a) {
                r = CheckResult::failed("group.identity", 2 * n, "(a=" + std::to_string(a) + ")",
                                        std::to_string(g.mul(e, a)) + ", " +
                                            std::to_string(g.mul(a, e)),
                                        std::to_string(a));
                break;
            }
        }
        rep.add(r);
    }

    {
        CheckResult r = CheckResult::passed("group.inverses", n);
        for (long a = 0; a < n; ++a) {
            bool found = false;
            for (long b = 0; b < n; ++b)
                if (g.mul(a, b) == e && g.mul(b, a) == e)
                    found = true;
            if (!found) {
                r = CheckResult::failed("group.inverses", n, "(a=" + std::to_string(a) + ")",
                                        "no two-sided inverse", "some b with ab = ba = e");
                break;
            }
        }
        rep.add(r);
    }

    {
        CheckResult r = CheckResult::passed("group.associativity", n * n * n);
        bool done = false;
        for (long a = 0; a < n && !done; ++a)
            for (long b = 0; b < n && !done; ++b)
                for (long c = 0; c < n && !done; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                        r = CheckResult::failed(
                            "group.associativity", n * n * n,
                            "(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                ", c=" + std::to_string(c) + ")",
                            std::to_string(g.mul(g.mul(a, b), c)),
                            std::to_string(g.mul(a, g.mul(b, c))));
                        done = true;
                    }
        rep.add(r);
    }

    return rep;
}

} // namespace qtgc
