#pragma once

#include <string>
#include <vector>

#include "qtgc/errors.hpp"
#include "qtgc/report.hpp"

namespace qtgc {

// Finite group given by its multiplication table. Elements are the indices
// 0..order-1; the table is row-major: table[a*order + b] = a*b.
class FinGroup {
  public:
    FinGroup() : FinGroup(1, {0}, 0) {}
    FinGroup(long order, std::vector<long> table, long identity);

    static FinGroup trivial() { return cyclic(1); }
    static FinGroup cyclic(long n);
    static FinGroup symmetric3();
    static FinGroup direct_product(const FinGroup& a, const FinGroup& b);

    long order() const { return order_; }
    long identity() const { return identity_; }
    const std::vector<long>& table() const { return table_; }

    long mul(long a, long b) const {
        check_index(a);
        check_index(b);
        return table_[static_cast<std::size_t>(a * order_ + b)];
    }
    long inverse(long a) const;
    // conjugate(b, a) = b a b^{-1}
    long conjugate(long b, long a) const { return mul(mul(b, a), inverse(b)); }

    bool operator==(const FinGroup&) const = default;

  private:
    void check_index(long a) const {
        if (a < 0 || a >= order_)
            throw IndexOutOfRange("group element " + std::to_string(a) + " of order " +
                                  std::to_string(order_));
    }

    long order_;
    std::vector<long> table_;
    long identity_;
};

// Brute-force check of the group axioms: closure, identity, two-sided
// inverses, associativity over all order^3 triples. Failures are report
// entries carrying the first offending element or triple.
Report validate_group(const FinGroup& g);

} // namespace qtgc
