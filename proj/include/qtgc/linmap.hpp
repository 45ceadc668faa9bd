#pragma once

#include <string>
#include <vector>

#include "qtgc/scalar.hpp"

namespace qtgc {

// Dense linear map over the exact coefficient field. Entries are row-major,
// entry(i, j) is the coefficient of output basis vector i in the image of
// input basis vector j. Optional labels tag the graded source/target spaces
// for diagnostics.
class LinMap {
  public:
    LinMap() = default;
    LinMap(long rows, long cols, const Field& field);

    static LinMap identity(long n, const Field& field);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& entry(long i, long j) const {
        return entries_[static_cast<std::size_t>(i * cols_ + j)];
    }
    Scalar& entry(long i, long j) { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    bool operator==(const LinMap& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
    }
    bool operator!=(const LinMap& rhs) const { return !(*this == rhs); }

    bool is_identity() const;
    bool is_zero() const;

    LinMap operator+(const LinMap& rhs) const;
    LinMap operator-(const LinMap& rhs) const;
    LinMap scaled(const Scalar& c) const;

    std::string str() const; // row-per-line textual form for counterexamples

    std::string src_label;
    std::string dst_label;

  private:
    long rows_ = 0;
    long cols_ = 0;
    Field field_;
    std::vector<Scalar> entries_;
};

// Exact matrix product A∘B (apply B first). Throws DimensionMismatch.
LinMap compose(const LinMap& a, const LinMap& b);

// Kronecker product: (A⊗B)(v⊗w) = Av⊗Bw under row-major flat indexing.
LinMap kron(const LinMap& a, const LinMap& b);

// Matrix-vector application. Throws DimensionMismatch.
std::vector<Scalar> apply_map(const LinMap& a, const std::vector<Scalar>& v);

// Two-sided inverse by Gaussian elimination with exact arithmetic; pivots are
// chosen as the first nonzero entry in row order. Throws Singular with the
// rank found.
LinMap invert(const LinMap& a);

// Element of an iterated tensor product of graded components: flat row-major
// coefficients over the product basis, one group index per leg.
class TensorElement {
  public:
    TensorElement() = default;
    TensorElement(std::vector<long> shape, std::vector<long> grading, const Field& field);

    const std::vector<long>& shape() const { return shape_; }
    const std::vector<long>& grading() const { return grading_; }
    const Field& field() const { return field_; }
    long total_dim() const;

    const Scalar& coeff(const std::vector<long>& idx) const {
        return coeffs_[flat_index(idx)];
    }
    Scalar& coeff(const std::vector<long>& idx) { return coeffs_[flat_index(idx)]; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    std::vector<Scalar>& coeffs() { return coeffs_; }

    std::size_t flat_index(const std::vector<long>& idx) const;
    std::vector<long> unflatten(std::size_t flat) const;

    bool operator==(const TensorElement& rhs) const {
        return shape_ == rhs.shape_ && grading_ == rhs.grading_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const TensorElement& rhs) const { return !(*this == rhs); }

    TensorElement operator+(const TensorElement& rhs) const;
    TensorElement operator-(const TensorElement& rhs) const;
    TensorElement scaled(const Scalar& c) const;
    bool is_zero() const;

    std::string str() const;

  private:
    std::vector<long> shape_;
    std::vector<long> grading_;
    Field field_;
    std::vector<Scalar> coeffs_;
};

// Concatenates legs: element of A⊗B from elements of A and B.
TensorElement kron_elements(const TensorElement& a, const TensorElement& b);

// Applies a linear map to one leg, replacing it by new_dims legs (possibly
// none, e.g. a counit leg) graded by new_grading. The map's input dimension
// must match the leg; its output dimension must be the product of new_dims.
TensorElement apply_at_leg(const TensorElement& t, std::size_t leg, const LinMap& m,
                           const std::vector<long>& new_dims, const std::vector<long>& new_grading);

} // namespace qtgc
