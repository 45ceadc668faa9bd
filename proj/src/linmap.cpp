#include "qtgc/linmap.hpp"

#include <numeric>

namespace qtgc {

LinMap::LinMap(long rows, long cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field),
      entries_(static_cast<std::size_t>(rows * cols), Scalar::zero(field)) {
    if (rows < 0 || cols < 0)
        throw DimensionMismatch("negative dimension");
}

LinMap LinMap::identity(long n, const Field& field) {
    LinMap m(n, n, field);
    for (long i = 0; i < n; ++i)
        m.entry(i, i) = Scalar::one(field);
    return m;
}

bool LinMap::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            if (i == j && !entry(i, j).is_one())
                return false;
            if (i != j && !entry(i, j).is_zero())
                return false;
        }
    return true;
}

bool LinMap::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

LinMap LinMap::operator+(const LinMap& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("adding " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " to " + std::to_string(rhs.rows_) + "x" +
                                std::to_string(rhs.cols_));
    LinMap out(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + rhs.entries_[k];
    return out;
}

LinMap LinMap::operator-(const LinMap& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("subtracting mismatched shapes");
    LinMap out(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] - rhs.entries_[k];
    return out;
}

LinMap LinMap::scaled(const Scalar& c) const {
    LinMap out(rows_, cols_, field_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] * c;
    return out;
}

std::string LinMap::str() const {
    std::string out = "[";
    for (long i = 0; i < rows_; ++i) {
        out += (i == 0) ? "[" : " [";
        for (long j = 0; j < cols_; ++j) {
            out += entry(i, j).str();
            if (j + 1 < cols_)
                out += ", ";
        }
        out += "]";
        if (i + 1 < rows_)
            out += ";";
    }
    return out + "]";
}

LinMap compose(const LinMap& a, const LinMap& b) {
    if (a.cols() != b.rows()) {
        std::string tags;
        if (!a.src_label.empty() || !b.dst_label.empty())
            tags = " (" + b.dst_label + " -> " + a.src_label + ")";
        throw DimensionMismatch("compose: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " with " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()) + tags);
    }
    LinMap out(a.rows(), b.cols(), a.field());
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.entry(i, k);
            if (aik.is_zero())
                continue;
            for (long j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.entry(k, j);
                if (bkj.is_zero())
                    continue;
                out.entry(i, j) += aik * bkj;
            }
        }
    return out;
}

LinMap kron(const LinMap& a, const LinMap& b) {
    LinMap out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (long i1 = 0; i1 < a.rows(); ++i1)
        for (long j1 = 0; j1 < a.cols(); ++j1) {
            const Scalar& av = a.entry(i1, j1);
            if (av.is_zero())
                continue;
            for (long i2 = 0; i2 < b.rows(); ++i2)
                for (long j2 = 0; j2 < b.cols(); ++j2) {
                    const Scalar& bv = b.entry(i2, j2);
                    if (bv.is_zero())
                        continue;
                    out.entry(i1 * b.rows() + i2, j1 * b.cols() + j2) = av * bv;
                }
        }
    return out;
}

std::vector<Scalar> apply_map(const LinMap& a, const std::vector<Scalar>& v) {
    if (a.cols() != static_cast<long>(v.size()))
        throw DimensionMismatch("apply: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " to vector of length " +
                                std::to_string(v.size()));
    std::vector<Scalar> out(static_cast<std::size_t>(a.rows()), Scalar::zero(a.field()));
    for (long j = 0; j < a.cols(); ++j) {
        if (v[static_cast<std::size_t>(j)].is_zero())
            continue;
        for (long i = 0; i < a.rows(); ++i) {
            const Scalar& e = a.entry(i, j);
            if (!e.is_zero())
                out[static_cast<std::size_t>(i)] += e * v[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

LinMap invert(const LinMap& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("inverting non-square map");
    long n = a.rows();
    const Field& f = a.field();
    LinMap work = a;
    LinMap inv = LinMap::identity(n, f);

    long rank = 0;
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = rank; r < n; ++r)
            if (!work.entry(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw Singular(rank);
        if (pivot != rank)
            for (long j = 0; j < n; ++j) {
                std::swap(work.entry(pivot, j), work.entry(rank, j));
                std::swap(inv.entry(pivot, j), inv.entry(rank, j));
            }
        Scalar piv_inv = work.entry(rank, col).inverse();
        for (long j = 0; j < n; ++j) {
            work.entry(rank, j) *= piv_inv;
            inv.entry(rank, j) *= piv_inv;
        }
        for (long r = 0; r < n; ++r) {
            if (r == rank)
                continue;
            Scalar factor = work.entry(r, col);
            if (factor.is_zero())
                continue;
            for (long j = 0; j < n; ++j) {
                work.entry(r, j) -= factor * work.entry(rank, j);
                inv.entry(r, j) -= factor * inv.entry(rank, j);
            }
        }
        ++rank;
    }
    return inv;
}

TensorElement::TensorElement(std::vector<long> shape, std::vector<long> grading,
                             const Field& field)
    : shape_(std::move(shape)), grading_(std::move(grading)), field_(field) {
    if (shape_.size() != grading_.size())
        throw GradingMismatch("tensor shape has " + std::to_string(shape_.size()) +
                              " legs but grading has " + std::to_string(grading_.size()));
    coeffs_.assign(static_cast<std::size_t>(total_dim()), Scalar::zero(field));
}

long TensorElement::total_dim() const {
    long d = 1;
    for (long s : shape_)
        d *= s;
    return d;
}

std::size_t TensorElement::flat_index(const std::vector<long>& idx) const {
    if (idx.size() != shape_.size())
        throw DimensionMismatch("tensor index arity");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= shape_[i])
            throw IndexOutOfRange("tensor index");
        flat = flat * static_cast<std::size_t>(shape_[i]) + static_cast<std::size_t>(idx[i]);
    }
    return flat;
}

std::vector<long> TensorElement::unflatten(std::size_t flat) const {
    std::vector<long> idx(shape_.size(), 0);
    for (std::size_t i = shape_.size(); i-- > 0;) {
        idx[i] = static_cast<long>(flat % static_cast<std::size_t>(shape_[i]));
        flat /= static_cast<std::size_t>(shape_[i]);
    }
    return idx;
}

TensorElement TensorElement::operator+(const TensorElement& rhs) const {
    if (shape_ != rhs.shape_ || grading_ != rhs.grading_)
        throw GradingMismatch("adding tensors of different shape or grading");
    TensorElement out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out.coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& rhs) const {
    if (shape_ != rhs.shape_ || grading_ != rhs.grading_)
        throw GradingMismatch("subtracting tensors of different shape or grading");
    TensorElement out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out.coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    return out;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement out = *this;
    for (auto& x : out.coeffs_)
        x = x * c;
    return out;
}

bool TensorElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

std::string TensorElement::str() const {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        auto idx = unflatten(k);
        std::string basis = "e[";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            basis += std::to_string(idx[i]);
            if (i + 1 < idx.size())
                basis += ",";
        }
        basis += "]";
        if (!first)
            out += " + ";
        out += "(" + coeffs_[k].str() + ")*" + basis;
        first = false;
    }
    return first ? "0" : out;
}

TensorElement kron_elements(const TensorElement& a, const TensorElement& b) {
    std::vector<long> shape = a.shape();
    shape.insert(shape.end(), b.shape().begin(), b.shape().end());
    std::vector<long> grading = a.grading();
    grading.insert(grading.end(), b.grading().begin(), b.grading().end());
    TensorElement out(std::move(shape), std::move(grading), a.field());
    std::size_t bn = b.coeffs().size();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero())
            continue;
        for (std::size_t j = 0; j < bn; ++j) {
            if (b.coeffs()[j].is_zero())
                continue;
            out.coeffs()[i * bn + j] = a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return out;
}

TensorElement apply_at_leg(const TensorElement& t, std::size_t leg, const LinMap& m,
                           const std::vector<long>& new_dims,
                           const std::vector<long>& new_grading) {
    if (leg >= t.shape().size())
        throw IndexOutOfRange("tensor leg");
    if (m.cols() != t.shape()[leg])
        throw DimensionMismatch("map input does not match leg dimension");
    long out_dim = 1;
    for (long d : new_dims)
        out_dim *= d;
    if (m.rows() != out_dim)
        throw DimensionMismatch("map output does not match replacement legs");

    std::vector<long> shape(t.shape().begin(), t.shape().begin() + static_cast<long>(leg));
    shape.insert(shape.end(), new_dims.begin(), new_dims.end());
    shape.insert(shape.end(), t.shape().begin() + static_cast<long>(leg) + 1, t.shape().end());
    std::vector<long> grading(t.grading().begin(), t.grading().begin() + static_cast<long>(leg));
    grading.insert(grading.end(), new_grading.begin(), new_grading.end());
    grading.insert(grading.end(), t.grading().begin() + static_cast<long>(leg) + 1,
                   t.grading().end());

    TensorElement out(std::move(shape), std::move(grading), t.field());

    // Strides: prefix block, the leg itself, suffix block.
    long suffix = 1;
    for (std::size_t i = leg + 1; i < t.shape().size(); ++i)
        suffix *= t.shape()[i];
    long leg_dim = t.shape()[leg];
    long prefix = t.total_dim() / (suffix * leg_dim);

    for (long p = 0; p < prefix; ++p)
        for (long l = 0; l < leg_dim; ++l)
            for (long s = 0; s < suffix; ++s) {
                const Scalar& c =
                    t.coeffs()[static_cast<std::size_t>((p * leg_dim + l) * suffix + s)];
                if (c.is_zero())
                    continue;
                for (long o = 0; o < m.rows(); ++o) {
                    const Scalar& mv = m.entry(o, l);
                    if (mv.is_zero())
                        continue;
                    out.coeffs()[static_cast<std::size_t>((p * out_dim + o) * suffix + s)] +=
                        c * mv;
                }
            }
    return out;
}

} // namespace qtgc
