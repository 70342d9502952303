#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netlap/bigint.hpp"
#include "netlap/errors.hpp"

namespace netlap {

// Dense square matrix of exact integers, row-major. Immutable use after
// construction is the norm; all algorithms copy before mutating.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int order) : n_(order), a_(order * order) {
        if (order < 0) throw input_error("IntMatrix: negative order");
    }

    static IntMatrix identity(int order) {
        IntMatrix m(order);
        for (int i = 0; i < order; ++i) m(i, i) = 1;
        return m;
    }

    int order() const { return n_; }

    Bigint& operator()(int i, int j) { return a_[i * n_ + j]; }
    const Bigint& operator()(int i, int j) const {
        return a_[i * n_ + j];
    }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Bigint trace() const {
        Bigint t;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    Bigint row_sum(int i) const {
        Bigint s;
        for (int j = 0; j < n_; ++j) s += (*this)(i, j);
        return s;
    }

    // max_i sum_j |a_ij|; upper bound on the spectral radius for symmetric input.
    Bigint max_abs_row_sum() const {
        Bigint best;
        for (int i = 0; i < n_; ++i) {
            Bigint s;
            for (int j = 0; j < n_; ++j) s += (*this)(i, j).abs();
            if (s > best) best = s;
        }
        return best;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    friend IntMatrix operator-(const IntMatrix& m) {
        IntMatrix r(m.n_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = -m.a_[i];
        return r;
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i < n_; ++i) {
            out += i == 0 ? "[" : " ";
            for (int j = 0; j < n_; ++j) {
                out += (*this)(i, j).str();
                if (j + 1 < n_) out += " ";
            }
            out += i + 1 < n_ ? "\n" : "]";
        }
        return out;
    }

private:
    int n_ = 0;
    std::vector<Bigint> a_;
};

}  // namespace netlap
