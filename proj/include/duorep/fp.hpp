#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace duorep {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline u32 fp_add(u64 p, u32 a, u32 b) {
    u64 s = u64(a) + u64(b);
    return u32(s >= p ? s - p : s);
}

inline u32 fp_sub(u64 p, u32 a, u32 b) {
    return a >= b ? a - b : u32(u64(a) + p - u64(b));
}

inline u32 fp_mul(u64 p, u32 a, u32 b) { return u32(u64(a) * u64(b) % p); }

inline u32 fp_neg(u64 p, u32 a) { return a == 0 ? 0 : u32(p - a); }

inline u32 fp_pow(u64 p, u32 a, u64 e) {
    u64 r = 1 % p, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return u32(r);
}

inline u32 fp_inv(u64 p, u32 a) {
    if (a == 0) throw std::domain_error("inverse of 0 mod p");
    return fp_pow(p, a, p - 2);
}

using FpVec = std::vector<u32>;

inline bool vec_is_zero(const FpVec& v) {
    for (u32 x : v)
        if (x) return false;
    return true;
}

// Dense matrix over F_p, row-major. Rank/kernel by Gaussian elimination
// with first-nonzero pivoting (deterministic).
struct FpMat {
    long rows = 0, cols = 0;
    u64 p = 2;
    std::vector<u32> a;

    FpMat() = default;
    FpMat(long r, long c, u64 prime) : rows(r), cols(c), p(prime), a(size_t(r) * size_t(c), 0) {}

    static FpMat identity(long n, u64 prime) {
        FpMat m(n, n, prime);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1 % prime;
        return m;
    }

    u32& at(long r, long c) { return a[size_t(r) * size_t(cols) + size_t(c)]; }
    u32 at(long r, long c) const { return a[size_t(r) * size_t(cols) + size_t(c)]; }

    FpVec row(long r) const { return FpVec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }
    void set_row(long r, const FpVec& v) {
        for (long c = 0; c < cols; ++c) at(r, c) = v[size_t(c)];
    }

    bool is_zero() const {
        for (u32 x : a)
            if (x) return false;
        return true;
    }

    FpMat mul(const FpMat& o) const {
        if (cols != o.rows || p != o.p) throw std::invalid_argument("FpMat::mul shape/prime");
        FpMat r(rows, o.cols, p);
        for (long i = 0; i < rows; ++i)
            for (long k = 0; k < cols; ++k) {
                u32 aik = at(i, k);
                if (!aik) continue;
                for (long j = 0; j < o.cols; ++j) {
                    u32 v = o.at(k, j);
                    if (v) r.at(i, j) = fp_add(p, r.at(i, j), fp_mul(p, aik, v));
                }
            }
        return r;
    }

    FpVec apply(const FpVec& v) const {  // matrix * column vector
        FpVec r(size_t(rows), 0);
        for (long i = 0; i < rows; ++i) {
            u64 acc = 0;
            for (long j = 0; j < cols; ++j) {
                u32 x = at(i, j);
                if (x && v[size_t(j)]) {
                    acc += u64(x) * v[size_t(j)] % p;
                    if (acc >= (u64(1) << 62)) acc %= p;
                }
            }
            r[size_t(i)] = u32(acc % p);
        }
        return r;
    }

    FpMat transpose() const {
        FpMat t(cols, rows, p);
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const FpMat& o) const {
        return rows == o.rows && cols == o.cols && p == o.p && a == o.a;
    }

    long rank() const;
    FpMat kernel_basis() const;  // rows = basis of {v : this * v = 0}
};

// Incremental row-echelon container; rows kept fully reduced.
struct Echelon {
    u64 p = 2;
    long cols = 0;
    std::vector<FpVec> rows;
    std::vector<long> pivots;  // pivot column of rows[i], strictly handled set

    Echelon() = default;
    Echelon(u64 prime, long c) : p(prime), cols(c) {}

    long rank() const { return long(rows.size()); }

    // Reduces v against current rows in place; returns true if v reduced to zero.
    bool reduce(FpVec& v) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            u32 c = v[size_t(pivots[i])];
            if (!c) continue;
            const FpVec& r = rows[i];
            for (long j = 0; j < cols; ++j)
                if (r[size_t(j)]) v[size_t(j)] = fp_sub(p, v[size_t(j)], fp_mul(p, c, r[size_t(j)]));
        }
        return vec_is_zero(v);
    }

    bool contains(FpVec v) const { return reduce(v); }

    // Inserts v (if independent); returns true when the rank grew.
    bool insert(FpVec v) {
        if (reduce(v)) return false;
        long piv = 0;
        while (v[size_t(piv)] == 0) ++piv;
        u32 inv = fp_inv(p, v[size_t(piv)]);
        for (long j = 0; j < cols; ++j) v[size_t(j)] = fp_mul(p, v[size_t(j)], inv);
        // clear the new pivot column from existing rows
        for (size_t i = 0; i < rows.size(); ++i) {
            u32 c = rows[i][size_t(piv)];
            if (!c) continue;
            for (long j = 0; j < cols; ++j)
                rows[i][size_t(j)] = fp_sub(p, rows[i][size_t(j)], fp_mul(p, c, v[size_t(j)]));
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
};

// Expresses vectors in a fixed independent row basis.
struct BasisSolver {
    u64 p = 2;
    long cols = 0;
    long nbasis = 0;
    std::vector<FpVec> rows;    // reduced rows
    std::vector<FpVec> coeffs;  // coeffs[i] = expression of rows[i] in the original basis
    std::vector<long> pivots;

    BasisSolver() = default;

    BasisSolver(u64 prime, const std::vector<FpVec>& basis) : p(prime) {
        cols = basis.empty() ? 0 : long(basis[0].size());
        nbasis = long(basis.size());
        for (long i = 0; i < nbasis; ++i) {
            FpVec v = basis[size_t(i)];
            FpVec t(size_t(nbasis), 0);
            t[size_t(i)] = 1;
            reduce_tracked(v, t);
            if (vec_is_zero(v)) throw std::invalid_argument("BasisSolver: dependent basis");
            long piv = 0;
            while (v[size_t(piv)] == 0) ++piv;
            u32 inv = fp_inv(p, v[size_t(piv)]);
            for (auto& x : v) x = fp_mul(p, x, inv);
            for (auto& x : t) x = fp_mul(p, x, inv);
            for (size_t r = 0; r < rows.size(); ++r) {
                u32 c = rows[r][size_t(piv)];
                if (!c) continue;
                for (long j = 0; j < cols; ++j)
                    rows[r][size_t(j)] = fp_sub(p, rows[r][size_t(j)], fp_mul(p, c, v[size_t(j)]));
                for (long j = 0; j < nbasis; ++j)
                    coeffs[r][size_t(j)] = fp_sub(p, coeffs[r][size_t(j)], fp_mul(p, c, t[size_t(j)]));
            }
            rows.push_back(std::move(v));
            coeffs.push_back(std::move(t));
            pivots.push_back(piv);
        }
    }

    void reduce_tracked(FpVec& v, FpVec& t) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            u32 c = v[size_t(pivots[i])];
            if (!c) continue;
            for (long j = 0; j < cols; ++j)
                v[size_t(j)] = fp_sub(p, v[size_t(j)], fp_mul(p, c, rows[i][size_t(j)]));
            for (long j = 0; j < nbasis; ++j)
                t[size_t(j)] = fp_sub(p, t[size_t(j)], fp_mul(p, c, coeffs[i][size_t(j)]));
        }
    }

    // v = sum coeff[i] * basis[i], or nullopt if v is outside the span.
    std::optional<FpVec> solve(FpVec v) const {
        FpVec t(size_t(nbasis), 0);
        FpVec acc(size_t(nbasis), 0);
        for (size_t i = 0; i < rows.size(); ++i) {
            u32 c = v[size_t(pivots[i])];
            if (!c) continue;
            for (long j = 0; j < cols; ++j)
                v[size_t(j)] = fp_sub(p, v[size_t(j)], fp_mul(p, c, rows[i][size_t(j)]));
            for (long j = 0; j < nbasis; ++j)
                acc[size_t(j)] = fp_add(p, acc[size_t(j)], fp_mul(p, c, coeffs[i][size_t(j)]));
        }
        if (!vec_is_zero(v)) return std::nullopt;
        (void)t;
        return acc;
    }
};

inline long FpMat::rank() const {
    Echelon e(p, cols);
    for (long i = 0; i < rows; ++i) e.insert(row(i));
    return e.rank();
}

inline FpMat FpMat::kernel_basis() const {
    // reduce, then read off the kernel from free columns
    Echelon e(p, cols);
    for (long i = 0; i < rows; ++i) e.insert(row(i));
    std::vector<char> is_pivot(size_t(cols), 0);
    for (long piv : e.pivots) is_pivot[size_t(piv)] = 1;
    std::vector<long> free_cols;
    for (long c = 0; c < cols; ++c)
        if (!is_pivot[size_t(c)]) free_cols.push_back(c);
    FpMat k(long(free_cols.size()), cols, p);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        long fc = free_cols[fi];
        k.at(long(fi), fc) = 1;
        for (size_t r = 0; r < e.rows.size(); ++r) {
            u32 c = e.rows[r][size_t(fc)];
            if (c) k.at(long(fi), e.pivots[r]) = fp_neg(p, c);
        }
    }
    return k;
}

}  // namespace duorep
