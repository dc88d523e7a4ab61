#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace spechtstab {

uint32_t fp_inverse(uint32_t x, uint32_t p);
bool is_prime(long long p);

/// Dense matrix over F_p, row-major, entries in [0, p). Arithmetic is exact;
/// dot products accumulate in 64 bits, which is safe for p < 2^24 at the
/// dimensions this library handles.
struct FpMatrix {
    int rows = 0;
    int cols = 0;
    uint32_t p = 2;
    std::vector<uint32_t> a;

    FpMatrix() = default;
    FpMatrix(int r, int c, uint32_t modulus);

    static FpMatrix identity(int n, uint32_t p);

    uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix transpose() const;
    std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const; // M * v

    bool is_identity() const;
    bool is_zero() const;
    bool operator==(const FpMatrix&) const = default;
};

/// Reduced row echelon form with pivot bookkeeping.
struct Echelon {
    FpMatrix rref;
    std::vector<int> pivot_cols; // one per pivot row, increasing
    int rank = 0;
};

Echelon row_echelon(FpMatrix m);
int rank(const FpMatrix& m);

/// Basis of {v : M v = 0}, one kernel vector per row of the result
/// (possibly 0 rows).
FpMatrix nullspace(const FpMatrix& m);

std::optional<FpMatrix> inverse(const FpMatrix& m);

/// Solves A X = B; nullopt when inconsistent. A need not be square.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

/// Univariate polynomial over F_p; c[i] is the coefficient of x^i, trimmed so
/// the leading coefficient is nonzero (the zero polynomial has empty c).
struct FpPoly {
    uint32_t p = 2;
    std::vector<uint32_t> c;

    FpPoly() = default;
    FpPoly(uint32_t modulus, std::vector<uint32_t> coeffs);

    static FpPoly zero(uint32_t p) { return FpPoly(p, {}); }
    static FpPoly constant(uint32_t p, uint32_t v) { return FpPoly(p, {v % p}); }
    static FpPoly x(uint32_t p) { return FpPoly(p, {0, 1}); }

    int deg() const { return static_cast<int>(c.size()) - 1; } // zero -> -1
    bool is_zero() const { return c.empty(); }
    uint32_t leading() const { return c.back(); }
    uint32_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0;
    }

    void trim();
    FpPoly monic() const;

    FpPoly operator+(const FpPoly& rhs) const;
    FpPoly operator-(const FpPoly& rhs) const;
    FpPoly operator*(const FpPoly& rhs) const;
    bool operator==(const FpPoly&) const = default;
};

/// (quotient, remainder) with deg r < deg b. b must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b); // monic
FpPoly derivative(const FpPoly& f);
FpPoly powmod(const FpPoly& base, long long e, const FpPoly& mod);

/// Horner evaluation of f at a square matrix.
FpMatrix eval_poly(const FpPoly& f, const FpMatrix& m);

/// Characteristic polynomial det(xI - M), monic of degree M.rows, via
/// Hessenberg reduction.
FpPoly charpoly(const FpMatrix& m);

/// Monic irreducible factors with multiplicities, sorted by (degree,
/// coefficients) so the factorization is deterministic. Uses Berlekamp
/// splitting; for large p the equal-degree splits draw from rng.
std::vector<std::pair<FpPoly, int>> factorize(const FpPoly& f, std::mt19937_64& rng);

} // namespace spechtstab
