#include "gring/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "gring/error.hpp"

namespace gring {

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b.front().size() : 0;
    IntMat out(rows, IntVec(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IntVec mat_apply(const IntMat& a, const IntVec& x) {
    IntVec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

mpz_class determinant(const IntMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (a.front().size() != n) fail(errc::invalid_element, "determinant of a non-square matrix");
    // Bareiss fraction-free elimination
    IntMat m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = q;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<mpz_class> SmithResult::diagonal() const {
    std::vector<mpz_class> d;
    const std::size_t n = std::min(D.size(), D.empty() ? 0 : D.front().size());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(D[i][i]);
    return d;
}

namespace {

struct Pivot {
    std::size_t row = 0, col = 0;
    bool found = false;
};

Pivot find_pivot(const IntMat& d, std::size_t k) {
    Pivot best;
    mpz_class best_abs;
    for (std::size_t i = k; i < d.size(); ++i)
        for (std::size_t j = k; j < d[i].size(); ++j) {
            if (d[i][j] == 0) continue;
            mpz_class a = abs(d[i][j]);
            if (!best.found || a < best_abs) {
                best = {i, j, true};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    for (const auto& row : a)
        if (row.size() != cols) fail(errc::invalid_element, "ragged matrix");

    SmithResult res;
    res.U = identity_matrix(rows);
    res.V = identity_matrix(cols);
    res.D = a;
    IntMat& d = res.D;

    auto row_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] -= q * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) res.U[dst][j] -= q * res.U[src][j];
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] -= q * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) res.V[i][dst] -= q * res.V[i][src];
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(d[i], d[j]);
        std::swap(res.U[i], res.U[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(d[r][i], d[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(res.V[r][i], res.V[r][j]);
    };

    const std::size_t steps = std::min(rows, cols);
    std::size_t k = 0;
    for (; k < steps; ++k) {
        Pivot p = find_pivot(d, k);
        if (!p.found) break;
        swap_rows(k, p.row);
        swap_cols(k, p.col);
        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (d[i][k] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d[i][k].get_mpz_t(), d[k][k].get_mpz_t());
                row_axpy(i, k, q);
                if (d[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (d[k][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d[k][j].get_mpz_t(), d[k][k].get_mpz_t());
                col_axpy(j, k, q);
                if (d[k][j] != 0) clean = false;
            }
            if (!clean) {
                // remainders left behind are smaller than the pivot; re-pick
                Pivot again = find_pivot(d, k);
                swap_rows(k, again.row);
                swap_cols(k, again.col);
                continue;
            }
            break;
        }
        if (d[k][k] < 0) {
            for (std::size_t j = 0; j < cols; ++j) d[k][j] = -d[k][j];
            for (std::size_t j = 0; j < rows; ++j) res.U[k][j] = -res.U[k][j];
        }
        // enforce the divisibility chain: fold any bad entry into row k and redo
        bool redo = false;
        for (std::size_t i = k + 1; i < rows && !redo; ++i)
            for (std::size_t j = k + 1; j < cols && !redo; ++j) {
                if (d[i][j] == 0) continue;
                if (!mpz_divisible_p(d[i][j].get_mpz_t(), d[k][k].get_mpz_t())) {
                    row_axpy(k, i, mpz_class(-1));
                    redo = true;
                }
            }
        if (redo) --k;
    }
    res.rank = 0;
    for (std::size_t i = 0; i < steps; ++i)
        if (d[i][i] != 0) ++res.rank;
    return res;
}

std::vector<IntVec> kernel_integer(const IntMat& a) {
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    if (cols == 0) return {};
    SmithResult snf = smith_normal_form(a);
    std::vector<IntVec> basis;
    for (std::size_t i = snf.rank; i < cols; ++i) {
        IntVec x(cols);
        for (std::size_t r = 0; r < cols; ++r) x[r] = snf.V[r][i];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    if (b.size() != rows) fail(errc::invalid_element, "solve_integer dimension mismatch");
    SmithResult snf = smith_normal_form(a);
    IntVec c = mat_apply(snf.U, b);
    IntVec y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class di = (i < cols && i < snf.D.size()) ? snf.D[i][i] : mpz_class(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(c[i].get_mpz_t(), di.get_mpz_t())) return std::nullopt;
        y[i] = c[i] / di;
    }
    return mat_apply(snf.V, y);
}

std::vector<IntVec> kernel_mod(const IntMat& a, const mpz_class& n) {
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    if (a.empty() || cols == 0) return {};
    SmithResult snf = smith_normal_form(a);
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < cols; ++i) {
        mpz_class di = i < snf.D.size() && i < cols ? snf.D[i][i] : mpz_class(0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), n.get_mpz_t());
        mpz_class factor = n / g;  // minimal multiplier killing the diagonal entry mod n
        if (factor == n) continue; // only the zero solution in this coordinate... unless di == 0
        IntVec x(cols, 0);
        bool nonzero = false;
        for (std::size_t r = 0; r < cols; ++r) {
            mpz_class v = snf.V[r][i] * factor;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
            x[r] = v;
            if (v != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(std::move(x));
    }
    return gens;
}

std::optional<IntVec> solve_mod(const IntMat& a, const IntVec& b, const mpz_class& n) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    if (b.size() != rows) fail(errc::invalid_element, "solve_mod dimension mismatch");
    SmithResult snf = smith_normal_form(a);
    IntVec c = mat_apply(snf.U, b);
    IntVec y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class di = (i < cols && i < snf.D.size()) ? snf.D[i][i] : mpz_class(0);
        mpz_class ci;
        mpz_mod(ci.get_mpz_t(), c[i].get_mpz_t(), n.get_mpz_t());
        if (di == 0) {
            if (ci != 0) return std::nullopt;
            continue;
        }
        // di * y == ci (mod n)
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), n.get_mpz_t());
        if (!mpz_divisible_p(ci.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
        mpz_class n_red = n / g;
        mpz_class di_red = (di / g) % n_red;
        mpz_class ci_red = (ci / g) % n_red;
        mpz_class inv;
        if (n_red == 1) {
            y[i] = 0;
        } else {
            if (mpz_invert(inv.get_mpz_t(), di_red.get_mpz_t(), n_red.get_mpz_t()) == 0)
                fail(errc::internal, "reduced diagonal not invertible");
            mpz_class yi = (ci_red * inv) % n_red;
            y[i] = yi;
        }
    }
    IntVec x = mat_apply(snf.V, y);
    for (auto& v : x) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    // verify (guards the rows > cols case where unused y coordinates stay zero)
    IntVec check = mat_apply(a, x);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class r = check[i] - b[i];
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        if (r != 0) return std::nullopt;
    }
    return x;
}

}  // namespace gring
