#include "vlab/arith/linalg.hpp"

#include <algorithm>

namespace vlab {

IntMatrix hnf(IntMatrix rows, std::size_t cols, const Int& modulus) {
    if (modulus != 0) {
        for (std::size_t i = 0; i < cols; ++i) {
            std::vector<Int> e(cols, 0);
            e[i] = modulus;
            rows.push_back(std::move(e));
        }
    }
    auto reduce_tail = [&](std::vector<Int>& row, std::size_t from) {
        if (modulus == 0) return;
        for (std::size_t j = from; j < cols; ++j) row[j] = mod_floor(row[j], modulus);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        while (true) {
            // smallest nonzero |entry| in column c among rows r..end goes to row r
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                reduce_tail(rows[i], c + 1);
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows.size() && rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (auto& x : rows[r]) x = -x;
            reduce_tail(rows[r], c + 1);
            ++r;
        }
    }
    rows.resize(r);
    // drop zero rows (already excluded) and reduce above pivots
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t pc = 0;
        while (rows[i][pc] == 0) ++pc;
        for (std::size_t k = 0; k < i; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[k][pc].get_mpz_t(), rows[i][pc].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = pc; j < cols; ++j) rows[k][j] -= q * rows[i][j];
        }
    }
    return rows;
}

Int determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace vlab
