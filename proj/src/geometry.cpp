#include "pospoly/geometry.hpp"

#include <algorithm>
#include <functional>

#include "pospoly/errors.hpp"

namespace pospoly {

long long QPolynomial::eval_at_one() const {
    long long sum = 0;
    for (long long c : coeffs) sum += c;
    return sum;
}

bool QPolynomial::is_palindromic() const {
    std::vector<long long> rev(coeffs.rbegin(), coeffs.rend());
    return rev == coeffs;
}

std::string QPolynomial::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
        if (coeffs[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0)
            out += std::to_string(coeffs[k]);
        else {
            if (coeffs[k] != 1) out += std::to_string(coeffs[k]) + "*";
            out += (k == 1) ? "q" : "q^" + std::to_string(k);
        }
    }
    return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (coeffs.size() < other.coeffs.size()) coeffs.resize(other.coeffs.size(), 0);
    for (std::size_t k = 0; k < other.coeffs.size(); ++k) coeffs[k] += other.coeffs[k];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<long long> prod(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
    return QPolynomial(std::move(prod));
}

QPolynomial q_ones(int len) {
    return QPolynomial(std::vector<long long>(static_cast<std::size_t>(std::max(len, 0)), 1));
}

QPolynomial gaussian_binomial(int n, int d) {
    if (n < 0 || d < 0 || d > n) fail(Errc::BadParams, "need 0 <= d <= n");
    // [n d] = [n-1 d-1] + q^d [n-1 d]
    std::vector<std::vector<QPolynomial>> table(n + 1, std::vector<QPolynomial>(n + 1));
    for (int nn = 0; nn <= n; ++nn) {
        table[nn][0] = QPolynomial({1});
        for (int dd = 1; dd <= nn; ++dd) {
            QPolynomial shifted;
            if (dd < nn) {
                std::vector<long long> c(dd, 0);
                c.push_back(1);
                shifted = QPolynomial(std::move(c)) * table[nn - 1][dd];
            }
            table[nn][dd] = table[nn - 1][dd - 1] + shifted;
        }
    }
    return table[n][d];
}

std::vector<QPolynomial> strata_poincare(int d, int n) {
    if (d < 1 || d >= n) fail(Errc::BadParams, "need 1 <= d < n");
    const int kmax = std::min(d, n - d);
    std::vector<QPolynomial> strata(kmax + 1);
    std::vector<int> subset;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(subset.size()) == d) {
            int k = 0, shift = 0;
            for (int t = 0; t < d; ++t) {
                if (subset[t] > d) ++k;
                shift += subset[t] - (t + 1);
            }
            const int dim = d * (n - d) - shift;
            std::vector<long long> mono(dim + 1, 0);
            mono[dim] = 1;
            strata[k] += QPolynomial(std::move(mono));
            return;
        }
        for (int x = from; x <= n; ++x) {
            subset.push_back(x);
            choose(x + 1);
            subset.pop_back();
        }
    };
    choose(1);
    return strata;
}

QPolynomial graph_poincare(int d, int n) {
    const auto strata = strata_poincare(d, n);
    QPolynomial total;
    for (int k = 0; k < static_cast<int>(strata.size()); ++k)
        total += strata[k] * q_ones(std::max(k * k, 1));
    return total;
}

namespace {

void check_subspace(const Subspace& u) {
    if (u.d() == 0 || u.n() == 0 || u.d() >= u.n())
        fail(Errc::BadParams, "subspace needs a d x n matrix with 1 <= d < n");
    for (const auto& row : u.rows)
        if (static_cast<int>(row.size()) != u.n())
            fail(Errc::MalformedInput, "ragged subspace matrix");
    if (rank_of(u.rows) != u.d()) fail(Errc::RankDeficient, "subspace rows are dependent");
}

RatMatrix first_columns(const Subspace& u, int count) {
    RatMatrix block(u.d());
    for (int r = 0; r < u.d(); ++r)
        block[r].assign(u.rows[r].begin(), u.rows[r].begin() + count);
    return block;
}

}  // namespace

int stratum_of(const Subspace& u) {
    check_subspace(u);
    return u.d() - rank_of(first_columns(u, u.d()));
}

FiberDescription fiber_of(const Subspace& u) {
    check_subspace(u);
    const int d = u.d();
    const int n = u.n();

    // Intersection with the plus summand: row combinations whose first d
    // coordinates vanish. Kernel of the transposed first-column block.
    RatMatrix minus_t(d, std::vector<Rational>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) minus_t[c][r] = u.rows[r][c];
    const auto combos = right_kernel(minus_t);
    std::vector<std::vector<Rational>> plus_basis;  // vectors of length n-d
    for (const auto& combo : combos) {
        std::vector<Rational> w(n - d, 0);
        for (int r = 0; r < d; ++r)
            for (int c = d; c < n; ++c) w[c - d] += combo[r] * u.rows[r][c];
        plus_basis.push_back(std::move(w));
    }

    // Functionals on the minus summand vanishing on its projection of u.
    const auto annihilators = right_kernel(first_columns(u, d));

    FiberDescription fiber;
    fiber.k = stratum_of(u);
    for (const auto& w : plus_basis)
        for (const auto& phi : annihilators) {
            RatMatrix f(d, std::vector<Rational>(n - d, 0));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < n - d; ++c) f[r][c] = phi[r] * w[c];
            fiber.basis.push_back(std::move(f));
        }
    if (static_cast<int>(fiber.basis.size()) != fiber.k * fiber.k)
        fail(Errc::RankDeficient, "fiber dimension disagrees with the stratum (bug)");
    fiber.proj_dim = fiber.k >= 1 ? static_cast<long long>(fiber.k) * fiber.k - 1 : 0;
    return fiber;
}

std::vector<PreimageRow> preimage_dim_table(int d, int n) {
    const auto strata = strata_poincare(d, n);
    std::vector<PreimageRow> table;
    for (int k = 1; k < static_cast<int>(strata.size()); ++k) {
        PreimageRow row;
        row.k = k;
        row.stratum_dim = strata[k].degree();
        row.fiber_proj_dim = static_cast<long long>(k) * k - 1;
        row.total = row.stratum_dim + row.fiber_proj_dim;
        table.push_back(row);
    }
    return table;
}

}  // namespace pospoly
