#include "abct/symfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace abct {

SchurExpansion SchurExpansion::single(const Partition& p, Int coeff) {
    SchurExpansion e;
    e.add_term(p, coeff);
    return e;
}

void SchurExpansion::add_term(const Partition& p, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int SchurExpansion::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Int(0) : it->second;
}

bool SchurExpansion::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.size();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.size() == d; });
}

int SchurExpansion::degree() const {
    if (!is_homogeneous()) throw std::logic_error("expansion is not homogeneous");
    return terms_.empty() ? 0 : terms_.begin()->first.size();
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

SchurExpansion SchurExpansion::operator+(const SchurExpansion& o) const {
    SchurExpansion r = *this;
    r += o;
    return r;
}

SchurExpansion SchurExpansion::operator-(const SchurExpansion& o) const {
    SchurExpansion r = *this;
    r -= o;
    return r;
}

SchurExpansion SchurExpansion::operator*(const Int& c) const {
    SchurExpansion r;
    if (c == 0) return r;
    for (const auto& [p, v] : terms_) r.terms_.emplace(p, v * c);
    return r;
}

SymPoly3 SymPoly3::constant(Int c) {
    SymPoly3 p;
    p.add_term({0, 0, 0}, c);
    return p;
}

SymPoly3 SymPoly3::linear(const Int& c1, const Int& c2, const Int& c3) {
    SymPoly3 p;
    p.add_term({1, 0, 0}, c1);
    p.add_term({0, 1, 0}, c2);
    p.add_term({0, 0, 1}, c3);
    return p;
}

void SymPoly3::add_term(const Exp3& e, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int SymPoly3::coeff(const Exp3& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

bool SymPoly3::is_symmetric() const {
    for (const auto& [e, c] : terms_) {
        Exp3 t = e;
        std::sort(t.begin(), t.end());
        do {
            if (coeff(t) != c) return false;
        } while (std::next_permutation(t.begin(), t.end()));
    }
    return true;
}

SymPoly3& SymPoly3::operator+=(const SymPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPoly3& SymPoly3::operator-=(const SymPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymPoly3 SymPoly3::operator+(const SymPoly3& o) const {
    SymPoly3 r = *this;
    r += o;
    return r;
}

SymPoly3 SymPoly3::operator-(const SymPoly3& o) const {
    SymPoly3 r = *this;
    r -= o;
    return r;
}

SymPoly3 SymPoly3::operator*(const SymPoly3& o) const {
    SymPoly3 r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

SymPoly3 SymPoly3::operator*(const Int& c) const {
    SymPoly3 r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

SchurExpansion pieri_mul(const SchurExpansion& e, int m) {
    if (m < 1) throw std::invalid_argument("pieri_mul requires m >= 1");
    SchurExpansion out;
    for (const auto& [lam, c] : e.terms()) {
        const int total = lam.size() + m;
        // horizontal strip: lam1 <= mu1, mu2 in [lam2, lam1], mu3 in [lam3, lam2]
        for (int mu3 = lam[2]; mu3 <= lam[1]; ++mu3) {
            for (int mu2 = std::max(lam[1], mu3); mu2 <= lam[0]; ++mu2) {
                const int mu1 = total - mu2 - mu3;
                if (mu1 < lam[0] || mu1 < mu2) continue;
                out.add_term(Partition(mu1, mu2, mu3), c);
            }
        }
    }
    return out;
}

namespace {

// Counts LR fillings of nu/lambda with content mu by backtracking over
// cells in reverse reading order (each row right to left, top to
// bottom), which is the order in which the lattice condition on the
// reverse reading word can be checked prefix by prefix.
long lr_count_fillings(const Partition& lambda, const Partition& mu, const Partition& nu) {
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < 3; ++r)
        for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.push_back({r, c});

    std::vector<int> entry(cells.size(), 0);
    auto entry_at = [&](int r, int c) {
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].row == r && cells[i].col == c) return entry[i];
        return 0;
    };

    int counts[4] = {};
    long total = 0;
    std::function<void(size_t)> place = [&](size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[idx];
        for (int v = 1; v <= 3; ++v) {
            if (counts[v] >= mu[v - 1]) continue;                  // content
            if (v >= 2 && counts[v] + 1 > counts[v - 1]) continue; // lattice word
            if (c + 1 < nu[r] && entry_at(r, c + 1) < v) continue; // row weakly increasing
            if (r > 0 && c >= lambda[r - 1] && c < nu[r - 1] && entry_at(r - 1, c) >= v)
                continue;                                          // column strict
            entry[idx] = v;
            ++counts[v];
            place(idx + 1);
            --counts[v];
            entry[idx] = 0;
        }
    };
    place(0);
    return total;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    for (int r = 0; r < 3; ++r)
        if (nu[r] < lambda[r]) return 0;
    return Int(lr_count_fillings(lambda, mu, nu));
}

SchurExpansion schur_mul(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out;
    for (const auto& [lam, ca] : a.terms()) {
        for (const auto& [mu_raw, cb] : b.terms()) {
            // LR is symmetric in (lambda, mu); enumerate against the smaller factor
            const Partition& lam2 = lam.size() >= mu_raw.size() ? lam : mu_raw;
            const Partition& mu = lam.size() >= mu_raw.size() ? mu_raw : lam;
            const Int cc = ca * cb;
            const int msize = mu.size();
            const int total = lam2.size() + msize;
            // a row of nu gains at most |mu| boxes and row 1 at most mu1
            for (int nu2 = lam2[1]; nu2 <= std::min(lam2[0] + mu[0], lam2[1] + msize); ++nu2) {
                for (int nu3 = lam2[2]; nu3 <= std::min(nu2, lam2[2] + msize); ++nu3) {
                    const int nu1 = total - nu2 - nu3;
                    if (nu1 < nu2 || nu1 < lam2[0] || nu1 > lam2[0] + mu[0]) continue;
                    const Partition nu(nu1, nu2, nu3);
                    Int c = lr_coefficient(lam2, mu, nu);
                    if (c != 0) out.add_term(nu, c * cc);
                }
            }
        }
    }
    return out;
}

SymPoly3 to_monomial_form(const SchurExpansion& e) {
    SymPoly3 out;
    for (const auto& [lam, c] : e.terms()) {
        // Gelfand-Tsetlin patterns: lam1 >= b1 >= lam2 >= b2 >= lam3, b1 >= a1 >= b2;
        // each pattern contributes the monomial x1^a1 x2^(b1+b2-a1) x3^(|lam|-b1-b2).
        const int size = lam.size();
        for (int b1 = lam[1]; b1 <= lam[0]; ++b1) {
            for (int b2 = lam[2]; b2 <= lam[1]; ++b2) {
                for (int a1 = b2; a1 <= b1; ++a1) {
                    out.add_term({a1, b1 + b2 - a1, size - b1 - b2}, c);
                }
            }
        }
    }
    return out;
}

SchurExpansion decompose_to_schur(const SymPoly3& p) {
    SchurExpansion out;
    SymPoly3 rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().begin();
        if (lead[0] < lead[1] || lead[1] < lead[2])
            throw std::invalid_argument("decompose_to_schur: polynomial is not symmetric");
        const Partition lam(lead[0], lead[1], lead[2]);
        out.add_term(lam, c);
        rest -= to_monomial_form(SchurExpansion::single(lam, c));
    }
    return out;
}

}  // namespace abct
