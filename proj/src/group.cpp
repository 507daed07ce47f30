#include "aglab/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace aglab {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

void Group::compute_hash() {
    std::uint64_t h = static_cast<std::uint64_t>(kind_ == GroupKind::Abelian ? 1 : 2);
    h = mix(h, static_cast<std::uint64_t>(order_));
    for (int f : factors_) h = mix(h, static_cast<std::uint64_t>(f));
    for (const auto& row : table_)
        for (int v : row) h = mix(h, static_cast<std::uint64_t>(v));
    hash_ = h;
}

std::shared_ptr<const Group> Group::cyclic(int n) {
    return abelian({n});
}

std::shared_ptr<const Group> Group::abelian(std::vector<int> factors) {
    if (factors.empty()) throw std::invalid_argument("abelian group needs at least one factor");
    for (int f : factors)
        if (f < 1) throw std::invalid_argument("abelian factor sizes must be positive");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = GroupKind::Abelian;
    g->factors_ = std::move(factors);
    long long n = 1;
    for (int f : g->factors_) {
        n *= f;
        if (n > (1 << 24)) throw std::invalid_argument("group order too large");
    }
    g->order_ = static_cast<int>(n);
    g->mixed_radix_strides_.resize(g->factors_.size());
    int stride = 1;
    for (int j = static_cast<int>(g->factors_.size()) - 1; j >= 0; --j) {
        g->mixed_radix_strides_[j] = stride;
        stride *= g->factors_[j];
    }
    g->compute_hash();
    return g;
}

std::shared_ptr<const Group> Group::from_table(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table must be square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    }

    // Locate the identity, then relabel so it sits at index 0.
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table[cand][a] == a && table[a][cand] == a;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw std::invalid_argument("multiplication table has no identity");
    if (e != 0) {
        std::vector<int> perm(n);  // perm[old] = new
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::swap(perm[0], perm[e]);
        std::vector<std::vector<int>> relabeled(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                relabeled[perm[a]][perm[b]] = perm[table[a][b]];
        table = std::move(relabeled);
    }

    // Latin-square check: rows and columns are permutations.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            if (seen_row[table[a][b]] || seen_col[table[b][a]])
                throw std::invalid_argument("multiplication table is not a latin square");
            seen_row[table[a][b]] = true;
            seen_col[table[b][a]] = true;
        }
    }

    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == 0) {
                if (table[b][a] != 0)
                    throw std::invalid_argument("one-sided inverse in multiplication table");
                inverse[a] = b;
                break;
            }
        }
        if (inverse[a] < 0) throw std::invalid_argument("element without inverse");
    }

    auto check_assoc = [&](int a, int b, int c) {
        if (table[table[a][b]][c] != table[a][table[b][c]])
            throw std::invalid_argument("multiplication table is not associative");
    };
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x61676c6162ULL);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int trial = 0; trial < 200000; ++trial)
            check_assoc(pick(rng), pick(rng), pick(rng));
    }

    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = GroupKind::General;
    g->order_ = n;
    g->table_ = std::move(table);
    g->inverse_ = std::move(inverse);
    g->compute_hash();
    return g;
}

std::shared_ptr<const Group> Group::dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
    const int order = 2 * n;
    // Element (i, j) = r^i s^j with index i + n*j; s r = r^{-1} s.
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < 2; ++l) {
                    int rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
                    int ref = (j + l) % 2;
                    table[i + n * j][k + n * l] = rot + n * ref;
                }
    return from_table(std::move(table));
}

std::shared_ptr<const Group> Group::symmetric3() {
    // Permutations of {0,1,2} in lexicographic one-line order.
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];  // (a∘b)(i)
            table[a][b] = index_of(comp);
        }
    return from_table(std::move(table));
}

int Group::mul(int a, int b) const {
    if (kind_ == GroupKind::General) return table_[a][b];
    int result = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        const int s = mixed_radix_strides_[j];
        const int f = factors_[j];
        const int ca = (a / s) % f;
        const int cb = (b / s) % f;
        result += ((ca + cb) % f) * s;
    }
    return result;
}

int Group::inv(int a) const {
    if (kind_ == GroupKind::General) return inverse_[a];
    int result = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        const int s = mixed_radix_strides_[j];
        const int f = factors_[j];
        const int ca = (a / s) % f;
        result += ((f - ca) % f) * s;
    }
    return result;
}

const std::vector<int>& Group::factors() const {
    if (kind_ != GroupKind::Abelian)
        throw std::logic_error("factors() requires the abelian backend");
    return factors_;
}

std::vector<int> Group::coords(int index) const {
    const auto& fs = factors();
    std::vector<int> c(fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j)
        c[j] = (index / mixed_radix_strides_[j]) % fs[j];
    return c;
}

int Group::index_of(const std::vector<int>& coords) const {
    const auto& fs = factors();
    if (coords.size() != fs.size())
        throw std::invalid_argument("coordinate tuple has wrong length");
    int idx = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        int c = coords[j] % fs[j];
        if (c < 0) c += fs[j];
        idx += c * mixed_radix_strides_[j];
    }
    return idx;
}

int Group::word_dist(int a, int b) const {
    const auto& fs = factors();
    int d = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        const int s = mixed_radix_strides_[j];
        const int f = fs[j];
        int diff = ((a / s) % f) - ((b / s) % f);
        diff = (diff % f + f) % f;
        d += std::min(diff, f - diff);
    }
    return d;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->kind() == b->kind() && a->order() == b->order() &&
           a->content_hash() == b->content_hash();
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* where) {
    if (!same_group(a, b))
        throw std::invalid_argument(std::string(where) + ": group mismatch");
}

}  // namespace aglab
