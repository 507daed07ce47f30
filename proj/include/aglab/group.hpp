#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace aglab {

using cxd = std::complex<double>;

enum class GroupKind { Abelian, General };

/// A finite group, either a product of cyclic factors (abelian backend,
/// mixed-radix element encoding) or an explicit multiplication table.
///
/// Elements are integers in [0, order). For the abelian backend index i
/// encodes the coordinate tuple (s_1, ..., s_r), s_j in [0, n_j), with
/// s_r varying fastest. The identity always has index 0 (validated for
/// table-backed groups and remapped if needed at construction).
class Group {
public:
    static std::shared_ptr<const Group> cyclic(int n);
    static std::shared_ptr<const Group> abelian(std::vector<int> factors);
    /// General group from an explicit multiplication table; the table is
    /// validated (latin square, associativity, identity, inverses).
    /// Associativity is checked exhaustively for order <= 512 and by
    /// seeded sampling above that.
    static std::shared_ptr<const Group> from_table(std::vector<std::vector<int>> table);
    static std::shared_ptr<const Group> dihedral(int n);
    static std::shared_ptr<const Group> symmetric3();

    GroupKind kind() const { return kind_; }
    bool is_abelian_backend() const { return kind_ == GroupKind::Abelian; }
    int order() const { return order_; }
    int identity() const { return 0; }

    int mul(int a, int b) const;
    int inv(int a) const;

    /// Mixed-radix coordinates (abelian backend only).
    const std::vector<int>& factors() const;
    std::vector<int> coords(int index) const;
    int index_of(const std::vector<int>& coords) const;

    /// Word metric for the generator set {±e_j} on the cyclic-factor
    /// lattice: sum over coordinates of the cyclic distance.
    /// Abelian backend only.
    int word_dist(int a, int b) const;

    /// Structural identity used for "same group" preconditions.
    std::uint64_t content_hash() const { return hash_; }

    /// Dense-matrix operations refuse groups above this order.
    static constexpr int dense_limit = 2048;

private:
    Group() = default;
    void compute_hash();

    GroupKind kind_ = GroupKind::Abelian;
    int order_ = 1;
    std::vector<int> factors_;               // abelian backend
    std::vector<int> mixed_radix_strides_;   // abelian backend
    std::vector<std::vector<int>> table_;    // general backend
    std::vector<int> inverse_;               // general backend
    std::uint64_t hash_ = 0;
};

using GroupPtr = std::shared_ptr<const Group>;

bool same_group(const GroupPtr& a, const GroupPtr& b);
void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* where);

}  // namespace aglab
