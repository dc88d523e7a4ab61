#pragma once

#include <map>
#include <string>
#include <vector>

namespace spechtstab {

/// Integer partition: weakly decreasing sequence of positive parts.
/// Immutable value type with structural equality; the empty sequence is the
/// unique partition of 0. Partitions index Specht and simple modules and
/// double as cycle types, so they are used as map keys everywhere.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Single-row partition (n); the empty partition for n == 0.
    static Partition row(int n);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-indexed, 0 beyond the last row.
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    Partition conjugate() const;

    /// Cellwise containment mu <= this.
    bool contains(const Partition& mu) const;

    bool operator==(const Partition&) const = default;

    /// Human format: "4,1"; "()" for the empty partition.
    std::string to_string() const;

    /// Accepts "4,1", "[4,1]", "(4,1)", "()", "[]" and "".
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical total order: by size, then reverse-lexicographic on parts,
/// so within one size (n) comes first and (1,...,1) last. This is a linear
/// extension of the dominance order (larger in dominance sorts earlier).
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

/// Integer linear combination of partitions (finite support, no zeros kept
/// by the code that builds these).
using CoeffMap = std::map<Partition, long long, CanonicalLess>;

/// Dominance order on partitions of equal size: mu >= lambda iff every
/// prefix sum of mu is >= the corresponding prefix sum of lambda.
/// Throws size-mismatch for |mu| != |lambda|.
bool dominates(const Partition& mu, const Partition& lambda);

/// Dominance of padded realizations: pad(a,N) >= pad(b,N), which is
/// independent of N once both are realizable. Works across sizes.
bool stable_dominates(const Partition& a, const Partition& b);

/// True iff no part value occurs p or more times. p == 0 (characteristic 0)
/// counts every partition as regular.
bool is_p_regular(const Partition& lambda, long long p);

/// Least n at which lambda[n] exists: |lambda| + lambda_1.
int min_pad_level(const Partition& lambda);

/// lambda[n] = (n - |lambda|, lambda_1, ..., lambda_l).
/// Throws level-too-small when n < |lambda| + lambda_1.
Partition pad(const Partition& lambda, int n);

/// All mu <= lambda such that lambda/mu is a horizontal strip (at most one
/// cell per column); equivalently lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
/// Includes lambda itself. Returned in canonical order.
std::vector<Partition> horizontal_strip_removals(const Partition& lambda);

/// n! / (product of hook lengths); the number of standard Young tableaux of
/// shape lambda and the characteristic-0 dimension of the Specht module.
/// Throws size-limit for |lambda| > 20 (beyond exact 64-bit range).
long long hook_dimension(const Partition& lambda);

/// All partitions of n in canonical order.
std::vector<Partition> partitions_of(int n);

long long binomial(int n, int k);
long long factorial(int n);

/// A stable symbol lambda together with a level n >= |lambda| + lambda_1.
struct PaddedPartition {
    Partition stable_part;
    int level = 0;

    Partition realize() const { return pad(stable_part, level); }
};

} // namespace spechtstab
