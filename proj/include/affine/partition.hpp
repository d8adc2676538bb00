#pragma once

#include <vector>

namespace affine {

// Weakly decreasing sequence of positive integers; the empty partition is {}.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int weight(const Partition& p);
// Membership in Par^n: all parts at most n-1.
bool in_par_n(const Partition& p, int n);
Partition transpose(const Partition& p);
// Dominance order on partitions of equal weight; throws on weight mismatch.
bool dominance_leq(const Partition& a, const Partition& b);
// All partitions of d with parts <= max_part, in descending lexicographic
// order (a linear extension of dominance, largest first).
std::vector<Partition> partitions_of(int d, int max_part);

}  // namespace affine
