#pragma once

#include <string>
#include <vector>

namespace ggc {

using MultiIndex = std::vector<int>;

int iso_length(const MultiIndex& a);
int weighted_degree(const MultiIndex& a, const std::vector<int>& weights);
MultiIndex unit_index(int n, int j); // j is 0-based
MultiIndex zero_index(int n);
MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
bool is_zero_index(const MultiIndex& a);
bool leq(const MultiIndex& a, const MultiIndex& b); // componentwise

// "0", "e1", "2e1+e3" (1-based)
std::string index_label(const MultiIndex& a);
// "(1,0,2)"
std::string index_tuple(const MultiIndex& a);

// all gamma with [gamma] = M, in descending lexicographic order
std::vector<MultiIndex> monomials_of_weight(const std::vector<int>& weights, int M);
// all gamma with [gamma] <= M, ordered by weight then as above
std::vector<MultiIndex> indices_up_to_weight(const std::vector<int>& weights, int M);

} // namespace ggc
