#include "ggc/multi_index.hpp"

#include <numeric>

namespace ggc {

int iso_length(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

int weighted_degree(const MultiIndex& a, const std::vector<int>& weights)
{
    int s = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        s += a[j] * weights[j];
    return s;
}

MultiIndex unit_index(int n, int j)
{
    MultiIndex e(n, 0);
    e[j] = 1;
    return e;
}

MultiIndex zero_index(int n) { return MultiIndex(n, 0); }

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
{
    MultiIndex c(a);
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] += b[j];
    return c;
}

bool is_zero_index(const MultiIndex& a)
{
    for (int v : a)
        if (v) return false;
    return true;
}

bool leq(const MultiIndex& a, const MultiIndex& b)
{
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

std::string index_label(const MultiIndex& a)
{
    std::string s;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (!a[j]) continue;
        if (!s.empty()) s += "+";
        if (a[j] > 1) s += std::to_string(a[j]);
        s += "e" + std::to_string(j + 1);
    }
    return s.empty() ? "0" : s;
}

std::string index_tuple(const MultiIndex& a)
{
    std::string s = "(";
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(a[j]);
    }
    return s + ")";
}

static void enumerate(const std::vector<int>& w, std::size_t j, int rest, MultiIndex& cur, std::vector<MultiIndex>& out)
{
    if (j + 1 == w.size()) {
        if (rest % w[j] == 0) {
            cur[j] = rest / w[j];
            out.push_back(cur);
        }
        return;
    }
    for (int k = rest / w[j]; k >= 0; --k) {
        cur[j] = k;
        enumerate(w, j + 1, rest - k * w[j], cur, out);
    }
    cur[j] = 0;
}

std::vector<MultiIndex> monomials_of_weight(const std::vector<int>& weights, int M)
{
    std::vector<MultiIndex> out;
    if (M < 0 || weights.empty()) return out;
    MultiIndex cur(weights.size(), 0);
    enumerate(weights, 0, M, cur, out);
    return out;
}

std::vector<MultiIndex> indices_up_to_weight(const std::vector<int>& weights, int M)
{
    std::vector<MultiIndex> out;
    for (int m = 0; m <= M; ++m) {
        auto layer = monomials_of_weight(weights, m);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace ggc
