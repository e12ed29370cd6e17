#include "ccm/crystal_algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace ccm {

namespace {

constexpr HalfInt kHalf = HalfInt::from_twice(1);

std::vector<HalfInt> path_of(std::span<const HalfInt> weights) {
    std::vector<HalfInt> path;
    path.reserve(weights.size());
    Sl2State acc{kHalf, weights[0]};
    path.push_back(acc.j);
    for (std::size_t i = 1; i < weights.size(); ++i) {
        acc = tensor_pair(acc, Sl2State{kHalf, weights[i]});
        path.push_back(acc.j);
    }
    return path;
}

// Component paths of the n-fold product in first-appearance order over the
// 2^n weight sequences, enumerated with +1/2 before -1/2.
const std::vector<std::vector<HalfInt>>& component_paths(int n) {
    static const std::array<std::vector<std::vector<HalfInt>>, 3> tables = [] {
        std::array<std::vector<std::vector<HalfInt>>, 3> t;
        for (int n = 1; n <= 3; ++n) {
            std::vector<std::vector<HalfInt>> order;
            for (int bits = 0; bits < (1 << n); ++bits) {
                std::vector<HalfInt> w;
                for (int i = n - 1; i >= 0; --i)
                    w.push_back(HalfInt::from_twice((bits >> i) & 1 ? -1 : 1));
                auto p = path_of(w);
                if (std::find(order.begin(), order.end(), p) == order.end())
                    order.push_back(std::move(p));
            }
            t[n - 1] = std::move(order);
        }
        return t;
    }();
    return tables.at(n - 1);
}

// (j_h, j_v, h component, v component) -> multiplicity label, per factor count.
const std::map<std::array<int, 4>, int>& mult_table(int n) {
    static const std::array<std::map<std::array<int, 4>, int>, 3> tables = [] {
        std::array<std::map<std::array<int, 4>, int>, 3> t;
        for (int n = 1; n <= 3; ++n) {
            // every (h component, v component) pair realized, grouped by (j_h, j_v)
            std::map<std::pair<int, int>, std::set<std::pair<int, int>>> pairs;
            const auto& comps = component_paths(n);
            for (std::size_t h = 0; h < comps.size(); ++h)
                for (std::size_t v = 0; v < comps.size(); ++v)
                    pairs[{comps[h].back().twice, comps[v].back().twice}].insert(
                        {static_cast<int>(h), static_cast<int>(v)});
            std::map<std::array<int, 4>, int> table;
            for (const auto& [jj, copies] : pairs) {
                int mult = 0;
                for (const auto& [h, v] : copies) // std::set iterates in lexicographic order
                    table[{jj.first, jj.second, h, v}] = ++mult;
            }
            t[n - 1] = std::move(table);
        }
        return t;
    }();
    return tables.at(n - 1);
}

} // namespace

FoldResult fold_fundamental(std::span<const HalfInt> weights) {
    if (weights.empty()) throw std::invalid_argument("fold_fundamental: empty factor list");
    for (const HalfInt& m : weights)
        if (m.abs() != kHalf)
            throw std::invalid_argument("fold_fundamental: factor is not a fundamental weight");
    auto path = path_of(weights);
    HalfInt m = weights[0];
    for (std::size_t i = 1; i < weights.size(); ++i) m = m + weights[i];
    return FoldResult{Sl2State{path.back(), m}, std::move(path)};
}

int component_index(std::span<const HalfInt> path) {
    const auto& comps = component_paths(static_cast<int>(path.size()));
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (std::equal(comps[i].begin(), comps[i].end(), path.begin(), path.end()))
            return static_cast<int>(i);
    throw std::invalid_argument("component_index: unknown component path");
}

CrystalState product_state(std::span<const DoubledWeight> factors) {
    const int n = static_cast<int>(factors.size());
    if (n < 1 || n > 3) throw std::invalid_argument("product_state: expected 1 to 3 factors");

    std::vector<HalfInt> hw, vw;
    for (const DoubledWeight& f : factors) {
        hw.push_back(f.m_h);
        vw.push_back(f.m_v);
    }
    const FoldResult h = fold_fundamental(hw);
    const FoldResult v = fold_fundamental(vw);
    const int hc = component_index(h.path);
    const int vc = component_index(v.path);
    const int mult = mult_table(n).at({h.state.j.twice, v.state.j.twice, hc, vc});
    return CrystalState{IrrepLabel{h.state.j, v.state.j, mult}, h.state.m, v.state.m};
}

} // namespace ccm
