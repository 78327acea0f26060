#include "crystalrig/cascading.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crystalrig {

namespace {

void check_sequence(int rank, const std::vector<LowerSubinterval>& ivs) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    for (std::size_t k = 0; k < ivs.size(); ++k) {
        const auto& iv = ivs[k];
        if (iv.head < 1 || iv.head > iv.tail || iv.tail > rank)
            throw std::invalid_argument("subinterval " + std::to_string(k + 1) + " is out of range");
    }
    for (std::size_t k = 0; k + 1 < ivs.size(); ++k) {
        const auto& a = ivs[k];
        const auto& b = ivs[k + 1];
        if (a.tail < b.tail)
            throw std::invalid_argument("subintervals " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                                        ": tails must weakly decrease");
        if (a.tail == b.tail && a.length() < b.length())
            throw std::invalid_argument("subintervals " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                                        ": length increases within the " + std::to_string(a.tail) +
                                        "-component");
    }
}

}  // namespace

CascadingSequence::CascadingSequence(int rank) : rank_(rank) {
    check_sequence(rank, {});
}

CascadingSequence::CascadingSequence(int rank, std::vector<LowerSubinterval> subintervals)
    : rank_(rank), subintervals_(std::move(subintervals)) {
    check_sequence(rank_, subintervals_);
}

std::vector<int> CascadingSequence::letters() const {
    std::vector<int> out;
    for (const auto& iv : subintervals_)
        for (int v = iv.head; v <= iv.tail; ++v) out.push_back(v);
    return out;
}

int CascadingSequence::total_letters() const {
    int total = 0;
    for (const auto& iv : subintervals_) total += iv.length();
    return total;
}

int CascadingSequence::letter_count(int a) const {
    int total = 0;
    for (const auto& iv : subintervals_) total += iv.contains(a) ? 1 : 0;
    return total;
}

CascadingSequence CascadingSequence::parse_flat(int rank, const std::vector<int>& letters) {
    std::vector<LowerSubinterval> ivs;
    std::size_t k = 0;
    while (k < letters.size()) {
        std::size_t end = k + 1;
        while (end < letters.size() && letters[end] == letters[end - 1] + 1) ++end;
        ivs.push_back({letters[k], letters[end - 1]});
        k = end;
    }
    return CascadingSequence(rank, std::move(ivs));
}

CascadingSequence phi(const MarginallyLargeTableau& t) {
    int n = t.rank();
    std::vector<LowerSubinterval> ivs;
    for (int m = n; m >= 1; --m)
        for (int i = 1; i <= m; ++i) {
            long copies = std::count(t.rows()[i - 1].begin(), t.rows()[i - 1].end(), m + 1);
            for (long c = 0; c < copies; ++c) ivs.push_back({i, m});
        }
    return CascadingSequence(n, std::move(ivs));
}

MarginallyLargeTableau phi_inverse(const CascadingSequence& seq) {
    int n = seq.rank();
    std::vector<std::vector<int>> extras(n);
    for (const auto& iv : seq.subintervals()) extras[iv.head - 1].push_back(iv.tail + 1);
    std::vector<std::vector<int>> rows(n);
    for (int i = n - 1; i >= 0; --i) {
        int mandatory = i + 1 < n ? static_cast<int>(rows[i + 1].size()) + 1 : 1;
        rows[i].assign(mandatory, i + 1);
        std::sort(extras[i].begin(), extras[i].end());
        rows[i].insert(rows[i].end(), extras[i].begin(), extras[i].end());
    }
    return MarginallyLargeTableau(n, std::move(rows));
}

}  // namespace crystalrig
