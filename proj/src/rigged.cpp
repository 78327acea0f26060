#include "crystalrig/rigged.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crystalrig {

namespace {

void sort_strings(std::vector<RiggedString>& strings) {
    std::sort(strings.begin(), strings.end(), [](const RiggedString& a, const RiggedString& b) {
        return a.length != b.length ? a.length > b.length : a.rigging > b.rigging;
    });
}

using RawParts = std::vector<std::vector<RiggedString>>;

int raw_vacancy(const RawParts& parts, int a, int i) {
    auto contribution = [&](int b) {
        int total = 0;
        if (b >= 1 && b <= static_cast<int>(parts.size()))
            for (const RiggedString& s : parts[b - 1]) total += std::min(i, s.length);
        return total;
    };
    return -2 * contribution(a) + contribution(a - 1) + contribution(a + 1);
}

int min_rigging(const std::vector<RiggedString>& part) {
    int x = part.front().rigging;
    for (const RiggedString& s : part) x = std::min(x, s.rigging);
    return x;
}

RiggedConfiguration assemble(int rank, RawParts parts) {
    std::vector<RiggedPartition> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(RiggedPartition(std::move(p)));
    return RiggedConfiguration(rank, std::move(out));
}

// Restores every string except (skip_part, skip_index) to its recorded
// colabel after the shapes changed.
void restore_colabels(RawParts& parts, const std::vector<std::vector<int>>& colabels,
                      int skip_part, int skip_index) {
    for (int b = 0; b < static_cast<int>(parts.size()); ++b)
        for (int j = 0; j < static_cast<int>(parts[b].size()); ++j) {
            if (b == skip_part && j == skip_index) continue;
            parts[b][j].rigging = raw_vacancy(parts, b + 1, parts[b][j].length) - colabels[b][j];
        }
}

std::vector<std::vector<int>> record_colabels(const RawParts& parts) {
    std::vector<std::vector<int>> colabels(parts.size());
    for (int b = 0; b < static_cast<int>(parts.size()); ++b) {
        colabels[b].resize(parts[b].size());
        for (int j = 0; j < static_cast<int>(parts[b].size()); ++j)
            colabels[b][j] = raw_vacancy(parts, b + 1, parts[b][j].length) - parts[b][j].rigging;
    }
    return colabels;
}

RawParts raw_copy(const RiggedConfiguration& rc) {
    RawParts parts(rc.rank);
    for (int b = 0; b < rc.rank; ++b) parts[b] = rc.partitions[b].strings;
    return parts;
}

}  // namespace

RiggedPartition::RiggedPartition(std::vector<RiggedString> s) : strings(std::move(s)) {
    for (const RiggedString& str : strings)
        if (str.length < 1) throw std::invalid_argument("string lengths must be positive");
    sort_strings(strings);
}

int RiggedPartition::box_count() const {
    int total = 0;
    for (const RiggedString& s : strings) total += s.length;
    return total;
}

std::vector<int> RiggedPartition::row_lengths() const {
    std::vector<int> lengths;
    lengths.reserve(strings.size());
    for (const RiggedString& s : strings) lengths.push_back(s.length);
    return lengths;
}

RiggedConfiguration::RiggedConfiguration(int rank, std::vector<RiggedPartition> parts)
    : rank(rank), partitions(std::move(parts)) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (static_cast<int>(partitions.size()) != rank)
        throw std::invalid_argument("expected " + std::to_string(rank) + " rigged partitions");
}

RiggedConfiguration empty_rc(int rank) {
    return RiggedConfiguration(rank, std::vector<RiggedPartition>(rank));
}

int vacancy(const RiggedConfiguration& rc, int a, int i) {
    if (a < 1 || a > rc.rank) throw std::invalid_argument("partition index out of range");
    if (i < 1) throw std::invalid_argument("row length must be positive");
    auto contribution = [&](int b) {
        int total = 0;
        if (b >= 1 && b <= rc.rank)
            for (const RiggedString& s : rc.partitions[b - 1].strings) total += std::min(i, s.length);
        return total;
    };
    return -2 * contribution(a) + contribution(a - 1) + contribution(a + 1);
}

RiggedConfiguration apply_f(const RiggedConfiguration& rc, int a) {
    if (a < 1 || a > rc.rank) throw std::invalid_argument("operator letter out of range");
    RawParts parts = raw_copy(rc);
    auto colabels = record_colabels(parts);
    auto& part = parts[a - 1];
    int mutated;
    if (part.empty() || min_rigging(part) > 0) {
        part.push_back({1, -1});
        colabels[a - 1].push_back(0);  // placeholder, skipped below
        mutated = static_cast<int>(part.size()) - 1;
    } else {
        int x = min_rigging(part);
        int l = 0;
        for (const RiggedString& s : part)
            if (s.rigging == x) l = std::max(l, s.length);
        mutated = -1;
        for (int j = 0; j < static_cast<int>(part.size()); ++j)
            if (part[j].length == l && part[j].rigging == x) {
                mutated = j;
                break;
            }
        part[mutated] = {l + 1, x - 1};
    }
    restore_colabels(parts, colabels, a - 1, mutated);
    return assemble(rc.rank, std::move(parts));
}

std::optional<RiggedConfiguration> apply_e(const RiggedConfiguration& rc, int a) {
    if (a < 1 || a > rc.rank) throw std::invalid_argument("operator letter out of range");
    const auto& current = rc.partitions[a - 1].strings;
    if (current.empty()) return std::nullopt;
    RawParts parts = raw_copy(rc);
    auto colabels = record_colabels(parts);
    auto& part = parts[a - 1];
    int x = min_rigging(part);
    if (x >= 0) return std::nullopt;
    int l = 0;
    for (const RiggedString& s : part)
        if (s.rigging == x) l = l == 0 ? s.length : std::min(l, s.length);
    int mutated = -1;
    for (int j = 0; j < static_cast<int>(part.size()); ++j)
        if (part[j].length == l && part[j].rigging == x) {
            mutated = j;
            break;
        }
    if (l == 1) {
        part.erase(part.begin() + mutated);
        colabels[a - 1].erase(colabels[a - 1].begin() + mutated);
        mutated = -1;  // nothing to skip, the string is gone
    } else {
        part[mutated] = {l - 1, x + 1};
    }
    restore_colabels(parts, colabels, a - 1, mutated);
    return assemble(rc.rank, std::move(parts));
}

CrystalStats stats(const RiggedConfiguration& rc) {
    CrystalStats out;
    out.weight.assign(rc.rank, 0);
    for (int a = 1; a <= rc.rank; ++a) out.weight[a - 1] = -rc.partitions[a - 1].box_count();
    out.epsilon.assign(rc.rank, 0);
    out.phi.assign(rc.rank, 0);
    for (int a = 1; a <= rc.rank; ++a) {
        RiggedConfiguration cursor = rc;
        int count = 0;
        while (auto up = apply_e(cursor, a)) {
            cursor = std::move(*up);
            ++count;
        }
        out.epsilon[a - 1] = count;
        int pairing = 2 * out.weight[a - 1];
        if (a > 1) pairing -= out.weight[a - 2];
        if (a < rc.rank) pairing -= out.weight[a];
        out.phi[a - 1] = count + pairing;
    }
    return out;
}

}  // namespace crystalrig
