// Frozen worked examples shared by the unit and acceptance suites.
#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "crystalrig/cascading.hpp"
#include "crystalrig/rigged.hpp"
#include "crystalrig/tableau.hpp"

namespace golden {

using crystalrig::CascadingSequence;
using crystalrig::LowerSubinterval;
using crystalrig::MarginallyLargeTableau;
using crystalrig::RiggedConfiguration;
using crystalrig::RiggedPartition;
using crystalrig::RiggedString;

inline CascadingSequence seq(int rank, const std::vector<std::pair<int, int>>& runs) {
    std::vector<LowerSubinterval> ivs;
    for (auto [a, m] : runs) ivs.push_back({a, m});
    return CascadingSequence(rank, std::move(ivs));
}

inline RiggedPartition part(const std::vector<std::pair<int, int>>& strings) {
    std::vector<RiggedString> out;
    for (auto [len, rig] : strings) out.push_back({len, rig});
    return RiggedPartition(std::move(out));
}

inline RiggedConfiguration rc(int rank, const std::vector<RiggedPartition>& parts) {
    return RiggedConfiguration(rank, parts);
}

inline std::vector<int> repeat(int value, int count) {
    return std::vector<int>(count, value);
}

inline std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// ---- small rank-3 tableau with one extra 4-box -------------------------
inline MarginallyLargeTableau s_tableau() {
    return MarginallyLargeTableau(3, {{1, 1, 1, 1}, {2, 2, 2}, {3, 4}});
}

inline MarginallyLargeTableau f2_of_s() {
    return MarginallyLargeTableau(3, {{1, 1, 1, 1, 1}, {2, 2, 2, 3}, {3, 4}});
}

inline MarginallyLargeTableau e3_of_s() {
    return MarginallyLargeTableau(3, {{1, 1, 1}, {2, 2}, {3}});
}

inline MarginallyLargeTableau f3_of_s() {
    return MarginallyLargeTableau(3, {{1, 1, 1, 1, 1}, {2, 2, 2, 2}, {3, 4, 4}});
}

// ---- the 33-letter rank-5 example --------------------------------------
inline MarginallyLargeTableau big_tableau() {
    return MarginallyLargeTableau(
        5, {cat(cat(cat(repeat(1, 16), repeat(2, 3)), repeat(3, 3)), {6}),
            repeat(2, 15),
            cat(cat(cat(repeat(3, 7), {4, 4}), {5, 5}), {6, 6, 6}),
            cat(repeat(4, 5), {5}),
            {5, 6, 6, 6}});
}

inline CascadingSequence big_sequence() {
    return seq(5, {{1, 5}, {3, 5}, {3, 5}, {3, 5}, {5, 5}, {5, 5}, {5, 5},
                   {3, 4}, {3, 4}, {4, 4}, {3, 3}, {3, 3},
                   {1, 2}, {1, 2}, {1, 2}, {1, 1}, {1, 1}, {1, 1}});
}

// ---- rank-10 lane-forming examples -------------------------------------
inline CascadingSequence lanes1_sequence() {
    return seq(10, {{8, 10}, {8, 10}, {7, 9}, {7, 9}, {7, 9}, {8, 9}, {6, 8}, {7, 8}});
}

// (letter, lane number) per entry, subinterval by subinterval.  The lane of
// the final 8 is forced to 3 by the partition column profile (4,3,1) of the
// eighth partition.
inline std::vector<std::vector<std::pair<int, int>>> lanes1_assignment() {
    return {{{8, 1}, {9, 1}, {10, 1}},
            {{8, 2}, {9, 2}, {10, 2}},
            {{7, 1}, {8, 1}, {9, 1}},
            {{7, 2}, {8, 2}, {9, 2}},
            {{7, 3}, {8, 3}, {9, 3}},
            {{8, 4}, {9, 4}},
            {{6, 1}, {7, 1}, {8, 1}},
            {{7, 4}, {8, 3}}};
}

inline CascadingSequence lanes2_sequence() {
    return seq(10, {{6, 10}, {7, 10}, {7, 10}, {8, 10}, {6, 9}, {6, 9}, {7, 9},
                    {5, 8}, {5, 8}, {5, 8}, {6, 8}});
}

inline std::vector<std::vector<std::pair<int, int>>> lanes2_assignment() {
    return {{{6, 1}, {7, 1}, {8, 1}, {9, 1}, {10, 1}},
            {{7, 2}, {8, 2}, {9, 2}, {10, 2}},
            {{7, 3}, {8, 3}, {9, 3}, {10, 3}},
            {{8, 4}, {9, 4}, {10, 4}},
            {{6, 2}, {7, 1}, {8, 1}, {9, 1}},
            {{6, 3}, {7, 2}, {8, 2}, {9, 2}},
            {{7, 4}, {8, 3}, {9, 3}},
            {{5, 1}, {6, 1}, {7, 1}, {8, 1}},
            {{5, 2}, {6, 2}, {7, 2}, {8, 2}},
            {{5, 3}, {6, 3}, {7, 3}, {8, 3}},
            {{6, 4}, {7, 4}, {8, 4}}};
}

inline RiggedConfiguration lanes2_rc() {
    return rc(10, {part({}), part({}), part({}), part({}),
                   part({{3, 0}}),
                   part({{4, 0}, {3, 0}}),
                   part({{4, 0}, {4, 0}, {2, 0}}),
                   part({{4, -4}, {4, -4}, {3, -3}}),
                   part({{4, 1}, {3, 0}}),
                   part({{4, -1}})});
}

// (partition, row length) -> vacancy number, per the printed layout.
inline std::vector<std::tuple<int, int, int>> lanes2_vacancies() {
    return {{5, 3, 0}, {6, 4, -1}, {6, 3, -1}, {7, 4, -2}, {7, 2, -2},
            {8, 4, -5}, {8, 3, -4}, {9, 4, 1}, {9, 3, 0}, {10, 4, -1}};
}

// ---- sequence extraction examples --------------------------------------
inline RiggedConfiguration extraction1_rc() {
    return rc(10, {part({}), part({}), part({}), part({}),
                   part({{3, 0}}),
                   part({{4, 0}, {3, 0}}),
                   part({{4, 0}, {3, 0}, {3, 0}}),
                   part({{4, -4}, {4, -4}, {3, -3}}),
                   part({{4, 1}, {3, 0}}),
                   part({{4, -1}})});
}

inline CascadingSequence extraction1_sequence() {
    return seq(10, {{7, 10}, {7, 10}, {7, 10}, {8, 10}, {6, 9}, {6, 9}, {6, 9},
                    {5, 8}, {5, 8}, {5, 8}, {6, 8}});
}

inline RiggedConfiguration extraction2_rc() { return lanes2_rc(); }

inline CascadingSequence extraction2_sequence() { return lanes2_sequence(); }

// ---- plateau examples ---------------------------------------------------
inline CascadingSequence plateau1_sequence() {
    return seq(9, {{7, 9}, {8, 9}, {8, 9}, {9, 9}, {6, 8}, {7, 8}, {8, 8}});
}

inline CascadingSequence plateau2_sequence() {
    return seq(10, {{7, 10}, {7, 10}, {8, 10}, {8, 10}, {8, 10}, {6, 9}, {7, 9},
                    {5, 8}, {6, 8}, {6, 8}, {5, 7}});
}

// ---- box-adding examples (rank 11) --------------------------------------
inline CascadingSequence addbox_a_input() {
    return seq(11, {{8, 11}, {8, 11}, {8, 11}, {7, 10}, {7, 10}, {8, 10}, {6, 9}, {7, 9}});
}

inline CascadingSequence addbox_a_output() {  // two boxes at stretch height 1
    return seq(11, {{7, 11}, {7, 11}, {8, 11}, {6, 10}, {7, 10}, {8, 10}, {6, 9}, {6, 9}});
}

inline CascadingSequence addbox_b_input() {
    return seq(11, {{7, 11}, {8, 11}, {8, 11}, {6, 10}, {7, 10}, {8, 10}, {6, 9}, {7, 9}});
}

inline CascadingSequence addbox_b_output() {  // one box at stretch height 0
    return seq(11, {{7, 11}, {7, 11}, {8, 11}, {6, 10}, {7, 10}, {8, 10}, {6, 9}, {7, 9}});
}

inline CascadingSequence addbox_c_input() {
    return seq(11, {{8, 11}, {8, 11}, {8, 11}, {8, 11}, {7, 10}, {7, 10}, {7, 10}, {8, 10},
                    {6, 9}, {6, 9}, {6, 9}, {7, 9}, {7, 9}, {5, 8}, {6, 8}});
}

inline CascadingSequence addbox_c_stage1() {  // three boxes at stretch height 2
    return seq(11, {{7, 11}, {7, 11}, {7, 11}, {8, 11}, {6, 10}, {6, 10}, {7, 10}, {8, 10},
                    {5, 9}, {5, 9}, {6, 9}, {6, 9}, {7, 9}, {5, 8}, {5, 8}});
}

inline CascadingSequence addbox_c_stage2() {  // then one box at stretch height 1
    return seq(11, {{7, 11}, {7, 11}, {7, 11}, {8, 11}, {6, 10}, {6, 10}, {7, 10}, {7, 10},
                    {5, 9}, {5, 9}, {6, 9}, {6, 9}, {6, 9}, {5, 8}, {5, 8}});
}

// ---- a rank-5 configuration exercising every growth clause --------------
inline RiggedConfiguration growth_walkthrough_rc() {
    return rc(5, {part({{2, 0}}),
                  part({{3, 0}, {2, 0}}),
                  part({{6, -5}, {3, -3}, {2, -2}}),
                  part({{5, 0}, {2, 0}}),
                  part({{3, -1}})});
}

}  // namespace golden
