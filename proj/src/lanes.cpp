#include "crystalrig/lanes.hpp"

#include <stdexcept>
#include <string>

namespace crystalrig {

int LaneDecomposition::lane_count(int letter) const {
    if (letter < 1 || letter > rank_) return 0;
    return static_cast<int>(by_letter_[letter - 1].size());
}

const Lane& LaneDecomposition::lane(int letter, int number) const {
    if (number < 1 || number > lane_count(letter)) throw std::invalid_argument("no such lane");
    return by_letter_[letter - 1][number - 1];
}

int LaneDecomposition::lane_length(int letter, int number) const {
    if (number < 1 || number > lane_count(letter)) return 0;
    return by_letter_[letter - 1][number - 1].length();
}

std::vector<int> LaneDecomposition::lane_lengths(int letter) const {
    std::vector<int> lengths;
    if (letter >= 1 && letter <= rank_)
        for (const Lane& l : by_letter_[letter - 1]) lengths.push_back(l.length());
    return lengths;
}

LaneDecomposition form_lanes(const CascadingSequence& seq) {
    LaneDecomposition dec(seq.rank());
    const auto& ivs = seq.subintervals();
    for (int b = 0; b < static_cast<int>(ivs.size()); ++b) {
        int prev_d = 0;
        for (int k = 0; k < ivs[b].length(); ++k) {
            int v = ivs[b].head + k;
            auto& lanes = dec.lanes_for(v);
            int d;
            if (k == 0) {
                d = static_cast<int>(lanes.size());  // heads always open a new lane
            } else {
                d = 0;
                for (int cand = prev_d; cand >= 1; --cand) {
                    int len = cand <= static_cast<int>(lanes.size()) ? lanes[cand - 1].length() : 0;
                    int next = cand < static_cast<int>(lanes.size()) ? lanes[cand].length() : 0;
                    if (len > next) {
                        d = cand;
                        break;
                    }
                }
            }
            if (static_cast<int>(lanes.size()) < d + 1) lanes.resize(d + 1);
            lanes[d].entries.push_back({b, k});
            prev_d = d;
        }
    }
    // Lane lengths per letter must form a partition column profile.
    for (int v = 1; v <= seq.rank(); ++v) {
        const auto& lanes = dec.lanes_for(v);
        for (std::size_t i = 0; i + 1 < lanes.size(); ++i)
            if (lanes[i].length() < lanes[i + 1].length())
                throw std::logic_error("lane lengths not nonincreasing for letter " + std::to_string(v));
    }
    return dec;
}

bool ends_at_right_endpoint(const CascadingSequence& seq, const Lane& lane) {
    if (lane.entries.empty()) return false;
    const LaneEntry& last = lane.entries.back();
    return last.position == seq.subintervals()[last.subinterval].length() - 1;
}

LanePosition locate_entry(const CascadingSequence& seq, const LaneDecomposition& dec,
                          int subinterval, int position) {
    const auto& ivs = seq.subintervals();
    if (subinterval < 0 || subinterval >= static_cast<int>(ivs.size()) || position < 0 ||
        position >= ivs[subinterval].length())
        throw std::invalid_argument("entry reference out of range");
    int letter = ivs[subinterval].head + position;
    const auto& lanes = dec.lanes_for(letter);
    for (int i = 0; i < static_cast<int>(lanes.size()); ++i)
        for (int v = 0; v < lanes[i].length(); ++v)
            if (lanes[i].entries[v] == LaneEntry{subinterval, position}) return {i + 1, v + 1};
    throw std::logic_error("entry missing from its lane decomposition");
}

int right_endpoint_count(const CascadingSequence& seq, const LaneDecomposition& dec,
                         int letter, int max_lane) {
    if (letter < 1 || letter > seq.rank()) return 0;
    int count = 0;
    int top = std::min(max_lane, dec.lane_count(letter));
    for (int i = 1; i <= top; ++i)
        if (ends_at_right_endpoint(seq, dec.lane(letter, i))) ++count;
    return count;
}

int lane_count_of_length(const LaneDecomposition& dec, int letter, int b) {
    int count = 0;
    for (int len : dec.lane_lengths(letter))
        if (len == b) ++count;
    return count;
}

std::string dump_lanes(const CascadingSequence& seq, const LaneDecomposition& dec) {
    std::string out;
    for (int b = 0; b < seq.size(); ++b) {
        out += "(";
        for (int k = 0; k < seq.subintervals()[b].length(); ++k) {
            if (k) out += ",";
            out += std::to_string(seq.subintervals()[b].head + k);
            out += "^";
            out += std::to_string(locate_entry(seq, dec, b, k).lane_number);
        }
        out += ")";
    }
    return out;
}

}  // namespace crystalrig
