#include "crystalrig/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crystalrig {

namespace {

// Checks all marginally-large conditions on raw rows; fills `why` with the
// first violation when given.
bool check_shape(int rank, const std::vector<std::vector<int>>& rows, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (rank < 1) return fail("rank must be positive");
    if (static_cast<int>(rows.size()) != rank) return fail("expected exactly " + std::to_string(rank) + " rows");
    for (int i = 0; i < rank; ++i) {
        const auto& row = rows[i];
        if (row.empty()) return fail("row " + std::to_string(i + 1) + " is empty");
        if (row.front() != i + 1)
            return fail("row " + std::to_string(i + 1) + " must start with a " + std::to_string(i + 1) + "-box");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < i + 1 || row[j] > rank + 1)
                return fail("entry out of range in row " + std::to_string(i + 1));
            if (j > 0 && row[j] < row[j - 1])
                return fail("row " + std::to_string(i + 1) + " is not weakly increasing");
        }
    }
    for (int i = 0; i + 1 < rank; ++i) {
        if (rows[i].size() < rows[i + 1].size()) return fail("row lengths must weakly decrease");
        for (std::size_t j = 0; j < rows[i + 1].size(); ++j)
            if (rows[i + 1][j] <= rows[i][j])
                return fail("column " + std::to_string(j + 1) + " is not strictly increasing");
    }
    for (int i = 0; i < rank; ++i) {
        long own = std::count(rows[i].begin(), rows[i].end(), i + 1);
        long below = i + 1 < rank ? static_cast<long>(rows[i + 1].size()) : 0;
        if (own != below + 1)
            return fail("row " + std::to_string(i + 1) + " must have exactly " + std::to_string(below + 1) +
                        " " + std::to_string(i + 1) + "-boxes");
    }
    return true;
}

// Reading word: rows top to bottom, each row right to left.
struct BoxRef {
    int row;
    int col;
};

struct Signature {
    std::vector<BoxRef> plus;   // unpaired i-boxes, word order
    std::vector<BoxRef> minus;  // unpaired (i+1)-boxes, word order
};

Signature signature(const std::vector<std::vector<int>>& rows, int i) {
    Signature sig;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = static_cast<int>(rows[r].size()) - 1; c >= 0; --c) {
            int entry = rows[r][c];
            if (entry == i) {
                sig.plus.push_back({r, c});
            } else if (entry == i + 1) {
                if (!sig.plus.empty())
                    sig.plus.pop_back();  // a '-' cancels the nearest unpaired '+' to its left
                else
                    sig.minus.push_back({r, c});
            }
        }
    return sig;
}

}  // namespace

MarginallyLargeTableau::MarginallyLargeTableau(int rank, std::vector<std::vector<int>> rows)
    : rank_(rank), rows_(std::move(rows)) {
    std::string why;
    if (!check_shape(rank_, rows_, &why)) throw std::invalid_argument("invalid tableau: " + why);
}

int MarginallyLargeTableau::box_count() const {
    int total = 0;
    for (const auto& row : rows_) total += static_cast<int>(row.size());
    return total;
}

MarginallyLargeTableau highest_weight(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    std::vector<std::vector<int>> rows(rank);
    for (int i = rank - 1; i >= 0; --i) {
        int count = i + 1 < rank ? static_cast<int>(rows[i + 1].size()) + 1 : 1;
        rows[i].assign(count, i + 1);
    }
    return MarginallyLargeTableau(rank, std::move(rows));
}

MarginallyLargeTableau apply_f(const MarginallyLargeTableau& t, int i) {
    if (i < 1 || i > t.rank()) throw std::invalid_argument("operator letter out of range");
    auto rows = t.rows();
    Signature sig = signature(rows, i);
    if (sig.plus.empty()) throw std::logic_error("f_i annihilated a marginally large tableau");
    BoxRef acted = sig.plus.front();  // leftmost unpaired '+'
    rows[acted.row][acted.col] = i + 1;
    if (!check_shape(t.rank(), rows, nullptr)) {
        // Largeness failed: the action hit the rightmost i-box of row i.
        // Insert the repair column of boxes 1..i left of the changed box.
        if (acted.row != i - 1) throw std::logic_error("repair expected in row i");
        for (int k = 0; k < i; ++k) rows[k].insert(rows[k].begin() + acted.col, k + 1);
    }
    return MarginallyLargeTableau(t.rank(), std::move(rows));
}

std::optional<MarginallyLargeTableau> apply_e(const MarginallyLargeTableau& t, int i) {
    if (i < 1 || i > t.rank()) throw std::invalid_argument("operator letter out of range");
    auto rows = t.rows();
    Signature sig = signature(rows, i);
    if (sig.minus.empty()) return std::nullopt;
    BoxRef acted = sig.minus.back();  // rightmost unpaired '-'
    rows[acted.row][acted.col] = i;
    if (!check_shape(t.rank(), rows, nullptr)) {
        // Remove the column containing the changed box; it has height i and
        // its k-th entry is a k-box.
        if (acted.row != i - 1) throw std::logic_error("column removal expected in row i");
        int c = acted.col;
        for (int k = 0; k < i; ++k) {
            if (static_cast<int>(rows[k].size()) <= c || rows[k][c] != k + 1)
                throw std::logic_error("malformed repair column");
            rows[k].erase(rows[k].begin() + c);
        }
    }
    return MarginallyLargeTableau(t.rank(), std::move(rows));
}

Weight weight(const MarginallyLargeTableau& t) {
    // Letter a occurs in the canonical f-string once per box with entry
    // greater than a in the first a rows.
    Weight w(t.rank(), 0);
    for (int a = 1; a <= t.rank(); ++a) {
        int count = 0;
        for (int r = 0; r < a; ++r)
            for (int entry : t.rows()[r])
                if (entry > a) ++count;
        w[a - 1] = -count;
    }
    return w;
}

int signature_plus(const MarginallyLargeTableau& t, int i) {
    return static_cast<int>(signature(t.rows(), i).plus.size());
}

int signature_minus(const MarginallyLargeTableau& t, int i) {
    return static_cast<int>(signature(t.rows(), i).minus.size());
}

}  // namespace crystalrig
