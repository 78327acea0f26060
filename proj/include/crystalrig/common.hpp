#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace crystalrig {

// Weight in simple-root coordinates; entry a-1 is the coefficient of root a.
using Weight = std::vector<int>;

// Thrown when an enumeration would exceed its configured node budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace crystalrig
