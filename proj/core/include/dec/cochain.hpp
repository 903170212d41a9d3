#pragma once

#include <vector>

namespace dec {

/// Real values on the k-simplices of a complex, in simplex index order.
struct Cochain {
    int degree = 0;
    std::vector<double> values;

    int size() const noexcept { return static_cast<int>(values.size()); }
};

}  // namespace dec
