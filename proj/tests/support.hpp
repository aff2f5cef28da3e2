#pragma once

#include "xtrop/matrix.hpp"
#include "xtrop/scalar.hpp"

#include <string>

namespace testing {

inline xtrop::Scalar S(const char* lit) { return xtrop::parse_scalar(lit); }

inline xtrop::Matrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    return xtrop::Matrix::from_literals(rows);
}

// Every scalar in a small grid: -inf and each k/2 in [-2, 2], real and nu.
inline std::vector<xtrop::Scalar> small_grid() {
    std::vector<xtrop::Scalar> out{xtrop::Scalar::neg_inf()};
    for (int k = -4; k <= 4; ++k) {
        out.push_back(xtrop::Scalar::real(xtrop::Rational(k, 2)));
        out.push_back(xtrop::Scalar::nu(xtrop::Rational(k, 2)));
    }
    return out;
}

}  // namespace testing
