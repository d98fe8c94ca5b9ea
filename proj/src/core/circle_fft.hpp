#pragma once

#include <span>
#include <vector>

#include "core/types.hpp"

namespace gh::detail {

bool is_power_of_two(std::size_t n);

/// X_j = (1/N) sum_n x_n exp(-2 pi i j n / N), computed with FFTW.
std::vector<Complex> normalized_forward_dft(std::span<const Complex> x);

}  // namespace gh::detail
