#pragma once

// Tensor midpoint quadrature over boxes. Deterministic: cells are visited
// in a fixed odometer order and partial sums are combined per first-axis
// slice, independent of the worker count.

#include "kintraj/geometry.hpp"

#include <functional>

namespace kintraj {

using BoxFn = std::function<double(const std::vector<double>&)>;

// Midpoint rule with `resolution` cells per axis (resolution >= 8).
double box_integral(const BoxFn& f, const Box& box, int resolution);

// Average of f over the box.
double box_mean(const BoxFn& f, const Box& box, int resolution);

}  // namespace kintraj
