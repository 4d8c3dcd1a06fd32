#include "kintraj/quadrature.hpp"

#include "kintraj/parallel.hpp"

#include <stdexcept>

namespace kintraj {

double box_integral(const BoxFn& f, const Box& box, int resolution) {
    if (resolution < 8) throw std::invalid_argument("box_integral: resolution must be >= 8");
    const std::size_t d = box.dims();
    if (d == 0) throw std::invalid_argument("box_integral: empty box");

    std::vector<double> step(d), origin(d);
    double cell = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
        step[i] = (box.axes[i].second - box.axes[i].first) / resolution;
        origin[i] = box.axes[i].first + 0.5 * step[i];
        cell *= step[i];
    }

    // One chunk per first-axis slice; inner loop in odometer order.
    const double total = map_reduce_chunks<double>(
        static_cast<std::size_t>(resolution), 0.0,
        [&](std::size_t slice) {
            std::vector<double> pt(d);
            std::vector<int> idx(d, 0);
            pt[0] = origin[0] + step[0] * double(slice);
            for (std::size_t i = 1; i < d; ++i) pt[i] = origin[i];
            double acc = 0.0;
            while (true) {
                acc += f(pt);
                std::size_t axis = d - 1;
                while (true) {
                    if (axis == 0) return acc;  // slice exhausted
                    if (++idx[axis] < resolution) {
                        pt[axis] = origin[axis] + step[axis] * idx[axis];
                        break;
                    }
                    idx[axis] = 0;
                    pt[axis] = origin[axis];
                    --axis;
                }
            }
        },
        [](double acc, double part) { return acc + part; });
    return total * cell;
}

double box_mean(const BoxFn& f, const Box& box, int resolution) {
    return box_integral(f, box, resolution) / box.volume();
}

}  // namespace kintraj
