#include "ehscn/presets.hpp"

#include <cmath>

namespace ehscn {

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> grid(n);
    const double step = std::log10(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i)
        grid[i] = lo * std::pow(10.0, step * i);
    grid.back() = hi;
    return grid;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
    std::vector<double> grid(n);
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i)
        grid[i] = lo + step * i;
    grid.back() = hi;
    return grid;
}

} // namespace

std::vector<double> preset_grid(std::string_view name) {
    if (name == "lambda-dense")
        return log_spaced(3e-3, 3.0, 13);
    if (name == "beta-coarse")
        return lin_spaced(0.0, 1.0, 11);
    if (name == "beta-assoc")
        return lin_spaced(0.0, 0.6, 7);
    return {};
}

std::vector<std::string> preset_names() {
    return {"lambda-dense", "beta-coarse", "beta-assoc"};
}

} // namespace ehscn
