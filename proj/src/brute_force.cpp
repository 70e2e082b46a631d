#include <algorithm>

#include "hyperspec/coloring.hpp"
#include "hyperspec/error.hpp"

namespace hyperspec {

int brute_force_chromatic(const OrientedHypergraph& h, const ColoringMode& mode)
{
    check_mode_applicable(h, mode);
    const Target target = target_of(mode);
    const std::size_t n = target == Target::Vertex ? h.num_vertices() : h.num_edges();
    if (n > kBruteForceItemCap)
        throw DomainError("brute_force_chromatic: " + std::to_string(n) + " items exceed the cap of "
                          + std::to_string(kBruteForceItemCap));
    if (n == 0)
        return 0;

    // Assignments are enumerated up to renaming of colors (restricted growth strings):
    // labels[i] <= 1 + max(labels[0..i-1]) and at most k distinct labels.
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        std::vector<int> labels(n, 0);
        std::vector<int> prefix_max(n, 0);
        while (true) {
            for (std::size_t i = 1; i < n; ++i)
                prefix_max[i] = std::max(prefix_max[i - 1], labels[i - 1]);
            if (is_valid(h, Coloring::normalized(target, labels), mode))
                return k;
            // Advance to the next restricted growth string with values < k.
            std::size_t i = n;
            while (i-- > 1) {
                const int cap = std::min(k - 1, prefix_max[i] + 1);
                if (labels[i] < cap) {
                    ++labels[i];
                    std::fill(labels.begin() + static_cast<std::ptrdiff_t>(i) + 1, labels.end(), 0);
                    break;
                }
            }
            if (i == 0)
                break;
        }
    }
    return static_cast<int>(n);
}

} // namespace hyperspec
