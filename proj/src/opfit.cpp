#include "cyops/opfit.hpp"

#include <algorithm>

#include "cyops/linalg.hpp"

namespace cyops {

namespace {

// Shapes sorted by (order+degree, order); degree 0 shapes are included for
// completeness but essentially never fit.
std::vector<std::pair<int, int>> shape_schedule(const FitOptions& opt) {
    std::vector<std::pair<int, int>> shapes;
    for (int n = 1; n <= opt.max_order; ++n)
        for (int r = 0; r <= opt.max_degree; ++r) shapes.emplace_back(n, r);
    std::sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
        int sa = a.first + a.second, sb = b.first + b.second;
        if (sa != sb) return sa < sb;
        return a.first < b.first;
    });
    return shapes;
}

ThetaOperator kernel_to_operator(const std::vector<Rat>& x, int n, int r) {
    std::vector<RatPoly> polys;
    polys.reserve(r + 1);
    for (int i = 0; i <= r; ++i) {
        std::vector<Rat> c(x.begin() + static_cast<long>(i) * (n + 1),
                           x.begin() + static_cast<long>(i + 1) * (n + 1));
        polys.emplace_back(std::move(c));
    }
    return ThetaOperator(std::move(polys)).canonical();
}

}  // namespace

std::optional<ThetaOperator> fit_operator(const QSeries& s, const FitOptions& opt) {
    long needed = static_cast<long>(opt.max_order + 1) * (opt.max_degree + 1) + opt.margin +
                  opt.max_degree;
    if (s.trunc() < needed)
        throw InsufficientTruncation("fit_operator: need series order >= " +
                                     std::to_string(needed));

    for (const auto& [n, r] : shape_schedule(opt)) {
        const size_t unknowns = static_cast<size_t>(n + 1) * (r + 1);
        const long equations = static_cast<long>(unknowns) + opt.margin;
        if (s.trunc() + 1 < equations) continue;

        // unknown c_{i,k} at column i*(n+1)+k; equation for order m reads
        // sum_{i,k} c_{i,k} (m-i)^k a_{m-i} = 0
        RatMatrix mat;
        mat.reserve(equations);
        for (long m = 0; m < equations; ++m) {
            std::vector<Rat> row(unknowns, Rat(0));
            for (int i = 0; i <= std::min<long>(r, m); ++i) {
                const Rat& a = s[static_cast<int>(m - i)];
                if (a == 0) continue;
                Rat pw(1);
                for (int k = 0; k <= n; ++k) {
                    row[static_cast<size_t>(i) * (n + 1) + k] = pw * a;
                    pw *= Rat(Int(m - i));
                }
            }
            mat.push_back(std::move(row));
        }
        auto kernel = rational_kernel(mat, unknowns);
        if (kernel.empty()) continue;
        if (kernel.size() > 1)
            throw AmbiguousKernel("fit_operator: kernel dimension " +
                                  std::to_string(kernel.size()) + " at shape (" +
                                  std::to_string(n) + ", " + std::to_string(r) + ")");
        ThetaOperator op = kernel_to_operator(kernel[0], n, r);
        // the kernel construction already enforces the margin; re-verify on
        // the whole available truncation
        if (!verify_annihilation(op, s, 0))
            throw Error("fit_operator: exact kernel failed full verification");
        return op;
    }
    return std::nullopt;
}

bool verify_annihilation(const ThetaOperator& op, const QSeries& s, int slack) {
    if (s.trunc() < op.degree() + slack)
        throw InsufficientTruncation("verify_annihilation: series too short");
    return apply_operator(op, s).is_zero();
}

}  // namespace cyops
