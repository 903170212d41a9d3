#include "dec/circumcentric_dual.hpp"

#include "dec/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>

namespace dec {

int DualComplex::piece_count(int k, int i) const
{
    const auto& off = piece_offsets_[at(k)];
    return off[at(i) + 1] - off[at(i)];
}

std::span<const int> DualComplex::piece(int k, int i, int p) const
{
    const std::size_t len = static_cast<std::size_t>(dim_ - k + 1);
    const std::size_t start =
        (static_cast<std::size_t>(piece_offsets_[at(k)][at(i)]) + static_cast<std::size_t>(p)) * len;
    return std::span<const int>(piece_chains_[at(k)]).subspan(start, len);
}

std::vector<Point> DualComplex::piece_points(int k, int i, int p) const
{
    const auto chain = piece(k, i, p);
    std::vector<Point> pts;
    pts.reserve(chain.size());
    for (std::size_t j = 0; j < chain.size(); ++j)
        pts.push_back(circumcenter(k + static_cast<int>(j), chain[j]));
    return pts;
}

WellCenteredness is_well_centered(const SimplicialComplex& complex)
{
    WellCenteredness out;
    for (int k = 1; k <= complex.dim(); ++k) {
        for (int i = 0; i < complex.count(k); ++i) {
            bool good = true;
            try {
                const auto bary = circumcenter_barycentric(complex.points(complex.simplex(k, i)));
                good = std::all_of(bary.begin(), bary.end(),
                                   [](double b) { return b > kWellCenteredTolerance; });
            } catch (const InvalidArgument&) {
                good = false;
            }
            if (!good) {
                out.ok = false;
                out.offenders.push_back({k, i});
            }
        }
    }
    return out;
}

DualComplex build_dual(const SimplicialComplex& complex)
{
    if (const auto wc = is_well_centered(complex); !wc.ok)
        throw MeshError(fmt::format("build_dual: mesh is not well-centered ({} offending simplices, "
                                    "first is dimension {} index {})",
                                    wc.offenders.size(), wc.offenders[0].dim,
                                    wc.offenders[0].index));

    const int n = complex.dim();
    const auto nk = static_cast<std::size_t>(n) + 1;
    DualComplex d;
    d.dim_ = n;
    d.circumcenters_.resize(nk);
    d.primal_volume_.resize(nk);
    d.dual_volume_.resize(nk);
    d.ratio_a_.resize(nk);
    d.ratio_b_.resize(nk);
    d.piece_offsets_.resize(nk);
    d.piece_chains_.resize(nk);

    for (int k = 0; k <= n; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        d.circumcenters_[kk].reserve(static_cast<std::size_t>(complex.count(k)));
        d.primal_volume_[kk].reserve(static_cast<std::size_t>(complex.count(k)));
        for (const auto& s : complex.simplices(k)) {
            const auto pts = complex.points(s);
            d.circumcenters_[kk].push_back(circumcenter(pts));
            d.primal_volume_[kk].push_back(dec::primal_volume(pts));
        }
    }

    // Every chain σ_k ⊂ … ⊂ σ_n corresponds to exactly one ordered sequence of
    // vertex removals from σ_n, so the descent below visits each piece once.
    struct Piece {
        int owner;
        std::vector<int> chain;
    };
    std::vector<std::vector<Piece>> pieces(nk);
    std::function<void(const Simplex&, std::vector<int>&)> descend =
        [&](const Simplex& s, std::vector<int>& chain) {
            const int k = s.dim();
            pieces[static_cast<std::size_t>(k)].push_back({chain.front(), chain});
            if (k == 0)
                return;
            for (int j = 0; j <= k; ++j) {
                const Simplex f = s.face(j);
                chain.insert(chain.begin(), complex.index_of(f));
                descend(f, chain);
                chain.erase(chain.begin());
            }
        };
    for (int t = 0; t < complex.count(n); ++t) {
        std::vector<int> chain{t};
        descend(complex.simplex(n, t), chain);
    }

    for (int k = 0; k <= n; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        auto& list = pieces[kk];
        std::stable_sort(list.begin(), list.end(),
                         [](const Piece& a, const Piece& b) { return a.owner < b.owner; });
        const int count = complex.count(k);
        d.piece_offsets_[kk].assign(static_cast<std::size_t>(count) + 1, 0);
        for (const auto& p : list) {
            ++d.piece_offsets_[kk][static_cast<std::size_t>(p.owner) + 1];
            d.piece_chains_[kk].insert(d.piece_chains_[kk].end(), p.chain.begin(), p.chain.end());
        }
        for (int i = 0; i < count; ++i)
            d.piece_offsets_[kk][static_cast<std::size_t>(i) + 1] += d.piece_offsets_[kk][static_cast<std::size_t>(i)];

        d.dual_volume_[kk].assign(static_cast<std::size_t>(count), 0.0);
        for (int i = 0; i < count; ++i)
            for (int p = 0; p < d.piece_count(k, i); ++p)
                d.dual_volume_[kk][static_cast<std::size_t>(i)] += dec::primal_volume(d.piece_points(k, i, p));

        d.ratio_a_[kk].resize(static_cast<std::size_t>(count));
        d.ratio_b_[kk].resize(static_cast<std::size_t>(count));
        for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
            d.ratio_a_[kk][i] = d.dual_volume_[kk][i] / d.primal_volume_[kk][i];
            d.ratio_b_[kk][i] = d.primal_volume_[kk][i] / d.dual_volume_[kk][i];
        }
    }

    for (double v : d.primal_volume_[static_cast<std::size_t>(n)])
        d.domain_volume_ += v;
    return d;
}

std::vector<Point> flag_points(const DualComplex& dual, std::span<const int> flag)
{
    std::vector<Point> pts;
    pts.reserve(flag.size());
    for (std::size_t j = 0; j < flag.size(); ++j)
        pts.push_back(dual.circumcenter(static_cast<int>(j), flag[j]));
    return pts;
}

std::vector<DiamondCell> diamond_cells(const SimplicialComplex& complex, const DualComplex& dual,
                                       int k)
{
    const int n = complex.dim();
    if (k < 0 || k > n)
        throw InvalidArgument("diamond_cells: degree out of range");

    std::vector<DiamondCell> cells;
    cells.reserve(static_cast<std::size_t>(complex.count(k)));
    for (int i = 0; i < complex.count(k); ++i) {
        DiamondCell cell;
        cell.owner = complex.simplex(k, i);
        cell.index = i;

        // Lower chains σ_0 ⊂ … ⊂ σ_{k-1} ⊂ σ.
        std::vector<std::vector<int>> lower;
        std::function<void(const Simplex&, std::vector<int>&)> descend =
            [&](const Simplex& s, std::vector<int>& chain) {
                if (s.dim() == 0) {
                    lower.push_back(chain);
                    return;
                }
                for (int j = 0; j <= s.dim(); ++j) {
                    const Simplex f = s.face(j);
                    chain.insert(chain.begin(), complex.index_of(f));
                    descend(f, chain);
                    chain.erase(chain.begin());
                }
            };
        std::vector<int> start{i};
        descend(cell.owner, start);

        for (const auto& low : lower) {
            for (int p = 0; p < dual.piece_count(k, i); ++p) {
                const auto upper = dual.piece(k, i, p);
                std::vector<int> flag(low.begin(), low.end());
                flag.insert(flag.end(), upper.begin() + 1, upper.end());
                cell.volume += dec::primal_volume(flag_points(dual, flag));
                cell.flags.push_back(std::move(flag));
            }
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

CentroidCheck check_centroid_condition(const SimplicialComplex& complex, const DualComplex& dual,
                                       int k, double tol)
{
    const int n = complex.dim();
    if (k < 0 || k > n)
        throw InvalidArgument("check_centroid_condition: degree out of range");

    CentroidCheck out;
    for (int i = 0; i < complex.count(k); ++i) {
        if (complex.is_boundary(k, i))
            continue;
        const Point primal = vertex_centroid(complex.points(complex.simplex(k, i)));
        Point weighted(static_cast<std::size_t>(n), 0.0);
        double total = 0.0;
        for (int p = 0; p < dual.piece_count(k, i); ++p) {
            const auto pts = dual.piece_points(k, i, p);
            const double w = dec::primal_volume(pts);
            const Point c = vertex_centroid(pts);
            for (std::size_t a = 0; a < weighted.size(); ++a)
                weighted[a] += w * c[a];
            total += w;
        }
        for (double& x : weighted)
            x /= total;
        out.max_deviation = std::max(out.max_deviation, distance(primal, weighted));
        ++out.checked;
    }
    out.ok = out.max_deviation <= tol;
    return out;
}

}  // namespace dec
