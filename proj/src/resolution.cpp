#include "homcx/resolution.hpp"

namespace homcx {

Resolution minimal_resolution(const Module& m, std::size_t n) {
    Resolution r{m, {}, {}, {}, {}, {}};
    const Field f = m.field();
    r.syzygies.push_back(Submodule{m, Echelon{Matrix(f, 0, 0), {}}});
    r.differentials.emplace_back(f, 0, 0);
    Module current = m;
    for (std::size_t i = 0; i <= n; ++i) {
        ProjectiveCover cover = projective_cover(current);
        r.projectives.push_back(cover.projective);
        r.betti.push_back(cover.rank);
        r.covers.push_back(cover.epi);
        if (i > 0) r.differentials.push_back(r.syzygies[i].inclusion.basis * cover.epi);
        r.syzygies.push_back(cover.kernel);
        current = cover.kernel.module;
    }
    return r;
}

bool is_minimal(const Resolution& r) {
    for (std::size_t i = 1; i <= r.length(); ++i) {
        Echelon rad = radical(r.projectives[i - 1]);
        const Matrix& d = r.differentials[i];
        if (rank(hconcat(rad.basis, d)) != rad.dim()) return false;
    }
    return true;
}

bool is_exact(const Resolution& r) {
    if (rank(r.augmentation()) != r.module.dim()) return false;
    // Exactness at P_0: image d_1 = ker of the augmentation.
    if (r.length() >= 1 &&
        rank(r.differentials[1]) + rank(r.augmentation()) != r.projectives[0].dim())
        return false;
    for (std::size_t i = 1; i < r.length(); ++i)
        if (rank(r.differentials[i]) + rank(r.differentials[i + 1]) != r.projectives[i].dim()) return false;
    return true;
}

std::size_t complexity_from_betti(const std::vector<std::size_t>& betti) {
    std::vector<long long> seq(betti.begin() + (betti.empty() ? 0 : 1), betti.end());
    std::size_t t = 0;
    auto all_zero = [](const std::vector<long long>& s) {
        for (auto v : s)
            if (v != 0) return false;
        return true;
    };
    while (!all_zero(seq)) {
        std::vector<long long> next;
        for (std::size_t i = 1; i < seq.size(); ++i) next.push_back(seq[i] - seq[i - 1]);
        seq = std::move(next);
        ++t;
    }
    return t;
}

std::size_t complexity_estimate(const Module& m, std::size_t n) {
    if (n < 4) throw ContractError("complexity_estimate needs at least 4 Betti numbers past b_0");
    return complexity_from_betti(minimal_resolution(m, n).betti);
}

}  // namespace homcx
