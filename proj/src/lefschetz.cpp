#include "homcx/lefschetz.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace homcx {

LefschetzModel::LefschetzModel(Field field, int d, int m) : field_(field), d_(d), m_(m) {
    if (d < 1 || d > 20) throw ContractError("exterior model rank must lie in [1, 20]");
    if (m < 1 || m % 2 == 0) throw ContractError("degree weight must be odd and positive");
    grades_.resize(d + 1);
    index_.resize(std::size_t{1} << d);
    for (std::uint32_t s = 0; s < (1u << d); ++s) {
        auto& g = grades_[std::popcount(s)];
        index_[s] = g.size();
        g.push_back(s);
    }
}

const std::vector<std::uint32_t>& LefschetzModel::grade(int t) const {
    if (t < 0 || t > d_) throw ContractError("grade out of range");
    return grades_[t];
}

std::size_t LefschetzModel::index(std::uint32_t mask) const { return index_.at(mask); }

ExteriorElement ExteriorElement::generator(int j) {
    if (j < 1 || j > 32) throw ContractError("generator index out of range");
    return {1, {{1u << (j - 1), 1}}};
}

ExteriorElement ExteriorElement::pair_sum(int pairs) {
    ExteriorElement w{2, {}};
    for (int k = 0; k < pairs; ++k) w.terms[(1u << (2 * k)) | (1u << (2 * k + 1))] = 1;
    return w;
}

int wedge_sign(std::uint32_t s, std::uint32_t t) {
    if (s & t) return 0;
    int inversions = 0;
    for (std::uint32_t rest = t; rest; rest &= rest - 1) {
        std::uint32_t b = rest & -rest;
        // elements of s above b
        inversions += std::popcount(s & ~((b << 1) - 1));
    }
    return inversions % 2 ? -1 : 1;
}

ExteriorElement multiply(const Field& f, const ExteriorElement& a, const ExteriorElement& b) {
    ExteriorElement out{a.grade + b.grade, {}};
    for (const auto& [s, cs] : a.terms)
        for (const auto& [t, ct] : b.terms) {
            int sg = wedge_sign(s, t);
            if (sg == 0) continue;
            Elem v = f.mul(cs, ct);
            if (sg < 0) v = f.neg(v);
            Elem& slot = out.terms[s | t];
            slot = f.add(slot, v);
        }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

ExteriorElement add(const Field& f, const ExteriorElement& a, const ExteriorElement& b) {
    if (a.grade != b.grade) throw ContractError("sum of exterior elements of different grades");
    ExteriorElement out = a;
    for (const auto& [t, c] : b.terms) {
        Elem& slot = out.terms[t];
        slot = f.add(slot, c);
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Matrix multiplication_matrix(const LefschetzModel& model, const ExteriorElement& u, int t) {
    const Field& f = model.field();
    const int target = t + u.grade;
    Matrix m(f, model.grade_dim(target), model.grade_dim(t));
    if (m.empty()) return m;
    const std::uint32_t full = (model.rank() == 32) ? ~0u : ((1u << model.rank()) - 1);
    for (const auto& [s, c] : u.terms) {
        if ((s & ~full) || std::popcount(s) != u.grade)
            throw ContractError("exterior element does not fit the model");
        const auto& src = model.grade(t);
        for (std::size_t col = 0; col < src.size(); ++col) {
            int sg = wedge_sign(s, src[col]);
            if (sg == 0) continue;
            std::size_t row = model.index(s | src[col]);
            m(row, col) = f.add(m(row, col), sg < 0 ? f.neg(c) : c);
        }
    }
    return m;
}

Matrix w_matrix(const LefschetzModel& model, int t) {
    if (model.rank() < 8) throw ContractError("the Lefschetz element needs at least 8 generators");
    return multiplication_matrix(model, ExteriorElement::pair_sum(4), t);
}

ProfileResult verify_lefschetz_profile(const LefschetzModel& model) {
    ProfileResult r;
    for (int t = 0; t <= 6; ++t) {
        std::size_t rk = rank(w_matrix(model, t));
        r.ranks.push_back(rk);
        bool good = true;
        if (t <= 3 && rk != model.grade_dim(t)) good = false;
        if (t >= 3 && rk != model.grade_dim(t + 2)) good = false;
        if (!good && r.ok) {
            r.ok = false;
            r.failing_grade = t;
        }
    }
    return r;
}

std::map<long long, long long> ConeDimensionTable::concrete(long long m) const {
    std::map<long long, long long> out;
    for (const auto& [key, v] : entries)
        if (v != 0) out[key.first * m + key.second] += v;
    return out;
}

ConeDimensionTable cone_oracle(const LefschetzModel& model, const ExteriorElement& u, long long unit) {
    if (u.grade % 2 != 0) throw ContractError("cone oracle needs an element of even grade");
    if (u.grade < 0) throw ContractError("negative grade");
    const int d = model.rank(), g = u.grade;
    ConeDimensionTable table;
    table.rank = d;
    table.bound = (1LL << d) * unit;
    std::vector<std::size_t> ranks(d + 1, 0);
    for (int t = 0; t <= d; ++t) ranks[t] = rank(multiplication_matrix(model, u, t));
    for (int t = 0; t <= d; ++t) {
        long long incoming = (t - g >= 0) ? static_cast<long long>(ranks[t - g]) : 0;
        long long coker = static_cast<long long>(model.grade_dim(t)) - incoming;
        long long ker = static_cast<long long>(model.grade_dim(t)) - static_cast<long long>(ranks[t]);
        if (coker) table.entries[{t, 0}] += coker * unit;
        if (ker) table.entries[{t + g, 1}] += ker * unit;
    }
    for (const auto& [k, v] : table.entries) table.total += v;
    return table;
}

ConeDimensionTable cone_dimensions(const LefschetzModel& model, long long unit) {
    if (model.rank() < 8) throw ContractError("cone_dimensions needs a model of rank at least 8");
    return cone_oracle(model, ExteriorElement::pair_sum(4), unit);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ConeDimensionTable hypercube_table(int d, long long unit) {
    if (d < 0) throw ContractError("negative rank");
    ConeDimensionTable t;
    t.rank = d;
    t.bound = (1LL << d) * unit;
    for (int k = 0; k <= d; ++k) t.entries[{k, 0}] = binomial(d, k) * unit;
    t.total = (1LL << d) * unit;
    return t;
}

ConeDimensionTable kunneth(const ConeDimensionTable& a, const ConeDimensionTable& b) {
    ConeDimensionTable out;
    out.rank = a.rank + b.rank;
    out.bound = a.bound * b.bound;
    for (const auto& [ka, va] : a.entries)
        for (const auto& [kb, vb] : b.entries) {
            out.entries[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
        }
    for (const auto& [k, v] : out.entries) out.total += v;
    return out;
}

ConeDimensionTable d_table(const Field& field, int d, long long unit) {
    if (d < 8) throw ContractError("rank below 8 has no Lefschetz element");
    if (d > 40) throw ContractError("rank above 40 overflows the integer tables");
    return kunneth(cone_dimensions(LefschetzModel(field, 8), unit), hypercube_table(d - 8));
}

long long total_with_tail(int d) {
    if (d < 8) throw ContractError("total_with_tail needs d >= 8, got " + std::to_string(d));
    if (d > 40) throw ContractError("rank above 40 overflows the integer tables");
    static const long long base = cone_dimensions(LefschetzModel(Field(3), 8)).total;
    const long long total = base << (d - 8);
    if (total != (1LL << d) - (1LL << (d - 6)) || total >= (1LL << d))
        throw std::logic_error("cone total disagrees with 2^d - 2^(d-6)");
    return total;
}

}  // namespace homcx
