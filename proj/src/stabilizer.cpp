#include "qecstab/stabilizer.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace qecstab {

using gf2::BitMatrix;
using gf2::BitVector;

namespace {

BitMatrix stack_check(const CheckMatrix& c) { // [hx | hz]
    return BitMatrix::hconcat(c.hx, c.hz);
}

BitMatrix twist_check(const CheckMatrix& c) { // [hz | hx]
    return BitMatrix::hconcat(c.hz, c.hx);
}

// Saturating C(n,w) * 3^w for enumeration budget checks.
std::size_t level_count(std::size_t n, std::size_t w, std::size_t cap) {
    long double c = 1.0L;
    for (std::size_t i = 0; i < w; ++i)
        c = c * static_cast<long double>(n - i) / static_cast<long double>(i + 1) * 3.0L;
    if (c > static_cast<long double>(cap))
        return cap;
    return static_cast<std::size_t>(c + 0.5L);
}

std::uint64_t binom(std::size_t n, std::size_t w) {
    long double c = 1.0L;
    for (std::size_t i = 0; i < w; ++i)
        c = c * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    return static_cast<std::uint64_t>(c + 0.5L);
}

} // namespace

CheckMatrix::CheckMatrix(BitMatrix hx_, BitMatrix hz_) : hx(std::move(hx_)), hz(std::move(hz_)) {
    if (hx.rows() != hz.rows() || hx.cols() != hz.cols())
        throw ValidationError("CheckMatrix: hx and hz dimensions disagree");
    r = hx.rows();
    n = hx.cols();
}

PauliOperator CheckMatrix::generator(std::size_t i) const {
    return PauliOperator(hx.row_vector(i), hz.row_vector(i), 0);
}

StabilizerCode StabilizerCode::validate(CheckMatrix check, bool allow_redundant) {
    StabilizerCode code;
    code.check_ = std::move(check);
    code.finish(allow_redundant, /*extract=*/true);
    return code;
}

StabilizerCode StabilizerCode::validate_with_logicals(
    CheckMatrix check, std::vector<std::pair<PauliOperator, PauliOperator>> pairs,
    bool allow_redundant) {
    StabilizerCode code;
    code.check_ = std::move(check);
    code.logicals_ = std::move(pairs);
    code.finish(allow_redundant, /*extract=*/false);
    return code;
}

void StabilizerCode::finish(bool allow_redundant, bool extract) {
    const CheckMatrix& c = check_;
    // Pairwise commutation; report the first offending pair by row indices.
    for (std::size_t i = 0; i < c.r; ++i)
        for (std::size_t j = i + 1; j < c.r; ++j) {
            const std::uint64_t s = c.hx.words_per_row()
                ? gf2::kernels().symp_popcount(c.hx.row(i), c.hz.row(i), c.hx.row(j),
                                               c.hz.row(j), c.hx.words_per_row())
                : 0;
            if (s & 1)
                throw ValidationError("generators " + std::to_string(i) + " and " +
                                      std::to_string(j) + " anticommute");
        }
    space_ = gf2::RowSpace(stack_check(c));
    rank_ = space_.rank();
    if (rank_ < c.r && !allow_redundant)
        throw ValidationError("check matrix has " + std::to_string(c.r - rank_) +
                              " redundant generator row(s)");
    k_ = c.n - rank_;
    if (extract)
        logicals_ = extract_logicals(c);
    verify_logicals();

    // CSS row split when every generator is single-lettered.
    CssSplit split;
    bool pure = true;
    for (std::size_t i = 0; i < c.r && pure; ++i) {
        const bool has_x = !c.hx.row_is_zero(i);
        const bool has_z = !c.hz.row_is_zero(i);
        if (has_x && has_z)
            pure = false;
        else if (has_z)
            split.z_rows.push_back(i);
        else
            split.x_rows.push_back(i);
    }
    if (pure)
        css_ = std::move(split);
}

void StabilizerCode::verify_logicals() const {
    if (logicals_.size() != k_)
        throw ValidationError("logical extraction produced " +
                              std::to_string(logicals_.size()) + " pairs, expected " +
                              std::to_string(k_));
    for (std::size_t i = 0; i < logicals_.size(); ++i) {
        const auto& [xi, zi] = logicals_[i];
        if (xi.n() != check_.n || zi.n() != check_.n)
            throw ValidationError("logical operator qubit count mismatch");
        if (space_.contains(xi.to_symplectic()) || space_.contains(zi.to_symplectic()))
            throw ValidationError("logical operator lies in the stabilizer rowspace");
        for (std::size_t g = 0; g < check_.r; ++g) {
            const PauliOperator gen = generator(g);
            if (symplectic_product(gen, xi) || symplectic_product(gen, zi))
                throw ValidationError("logical operator anticommutes with generator " +
                                      std::to_string(g));
        }
        for (std::size_t j = 0; j < logicals_.size(); ++j) {
            const auto& [xj, zj] = logicals_[j];
            if (symplectic_product(xi, zj) != (i == j ? 1 : 0) ||
                symplectic_product(xi, xj) != 0 || symplectic_product(zi, zj) != 0)
                throw ValidationError("logical pairing invariants violated");
        }
    }
}

BitVector StabilizerCode::syndrome(const PauliOperator& e) const {
    if (e.n() != check_.n)
        throw ValidationError("syndrome: qubit count mismatch");
    BitVector out(check_.r);
    if (check_.r == 0 || check_.hx.words_per_row() == 0)
        return out;
    gf2::kernels().syndrome_rows(check_.hx.data(), check_.hz.data(), check_.r,
                                 check_.hx.words_per_row(), e.x_bits().data(),
                                 e.z_bits().data(), out.data());
    return out;
}

bool StabilizerCode::in_stabilizer_group(const PauliOperator& p) const {
    return space_.contains(p.to_symplectic());
}

ResidualClass StabilizerCode::classify_residual(const PauliOperator& p) const {
    if (syndrome(p).any())
        return ResidualClass::Detectable;
    return in_stabilizer_group(p) ? ResidualClass::Stabilizer : ResidualClass::Logical;
}

namespace {

// Weight-level enumeration scratch, reused across candidates.
struct Scratch {
    std::vector<std::uint64_t> x, z;
    explicit Scratch(std::size_t wpr) : x(wpr, 0), z(wpr, 0) {}
};

// Letters: 0=X, 1=Y, 2=Z (the fixed X < Y < Z enumeration order).
void fill_candidate(Scratch& s, const std::vector<std::size_t>& supp,
                    const std::vector<int>& letters) {
    std::fill(s.x.begin(), s.x.end(), 0);
    std::fill(s.z.begin(), s.z.end(), 0);
    for (std::size_t i = 0; i < supp.size(); ++i) {
        const std::size_t q = supp[i];
        const std::uint64_t m = std::uint64_t(1) << (q & 63);
        if (letters[i] != 2)
            s.x[q >> 6] |= m; // X or Y
        if (letters[i] != 0)
            s.z[q >> 6] |= m; // Y or Z
    }
}

bool syndrome_is_zero(const CheckMatrix& c, const Scratch& s) {
    const std::size_t wpr = c.hx.words_per_row();
    for (std::size_t r = 0; r < c.r; ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* rx = c.hx.row(r);
        const std::uint64_t* rz = c.hz.row(r);
        for (std::size_t i = 0; i < wpr; ++i)
            acc ^= (rx[i] & s.z[i]) ^ (rz[i] & s.x[i]);
        if (std::popcount(acc) & 1)
            return false;
    }
    return true;
}

BitVector candidate_to_symplectic(const Scratch& s, std::size_t n) {
    BitVector v(2 * n);
    for (std::size_t w = 0; w < s.x.size(); ++w) {
        std::uint64_t xb = s.x[w];
        while (xb) {
            v.set(w * 64 + static_cast<std::size_t>(std::countr_zero(xb)), true);
            xb &= xb - 1;
        }
        std::uint64_t zb = s.z[w];
        while (zb) {
            v.set(n + w * 64 + static_cast<std::size_t>(std::countr_zero(zb)), true);
            zb &= zb - 1;
        }
    }
    return v;
}

// Unrank the idx-th w-combination of [0, n) in lexicographic order.
void unrank_combination(std::size_t n, std::size_t w, std::uint64_t idx,
                        std::vector<std::size_t>& out) {
    out.resize(w);
    std::size_t start = 0;
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t v = start;; ++v) {
            const std::uint64_t block = binom(n - 1 - v, w - 1 - i);
            if (idx < block) {
                out[i] = v;
                start = v + 1;
                break;
            }
            idx -= block;
        }
    }
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t w = c.size();
    std::size_t i = w;
    while (i-- > 0) {
        if (c[i] < n - (w - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < w; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool next_letters(std::vector<int>& letters) {
    for (std::size_t i = letters.size(); i-- > 0;) {
        if (letters[i] < 2) {
            ++letters[i];
            std::fill(letters.begin() + static_cast<std::ptrdiff_t>(i) + 1, letters.end(), 0);
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<DistanceResult> StabilizerCode::min_distance(std::size_t max_weight,
                                                           const DistanceOptions& opts) const {
    const std::size_t n = check_.n;
    if (max_weight > n)
        throw ValidationError("min_distance: max_weight exceeds qubit count");
    std::size_t total = 0;
    for (std::size_t w = 1; w <= max_weight; ++w) {
        const std::size_t lvl = level_count(n, w, opts.budget + 1);
        if (lvl > opts.budget || total > opts.budget - lvl)
            throw ResourceLimitError("min_distance: enumerating weights 1.." +
                                     std::to_string(max_weight) + " exceeds the budget of " +
                                     std::to_string(opts.budget) + " candidates");
        total += lvl;
    }

    const std::size_t wpr = check_.hx.words_per_row();
    const int workers = std::max(1, opts.workers);

    for (std::size_t w = 1; w <= max_weight; ++w) {
        const std::uint64_t combos = binom(n, w);
        // Fixed chunk grid so results do not depend on the worker count. A
        // chunk stops at its own first hit: any hit at this level is minimal
        // because lower levels were exhausted.
        const std::uint64_t chunk_count = std::min<std::uint64_t>(combos, 128);
        std::atomic<std::uint64_t> next_chunk{0};
        std::vector<std::optional<BitVector>> hits(chunk_count);

        auto run = [&]() {
            Scratch s(wpr);
            std::vector<std::size_t> supp;
            std::vector<int> letters(w, 0);
            for (;;) {
                const std::uint64_t ci = next_chunk.fetch_add(1);
                if (ci >= chunk_count)
                    return;
                const std::uint64_t lo = combos * ci / chunk_count;
                const std::uint64_t hi = combos * (ci + 1) / chunk_count;
                unrank_combination(n, w, lo, supp);
                bool done = false;
                for (std::uint64_t c = lo; c < hi && !done; ++c) {
                    std::fill(letters.begin(), letters.end(), 0);
                    do {
                        fill_candidate(s, supp, letters);
                        if (syndrome_is_zero(check_, s)) {
                            BitVector cand = candidate_to_symplectic(s, n);
                            if (!space_.contains(cand)) {
                                hits[ci] = std::move(cand);
                                done = true;
                                break;
                            }
                        }
                    } while (next_letters(letters));
                    if (!done && !next_combination(supp, n))
                        break;
                }
            }
        };

        if (workers == 1) {
            run();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int t = 0; t < workers; ++t)
                pool.emplace_back(run);
            for (auto& th : pool)
                th.join();
        }

        const BitVector* best = nullptr;
        for (const auto& h : hits)
            if (h && (!best || h->lex_less(*best)))
                best = &*h;
        if (best)
            return DistanceResult{w, PauliOperator::from_symplectic(*best, n)};
    }
    return std::nullopt;
}

bool StabilizerCode::is_degenerate(std::size_t d, std::size_t budget) const {
    if (d <= 1)
        return false; // no positive weight is strictly below 1
    const std::size_t n = check_.n;
    if (rank_ <= 20) {
        // Gray-code walk over all nonzero rowspace elements.
        const BitMatrix& basis = space_.basis();
        const std::size_t wpr = basis.words_per_row();
        std::vector<std::uint64_t> acc(wpr, 0);
        std::uint64_t gray = 0;
        for (std::uint64_t i = 1; i < (std::uint64_t(1) << rank_); ++i) {
            const std::uint64_t g = i ^ (i >> 1);
            const int bit = std::countr_zero(g ^ gray);
            gray = g;
            gf2::kernels().xor_rows(acc.data(), basis.row(static_cast<std::size_t>(bit)), wpr);
            std::size_t weight = 0;
            for (std::size_t q = 0; q < n && weight < d; ++q) {
                const bool x = (acc[q >> 6] >> (q & 63)) & 1;
                const std::size_t zq = n + q;
                const bool z = (acc[zq >> 6] >> (zq & 63)) & 1;
                weight += (x || z);
            }
            if (weight > 0 && weight < d)
                return true;
        }
        return false;
    }
    // Too many generators to enumerate the group; search low-weight Paulis
    // for stabilizer members instead.
    std::size_t total = 0;
    for (std::size_t w = 1; w < d; ++w) {
        const std::size_t lvl = level_count(n, w, budget + 1);
        if (lvl > budget || total > budget - lvl)
            throw ResourceLimitError("is_degenerate: weight-bounded search exceeds budget");
        total += lvl;
    }
    const std::size_t wpr = check_.hx.words_per_row();
    Scratch s(wpr);
    for (std::size_t w = 1; w < d; ++w) {
        std::vector<std::size_t> supp(w);
        for (std::size_t i = 0; i < w; ++i)
            supp[i] = i;
        std::vector<int> letters(w, 0);
        do {
            std::fill(letters.begin(), letters.end(), 0);
            do {
                fill_candidate(s, supp, letters);
                if (space_.contains(candidate_to_symplectic(s, n)))
                    return true;
            } while (next_letters(letters));
        } while (next_combination(supp, n));
    }
    return false;
}

std::vector<std::pair<PauliOperator, PauliOperator>>
extract_logicals(const CheckMatrix& check) {
    const std::size_t n = check.n;
    const gf2::RowSpace space(stack_check(check));
    const std::size_t k = n - space.rank();

    // Kernel of the twisted matrix [hz|hx]: all symplectic vectors commuting
    // with every generator, i.e. gamma(N(S)).
    const BitMatrix norm_basis = kernel(twist_check(check));

    std::vector<BitVector> work;
    for (std::size_t i = 0; i < norm_basis.rows(); ++i) {
        BitVector v = space.reduce(norm_basis.row_vector(i));
        if (v.any())
            work.push_back(std::move(v));
    }
    std::sort(work.begin(), work.end(),
              [](const BitVector& a, const BitVector& b) { return a.lex_less(b); });

    auto symp = [n](const BitVector& a, const BitVector& b) {
        int acc = 0;
        for (std::size_t q = 0; q < n; ++q)
            acc ^= (a.get(q) & b.get(n + q)) ^ (a.get(n + q) & b.get(q));
        return acc;
    };

    // Symplectic Gram-Schmidt. A popped vector with no anticommuting partner
    // is linearly dependent on the stabilizer plus the chosen pairs (the form
    // is nondegenerate on N(S)/S) and is dropped.
    std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
    while (!work.empty()) {
        BitVector u = std::move(work.front());
        work.erase(work.begin());
        if (!u.any())
            continue;
        std::size_t partner = work.size();
        for (std::size_t i = 0; i < work.size(); ++i)
            if (symp(u, work[i])) {
                partner = i;
                break;
            }
        if (partner == work.size())
            continue;
        BitVector w = std::move(work[partner]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(partner));
        for (auto& v : work) {
            const int sw = symp(v, w);
            const int su = symp(v, u);
            if (sw)
                v.xor_with(u);
            if (su)
                v.xor_with(w);
            v = space.reduce(std::move(v));
        }
        std::erase_if(work, [](const BitVector& v) { return !v.any(); });
        pairs.emplace_back(PauliOperator::from_symplectic(u, n),
                           PauliOperator::from_symplectic(w, n));
    }

    if (pairs.size() != k)
        throw ValidationError("logical pairing failed: got " + std::to_string(pairs.size()) +
                              " pairs for k=" + std::to_string(k) +
                              " (check matrix inconsistent)");

    // Label the X-flavored member of each pair as the logical X where the
    // distinction is structural (pure-Z member paired with one carrying X).
    for (auto& [u, w] : pairs) {
        const bool u_pure_z = !u.x_bits().any();
        const bool w_pure_z = !w.x_bits().any();
        if (u_pure_z && !w_pure_z)
            std::swap(u, w);
    }
    return pairs;
}

} // namespace qecstab
