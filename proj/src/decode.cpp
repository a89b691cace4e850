#include "qecstab/decode.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qecstab {

using gf2::BitMatrix;
using gf2::BitVector;

TannerGraph::TannerGraph(const BitMatrix& h) {
    check_count = h.rows();
    var_count = h.cols();
    check_offsets.assign(check_count + 1, 0);
    var_offsets.assign(var_count + 1, 0);
    for (std::size_t c = 0; c < check_count; ++c)
        for (std::size_t v = 0; v < var_count; ++v)
            if (h.get(c, v)) {
                ++check_offsets[c + 1];
                ++var_offsets[v + 1];
            }
    for (std::size_t c = 0; c < check_count; ++c)
        check_offsets[c + 1] += check_offsets[c];
    for (std::size_t v = 0; v < var_count; ++v)
        var_offsets[v + 1] += var_offsets[v];
    check_vars.resize(check_offsets.back());
    var_edges.resize(var_offsets.back());
    var_checks.resize(var_offsets.back());
    std::vector<std::size_t> cpos(check_count, 0), vpos(var_count, 0);
    for (std::size_t c = 0; c < check_count; ++c)
        for (std::size_t v = 0; v < var_count; ++v)
            if (h.get(c, v)) {
                const std::size_t e = check_offsets[c] + cpos[c]++;
                check_vars[e] = v;
                const std::size_t slot = var_offsets[v] + vpos[v]++;
                var_edges[slot] = e;
                var_checks[slot] = c;
            }
}

BpResult bp_decode(const TannerGraph& g, const BitVector& syndrome, double prior,
                   const BpOptions& opts) {
    if (!(prior > 0.0 && prior < 0.5))
        throw ValidationError("bp_decode: prior must lie in (0, 1/2)");
    if (syndrome.size() != g.check_count)
        throw ValidationError("bp_decode: syndrome length mismatch");
    if (opts.max_iter < 1)
        throw ValidationError("bp_decode: max_iter must be at least 1");

    const double lam = std::log((1.0 - prior) / prior);
    const std::size_t ne = g.edge_count();
    std::vector<double> nu(ne, lam), mu(ne, 0.0);
    BitVector est(g.var_count);

    auto syndrome_matches = [&]() {
        for (std::size_t c = 0; c < g.check_count; ++c) {
            int par = 0;
            for (std::size_t e = g.check_offsets[c]; e < g.check_offsets[c + 1]; ++e)
                par ^= est.get(g.check_vars[e]);
            if (par != static_cast<int>(syndrome.get(c)))
                return false;
        }
        return true;
    };

    if (syndrome_matches())
        return {std::move(est), true, 0};

    std::vector<double> scratch;
    for (int it = 1; it <= opts.max_iter; ++it) {
        for (std::size_t c = 0; c < g.check_count; ++c) {
            const std::size_t lo = g.check_offsets[c], hi = g.check_offsets[c + 1];
            const std::size_t deg = hi - lo;
            const double sgn = syndrome.get(c) ? -1.0 : 1.0;
            if (deg == 0)
                continue;
            if (opts.variant == BpVariant::SumProduct) {
                scratch.assign(deg, 0.0);
                for (std::size_t i = 0; i < deg; ++i)
                    scratch[i] = std::tanh(std::clamp(nu[lo + i], -50.0, 50.0) * 0.5);
                // prefix/suffix products exclude the target edge without division
                double suffix = 1.0;
                for (std::size_t i = deg; i-- > 0;) {
                    mu[lo + i] = suffix;
                    suffix *= scratch[i];
                }
                double prefix = 1.0;
                for (std::size_t i = 0; i < deg; ++i) {
                    const double prod =
                        std::clamp(sgn * prefix * mu[lo + i], -(1.0 - 1e-15), 1.0 - 1e-15);
                    mu[lo + i] = 2.0 * std::atanh(prod);
                    prefix *= scratch[i];
                }
            } else {
                double min1 = std::numeric_limits<double>::infinity(), min2 = min1;
                std::size_t arg1 = 0;
                double sign_all = sgn;
                for (std::size_t i = 0; i < deg; ++i) {
                    const double v = nu[lo + i];
                    if (v < 0.0)
                        sign_all = -sign_all;
                    const double a = std::abs(v);
                    if (a < min1) {
                        min2 = min1;
                        min1 = a;
                        arg1 = i;
                    } else if (a < min2) {
                        min2 = a;
                    }
                }
                for (std::size_t i = 0; i < deg; ++i) {
                    const double v = nu[lo + i];
                    const double excl_sign = (v < 0.0) ? -sign_all : sign_all;
                    // degree-1 checks have an empty exclusion set: saturate at
                    // the LLR cap, mirroring the sum-product empty product
                    const double excl_min = std::min((i == arg1) ? min2 : min1, 50.0);
                    mu[lo + i] = opts.min_sum_norm * excl_sign * excl_min;
                }
            }
        }
        for (std::size_t v = 0; v < g.var_count; ++v) {
            double tot = lam;
            for (std::size_t s = g.var_offsets[v]; s < g.var_offsets[v + 1]; ++s)
                tot += mu[g.var_edges[s]];
            for (std::size_t s = g.var_offsets[v]; s < g.var_offsets[v + 1]; ++s)
                nu[g.var_edges[s]] = std::clamp(tot - mu[g.var_edges[s]], -50.0, 50.0);
            est.set(v, tot < 0.0);
        }
        if (syndrome_matches())
            return {std::move(est), true, it};
    }
    return {std::move(est), false, opts.max_iter};
}

namespace {

// ---- exhaustive maximum-likelihood machinery -------------------------------

constexpr std::size_t kMlMaxN = 14;
constexpr std::size_t kMlMaxR = 16;
constexpr std::size_t kExactTieMaxN = 10;

struct XZ {
    std::uint64_t x = 0, z = 0;
};

bool lex_less_xz(const XZ& a, const XZ& b) {
    std::uint64_t d = a.x ^ b.x;
    if (d)
        return !((a.x >> std::countr_zero(d)) & 1);
    d = a.z ^ b.z;
    if (d)
        return !((a.z >> std::countr_zero(d)) & 1);
    return false;
}

XZ pack_xz(const PauliOperator& p) {
    XZ w;
    for (std::size_t q = 0; q < p.n(); ++q) {
        if (p.x_bit(q))
            w.x |= std::uint64_t(1) << q;
        if (p.z_bit(q))
            w.z |= std::uint64_t(1) << q;
    }
    return w;
}

PauliOperator unpack_xz(const XZ& w, std::size_t n) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
        if ((w.x >> q) & 1)
            p.set_x(q, true);
        if ((w.z >> q) & 1)
            p.set_z(q, true);
    }
    return p;
}

struct LetterCounts {
    std::size_t ni, nx, ny, nz;
};

LetterCounts count_letters(const XZ& e, std::size_t n) {
    const std::size_t ny = static_cast<std::size_t>(std::popcount(e.x & e.z));
    const std::size_t nx = static_cast<std::size_t>(std::popcount(e.x)) - ny;
    const std::size_t nz = static_cast<std::size_t>(std::popcount(e.z)) - ny;
    return {n - nx - ny - nz, nx, ny, nz};
}

struct ChannelLogProbs {
    double p[4];  // I, X, Y, Z
    double lg[4]; // log p, -inf for zero entries

    explicit ChannelLogProbs(const PauliChannel& ch) {
        p[0] = ch.p_i;
        p[1] = ch.p_x;
        p[2] = ch.p_y;
        p[3] = ch.p_z;
        for (int i = 0; i < 4; ++i)
            lg[i] = p[i] > 0.0 ? std::log(p[i]) : -std::numeric_limits<double>::infinity();
    }

    // log probability of an i.i.d. error; -inf when any used letter has p = 0.
    double log_prob(const LetterCounts& c) const {
        const std::size_t cnt[4] = {c.ni, c.nx, c.ny, c.nz};
        double lp = 0.0;
        for (int i = 0; i < 4; ++i) {
            if (cnt[i] == 0)
                continue;
            if (p[i] <= 0.0)
                return -std::numeric_limits<double>::infinity();
            lp += static_cast<double>(cnt[i]) * lg[i];
        }
        return lp;
    }
};

using boost::multiprecision::cpp_int;

struct Dyadic {
    std::uint64_t mant = 0; // value = mant * 2^exp
    long exp = 0;
};

Dyadic to_dyadic(double p) {
    if (p <= 0.0)
        return {0, 0};
    int e = 0;
    const double m = std::frexp(p, &e);
    return {static_cast<std::uint64_t>(std::ldexp(m, 53)), e - 53};
}

struct DyadicSum {
    cpp_int mant = 0;
    long exp = 0;

    void add(cpp_int m, long e) {
        if (m == 0)
            return;
        if (mant == 0) {
            mant = std::move(m);
            exp = e;
            return;
        }
        if (e < exp) {
            mant <<= static_cast<unsigned>(exp - e);
            exp = e;
        } else {
            m <<= static_cast<unsigned>(e - exp);
        }
        mant += m;
    }

    // -1, 0, +1 against another sum.
    int compare(const DyadicSum& o) const {
        if (mant == 0 || o.mant == 0)
            return mant == 0 ? (o.mant == 0 ? 0 : -1) : 1;
        cpp_int a = mant, b = o.mant;
        if (exp < o.exp)
            b <<= static_cast<unsigned>(o.exp - exp);
        else
            a <<= static_cast<unsigned>(exp - o.exp);
        return a < b ? -1 : (b < a ? 1 : 0);
    }
};

struct MlTables {
    std::size_t n = 0, r = 0;
    std::vector<std::optional<PauliOperator>> coset_rep;
    std::vector<std::optional<PauliOperator>> best_single;
};

std::uint32_t pack_syndrome(const BitVector& s) {
    return static_cast<std::uint32_t>(s.words() ? s.word(0) : 0);
}

MlTables build_ml_tables(const StabilizerCode& code, const PauliChannel& ch) {
    const std::size_t n = code.n(), r = code.r(), k = code.k(), rank = code.rank();
    if (n > kMlMaxN || r > kMlMaxR)
        throw ResourceLimitError("ml decoder: requires n <= " + std::to_string(kMlMaxN) +
                                 " and r <= " + std::to_string(kMlMaxR) + ", got n=" +
                                 std::to_string(n) + " r=" + std::to_string(r));
    if (k > 10)
        throw ResourceLimitError("ml decoder: 4^k logical coset enumeration too large (k=" +
                                 std::to_string(k) + ")");

    const ChannelLogProbs probs(ch);

    // Logical coset offsets in the fixed order I < X < Y < Z per logical qubit.
    std::vector<XZ> combos(std::size_t(1) << (2 * k));
    for (std::size_t c = 0; c < combos.size(); ++c) {
        XZ v;
        for (std::size_t j = 0; j < k; ++j) {
            const unsigned letter = (c >> (2 * j)) & 3;
            const XZ xb = pack_xz(code.logical_pairs()[j].first);
            const XZ zb = pack_xz(code.logical_pairs()[j].second);
            if (letter == 1 || letter == 2) {
                v.x ^= xb.x;
                v.z ^= xb.z;
            }
            if (letter == 2 || letter == 3) {
                v.x ^= zb.x;
                v.z ^= zb.z;
            }
        }
        combos[c] = v;
    }

    // Stabilizer basis rows as packed words.
    std::vector<XZ> stab(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const BitVector row = code.rowspace().basis().row_vector(i);
        for (std::size_t q = 0; q < n; ++q) {
            if (row.get(q))
                stab[i].x |= std::uint64_t(1) << q;
            if (row.get(n + q))
                stab[i].z |= std::uint64_t(1) << q;
        }
    }

    const gf2::LinearSolver solver(
        BitMatrix::hconcat(code.check().hz, code.check().hx)); // syndrome map

    MlTables tables;
    tables.n = n;
    tables.r = r;
    tables.coset_rep.resize(std::size_t(1) << r);
    tables.best_single.resize(std::size_t(1) << r);

    // Exact dyadic coset sum (tie fallback).
    auto exact_coset_sum = [&](XZ base) {
        DyadicSum sum;
        const Dyadic dy[4] = {to_dyadic(ch.p_i), to_dyadic(ch.p_x), to_dyadic(ch.p_y),
                              to_dyadic(ch.p_z)};
        XZ e = base;
        std::uint64_t gray = 0;
        for (std::uint64_t m = 0;; ++m) {
            const LetterCounts c = count_letters(e, n);
            const std::size_t cnt[4] = {c.ni, c.nx, c.ny, c.nz};
            cpp_int mant = 1;
            long exp = 0;
            bool zero = false;
            for (int i = 0; i < 4 && !zero; ++i) {
                if (cnt[i] == 0)
                    continue;
                if (dy[i].mant == 0) {
                    zero = true;
                    break;
                }
                for (std::size_t t = 0; t < cnt[i]; ++t)
                    mant *= dy[i].mant;
                exp += static_cast<long>(cnt[i]) * dy[i].exp;
            }
            if (!zero)
                sum.add(std::move(mant), exp);
            if (m + 1 >= (std::uint64_t(1) << rank))
                break;
            const std::uint64_t g = (m + 1) ^ ((m + 1) >> 1);
            const int bit = std::countr_zero(g ^ gray);
            gray = g;
            e.x ^= stab[static_cast<std::size_t>(bit)].x;
            e.z ^= stab[static_cast<std::size_t>(bit)].z;
        }
        return sum;
    };

    for (std::uint64_t si = 0; si < (std::uint64_t(1) << r); ++si) {
        BitVector s(r);
        if (s.words())
            s.data()[0] = si;
        const auto base_vec = solver.solve(s);
        if (!base_vec)
            continue;
        XZ base;
        for (std::size_t q = 0; q < n; ++q) {
            if (base_vec->get(q))
                base.x |= std::uint64_t(1) << q;
            if (base_vec->get(n + q))
                base.z |= std::uint64_t(1) << q;
        }

        double best_score = -std::numeric_limits<double>::infinity();
        std::size_t best_combo = 0;
        std::vector<double> scores(combos.size());
        std::vector<XZ> reps(combos.size());

        XZ global_single{};
        double global_single_lp = -std::numeric_limits<double>::infinity();
        bool have_single = false;

        for (std::size_t ci = 0; ci < combos.size(); ++ci) {
            XZ start{base.x ^ combos[ci].x, base.z ^ combos[ci].z};
            XZ e = start;
            std::uint64_t gray = 0;
            // online log-sum-exp over the 2^rank coset members
            double mx = -std::numeric_limits<double>::infinity();
            double acc = 0.0;
            XZ rep = e;
            std::size_t rep_weight = static_cast<std::size_t>(std::popcount(e.x | e.z));
            for (std::uint64_t m = 0;; ++m) {
                const double lp = probs.log_prob(count_letters(e, n));
                if (lp > -std::numeric_limits<double>::infinity()) {
                    if (lp > mx) {
                        acc = acc * std::exp(mx - lp) + 1.0;
                        mx = lp;
                    } else {
                        acc += std::exp(lp - mx);
                    }
                }
                const auto w = static_cast<std::size_t>(std::popcount(e.x | e.z));
                if (w < rep_weight || (w == rep_weight && lex_less_xz(e, rep))) {
                    rep_weight = w;
                    rep = e;
                }
                if (std::isfinite(lp)) {
                    const double tol = 1e-12 * (1.0 + std::abs(global_single_lp));
                    if (!have_single || lp > global_single_lp + tol) {
                        global_single = e;
                        global_single_lp = lp;
                        have_single = true;
                    } else if (lp >= global_single_lp - tol && lex_less_xz(e, global_single)) {
                        global_single = e;
                        global_single_lp = std::max(global_single_lp, lp);
                    }
                }
                if (m + 1 >= (std::uint64_t(1) << rank))
                    break;
                const std::uint64_t g = (m + 1) ^ ((m + 1) >> 1);
                const int bit = std::countr_zero(g ^ gray);
                gray = g;
                e.x ^= stab[static_cast<std::size_t>(bit)].x;
                e.z ^= stab[static_cast<std::size_t>(bit)].z;
            }
            const double score =
                acc > 0.0 ? mx + std::log(acc) : -std::numeric_limits<double>::infinity();
            scores[ci] = score;
            reps[ci] = rep;
            if (score > best_score) {
                best_score = score;
                best_combo = ci;
            }
        }

        // Near-ties get re-scored exactly for small codes; the lowest combo
        // index wins exact ties.
        if (n <= kExactTieMaxN && std::isfinite(best_score)) {
            std::vector<std::size_t> cand;
            for (std::size_t ci = 0; ci < combos.size(); ++ci)
                if (scores[ci] >= best_score - 1e-9)
                    cand.push_back(ci);
            if (cand.size() > 1) {
                std::size_t win = cand[0];
                DyadicSum win_sum =
                    exact_coset_sum({base.x ^ combos[win].x, base.z ^ combos[win].z});
                for (std::size_t i = 1; i < cand.size(); ++i) {
                    DyadicSum s2 =
                        exact_coset_sum({base.x ^ combos[cand[i]].x, base.z ^ combos[cand[i]].z});
                    if (s2.compare(win_sum) > 0) {
                        win = cand[i];
                        win_sum = std::move(s2);
                    }
                }
                best_combo = win;
            }
        }

        tables.coset_rep[si] = unpack_xz(reps[best_combo], n);
        if (have_single)
            tables.best_single[si] = unpack_xz(global_single, n);
        else
            tables.best_single[si] = unpack_xz(reps[best_combo], n);
    }
    return tables;
}

} // namespace

MlCosetDecoder::MlCosetDecoder(const StabilizerCode& code, const PauliChannel& ch)
    : n_(code.n()), r_(code.r()) {
    table_ = build_ml_tables(code, ch).coset_rep;
}

DecodeResult MlCosetDecoder::decode(const BitVector& syndrome) const {
    if (syndrome.size() != r_)
        throw ValidationError("mlcoset: syndrome length mismatch");
    const auto& entry = table_[pack_syndrome(syndrome)];
    if (!entry)
        throw ValidationError("mlcoset: syndrome is not attainable for this code");
    return {*entry, true, 0};
}

MlErrorDecoder::MlErrorDecoder(const StabilizerCode& code, const PauliChannel& ch)
    : n_(code.n()), r_(code.r()) {
    table_ = build_ml_tables(code, ch).best_single;
}

DecodeResult MlErrorDecoder::decode(const BitVector& syndrome) const {
    if (syndrome.size() != r_)
        throw ValidationError("mlerror: syndrome length mismatch");
    const auto& entry = table_[pack_syndrome(syndrome)];
    if (!entry)
        throw ValidationError("mlerror: syndrome is not attainable for this code");
    return {*entry, true, 0};
}

CssBpDecoder::CssBpDecoder(const StabilizerCode& code, const PauliChannel& ch,
                           const BpOptions& opts)
    : n_(code.n()), opts_(opts) {
    if (!code.css_split())
        throw ValidationError("css decoding requires a CSS code (every generator row "
                              "pure X-type or pure Z-type)");
    x_rows_ = code.css_split()->x_rows;
    z_rows_ = code.css_split()->z_rows;

    BitMatrix a(x_rows_.size(), n_); // hx part of X-type rows: constrains the Z error
    for (std::size_t i = 0; i < x_rows_.size(); ++i)
        for (std::size_t q = 0; q < n_; ++q)
            if (code.check().hx.get(x_rows_[i], q))
                a.set(i, q, true);
    BitMatrix b(z_rows_.size(), n_); // hz part of Z-type rows: constrains the X error
    for (std::size_t i = 0; i < z_rows_.size(); ++i)
        for (std::size_t q = 0; q < n_; ++q)
            if (code.check().hz.get(z_rows_[i], q))
                b.set(i, q, true);
    z_error_graph_ = TannerGraph(a);
    x_error_graph_ = TannerGraph(b);

    z_prior_ = ch.z_marginal();
    x_prior_ = ch.x_marginal();
    if (z_prior_ >= 0.5 || x_prior_ >= 0.5)
        throw ValidationError("css decoding: marginal error prior must be below 1/2");
}

DecodeResult CssBpDecoder::decode(const BitVector& syndrome) const {
    BitVector sz(x_rows_.size()), sx(z_rows_.size());
    for (std::size_t i = 0; i < x_rows_.size(); ++i)
        if (syndrome.get(x_rows_[i]))
            sz.set(i, true);
    for (std::size_t i = 0; i < z_rows_.size(); ++i)
        if (syndrome.get(z_rows_[i]))
            sx.set(i, true);

    // A zero marginal (e.g. the Z side under a pure bit-flip channel) means
    // that side has nothing to decode: the estimate is empty and the sub-
    // syndrome must already be trivial.
    BitVector ez(n_), ex(n_);
    bool cz = true, cx = true;
    int iters = 0;
    if (z_prior_ > 0.0) {
        BpResult rz = bp_decode(z_error_graph_, sz, z_prior_, opts_);
        ez = std::move(rz.estimate);
        cz = rz.converged;
        iters = std::max(iters, rz.iterations);
    } else {
        cz = !sz.any();
    }
    if (x_prior_ > 0.0) {
        BpResult rx = bp_decode(x_error_graph_, sx, x_prior_, opts_);
        ex = std::move(rx.estimate);
        cx = rx.converged;
        iters = std::max(iters, rx.iterations);
    } else {
        cx = !sx.any();
    }

    PauliOperator est(n_);
    for (std::size_t q = 0; q < n_; ++q) {
        if (ex.get(q))
            est.set_x(q, true);
        if (ez.get(q))
            est.set_z(q, true);
    }
    return {std::move(est), cz && cx, iters};
}

std::unique_ptr<Decoder> make_decoder(const std::string& name, const StabilizerCode& code,
                                      const PauliChannel& ch, const BpOptions& opts) {
    if (name == "mlcoset")
        return std::make_unique<MlCosetDecoder>(code, ch);
    if (name == "mlerror")
        return std::make_unique<MlErrorDecoder>(code, ch);
    if (name == "bp") {
        BpOptions o = opts;
        o.variant = BpVariant::SumProduct;
        return std::make_unique<CssBpDecoder>(code, ch, o);
    }
    if (name == "minsum") {
        BpOptions o = opts;
        o.variant = BpVariant::MinSum;
        return std::make_unique<CssBpDecoder>(code, ch, o);
    }
    throw ValidationError("unknown decoder '" + name +
                          "' (expected mlcoset, mlerror, bp or minsum)");
}

ClassifiedTrial decode_and_classify(const StabilizerCode& code, const PauliOperator& e,
                                    const Decoder& dec) {
    if (e.n() != code.n())
        throw ValidationError("decode_and_classify: qubit count mismatch");
    const BitVector s = code.syndrome(e);
    const DecodeResult res = dec.decode(s);
    const PauliOperator residual = multiply(res.estimate, e);
    const ResidualClass cls = code.classify_residual(residual);
    ClassifiedTrial out;
    out.residual = cls;
    out.converged = res.converged;
    out.iterations = res.iterations;
    out.outcome = cls == ResidualClass::Stabilizer ? TrialOutcome::Success
                                                   : TrialOutcome::LogicalError;
    return out;
}

} // namespace qecstab
