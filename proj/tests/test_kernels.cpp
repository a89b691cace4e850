#include "qecstab/gf2_kernels.hpp"
#include "qecstab/rng.hpp"

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

using namespace qecstab;
using gf2::KernelOps;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, Philox& rng) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w)
        x = rng.next_u64();
    return w;
}

} // namespace

TEST_CASE("kernel equivalence on random buffers") {
    Philox rng(42, 0);
    const KernelOps& ref = gf2::scalar_kernels();
    for (const KernelOps* k : gf2::available_kernels()) {
        CAPTURE(k->name);
        for (int rep = 0; rep < 300; ++rep) {
            const std::size_t nw = 1 + rng.next_u32() % 9;
            auto a = random_words(nw, rng);
            auto b = random_words(nw, rng);
            auto c = random_words(nw, rng);
            auto d = random_words(nw, rng);

            CHECK(k->popcount(a.data(), nw) == ref.popcount(a.data(), nw));
            CHECK(k->and_popcount(a.data(), b.data(), nw) ==
                  ref.and_popcount(a.data(), b.data(), nw));
            CHECK(k->symp_popcount(a.data(), b.data(), c.data(), d.data(), nw) ==
                  ref.symp_popcount(a.data(), b.data(), c.data(), d.data(), nw));

            auto x1 = a, x2 = a;
            k->xor_rows(x1.data(), b.data(), nw);
            ref.xor_rows(x2.data(), b.data(), nw);
            CHECK(x1 == x2);
        }
    }
}

TEST_CASE("syndrome_rows matches the scalar reference on random layouts") {
    Philox rng(7, 1);
    const KernelOps& ref = gf2::scalar_kernels();
    for (const KernelOps* k : gf2::available_kernels()) {
        CAPTURE(k->name);
        for (int rep = 0; rep < 100; ++rep) {
            const std::size_t rows = 1 + rng.next_u32() % 70;
            const std::size_t wpr = 1 + rng.next_u32() % 3;
            auto hx = random_words(rows * wpr, rng);
            auto hz = random_words(rows * wpr, rng);
            auto ex = random_words(wpr, rng);
            auto ez = random_words(wpr, rng);
            std::vector<std::uint64_t> out1((rows + 63) / 64, ~0ull);
            std::vector<std::uint64_t> out2((rows + 63) / 64, 0ull);
            k->syndrome_rows(hx.data(), hz.data(), rows, wpr, ex.data(), ez.data(), out1.data());
            ref.syndrome_rows(hx.data(), hz.data(), rows, wpr, ex.data(), ez.data(),
                              out2.data());
            CHECK(out1 == out2);
        }
    }
}

TEST_CASE("runtime selection yields a usable kernel set") {
    const KernelOps& active = gf2::kernels();
    std::uint64_t w[2] = {0xF0F0F0F0F0F0F0F0ull, 0x1ull};
    CHECK(active.popcount(w, 2) == 33);
    CHECK(std::string(active.name).size() > 0);
}
