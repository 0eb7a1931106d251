#include "rado/witness.hpp"

#include <numeric>

#include "rado/errors.hpp"

namespace rado {

namespace {

std::vector<Color> blue_domain(Int n) {
    if (n < 1)
        throw PreconditionError("witness domain is empty");
    return std::vector<Color>(static_cast<std::size_t>(n), Color::Blue);
}

void paint_red(std::vector<Color>& cells, Int lo, Int hi) {
    for (Int i = std::max<Int>(lo, 1); i <= std::min<Int>(hi, static_cast<Int>(cells.size())); ++i)
        cells[static_cast<std::size_t>(i - 1)] = Color::Red;
}

void paint_red_at(std::vector<Color>& cells, Int i) { paint_red(cells, i, i); }

} // namespace

WitnessCertificate witness_thm21(Int t, Int q, Int s) {
    if (t < 1)
        throw PreconditionError("witness_thm21 requires t >= 1");
    if (s < 1)
        throw PreconditionError("witness_thm21 requires s >= 1");
    if (q < s)
        throw PreconditionError("witness_thm21 requires q >= s");
    Int n = checked_add(checked_mul(checked_mul(t, t + q), t + s), s);
    auto cells = blue_domain(n - 1);
    paint_red(cells, s + t, checked_mul(q + t, s + t) - 1);
    return {Coloring(std::move(cells)), FForm(t, q).to_equation(), FForm(t, s).to_equation()};
}

WitnessCertificate witness_thm22(Int t, Int q, Int s) {
    if (t < 1)
        throw PreconditionError("witness_thm22 requires t >= 1");
    if (s < t)
        throw PreconditionError("witness_thm22 requires s >= t");
    if (q < s)
        throw PreconditionError("witness_thm22 requires q >= s");
    Int m = std::gcd(t, q) / std::gcd(std::gcd(t, q), s);
    Int base = checked_mul(checked_mul(t, t + q), t + s);
    Int n = checked_add(base, checked_mul(m, s));
    auto cells = blue_domain(n - 1);
    paint_red(cells, s + t, checked_mul(q + t, s + t) - 1);
    // Tail [base+1, n-1]: red exactly off the multiples of m. Red solutions to
    // tx+qy=z have z ≡ 0 (mod m), so they never land on a red tail element;
    // a blue tail z = tx+sy with x >= (q+t)(s+t) forces sy <= ms-1, hence
    // y <= m-1 and sy ≡ 0 (mod m), impossible. (Coloring only the base+is
    // elements red leaves reachable blue tail values uncovered once m > 1.)
    for (Int i = base + 1; i <= n - 1; ++i)
        if (i % m != 0)
            paint_red_at(cells, i);
    return {Coloring(std::move(cells)), FForm(t, q).to_equation(), FForm(t, s).to_equation()};
}

WitnessCertificate witness_gamma_s1(Int q) {
    if (q < 1)
        throw PreconditionError("witness_gamma_s1 requires q >= 1");
    Int h = (q + 1) / 2;
    Int n = checked_add(checked_mul(2, q), checked_add(checked_mul(2, h), 1));
    auto cells = blue_domain(n - 1);
    // Leading 2h-1 positions alternate starting Blue at 1.
    for (Int i = 1; i <= 2 * h - 1; ++i)
        if (i % 2 == 0)
            paint_red_at(cells, i);
    paint_red(cells, 2 * h, 2 * q + 1);
    // Trailing 2h-1 positions alternate starting Blue at 2q+2.
    for (Int i = 2 * q + 2; i <= n - 1; ++i)
        if ((i - (2 * q + 2)) % 2 == 1)
            paint_red_at(cells, i);
    return {Coloring(std::move(cells)), FForm(1, q).to_equation(), FForm(1, 1).to_equation()};
}

WitnessCertificate witness_anomalous(Int t) {
    if (t < 3)
        throw PreconditionError("witness_anomalous requires t >= 3");
    Int t2 = checked_mul(t, t);
    Int t3 = checked_mul(t2, t);
    Int n = checked_add(checked_add(checked_mul(6, t3), checked_mul(2, t2)), checked_mul(4, t));
    auto cells = blue_domain(n - 1);
    paint_red_at(cells, 1);
    paint_red_at(cells, 2);
    paint_red_at(cells, 6 * t);
    paint_red(cells, 6 * t + 3, 6 * t2 + 2 * t - 1);
    for (Int i = 6 * t2 + 2 * t; i <= 12 * t2 + 4 * t; ++i)
        if (i % t == 0)
            paint_red_at(cells, i);
    return {Coloring(std::move(cells)), FForm(t, 2 * t + 1).to_equation(),
            FForm(t, t).to_equation()};
}

WitnessCertificate witness_remark_t6() {
    auto cells = blue_domain(1392);
    // 52..56 must be a full run: with 53..55 blue, the pair sums 97, 98, 100,
    // 104, 106, 110, 112 of the remaining small blues would need red z-values
    // at 6x those positions, which the tail set does not provide, and (4,5,54)
    // would be an all-blue solution to 6x+6y=z outright.
    for (Int i : {1, 2, 3, 37, 39, 40, 41, 43, 46, 47, 48, 49, 50})
        paint_red_at(cells, i);
    paint_red(cells, 52, 56);
    paint_red(cells, 58, 228);
    for (Int i = 234; i <= 558; ++i)
        if (i % 6 == 0)
            paint_red_at(cells, i);
    for (Int i : {570, 576, 594, 606, 612, 648, 684})
        paint_red_at(cells, i);
    return {Coloring(std::move(cells)), FForm(6, 13).to_equation(), FForm(6, 6).to_equation()};
}

} // namespace rado
