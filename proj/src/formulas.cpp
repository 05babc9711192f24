#include "sympv/formulas.hpp"

namespace sympv {

BigInt binom(long long a, long long b) {
    if (a < 0 || b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

BigInt hsp_nk(int n, int k) {
    if (k < 3 || n < 0) return 0;
    if (k == 3) {
        // Peak b m b with 2b + m = n; the height (3m - n)/2 contributes only
        // when b = (n - m)/2 is an actual bordering part, i.e. 1 <= b <= m - 1.
        BigInt total = 0;
        for (int m = 2; m <= n - 2; ++m) {
            if ((n - m) % 2 != 0) continue;
            const int b = (n - m) / 2;
            if (b >= 1 && b <= m - 1) total += (3 * m - n) / 2;
        }
        return total;
    }
    BigInt total = 0;
    for (int m = 2; m <= n - k + 1; ++m) {
        const int t = (n - m - k + 3) / 2;
        const int bmax = std::min(m - 1, t);
        for (int b = 1; b <= bmax; ++b)
            total += binom(n - 2 * b - m - 1, k - 4) * (m - b);
    }
    return total * (k - 2);
}

BigInt hsp_n3_unguarded(int n) {
    BigInt total = 0;
    for (int m = 2; m <= n - 2; ++m)
        if ((n - m) % 2 == 0) total += (3 * m - n) / 2;
    return total;
}

BigInt dsv_nk(int n, int k) {
    if (k < 3 || n < 0) return 0;
    if (k == 3) {
        BigInt total = 0;
        for (int m = 1; m <= (n - 2) / 3; ++m) {
            if ((n - m) % 2 != 0) continue;
            const int b = (n - m) / 2;
            if (b >= m + 1) total += (n - 3 * m) / 2;
        }
        return total;
    }
    BigInt total = 0;
    for (int m = 1; m <= (n - k + 1) / 3; ++m) {
        const int bmax = (n - m - (k - 3)) / 2;
        for (int b = m + 1; b <= bmax; ++b)
            total += binom(n - 2 * b - m - 1, k - 4) * (b - m);
    }
    return total * (k - 2);
}

BigInt sp_count_nk(int n, int k) {
    if (k < 4) throw FormulaRangeError();
    if (n < 0) return 0;
    BigInt total = 0;
    for (int m = 2; m <= n - k + 1; ++m) {
        const int t = (n - m - k + 3) / 2;
        const int bmax = std::min(m - 1, t);
        for (int b = 1; b <= bmax; ++b) total += binom(n - 2 * b - m - 1, k - 4);
    }
    return total * (k - 2);
}

}  // namespace sympv
