#include "rotdirac/specfun.hpp"

#include "rotdirac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>

namespace rotdirac::specfun {
namespace {

constexpr double kRescaleAt = 1e250;
constexpr double kRescaleBy = 1e-250;

void check_order(int n, double x, const Limits& limits) {
    if (n < 0) {
        throw DomainError("spherical Bessel order must be non-negative, got " + std::to_string(n));
    }
    if (n > limits.max_order) {
        throw UnsupportedOrder("spherical Bessel order " + std::to_string(n) +
                               " exceeds max_order " + std::to_string(limits.max_order));
    }
    if (!std::isfinite(x) || x < 0.0) {
        throw DomainError("spherical Bessel argument must be finite and non-negative");
    }
}

// Starting index for backward recurrences. Past the turning point k ~ x the
// minimal solution decays like exp(-(2d)^{3/2} / (3 sqrt k)), d = k - x, so a
// margin of ~10 k^{1/3} leaves the seed error far below double precision.
int backward_start(int n, double x) {
    const double top = std::max(static_cast<double>(n), x);
    return static_cast<int>(std::ceil(top)) + 20 +
           static_cast<int>(std::ceil(10.0 * std::cbrt(std::max(top, 1.0))));
}

double j0_closed(double x) { return std::sin(x) / x; }

double j1_closed(double x) { return (std::sin(x) / x - std::cos(x)) / x; }

// Power series, used for x < 1 where it converges in a handful of terms:
// j_n(x) = x^n/(2n+1)!! * sum_k (-x^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1)).
double series(int n, double x) {
    double lead = 1.0;
    for (int k = 1; k <= n; ++k) {
        lead *= x / (2.0 * k + 1.0);
    }
    if (lead == 0.0) {
        return 0.0;
    }
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 40; ++k) {
        term *= -x2 / (2.0 * (k + 1) * (2.0 * n + 2.0 * k + 3.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return lead * sum;
}

std::pair<double, double> upward_pair(int n, double x) {
    double a = j0_closed(x);
    double b = j1_closed(x);
    for (int k = 1; k <= n; ++k) {
        const double c = (2.0 * k + 1.0) / x * b - a;
        a = b;
        b = c;
    }
    return {a, b};
}

// Miller's algorithm: recur an arbitrary seed downward from well above the
// turning point, then fix the scale against whichever of j_0, j_1 is larger.
std::pair<double, double> miller_pair(int n, double x) {
    const int start = backward_start(n + 1, x);
    double above = 0.0;
    double cur = 1.0;
    double jn = 0.0;
    double jn1 = 0.0;
    for (int k = start; k >= 1; --k) {
        const double below = (2.0 * k + 1.0) / x * cur - above;
        above = cur;
        cur = below;
        if (k - 1 == n + 1) {
            jn1 = cur;
        } else if (k - 1 == n) {
            jn = cur;
        }
        if (std::abs(cur) > kRescaleAt) {
            cur *= kRescaleBy;
            above *= kRescaleBy;
            jn *= kRescaleBy;
            jn1 *= kRescaleBy;
        }
    }
    const double e0 = j0_closed(x);
    const double e1 = j1_closed(x);
    const double scale = std::abs(e0) >= std::abs(e1) ? e0 / cur : e1 / above;
    return {jn * scale, jn1 * scale};
}

std::pair<double, double> pair_unchecked(int n, double x) {
    if (x == 0.0) {
        return {n == 0 ? 1.0 : 0.0, 0.0};
    }
    if (x < 1.0) {
        return {series(n, x), series(n + 1, x)};
    }
    if (x >= n + 1.0) {
        return upward_pair(n, x);
    }
    return miller_pair(n, x);
}

double bisect_zero(int n, double lo, double hi) {
    double flo = pair_unchecked(n, lo).first;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fmid = pair_unchecked(n, mid).first;
        if (fmid == 0.0) {
            return mid;
        }
        if (std::signbit(fmid) == std::signbit(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    const auto [fx, fx1] = pair_unchecked(n, x);
    // j_n' = (n/x) j_n - j_{n+1}
    const double slope = n / x * fx - fx1;
    if (slope != 0.0) {
        const double step = x - fx / slope;
        if (step >= lo && step <= hi &&
            std::abs(pair_unchecked(n, step).first) <= std::abs(fx)) {
            x = step;
        }
    }
    return x;
}

class ZeroCache {
public:
    double get(int n, int i) {
        {
            std::shared_lock lock(mutex_);
            if (has(n, i)) {
                return orders_[n][i - 1];
            }
        }
        std::unique_lock lock(mutex_);
        ensure(n, i);
        return orders_[n][i - 1];
    }

    std::vector<double> table(int n, int count) {
        {
            std::shared_lock lock(mutex_);
            if (has(n, count)) {
                return {orders_[n].begin(), orders_[n].begin() + count};
            }
        }
        std::unique_lock lock(mutex_);
        ensure(n, count);
        return {orders_[n].begin(), orders_[n].begin() + count};
    }

private:
    bool has(int n, int count) const {
        return static_cast<int>(orders_.size()) > n &&
               static_cast<int>(orders_[n].size()) >= count;
    }

    // Order k needs one more zero than order k+1 to bracket it.
    void ensure(int n, int count) {
        if (static_cast<int>(orders_.size()) <= n) {
            orders_.resize(n + 1);
        }
        for (int k = 0; k <= n; ++k) {
            const int need = count + (n - k);
            auto& zs = orders_[k];
            if (static_cast<int>(zs.size()) >= need) {
                continue;
            }
            zs.reserve(need);
            for (int i = static_cast<int>(zs.size()) + 1; i <= need; ++i) {
                if (k == 0) {
                    zs.push_back(i * std::numbers::pi);
                } else {
                    const auto& prev = orders_[k - 1];
                    zs.push_back(bisect_zero(k, prev[i - 1], prev[i]));
                }
            }
        }
    }

    std::shared_mutex mutex_;
    std::vector<std::vector<double>> orders_;
};

ZeroCache& zero_cache() {
    static ZeroCache cache;
    return cache;
}

void check_zero_request(int n, int i, const Limits& limits) {
    check_order(n, 0.0, limits);
    if (i < 1) {
        throw DomainError("zero index must be >= 1, got " + std::to_string(i));
    }
    if (i > limits.max_index) {
        throw UnsupportedOrder("zero index " + std::to_string(i) + " exceeds max_index " +
                               std::to_string(limits.max_index));
    }
}

} // namespace

std::pair<double, double> spherical_bessel_pair(int n, double x, const Limits& limits) {
    check_order(n, x, limits);
    return pair_unchecked(n, x);
}

double spherical_bessel_j(int n, double x, const Limits& limits) {
    return spherical_bessel_pair(n, x, limits).first;
}

double spherical_bessel_j_prime(int n, double x, const Limits& limits) {
    check_order(n, x, limits);
    if (x == 0.0) {
        return n == 1 ? 1.0 / 3.0 : 0.0;
    }
    if (n == 0) {
        return -pair_unchecked(0, x).second;
    }
    const auto [below, here] = pair_unchecked(n - 1, x);
    return below - (n + 1.0) / x * here;
}

double spherical_bessel_quotient(int n, double x) {
    if (n < 0 || !(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("spherical_bessel_quotient needs n >= 0 and x > 0");
    }
    // ratio = j_{k+1}/j_k obeys ratio_k = x / (2k+3 - x ratio_{k+1}); seed zero.
    double ratio = 0.0;
    for (int k = backward_start(n + 1, x); k >= n + 1; --k) {
        ratio = x / (2.0 * k + 3.0 - x * ratio);
    }
    return (2.0 * n + 3.0) / x - ratio;
}

double spherical_bessel_zero(int n, int i, const Limits& limits) {
    check_zero_request(n, i, limits);
    return zero_cache().get(n, i);
}

BesselZeroTable bessel_zero_table(int n, int count, const Limits& limits) {
    if (count == 0) {
        check_order(n, 0.0, limits);
        return {n, {}};
    }
    check_zero_request(n, count, limits);
    return {n, zero_cache().table(n, count)};
}

double normalized_legendre(int l, int m, double theta) {
    const int am = std::abs(m);
    if (l < 0 || am > l) {
        throw DomainError("associated Legendre function needs 0 <= |m| <= l, got l=" +
                          std::to_string(l) + " m=" + std::to_string(m));
    }
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw DomainError("polar angle must lie in [0, pi]");
    }
    const double x = std::cos(theta);
    const double s = std::sin(theta);
    double pmm = 0.5 / std::sqrt(std::numbers::pi);
    for (int k = 1; k <= am; ++k) {
        pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    }
    double value = pmm;
    if (l > am) {
        double prev = pmm;
        double cur = std::sqrt(2.0 * am + 3.0) * x * pmm;
        for (int ll = am + 2; ll <= l; ++ll) {
            const double a = std::sqrt((4.0 * ll * ll - 1.0) / (double(ll) * ll - double(am) * am));
            const double b = std::sqrt((double(ll - 1) * (ll - 1) - double(am) * am) /
                                       (4.0 * (ll - 1) * (ll - 1) - 1.0));
            const double next = a * (x * cur - b * prev);
            prev = cur;
            cur = next;
        }
        value = cur;
    }
    // Y_{l,-m} = (-1)^m conj(Y_{l,m})
    if (m < 0 && (am % 2) == 1) {
        value = -value;
    }
    return value;
}

double assoc_legendre_density(int l, int m, double theta) {
    const double v = normalized_legendre(l, m, theta);
    return v * v;
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
    return normalized_legendre(l, m, theta) * std::polar(1.0, m * phi);
}

} // namespace rotdirac::specfun
