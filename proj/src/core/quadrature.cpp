#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace abcalc::quad {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Beyond this |t| the complement underflows: π·sinh(6.1) > 700.
constexpr double kTanhSinhTMax = 6.1;
constexpr int kMinTanhSinhLevel = 3;

// Kronrod nodes (positive half, descending) and weights; every odd index is a
// Gauss node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    Complex value{};
    double err = 0.0;
    double abs_sum = 0.0;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const RealIntegrand& g, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = g(center);
    Complex resk = fc * kWgk[7];
    Complex resg = fc * kWg[3];
    double abs_sum = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const Complex f1 = g(center - dx);
        const Complex f2 = g(center + dx);
        resk += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * half;
    p.err = std::abs((resk - resg) * half);
    p.abs_sum = abs_sum * std::abs(half);
    return p;
}

}  // namespace

QuadratureResult tanh_sinh(const UnitIntegrand& g, double rel_tol) {
    // x = 1/(1+e^{-s}), 1-x = 1/(1+e^{s}), s = π sinh t, dx/dt = x(1-x)π cosh t
    Complex sum{};
    double abs_sum = 0.0;
    long nodes = 0;
    auto node = [&](double t) {
        const double s = kPi * std::sinh(t);
        double x = 0.0;
        double xc = 0.0;
        if (s >= 0.0) {
            const double e = std::exp(-s);
            x = 1.0 / (1.0 + e);
            xc = e / (1.0 + e);
        } else {
            const double e = std::exp(s);
            x = e / (1.0 + e);
            xc = 1.0 / (1.0 + e);
        }
        if (x == 0.0 || xc == 0.0) return;
        const double w = x * xc * kPi * std::cosh(t);
        if (w == 0.0) return;
        const Complex v = g(x, xc);
        ++nodes;
        if (!is_finite(v)) return;
        sum += w * v;
        abs_sum += w * std::abs(v);
    };

    double h = 1.0;
    for (double t = 0.0; t <= kTanhSinhTMax; t += h) {
        node(t);
        if (t > 0.0) node(-t);
    }
    Complex prev = sum * h;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= kMaxTanhSinhLevel; ++level) {
        h *= 0.5;
        for (double t = h; t <= kTanhSinhTMax; t += 2.0 * h) {
            node(t);
            node(-t);
        }
        const Complex cur = sum * h;
        err = std::abs(cur - prev);
        const double floor = 100.0 * kEps * abs_sum * h;
        if (level >= kMinTanhSinhLevel && err <= std::max(rel_tol * std::abs(cur), floor)) {
            return {cur, std::max(err, floor), nodes};
        }
        prev = cur;
    }
    throw Error(ErrorCode::ToleranceNotReached,
                "tanh-sinh quadrature: error estimate " + std::to_string(err) + " above tolerance");
}

QuadratureResult gauss_kronrod(const RealIntegrand& g, double a, double b, double tol) {
    std::priority_queue<Panel> heap;
    Panel first = gk15(g, a, b);
    Complex total = first.value;
    double err = first.err;
    double abs_sum = first.abs_sum;
    long nodes = 15;
    heap.push(first);
    int panels = 1;
    for (;;) {
        const double floor = 50.0 * kEps * abs_sum;
        if (err <= std::max(tol * (1.0 + std::abs(total)), floor)) {
            return {total, std::max(err, floor), nodes};
        }
        if (panels >= kMaxPanels) break;
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(g, worst.a, mid);
        Panel right = gk15(g, mid, worst.b);
        nodes += 30;
        ++panels;
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        abs_sum += left.abs_sum + right.abs_sum - worst.abs_sum;
        heap.push(left);
        heap.push(right);
        if (panels % 64 == 0) {
            // refresh running sums against drift
            std::vector<Panel> all;
            total = {};
            err = 0.0;
            abs_sum = 0.0;
            while (!heap.empty()) {
                all.push_back(heap.top());
                heap.pop();
            }
            for (const Panel& p : all) {
                total += p.value;
                err += p.err;
                abs_sum += p.abs_sum;
                heap.push(p);
            }
        }
    }
    throw Error(ErrorCode::ToleranceNotReached,
                "adaptive quadrature: " + std::to_string(kMaxPanels) + " panels exhausted, error estimate " +
                    std::to_string(err));
}

}  // namespace abcalc::quad
