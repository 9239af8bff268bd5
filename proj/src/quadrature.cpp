#include "harvestkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace harvestkit {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1,1].
constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kGK15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kG7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    cplx value;
    double error;
    long seq;  // insertion order, breaks error ties deterministically
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

Panel eval_gk15(const Integrand1D& f, double a, double b, long seq) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx k15 = kGK15Weights[7] * f(c);
    cplx g7 = kG7Weights[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGK15Nodes[i];
        const cplx fsum = f(c + dx) + f(c - dx);
        k15 += kGK15Weights[i] * fsum;
        if (i % 2 == 1) g7 += kG7Weights[i / 2] * fsum;
    }
    k15 *= h;
    g7 *= h;
    return Panel{a, b, k15, std::abs(k15 - g7), seq};
}

QuadratureResult adaptive_gk(const Integrand1D& f, std::vector<Panel> panels,
                             const QuadratureConfig& cfg) {
    cplx total{0, 0};
    double err = 0;
    for (const auto& p : panels) {
        total += p.value;
        err += p.error;
    }
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap(PanelWorse{},
                                                                    std::move(panels));
    int splits = 0;
    long seq = static_cast<long>(heap.size());
    while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (splits >= cfg.max_subdivisions)
            throw NonConvergence("integrate: max_subdivisions exhausted, error " +
                                 std::to_string(err));
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        Panel p1 = eval_gk15(f, worst.a, mid, seq++);
        Panel p2 = eval_gk15(f, mid, worst.b, seq++);
        total += p1.value + p2.value;
        err += p1.error + p2.error;
        heap.push(p1);
        heap.push(p2);
        ++splits;
    }
    QuadratureResult res;
    res.value = total;
    res.error_estimate = err;
    res.subdivisions_used = splits;
    return res;
}

std::vector<Panel> initial_panels(const Integrand1D& f, double a, double b,
                                  double max_frequency, int cap) {
    int n = 1;
    if (max_frequency > 0) {
        const double period = 2.0 * M_PI / max_frequency;
        n = std::max(1, static_cast<int>(std::ceil((b - a) / period)));
        n = std::min(n, std::max(1, cap));
    }
    std::vector<Panel> panels;
    panels.reserve(n);
    const double h = (b - a) / n;
    for (int i = 0; i < n; ++i) panels.push_back(eval_gk15(f, a + i * h, a + (i + 1) * h, i));
    return panels;
}

}  // namespace

QuadratureResult integrate_interval(const Integrand1D& f, double a, double b,
                                    const QuadratureConfig& cfg, double max_frequency) {
    cfg.validate();
    if (!(a < b)) throw DomainError("integrate_interval: requires a < b");
    return adaptive_gk(f, initial_panels(f, a, b, max_frequency, cfg.max_subdivisions / 2), cfg);
}

QuadratureResult integrate_semi_infinite(const Integrand1D& f, const Envelope& envelope,
                                         const QuadratureConfig& cfg, double max_frequency) {
    cfg.validate();
    const double target = cfg.envelope_cutoff * cfg.abs_tol;

    // Find the truncation point by doubling, checking monotone decrease on the way.
    double prev_k = 0.25;
    double prev_e = envelope(prev_k);
    if (!(prev_e >= 0) || std::isnan(prev_e))
        throw InvalidEnvelope("integrate_semi_infinite: envelope not a valid bound");
    double k_max = prev_k;
    bool found = prev_e <= target;
    while (!found) {
        k_max = prev_k * 2.0;
        const double e = envelope(k_max);
        if (e > prev_e * (1.0 + 1e-12))
            throw InvalidEnvelope("integrate_semi_infinite: envelope increases near k=" +
                                  std::to_string(k_max));
        if (e <= target) {
            found = true;
            // tighten within [prev_k, k_max]
            double lo = prev_k, hi = k_max;
            for (int i = 0; i < 30; ++i) {
                const double mid = 0.5 * (lo + hi);
                if (envelope(mid) <= target)
                    hi = mid;
                else
                    lo = mid;
            }
            k_max = hi;
            break;
        }
        prev_k = k_max;
        prev_e = e;
        if (k_max > 1e12)
            throw NonConvergence("integrate_semi_infinite: envelope does not reach cutoff");
    }

    auto res = adaptive_gk(f, initial_panels(f, 0.0, k_max, max_frequency,
                                             cfg.max_subdivisions / 2),
                           cfg);

    // Tail bound: envelope(k_max) times the effective decay length, read off the
    // envelope's local log-slope (exact for exponentials, asymptotically exact for
    // Gaussian tails).
    const double e0 = envelope(k_max);
    if (e0 > 0) {
        const double h = std::max(1e-6, 1e-3 * k_max);
        const double e1 = envelope(k_max - h);
        double decay_len = 1.0;
        if (e1 > e0) decay_len = h / std::log(e1 / e0);
        res.error_estimate += e0 * decay_len;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Genz-Malik degree 7/5 embedded cubature for n = 2, 3.

namespace {

template <int N>
struct GMBox {
    std::array<double, N> lo, hi;
    cplx value;
    double error;
    int split_axis;
    long seq;
};

template <int N>
struct GMWorse {
    bool operator()(const GMBox<N>& x, const GMBox<N>& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

template <int N, typename F>
GMBox<N> eval_genz_malik(const F& f, const std::array<double, N>& lo,
                         const std::array<double, N>& hi, long seq) {
    static const double l2 = std::sqrt(9.0 / 70.0);
    static const double l3 = std::sqrt(9.0 / 10.0);
    static const double l4 = std::sqrt(9.0 / 10.0);
    static const double l5 = std::sqrt(9.0 / 19.0);
    constexpr double twoN = (N == 2) ? 4.0 : 8.0;
    const double w1 = twoN * (12824.0 - 9120.0 * N + 400.0 * N * N) / 19683.0;
    const double w2 = twoN * 980.0 / 6561.0;
    const double w3 = twoN * (1820.0 - 400.0 * N) / 19683.0;
    const double w4 = twoN * 200.0 / 19683.0;
    const double w5 = 6859.0 / 19683.0;
    const double e1 = twoN * (729.0 - 950.0 * N + 50.0 * N * N) / 729.0;
    const double e2 = twoN * 245.0 / 486.0;
    const double e3 = twoN * (265.0 - 100.0 * N) / 1458.0;
    const double e4 = twoN * 25.0 / 729.0;

    std::array<double, N> c, h;
    double scale = 1.0;
    for (int i = 0; i < N; ++i) {
        c[i] = 0.5 * (lo[i] + hi[i]);
        h[i] = 0.5 * (hi[i] - lo[i]);
        scale *= h[i];
    }

    auto at = [&](const std::array<double, N>& off) {
        std::array<double, N> x;
        for (int i = 0; i < N; ++i) x[i] = c[i] + off[i] * h[i];
        if constexpr (N == 2)
            return f(x[0], x[1]);
        else
            return f(Vec3{x[0], x[1], x[2]});
    };

    const cplx f0 = at(std::array<double, N>{});
    cplx s2{0, 0}, s3{0, 0}, s4{0, 0}, s5{0, 0};
    std::array<double, N> fourth_diff{};
    for (int i = 0; i < N; ++i) {
        std::array<double, N> off{};
        off[i] = l2;
        const cplx p2 = at(off);
        off[i] = -l2;
        const cplx m2 = at(off);
        off[i] = l3;
        const cplx p3 = at(off);
        off[i] = -l3;
        const cplx m3 = at(off);
        s2 += p2 + m2;
        s3 += p3 + m3;
        fourth_diff[i] =
            std::abs((p2 + m2 - 2.0 * f0) - (l2 * l2 / (l3 * l3)) * (p3 + m3 - 2.0 * f0));
    }
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    std::array<double, N> off{};
                    off[i] = si * l4;
                    off[j] = sj * l4;
                    s4 += at(off);
                }
    const int corners = (N == 2) ? 4 : 8;
    for (int mask = 0; mask < corners; ++mask) {
        std::array<double, N> off{};
        for (int i = 0; i < N; ++i) off[i] = (mask >> i & 1) ? l5 : -l5;
        s5 += at(off);
    }

    const cplx rule7 = scale * (w1 * f0 + w2 * s2 + w3 * s3 + w4 * s4 + w5 * s5);
    const cplx rule5 = scale * (e1 * f0 + e2 * s2 + e3 * s3 + e4 * s4);

    int axis = 0;
    double best = -1.0;
    for (int i = 0; i < N; ++i) {
        // prefer the most variable axis, with a nudge toward wider boxes on ties
        const double score = fourth_diff[i] * h[i];
        if (score > best) {
            best = score;
            axis = i;
        }
    }
    return GMBox<N>{lo, hi, rule7, std::abs(rule7 - rule5), axis, seq};
}

template <int N, typename F>
QuadratureResult adaptive_gm(const F& f, const std::array<double, N>& lo,
                             const std::array<double, N>& hi, const QuadratureConfig& cfg) {
    cfg.validate();
    for (int i = 0; i < N; ++i)
        if (!(lo[i] < hi[i])) throw DegenerateBox("integrate: lo >= hi on axis " + std::to_string(i));

    std::vector<GMBox<N>> boxes{eval_genz_malik<N>(f, lo, hi, 0)};
    std::priority_queue<GMBox<N>, std::vector<GMBox<N>>, GMWorse<N>> heap(GMWorse<N>{}, boxes);
    cplx total = boxes[0].value;
    double err = boxes[0].error;
    int splits = 0;
    long seq = 1;
    while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (splits >= cfg.max_subdivisions)
            throw NonConvergence("integrate (cubature): max_subdivisions exhausted, error " +
                                 std::to_string(err));
        GMBox<N> worst = heap.top();
        heap.pop();
        total -= worst.value;
        err -= worst.error;
        const int ax = worst.split_axis;
        const double mid = 0.5 * (worst.lo[ax] + worst.hi[ax]);
        auto lo1 = worst.lo, hi1 = worst.hi, lo2 = worst.lo, hi2 = worst.hi;
        hi1[ax] = mid;
        lo2[ax] = mid;
        GMBox<N> b1 = eval_genz_malik<N>(f, lo1, hi1, seq++);
        GMBox<N> b2 = eval_genz_malik<N>(f, lo2, hi2, seq++);
        total += b1.value + b2.value;
        err += b1.error + b2.error;
        heap.push(b1);
        heap.push(b2);
        ++splits;
    }
    QuadratureResult res;
    res.value = total;
    res.error_estimate = err;
    res.subdivisions_used = splits;
    return res;
}

}  // namespace

QuadratureResult integrate_rect_2d(const Integrand2D& f, const std::array<double, 2>& lo,
                                   const std::array<double, 2>& hi, const QuadratureConfig& cfg) {
    return adaptive_gm<2>(f, lo, hi, cfg);
}

QuadratureResult integrate_box_3d(const Integrand3D& f, const Vec3& lo, const Vec3& hi,
                                  const QuadratureConfig& cfg) {
    return adaptive_gm<3>(f, {lo[0], lo[1], lo[2]}, {hi[0], hi[1], hi[2]}, cfg);
}

}  // namespace harvestkit
