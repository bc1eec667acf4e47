#include "hvqe/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hvqe/rng.hpp"

namespace hvqe {

namespace {

using Point = std::vector<double>;

void check_start(std::span<const double> x0, const OptimizerConfig& config) {
    if (x0.empty()) throw std::invalid_argument("start point must not be empty");
    for (double v : x0)
        if (!std::isfinite(v)) throw std::invalid_argument("start point must be finite");
    if (config.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (config.f_tolerance <= 0.0 || config.x_tolerance <= 0.0)
        throw std::invalid_argument("tolerances must be positive");
}

double inf_distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

// Running best: trace rows are monotone by construction.
class TraceBuilder {
public:
    void offer(double f, const Point& x) {
        if (!have_best_ || f < best_f_) {
            best_f_ = f;
            best_x_ = x;
            have_best_ = true;
        }
    }

    void record(int iteration) {
        trace_.records.push_back({iteration, best_f_, best_x_});
    }

    // SPSA keeps its own incumbent: the current iterate, not the best point.
    void record(int iteration, const Point& incumbent) {
        trace_.records.push_back({iteration, best_f_, incumbent});
    }

    OptimizerTrace finish(TerminalReason reason, std::uint64_t evaluations) && {
        trace_.terminal_reason = reason;
        trace_.evaluations = evaluations;
        return std::move(trace_);
    }

    double best_f() const { return best_f_; }

private:
    OptimizerTrace trace_;
    double best_f_ = 0.0;
    Point best_x_;
    bool have_best_ = false;
};

}  // namespace

double Objective::operator()(std::span<const double> x) {
    ++count_;
    const double value = fn_(x);
    if (!std::isfinite(value))
        throw std::domain_error("objective returned a non-finite value");
    return value;
}

SpsaGains SpsaGains::fixed_half_pi_shift() {
    SpsaGains g;
    g.c = std::numbers::pi / 2.0;
    g.gamma = 0.0;
    return g;
}

std::string to_string(TerminalReason reason) {
    switch (reason) {
        case TerminalReason::converged_f: return "converged_f";
        case TerminalReason::converged_x: return "converged_x";
        case TerminalReason::max_iterations: return "max_iterations";
    }
    return "unknown";
}

std::string to_string(Method method) {
    switch (method) {
        case Method::nelder_mead: return "nelder-mead";
        case Method::powell: return "powell";
        case Method::spsa: return "spsa";
    }
    return "unknown";
}

OptimizerTrace nelder_mead(Objective& objective, std::span<const double> x0,
                           const OptimizerConfig& config) {
    check_start(x0, config);
    const std::size_t n = x0.size();
    const auto& co = config.simplex;

    std::vector<Point> vertex(n + 1, Point(x0.begin(), x0.end()));
    std::vector<double> value(n + 1);
    for (std::size_t i = 1; i <= n; ++i) vertex[i][i - 1] += co.initial_step;
    for (std::size_t i = 0; i <= n; ++i) value[i] = objective(vertex[i]);

    std::vector<std::size_t> order(n + 1);
    const auto sort_order = [&] {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    };

    TraceBuilder trace;
    sort_order();
    trace.offer(value[order[0]], vertex[order[0]]);
    int iteration = 1;
    trace.record(iteration);

    TerminalReason reason = TerminalReason::max_iterations;
    while (true) {
        const std::size_t best = order[0];
        const std::size_t worst = order[n];

        const double f_spread = value[worst] - value[best];
        double x_spread = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            x_spread = std::max(x_spread, inf_distance(vertex[order[i]], vertex[best]));
        if (f_spread <= config.f_tolerance) {
            reason = TerminalReason::converged_f;
            break;
        }
        if (x_spread <= config.x_tolerance) {
            reason = TerminalReason::converged_x;
            break;
        }
        if (iteration >= config.max_iterations) {
            reason = TerminalReason::max_iterations;
            break;
        }

        Point centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += vertex[order[i]][k] / static_cast<double>(n);

        const auto blend = [&](const Point& from, double factor) {
            Point p(n);
            for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + factor * (from[k] - centroid[k]);
            return p;
        };

        int evals_this_step = 0;
        const Point reflected = blend(vertex[worst], -co.reflection);
        const double f_reflected = objective(reflected);
        ++evals_this_step;
        trace.offer(f_reflected, reflected);

        bool shrink = false;
        if (f_reflected < value[order[0]]) {
            const Point expanded = blend(vertex[worst], -co.reflection * co.expansion);
            const double f_expanded = objective(expanded);
            ++evals_this_step;
            trace.offer(f_expanded, expanded);
            if (f_expanded < f_reflected) {
                vertex[worst] = expanded;
                value[worst] = f_expanded;
            } else {
                vertex[worst] = reflected;
                value[worst] = f_reflected;
            }
        } else if (f_reflected < value[order[n - 1]]) {
            vertex[worst] = reflected;
            value[worst] = f_reflected;
        } else {
            // Contract on the better side of the worst vertex.
            const bool outside = f_reflected < value[worst];
            const Point contracted =
                blend(outside ? reflected : vertex[worst], co.contraction);
            const double f_contracted = objective(contracted);
            ++evals_this_step;
            trace.offer(f_contracted, contracted);
            const double bar = outside ? f_reflected : value[worst];
            if (f_contracted <= bar) {
                vertex[worst] = contracted;
                value[worst] = f_contracted;
            } else {
                shrink = true;
                for (std::size_t i = 1; i <= n; ++i) {
                    const std::size_t v = order[i];
                    for (std::size_t k = 0; k < n; ++k)
                        vertex[v][k] = vertex[best][k] + co.shrink * (vertex[v][k] - vertex[best][k]);
                    value[v] = objective(vertex[v]);
                    ++evals_this_step;
                    trace.offer(value[v], vertex[v]);
                }
            }
        }

        sort_order();
        trace.offer(value[order[0]], vertex[order[0]]);
        // A shrink costs n extra evaluations; advancing the counter by the
        // matching number of steps keeps evaluations <= n+1 + 4*iterations.
        iteration += shrink ? (evals_this_step + 3) / 4 : 1;
        trace.record(iteration);
    }

    return std::move(trace).finish(reason, objective.evaluation_count());
}

namespace {

struct LineResult {
    double t = 0.0;
    double f = 0.0;
};

// Golden-section bracketing followed by Brent's parabolic/golden line
// minimization of g(t) = f(x + t d).
LineResult minimize_along(const std::function<double(double)>& g, double g0, double step,
                          double t_tol) {
    constexpr double kGold = 1.618033988749895;

    double a = 0.0, fa = g0;
    double b = step, fb = g(b);
    if (fb > fa) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = b + kGold * (b - a);
    double fc = g(c);
    int guard = 0;
    while (fc < fb && guard++ < 60) {
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        c = b + kGold * (b - a);
        fc = g(c);
    }
    if (a > c) {
        std::swap(a, c);
        std::swap(fa, fc);
    }

    // Brent on [a, c] starting from the bracket minimum b.
    constexpr double kCGold = 0.3819660112501051;
    double x = b, w = b, v = b;
    double fx = fb, fw = fb, fv = fb;
    double d = 0.0, e = 0.0;
    for (int it = 0; it < 100; ++it) {
        const double xm = 0.5 * (a + c);
        const double tol1 = t_tol * std::abs(x) + 1e-12;
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - xm) <= tol2 - 0.5 * (c - a)) break;

        bool golden = true;
        if (std::abs(e) > tol1) {
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double e_old = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) && p < q * (c - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || c - u < tol2) d = xm > x ? tol1 : -tol1;
                golden = false;
            }
        }
        if (golden) {
            e = x >= xm ? a - x : c - x;
            d = kCGold * e;
        }

        const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0 ? tol1 : -tol1);
        const double fu = g(u);
        if (fu <= fx) {
            if (u >= x) a = x; else c = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else c = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    if (fx < g0) return {x, fx};
    return {0.0, g0};
}

}  // namespace

OptimizerTrace powell(Objective& objective, std::span<const double> x0,
                      const OptimizerConfig& config) {
    check_start(x0, config);
    const std::size_t n = x0.size();

    std::vector<Point> directions(n, Point(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) directions[i][i] = 1.0;

    Point x(x0.begin(), x0.end());
    double fx = objective(x);

    TraceBuilder trace;
    trace.offer(fx, x);

    const auto line_min = [&](Point& at, double f_at, const Point& dir) {
        const auto g = [&](double t) {
            Point p(n);
            for (std::size_t k = 0; k < n; ++k) p[k] = at[k] + t * dir[k];
            return objective(p);
        };
        const LineResult r = minimize_along(g, f_at, 0.5, 1e-10);
        if (r.t != 0.0)
            for (std::size_t k = 0; k < n; ++k) at[k] += r.t * dir[k];
        return r.f;
    };

    TerminalReason reason = TerminalReason::max_iterations;
    int sweep = 0;
    while (true) {
        ++sweep;
        const Point x_start = x;
        const double f_start = fx;

        double largest_drop = 0.0;
        std::size_t largest_idx = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double f_before = fx;
            fx = line_min(x, fx, directions[i]);
            if (f_before - fx > largest_drop) {
                largest_drop = f_before - fx;
                largest_idx = i;
            }
        }
        trace.offer(fx, x);
        trace.record(sweep);

        // Same termination contract as nelder_mead: absolute decrease below
        // f_tolerance, displacement below x_tolerance, or the sweep cap.
        if (f_start - fx <= config.f_tolerance) {
            reason = TerminalReason::converged_f;
            break;
        }
        if (inf_distance(x, x_start) <= config.x_tolerance) {
            reason = TerminalReason::converged_x;
            break;
        }
        if (sweep >= config.max_iterations) {
            reason = TerminalReason::max_iterations;
            break;
        }

        // Powell's direction-replacement rule: drop the direction of the
        // largest decrease in favor of the sweep's net displacement when the
        // extrapolated point keeps descending.
        Point extrapolated(n);
        for (std::size_t k = 0; k < n; ++k) extrapolated[k] = 2.0 * x[k] - x_start[k];
        const double f_extra = objective(extrapolated);
        trace.offer(f_extra, extrapolated);
        if (f_extra < f_start) {
            const double df = f_start - fx;
            const double t = 2.0 * (f_start - 2.0 * fx + f_extra) * (df - largest_drop) * (df - largest_drop) -
                             largest_drop * (f_start - f_extra) * (f_start - f_extra);
            if (t < 0.0) {
                Point new_dir(n);
                for (std::size_t k = 0; k < n; ++k) new_dir[k] = x[k] - x_start[k];
                fx = line_min(x, fx, new_dir);
                trace.offer(fx, x);
                directions[largest_idx] = directions[n - 1];
                directions[n - 1] = new_dir;
            }
        }
    }

    return std::move(trace).finish(reason, objective.evaluation_count());
}

OptimizerTrace spsa(Objective& objective, std::span<const double> x0,
                    const OptimizerConfig& config) {
    check_start(x0, config);
    const std::size_t n = x0.size();
    const auto& gains = config.spsa;

    Rng rng(config.seed);
    Point theta(x0.begin(), x0.end());

    TraceBuilder trace;
    TerminalReason reason = TerminalReason::max_iterations;
    int small_steps = 0;
    for (int k = 0; k < config.max_iterations; ++k) {
        const double ak = gains.a / std::pow(k + 1 + gains.big_a, gains.alpha);
        const double ck = gains.c / std::pow(k + 1, gains.gamma);

        Point delta(n);
        for (std::size_t i = 0; i < n; ++i) delta[i] = rng.sign();

        Point plus(n), minus(n);
        for (std::size_t i = 0; i < n; ++i) {
            plus[i] = theta[i] + ck * delta[i];
            minus[i] = theta[i] - ck * delta[i];
        }
        const double f_plus = objective(plus);
        const double f_minus = objective(minus);
        trace.offer(f_plus, plus);
        trace.offer(f_minus, minus);

        const double diff = (f_plus - f_minus) / (2.0 * ck);
        double step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double update = ak * diff / delta[i];
            theta[i] -= update;
            step = std::max(step, std::abs(update));
        }
        trace.record(k + 1, theta);

        small_steps = step <= config.x_tolerance ? small_steps + 1 : 0;
        if (small_steps >= 10) {
            reason = TerminalReason::converged_x;
            break;
        }
    }

    // The budget's one non-perturbed evaluation goes to the final iterate;
    // the perturbed points sit a distance c_k off and never converge
    // themselves. Folded into the last record so the iteration count and the
    // 2k+1 evaluation count stay aligned.
    OptimizerTrace result = std::move(trace).finish(reason, 0);
    const double f_final = objective(theta);
    TraceRecord& last = result.records.back();
    if (f_final < last.best_energy) last.best_energy = f_final;
    last.parameters = theta;
    result.evaluations = objective.evaluation_count();
    return result;
}

OptimizerTrace minimize(Objective& objective, std::span<const double> x0,
                        const OptimizerConfig& config) {
    switch (config.method) {
        case Method::nelder_mead: return nelder_mead(objective, x0, config);
        case Method::powell: return powell(objective, x0, config);
        case Method::spsa: return spsa(objective, x0, config);
    }
    throw std::invalid_argument("unknown optimizer method");
}

}  // namespace hvqe
