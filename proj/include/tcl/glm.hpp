#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "tcl/dataset.hpp"
#include "tcl/link.hpp"

namespace tcl {

// Which column of a Dataset plays the GLM response.
enum class Response { Treatment, Outcome };

struct GlmFit {
    LinkKind link = LinkKind::Sigmoid;
    Vectord coefficients;
};

struct SolverConfig {
    int max_iters = 8000;
    double initial_step = 0.02;
    double step_decay = 0.5;   // multiplies the step every decay_every iterations
    int decay_every = 2000;
    double tolerance = 1e-10;  // relative objective change for early stopping
    double lambda = 0.0;       // l1 strength on the optimized vector
    bool backtracking = false; // halve the step until sufficient decrease
};

struct SolveTrace {
    int iterations_run = 0;
    double final_objective = 0.0;
    bool converged = false;
    std::vector<double> objective_history;  // composite objective per iteration
};

// Coordinate-wise soft threshold: sign(v) * max(|v| - t, 0).
template <typename Derived>
Vector<typename Derived::Scalar> soft_threshold(const Eigen::MatrixBase<Derived>& v,
                                                typename Derived::Scalar t) {
    using Scalar = typename Derived::Scalar;
    return v.array().sign() * (v.array().abs() - t).max(Scalar(0));
}

// Mean negative log-likelihood (1/n) sum_i [-r_i eta_i + G(eta_i)], eta = X b.
// The response-independent normalizer is dropped. Throws numeric_error naming
// the first row whose index leaves the link domain.
template <typename DerivedX, typename DerivedR, typename DerivedB>
typename DerivedX::Scalar glm_nll(const Eigen::MatrixBase<DerivedX>& x,
                                  const Eigen::MatrixBase<DerivedR>& response,
                                  const Eigen::MatrixBase<DerivedB>& coef, LinkKind link,
                                  Vector<typename DerivedX::Scalar>* grad = nullptr) {
    using Scalar = typename DerivedX::Scalar;
    const Index n = x.rows();
    Vector<Scalar> eta = x * coef;
    for (Index i = 0; i < n; ++i) {
        if (!in_link_domain(link, eta[i])) {
            throw numeric_error("linear index outside link domain at row " + std::to_string(i + 1));
        }
    }
    Scalar total = Scalar(0);
    for (Index i = 0; i < n; ++i) {
        total += -response[i] * eta[i] + cumulant(link, eta[i]);
    }
    if (grad != nullptr) {
        Vector<Scalar> mean(n);
        for (Index i = 0; i < n; ++i) mean[i] = link_mean(link, eta[i]) - response[i];
        *grad = (x.transpose() * mean) / Scalar(n);
    }
    return total / Scalar(n);
}

const Vectord& response_vector(const Dataset& data, Response response);

double nll(const Dataset& data, Response response, const GlmFit& fit);
Vectord nll_gradient(const Dataset& data, Response response, const GlmFit& fit);

// Proximal-gradient minimization of loss(x) + lambda * ||x||_1 starting from
// `init` (zero when absent). `loss` is called as loss(x, &grad) and must
// return the smooth value; with backtracking enabled, steps whose candidate
// leaves the loss domain (numeric_error) are rejected and the step halved.
// The trace records the composite objective at the start and after every
// iteration; convergence is declared after 10 consecutive iterations whose
// relative objective change stays below cfg.tolerance.
template <typename Loss>
std::pair<Vectord, SolveTrace> proximal_minimize(const Loss& loss, Index dim,
                                                 const SolverConfig& cfg,
                                                 const Vectord* init = nullptr) {
    if (cfg.max_iters < 1) throw validation_error("solver requires max_iters >= 1");
    if (cfg.tolerance <= 0) throw validation_error("solver requires tolerance > 0");
    if (cfg.initial_step <= 0) throw validation_error("solver requires initial_step > 0");
    if (cfg.lambda < 0) throw validation_error("l1 strength must be nonnegative");

    constexpr int kConvergenceWindow = 10;
    constexpr int kMaxHalvings = 60;

    Vectord x = init != nullptr ? *init : Vectord::Zero(dim);
    Vectord grad(dim);
    double smooth = loss(x, &grad);
    double objective = smooth + cfg.lambda * x.template lpNorm<1>();

    SolveTrace trace;
    trace.objective_history.reserve(static_cast<std::size_t>(cfg.max_iters) + 1);
    trace.objective_history.push_back(objective);

    int calm_iters = 0;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        double step = cfg.initial_step;
        if (cfg.decay_every > 0 && cfg.step_decay != 1.0) {
            step *= std::pow(cfg.step_decay, iter / cfg.decay_every);
        }

        Vectord candidate;
        double cand_smooth = 0.0;
        Vectord cand_grad(dim);
        if (cfg.backtracking) {
            bool accepted = false;
            for (int h = 0; h < kMaxHalvings; ++h) {
                candidate = soft_threshold(x - step * grad, step * cfg.lambda);
                bool in_domain = true;
                try {
                    cand_smooth = loss(candidate, &cand_grad);
                } catch (const numeric_error&) {
                    in_domain = false;
                }
                if (in_domain) {
                    const Vectord diff = candidate - x;
                    const double bound =
                        smooth + grad.dot(diff) + diff.squaredNorm() / (2.0 * step);
                    if (cand_smooth <= bound + 1e-15 * std::abs(bound)) {
                        accepted = true;
                        break;
                    }
                }
                step *= 0.5;
            }
            if (!accepted) {
                candidate = x;
                cand_smooth = smooth;
                cand_grad = grad;
            }
        } else {
            candidate = soft_threshold(x - step * grad, step * cfg.lambda);
            cand_smooth = loss(candidate, &cand_grad);
        }

        x = std::move(candidate);
        smooth = cand_smooth;
        grad = std::move(cand_grad);
        const double next_objective = smooth + cfg.lambda * x.template lpNorm<1>();
        trace.objective_history.push_back(next_objective);
        ++trace.iterations_run;

        const double rel_change =
            std::abs(objective - next_objective) / std::max(1.0, std::abs(objective));
        objective = next_objective;
        calm_iters = rel_change < cfg.tolerance ? calm_iters + 1 : 0;
        if (calm_iters >= kConvergenceWindow) {
            trace.converged = true;
            break;
        }
    }
    trace.final_objective = objective;
    return {std::move(x), std::move(trace)};
}

// Unpenalized MLE via the proximal solver with zero l1 strength.
// cfg.lambda must be zero. Non-convergence is reported in the trace,
// not raised; separable classification data is the expected cause.
std::pair<GlmFit, SolveTrace> fit_mle(const Dataset& data, Response response, LinkKind link,
                                      const SolverConfig& cfg);

// Minimizes mean NLL at (reference + delta) plus lambda * ||delta||_1 over the
// deviation vector, starting from delta = 0.
std::pair<Vectord, SolveTrace> fit_l1_deviation(const Dataset& data, Response response,
                                                LinkKind link, const GlmFit& reference,
                                                const SolverConfig& cfg);

}  // namespace tcl
