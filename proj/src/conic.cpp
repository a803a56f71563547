// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include "pinchsec/conic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <Eigen/Dense>

namespace pinchsec::conic {

const char* to_string(ConeKind kind)
{
    switch (kind) {
    case ConeKind::Zero:
        return "ZERO";
    case ConeKind::Nonneg:
        return "NONNEG";
    case ConeKind::SecondOrder:
        return "SOC";
    case ConeKind::Exponential:
        return "EXP";
    }
    return "?";
}

const char* to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::Optimal:
        return "optimal";
    case SolveStatus::Infeasible:
        return "infeasible";
    case SolveStatus::Unbounded:
        return "unbounded";
    case SolveStatus::IterLimit:
        return "iter_limit";
    case SolveStatus::NumericalFailure:
        return "numerical_failure";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// AffineExpr

AffineExpr AffineExpr::var(int index, double coef)
{
    AffineExpr e;
    e.terms.emplace_back(index, coef);
    return e;
}

AffineExpr& AffineExpr::add(int index, double coef)
{
    terms.emplace_back(index, coef);
    return *this;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& other)
{
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
    constant += other.constant;
    return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& other)
{
    for (const auto& [i, c] : other.terms)
        terms.emplace_back(i, -c);
    constant -= other.constant;
    return *this;
}

AffineExpr& AffineExpr::operator*=(double s)
{
    for (auto& term : terms)
        term.second *= s;
    constant *= s;
    return *this;
}

double AffineExpr::evaluate(std::span<const double> x) const
{
    double v = constant;
    for (const auto& [i, c] : terms)
        v += c * x[i];
    return v;
}

AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
AffineExpr operator*(double s, AffineExpr a) { return a *= s; }

// ---------------------------------------------------------------------------
// ConicProblem

int ConicProblem::add_variable(std::string name)
{
    names_.push_back(std::move(name));
    objective_.conservativeResize(num_vars());
    objective_(num_vars() - 1) = 0.0;
    for (auto& block : blocks_) {
        block.A.conservativeResize(Eigen::NoChange, num_vars());
        block.A.col(num_vars() - 1).setZero();
    }
    return num_vars() - 1;
}

void ConicProblem::set_objective(const AffineExpr& objective)
{
    objective_.setZero(num_vars());
    for (const auto& [i, c] : objective.terms) {
        if (i < 0 || i >= num_vars())
            throw std::invalid_argument("objective references unknown variable");
        objective_(i) += c;
    }
    objective_constant_ = objective.constant;
}

void ConicProblem::add_block(ConeKind kind, const std::vector<AffineExpr>& rows, std::string label)
{
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), num_vars());
    Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [i, c] : rows[r].terms) {
            if (i < 0 || i >= num_vars())
                throw std::invalid_argument("cone block references unknown variable");
            A(static_cast<Eigen::Index>(r), i) += c;
        }
        b(static_cast<Eigen::Index>(r)) = rows[r].constant;
    }
    add_block(kind, std::move(A), std::move(b), std::move(label));
}

void ConicProblem::add_block(ConeKind kind, Eigen::MatrixXd A, Eigen::VectorXd b, std::string label)
{
    blocks_.push_back({kind, std::move(A), std::move(b), std::move(label)});
}

void ConicProblem::validate() const
{
    if (objective_.size() != num_vars())
        throw std::invalid_argument("objective size does not match variable count");
    for (const auto& block : blocks_) {
        if (block.A.cols() != num_vars() || block.A.rows() != block.b.size())
            throw std::invalid_argument("cone block '" + block.label + "' has inconsistent dimensions");
        if (block.dim() == 0)
            throw std::invalid_argument("cone block '" + block.label + "' is empty");
        if (block.kind == ConeKind::Exponential && block.dim() != 3)
            throw std::invalid_argument("exponential cone block '" + block.label + "' must have dimension 3");
        if (!block.A.allFinite() || !block.b.allFinite())
            throw std::invalid_argument("cone block '" + block.label + "' has non-finite data");
    }
    if (!objective_.allFinite())
        throw std::invalid_argument("objective has non-finite data");
}

// ---------------------------------------------------------------------------
// Barrier functions

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double barrier_parameter(ConeKind kind, int dim)
{
    switch (kind) {
    case ConeKind::Nonneg:
        return dim;
    case ConeKind::SecondOrder:
        return 2.0;
    case ConeKind::Exponential:
        return 3.0;
    case ConeKind::Zero:
        break;
    }
    return 0.0;
}

bool interior(ConeKind kind, const VectorXd& s)
{
    switch (kind) {
    case ConeKind::Nonneg:
        return (s.array() > 0.0).all();
    case ConeKind::SecondOrder: {
        const double t = s(0);
        const double zn = s.tail(s.size() - 1).norm();
        return t > zn && (t - zn) * (t + zn) > 0.0;
    }
    case ConeKind::Exponential: {
        const double u = s(0), v = s(1), w = s(2);
        if (!(v > 0.0 && w > 0.0))
            return false;
        const double psi = v * std::log(w / v) - u;
        return psi > 0.0 && std::isfinite(psi);
    }
    case ConeKind::Zero:
        break;
    }
    return false;
}

// Adds the barrier gradient and Hessian of one block at interior point s.
double barrier(ConeKind kind, const VectorXd& s, VectorXd* grad, MatrixXd* hess)
{
    const Eigen::Index d = s.size();
    switch (kind) {
    case ConeKind::Nonneg: {
        if (grad)
            *grad = -s.cwiseInverse();
        if (hess)
            *hess = s.cwiseInverse().cwiseAbs2().asDiagonal();
        return -s.array().log().sum();
    }
    case ConeKind::SecondOrder: {
        const double t = s(0);
        const VectorXd z = s.tail(d - 1);
        const double zn = z.norm();
        const double q = (t - zn) * (t + zn);
        if (grad) {
            grad->resize(d);
            (*grad)(0) = -2.0 * t / q;
            grad->tail(d - 1) = 2.0 * z / q;
        }
        if (hess) {
            VectorXd dq(d);
            dq(0) = 2.0 * t;
            dq.tail(d - 1) = -2.0 * z;
            *hess = dq * dq.transpose() / (q * q);
            hess->diagonal().array() += 2.0 / q;
            (*hess)(0, 0) -= 4.0 / q;
        }
        return -std::log(q);
    }
    case ConeKind::Exponential: {
        const double u = s(0), v = s(1), w = s(2);
        const double lg = std::log(w / v);
        const double psi = v * lg - u;
        if (grad || hess) {
            const Eigen::Vector3d dpsi(-1.0, lg - 1.0, v / w);
            if (grad) {
                *grad = -dpsi / psi;
                (*grad)(1) -= 1.0 / v;
                (*grad)(2) -= 1.0 / w;
            }
            if (hess) {
                Eigen::Matrix3d d2psi = Eigen::Matrix3d::Zero();
                d2psi(1, 1) = -1.0 / v;
                d2psi(1, 2) = d2psi(2, 1) = 1.0 / w;
                d2psi(2, 2) = -v / (w * w);
                Eigen::Matrix3d h = dpsi * dpsi.transpose() / (psi * psi) - d2psi / psi;
                h(1, 1) += 1.0 / (v * v);
                h(2, 2) += 1.0 / (w * w);
                *hess = h;
            }
        }
        return -std::log(psi) - std::log(v) - std::log(w);
    }
    case ConeKind::Zero:
        break;
    }
    return 0.0;
}

// A unit direction in the interior of each cone, used by phase I.
VectorXd interior_direction(ConeKind kind, int dim)
{
    VectorXd e = VectorXd::Zero(dim);
    switch (kind) {
    case ConeKind::Nonneg:
        e.setOnes();
        break;
    case ConeKind::SecondOrder:
        e(0) = 1.0;
        break;
    case ConeKind::Exponential:
        e << -1.0, 1.0, 1.0;
        break;
    case ConeKind::Zero:
        break;
    }
    return e;
}

// Smallest shift s (up to bisection accuracy) with value + s e interior.
double required_shift(ConeKind kind, const VectorXd& value)
{
    switch (kind) {
    case ConeKind::Nonneg:
        return -value.minCoeff();
    case ConeKind::SecondOrder:
        return value.tail(value.size() - 1).norm() - value(0);
    case ConeKind::Exponential: {
        const VectorXd e = interior_direction(kind, 3);
        auto ok = [&](double s) { return interior(kind, value + s * e); };
        double lo = std::max(-value(1), -value(2));
        double hi = std::max(lo, 0.0) + 1.0;
        while (!ok(hi))
            hi = 2.0 * hi + 1.0;
        for (int i = 0; i < 100 && hi - lo > 1e-12 * (1.0 + std::abs(hi)); ++i) {
            const double mid = 0.5 * (lo + hi);
            (ok(mid) ? hi : lo) = mid;
        }
        return hi;
    }
    case ConeKind::Zero:
        break;
    }
    return 0.0;
}

struct Block {
    ConeKind kind;
    MatrixXd A;
    VectorXd b;
};

constexpr double kCentered = 1e-10;
constexpr double kGrowth = 50.0;

// Minimizes t * cost.z + sum_i F_i(A_i z + b_i) by damped Newton.
class Centering {
public:
    Centering(const std::vector<Block>& blocks, VectorXd cost) : blocks_(blocks), cost_(std::move(cost)) {}

    bool feasible(const VectorXd& z) const
    {
        for (const auto& blk : blocks_)
            if (!interior(blk.kind, blk.A * z + blk.b))
                return false;
        return true;
    }

    double value(double t, const VectorXd& z) const
    {
        double f = t * cost_.dot(z);
        for (const auto& blk : blocks_)
            f += barrier(blk.kind, blk.A * z + blk.b, nullptr, nullptr);
        return f;
    }

    void derivatives(double t, const VectorXd& z, VectorXd& grad, MatrixXd& hess) const
    {
        grad = t * cost_;
        hess.setZero(z.size(), z.size());
        VectorXd g;
        MatrixXd h;
        for (const auto& blk : blocks_) {
            barrier(blk.kind, blk.A * z + blk.b, &g, &h);
            grad.noalias() += blk.A.transpose() * g;
            hess.noalias() += blk.A.transpose() * h * blk.A;
        }
    }

    enum class Outcome { Centered, Stalled, Budget, Diverged, Failed, Stopped };

    /// Newton iterations from a strictly feasible z; `stop` is checked after
    /// every accepted step.
    template <class Stop>
    Outcome run(double t, VectorXd& z, int& budget, Stop&& stop, double* residual = nullptr) const
    {
        VectorXd grad;
        MatrixXd hess;
        double previous = std::numeric_limits<double>::infinity();
        for (int inner = 0; inner < 100; ++inner) {
            if (budget <= 0)
                return Outcome::Budget;
            derivatives(t, z, grad, hess);
            VectorXd dz;
            if (!newton_step(hess, grad, dz))
                return Outcome::Failed;
            const double decrement = -grad.dot(dz);
            if (residual)
                *residual = std::sqrt(std::max(decrement, 0.0)) / t;
            if (!std::isfinite(decrement))
                return Outcome::Failed;
            if (decrement < 0.0 || decrement / 2.0 <= kCentered)
                return Outcome::Centered;
            // Rounding noise in the gradient sets a floor on the decrement.
            if (decrement < 1e-5 && decrement > 0.25 * previous)
                return Outcome::Centered;
            previous = decrement;

            double step = 1.0;
            int halvings = 0;
            while (!feasible(z + step * dz)) {
                step *= 0.5;
                if (++halvings > 40)
                    return decrement < 1e-3 ? Outcome::Centered : Outcome::Stalled;
            }
            // Inside the quadratic-convergence region the full step always
            // decreases the barrier, so only far from the center is the
            // sufficient-decrease test needed.
            if (decrement >= 0.05) {
                const double f0 = value(t, z);
                const double slope = grad.dot(dz);
                while (value(t, z + step * dz) > f0 + 0.25 * step * slope) {
                    step *= 0.5;
                    if (++halvings > 40)
                        return decrement < 1e-3 ? Outcome::Centered : Outcome::Stalled;
                }
            }
            z += step * dz;
            --budget;
            if (!z.allFinite())
                return Outcome::Failed;
            if (z.lpNorm<Eigen::Infinity>() > 1e15)
                return Outcome::Diverged;
            if (stop(z))
                return Outcome::Stopped;
        }
        return Outcome::Stalled;
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    const VectorXd& cost() const { return cost_; }

private:
    static bool newton_step(const MatrixXd& hess, const VectorXd& grad, VectorXd& dz)
    {
        Eigen::LLT<MatrixXd> llt(hess);
        if (llt.info() == Eigen::Success) {
            dz = llt.solve(-grad);
            if (dz.allFinite())
                return true;
        }
        const double scale = std::max(1.0, hess.diagonal().cwiseAbs().maxCoeff());
        MatrixXd reg = hess;
        reg.diagonal().array() += 1e-13 * scale;
        Eigen::LDLT<MatrixXd> ldlt(reg);
        if (ldlt.info() != Eigen::Success)
            return false;
        dz = ldlt.solve(-grad);
        return dz.allFinite();
    }

    const std::vector<Block>& blocks_;
    VectorXd cost_;
};

// Weight whose central-path residual is smallest at y, i.e. the
// least-squares fit of t cost + grad F = 0 in the Hessian norm.
double initial_weight(const Centering& path, const VectorXd& y, double nu, double objective)
{
    VectorXd g0;
    MatrixXd h;
    path.derivatives(0.0, y, g0, h);
    const VectorXd cost = path.cost();
    Eigen::LDLT<MatrixXd> ldlt(h);
    const VectorXd hc = ldlt.solve(cost);
    const double denom = cost.dot(hc);
    const double fallback = nu / (1.0 + std::abs(objective));
    if (!(denom > 0.0) || !hc.allFinite())
        return fallback;
    const double t = -g0.dot(hc) / denom;
    return std::isfinite(t) && t > 1e-8 ? t : std::max(fallback, 1e-8);
}

double total_parameter(const std::vector<Block>& blocks)
{
    double nu = 0.0;
    for (const auto& blk : blocks)
        nu += barrier_parameter(blk.kind, static_cast<int>(blk.b.size()));
    return nu;
}

}  // namespace

// ---------------------------------------------------------------------------
// solve

ConicSolution solve(const ConicProblem& problem, const SolverOptions& options, std::span<const double> start)
{
    problem.validate();
    const int n = problem.num_vars();
    ConicSolution sol;
    sol.x = VectorXd::Zero(n);

    // Equality elimination: x = x0 + Z y.
    std::vector<const ConeBlock*> eq;
    for (const auto& blk : problem.blocks())
        if (blk.kind == ConeKind::Zero)
            eq.push_back(&blk);
    VectorXd x0 = VectorXd::Zero(n);
    MatrixXd Z = MatrixXd::Identity(n, n);
    if (!eq.empty()) {
        Eigen::Index rows = 0;
        for (auto* blk : eq)
            rows += blk->dim();
        MatrixXd Aeq(rows, n);
        VectorXd beq(rows);
        Eigen::Index r = 0;
        for (auto* blk : eq) {
            Aeq.middleRows(r, blk->dim()) = blk->A;
            beq.segment(r, blk->dim()) = blk->b;
            r += blk->dim();
        }
        Eigen::JacobiSVD<MatrixXd> svd(Aeq, Eigen::ComputeFullU | Eigen::ComputeFullV);
        svd.setThreshold(1e-12);
        x0 = svd.solve(-beq);
        const double res = (Aeq * x0 + beq).norm();
        if (res > 1e-9 * (1.0 + beq.norm())) {
            sol.status = SolveStatus::Infeasible;
            sol.primal_residual = res;
            return sol;
        }
        const Eigen::Index rank = svd.rank();
        Z = svd.matrixV().rightCols(n - rank);
        if (!start.empty()) {
            const Eigen::Map<const VectorXd> s0(start.data(), n);
            x0 += MatrixXd(Z * Z.transpose()) * (s0 - x0);
        }
    } else if (!start.empty()) {
        x0 = Eigen::Map<const VectorXd>(start.data(), n);
    }

    const Eigen::Index m = Z.cols();
    std::vector<Block> blocks;
    for (const auto& blk : problem.blocks())
        if (blk.kind != ConeKind::Zero)
            blocks.push_back({blk.kind, blk.A * Z, blk.A * x0 + blk.b});
    const VectorXd c = Z.transpose() * problem.objective();

    auto finish = [&](const VectorXd& y, SolveStatus status) {
        sol.x = x0 + Z * y;
        sol.objective = problem.objective().dot(sol.x) + problem.objective_constant();
        sol.status = status;
        sol.primal_residual = max_violation(problem, sol.x);
        return sol;
    };

    if (m == 0) {
        VectorXd y(0);
        sol.x = x0;
        const bool ok = max_violation(problem, x0) <= options.tol;
        return finish(y, ok ? SolveStatus::Optimal : SolveStatus::Infeasible);
    }
    if (blocks.empty()) {
        VectorXd y = VectorXd::Zero(m);
        return finish(y, c.norm() <= 1e-14 ? SolveStatus::Optimal : SolveStatus::Unbounded);
    }

    const double nu = total_parameter(blocks);
    int budget = options.max_iter;
    VectorXd y = VectorXd::Zero(m);

    // Phase I: minimize s subject to A_i y + b_i + s e_i in int K_i.
    double shift = -std::numeric_limits<double>::infinity();
    for (const auto& blk : blocks)
        shift = std::max(shift, required_shift(blk.kind, blk.A * y + blk.b));
    if (shift >= 0.0) {
        enum class PhaseOne { Found, Infeasible, IterLimit, Failed };
        const double nu1 = nu + 2.0;
        VectorXd z(m + 1);
        // Minimizes the shift inside a ball around the start; the ball keeps
        // iterates away from far-off recession directions of the cones.
        auto phase_one = [&](double radius) {
            std::vector<Block> aug;
            aug.reserve(blocks.size() + 1);
            for (const auto& blk : blocks) {
                Block a{blk.kind, MatrixXd(blk.A.rows(), m + 1), blk.b};
                a.A.leftCols(m) = blk.A;
                a.A.col(m) = interior_direction(blk.kind, static_cast<int>(blk.b.size()));
                aug.push_back(std::move(a));
            }
            Block ball{ConeKind::SecondOrder, MatrixXd::Zero(m + 1, m + 1), VectorXd::Zero(m + 1)};
            ball.A.bottomLeftCorner(m, m).setIdentity();
            ball.b(0) = radius;
            aug.push_back(std::move(ball));
            VectorXd cost = VectorXd::Zero(m + 1);
            cost(m) = 1.0;
            Centering phase1(aug, cost);
            z.head(m).setZero();
            z(m) = shift + 0.01 * (1.0 + 0.1 * std::abs(shift));
            auto below_zero = [m](const VectorXd& v) { return v(m) < 0.0; };
            double t = nu1 / std::max(z(m), 1e-6);
            for (int outer = 0; outer < 60; ++outer) {
                const auto outcome = phase1.run(t, z, budget, below_zero);
                if (outcome == Centering::Outcome::Stopped || z(m) < 0.0)
                    return PhaseOne::Found;
                if (outcome == Centering::Outcome::Budget)
                    return PhaseOne::IterLimit;
                if (outcome == Centering::Outcome::Failed)
                    return PhaseOne::Failed;
                // A centred phase-I point bounds the optimal shift from below.
                if (outcome == Centering::Outcome::Centered && z(m) - nu1 / t > 0.0)
                    return PhaseOne::Infeasible;
                if (nu1 / t < 1e-13 * (1.0 + std::abs(z(m))))
                    return PhaseOne::Infeasible;
                t *= kGrowth;
            }
            return PhaseOne::Failed;
        };

        PhaseOne result = PhaseOne::Infeasible;
        for (double radius = 10.0 * (1.0 + x0.lpNorm<Eigen::Infinity>()); radius < 1e14; radius *= 1e3) {
            result = phase_one(radius);
            if (result != PhaseOne::Infeasible)
                break;
        }
        sol.iterations = options.max_iter - budget;
        switch (result) {
        case PhaseOne::Found:
            break;
        case PhaseOne::Infeasible:
            return finish(z.head(m), SolveStatus::Infeasible);
        case PhaseOne::IterLimit:
            return finish(z.head(m), SolveStatus::IterLimit);
        case PhaseOne::Failed:
            return finish(z.head(m), SolveStatus::NumericalFailure);
        }
        y = z.head(m);
    }

    // Phase II: central path for minimize -c.y.
    Centering phase2(blocks, -c);
    if (!phase2.feasible(y)) {
        sol.iterations = options.max_iter - budget;
        return finish(y, SolveStatus::NumericalFailure);
    }
    const double offset = problem.objective().dot(x0) + problem.objective_constant();
    double t = initial_weight(phase2, y, nu, c.dot(y) + offset);
    auto never = [](const VectorXd&) { return false; };
    double residual = 0.0;
    for (;;) {
        const auto outcome = phase2.run(t, y, budget, never, &residual);
        sol.iterations = options.max_iter - budget;
        sol.dual_residual = residual;
        const double obj = c.dot(y) + offset;
        sol.gap = nu / t / std::max(1.0, std::abs(obj));
        if (outcome == Centering::Outcome::Diverged)
            return finish(y, SolveStatus::Unbounded);
        if (outcome == Centering::Outcome::Failed)
            return finish(y, SolveStatus::NumericalFailure);
        if (outcome == Centering::Outcome::Budget)
            return finish(y, SolveStatus::IterLimit);
        if (std::abs(c.dot(y)) > 1e14)
            return finish(y, SolveStatus::Unbounded);
        if (sol.gap <= options.tol)
            return finish(y, SolveStatus::Optimal);
        t *= kGrowth;
    }
}

// ---------------------------------------------------------------------------
// Residual evaluation and text output

std::vector<double> block_violations(const ConicProblem& problem, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != problem.num_vars())
        throw std::invalid_argument("block_violations: point has wrong dimension");
    const Eigen::Map<const VectorXd> xv(x.data(), problem.num_vars());
    std::vector<double> out;
    out.reserve(problem.blocks().size());
    for (const auto& blk : problem.blocks()) {
        const VectorXd val = blk.A * xv + blk.b;
        // Row magnitudes guard against cancellation in the affine images.
        const VectorXd scale = ((blk.A.cwiseAbs() * xv.cwiseAbs()) + blk.b.cwiseAbs()).cwiseMax(1.0);
        double viol = 0.0;
        switch (blk.kind) {
        case ConeKind::Zero:
            viol = (val.cwiseAbs().array() / scale.array()).maxCoeff();
            break;
        case ConeKind::Nonneg:
            viol = ((-val).cwiseMax(0.0).array() / scale.array()).maxCoeff();
            break;
        case ConeKind::SecondOrder: {
            const double zn = val.tail(val.size() - 1).norm();
            viol = std::max(0.0, zn - val(0)) / std::max({1.0, scale(0), zn});
            break;
        }
        case ConeKind::Exponential: {
            const double u = val(0), v = val(1), w = val(2);
            if (v > 0.0 && w > 0.0) {
                viol = std::max(0.0, u - v * std::log(w / v)) / std::max(1.0, scale(0));
            } else {
                viol = std::max({0.0, -v / scale(1), -w / scale(2)});
                if (v <= 0.0 && u > 0.0)
                    viol = std::max(viol, u / scale(0));
                if (v > 0.0 && w <= 0.0)
                    viol = std::max(viol, 1.0);
            }
            break;
        }
        }
        out.push_back(viol);
    }
    return out;
}

double max_violation(const ConicProblem& problem, std::span<const double> x)
{
    const auto v = block_violations(problem, x);
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

double max_violation(const ConicProblem& problem, const Eigen::VectorXd& x)
{
    return max_violation(problem, std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
}

void write_text(const ConicProblem& problem, std::ostream& out)
{
    const auto old_precision = out.precision(17);
    out << "VARS " << problem.num_vars();
    for (int i = 0; i < problem.num_vars(); ++i)
        out << ' ' << (problem.variable_name(i).empty() ? "x" + std::to_string(i) : problem.variable_name(i));
    out << "\nOBJ";
    for (Eigen::Index i = 0; i < problem.objective().size(); ++i)
        out << ' ' << problem.objective()(i);
    out << ' ' << problem.objective_constant() << '\n';
    for (const auto& blk : problem.blocks()) {
        out << to_string(blk.kind) << ' ' << blk.dim();
        for (Eigen::Index r = 0; r < blk.A.rows(); ++r) {
            out << " |";
            for (Eigen::Index j = 0; j < blk.A.cols(); ++j)
                out << ' ' << blk.A(r, j);
            out << ' ' << blk.b(r);
        }
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace pinchsec::conic
