// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// A small conic-program representation and an interior-point solver for
// products of zero, nonnegative, second-order and exponential cones.
//
// Problems are stated as
//
//     maximize  c . x   subject to   A_i x + b_i in K_i  for every block i,
//
// where K_i is one of
//   Zero          {0}^m
//   Nonneg        R_+^m
//   SecondOrder   {(t, z) : |z|_2 <= t}
//   Exponential   cl{(u, v, w) : v > 0, v exp(u / v) <= w}
//                 = {(u, v, w) : v > 0, v exp(u/v) <= w} U {(u, 0, w) : u <= 0, w >= 0}.
//
// The solver eliminates equalities through a null-space basis, finds a
// strictly feasible point with a phase-I barrier problem and then follows
// the central path of the logarithmic barrier. It is aimed at dense problems
// with tens of variables.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace pinchsec::conic {

enum class ConeKind { Zero, Nonneg, SecondOrder, Exponential };

const char* to_string(ConeKind kind);

/// Sparse affine expression sum_j coef_j x_j + constant.
struct AffineExpr {
    std::vector<std::pair<int, double>> terms;
    double constant = 0.0;

    AffineExpr() = default;
    explicit AffineExpr(double c) : constant(c) {}
    static AffineExpr var(int index, double coef = 1.0);

    AffineExpr& add(int index, double coef);
    AffineExpr& operator+=(const AffineExpr& other);
    AffineExpr& operator-=(const AffineExpr& other);
    AffineExpr& operator*=(double s);
    AffineExpr& operator+=(double c)
    {
        constant += c;
        return *this;
    }

    double evaluate(std::span<const double> x) const;
};

AffineExpr operator+(AffineExpr a, const AffineExpr& b);
AffineExpr operator-(AffineExpr a, const AffineExpr& b);
AffineExpr operator*(double s, AffineExpr a);

struct ConeBlock {
    ConeKind kind = ConeKind::Nonneg;
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    std::string label;

    int dim() const { return static_cast<int>(b.size()); }
};

class ConicProblem {
public:
    int add_variable(std::string name);
    int num_vars() const { return static_cast<int>(names_.size()); }
    const std::string& variable_name(int i) const { return names_.at(i); }

    /// Maximization objective coefficients.
    void set_objective(const AffineExpr& objective);
    const Eigen::VectorXd& objective() const { return objective_; }
    double objective_constant() const { return objective_constant_; }

    void add_block(ConeKind kind, const std::vector<AffineExpr>& rows, std::string label = {});
    void add_block(ConeKind kind, Eigen::MatrixXd A, Eigen::VectorXd b, std::string label = {});
    const std::vector<ConeBlock>& blocks() const { return blocks_; }

    /// Throws std::invalid_argument on dimension mismatches or malformed cones.
    void validate() const;

private:
    std::vector<std::string> names_;
    Eigen::VectorXd objective_;
    double objective_constant_ = 0.0;
    std::vector<ConeBlock> blocks_;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterLimit, NumericalFailure };

const char* to_string(SolveStatus status);

/// primal_residual is max_violation at x. dual_residual is the centering
/// residual of the final barrier iterate in its local norm divided by the
/// barrier weight, and gap the duality-gap bound nu / t of that iterate
/// relative to max(1, |objective|).
struct ConicSolution {
    SolveStatus status = SolveStatus::NumericalFailure;
    Eigen::VectorXd x;
    double objective = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double gap = 0.0;
    int iterations = 0;
};

struct SolverOptions {
    double tol = 1e-8;
    int max_iter = 200;
};

/// Solves `problem`. An optional starting point (size num_vars) shortens
/// phase I when it is close to feasible; it need not be feasible.
ConicSolution solve(const ConicProblem& problem, const SolverOptions& options = {},
                    std::span<const double> start = {});

/// Scale-relative violation of each block at x (0 when the block holds).
std::vector<double> block_violations(const ConicProblem& problem, std::span<const double> x);

/// Largest entry of block_violations.
double max_violation(const ConicProblem& problem, std::span<const double> x);
double max_violation(const ConicProblem& problem, const Eigen::VectorXd& x);

/// Line-oriented text dump: a VARS line, an OBJ line, then one line per cone
/// block "TAG dim | a_1 .. a_n b | ...".
void write_text(const ConicProblem& problem, std::ostream& out);

}  // namespace pinchsec::conic
