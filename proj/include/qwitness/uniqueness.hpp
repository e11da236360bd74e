// Copyright 2026 The qwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwitness/classical_family.hpp"

namespace qwit {

/// The seven coordinates of ClassicalBlochState, each an observable moment:
/// r = <sigma (x) I>, s_z = <I (x) Z>, t = <sigma (x) Z>.
enum class FamilyMoment : std::size_t { XI, YI, ZI, IZ, XZ, YZ, ZZ };

inline constexpr std::size_t family_dims = 7;
using FamilyPoint = std::array<double, family_dims>;

inline const char *moment_name(FamilyMoment m) {
    static const char *names[] = {"XI", "YI", "ZI", "IZ", "XZ", "YZ", "ZZ"};
    return names[static_cast<std::size_t>(m)];
}

inline ClassicalBlochState to_bloch(const FamilyPoint &x) {
    return ClassicalBlochState{{x[0], x[1], x[2]}, x[3], {x[4], x[5], x[6]}};
}

inline FamilyPoint to_point(const ClassicalBlochState &b) {
    return {b.r[0], b.r[1], b.r[2], b.s_z, b.t[0], b.t[1], b.t[2]};
}

struct MomentConstraint {
    FamilyMoment moment;
    double target;
};

/// <ZZ> = 1, <XZ> = <YZ> = 0 and all probe moments zero. <IZ> is left free.
inline std::vector<MomentConstraint> copy_witness_constraints(double zz = 1.0) {
    return {{FamilyMoment::ZZ, zz}, {FamilyMoment::XZ, 0.0}, {FamilyMoment::YZ, 0.0},
            {FamilyMoment::XI, 0.0}, {FamilyMoment::YI, 0.0}, {FamilyMoment::ZI, 0.0}};
}

struct UniquenessOptions {
    std::size_t grid_points = 21;
    /// Upper bound on grid evaluations; points per axis shrink to respect it.
    std::size_t max_grid_evaluations = 5'000'000;
    /// Step size at which local refinement and boundary bisection stop.
    double resolution = 1e-8;
    /// Positivity floor for feasibility.
    double psd_floor = tol::psd_floor;
};

struct UniquenessResult {
    bool feasible = false;
    /// Most interior feasible member found (largest lowest eigenvalue).
    ClassicalBlochState solution;
    double solution_min_eigenvalue = 0.0;
    /// Largest distance between feasible points found (chords through the
    /// solution and feasible grid points).
    double diameter = 0.0;
    std::vector<FamilyMoment> free_moments;
    std::size_t grid_points_per_axis = 0;
    std::size_t grid_evaluations = 0;
    std::size_t feasible_grid_points = 0;

    bool unique(double threshold = 1e-6) const {
        return feasible && diameter <= threshold;
    }
};

/// Searches the CQ family for every PSD member meeting the moment
/// constraints: a grid over the unconstrained coordinates, local ascent of
/// the lowest eigenvalue from the best grid point, then bisection along
/// axis and diagonal chords to bound the feasible set.
inline UniquenessResult classical_uniqueness_solve(std::span<const MomentConstraint> constraints,
                                                   const UniquenessOptions &opt = {}) {
    UniquenessResult res;
    FamilyPoint base{};
    std::array<bool, family_dims> pinned{};
    for (const auto &c : constraints) {
        auto k = static_cast<std::size_t>(c.moment);
        if (pinned[k] && base[k] != c.target) {
            return res;  // contradictory equalities
        }
        pinned[k] = true;
        base[k] = c.target;
    }
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < family_dims; ++k) {
        if (!pinned[k]) {
            free.push_back(k);
            res.free_moments.push_back(static_cast<FamilyMoment>(k));
        }
    }

    auto min_eig = [](const FamilyPoint &x) { return family_min_eigenvalue(to_bloch(x)); };
    auto feasible = [&](const FamilyPoint &x) { return min_eig(x) >= opt.psd_floor; };

    // Grid.
    std::size_t per_axis = std::max<std::size_t>(opt.grid_points, 2);
    while (per_axis > 2 && std::pow(static_cast<double>(per_axis), static_cast<double>(free.size())) >
                               static_cast<double>(opt.max_grid_evaluations)) {
        --per_axis;
    }
    res.grid_points_per_axis = free.empty() ? 1 : per_axis;
    auto grid_value = [&](std::size_t i) {
        return static_cast<double>(2 * i) / static_cast<double>(per_axis - 1) - 1.0;
    };

    auto for_each_grid_point = [&](auto &&visit) {
        std::vector<std::size_t> idx(free.size(), 0);
        while (true) {
            FamilyPoint x = base;
            for (std::size_t a = 0; a < free.size(); ++a) {
                x[free[a]] = grid_value(idx[a]);
            }
            visit(x);
            std::size_t a = 0;
            while (a < free.size() && ++idx[a] == per_axis) {
                idx[a++] = 0;
            }
            if (a == free.size()) {
                break;
            }
        }
    };

    FamilyPoint best = base;
    double best_eig = -INFINITY;
    for_each_grid_point([&](const FamilyPoint &x) {
        double e = min_eig(x);
        ++res.grid_evaluations;
        if (e > best_eig) {
            best_eig = e;
            best = x;
        }
        if (e >= opt.psd_floor) {
            ++res.feasible_grid_points;
        }
    });

    // Directions: free axes and their pairwise diagonals.
    std::vector<FamilyPoint> dirs;
    for (std::size_t a = 0; a < free.size(); ++a) {
        FamilyPoint u{};
        u[free[a]] = 1.0;
        dirs.push_back(u);
        for (std::size_t b = a + 1; b < free.size(); ++b) {
            for (double sb : {1.0, -1.0}) {
                FamilyPoint v{};
                v[free[a]] = 1.0 / std::sqrt(2.0);
                v[free[b]] = sb / std::sqrt(2.0);
                dirs.push_back(v);
            }
        }
    }
    auto step_along = [](const FamilyPoint &x, const FamilyPoint &u, double h) {
        FamilyPoint y = x;
        for (std::size_t k = 0; k < family_dims; ++k) {
            y[k] += h * u[k];
        }
        return y;
    };

    // Local ascent of the lowest eigenvalue.
    double h = free.empty() ? 0.0 : 2.0 / static_cast<double>(per_axis - 1);
    while (h >= opt.resolution) {
        bool improved = false;
        for (const auto &u : dirs) {
            for (double sgn : {1.0, -1.0}) {
                FamilyPoint y = step_along(best, u, sgn * h);
                double e = min_eig(y);
                if (e > best_eig) {
                    best_eig = e;
                    best = y;
                    improved = true;
                }
            }
        }
        if (!improved) {
            h *= 0.5;
        }
    }

    res.solution = to_bloch(best);
    res.solution_min_eigenvalue = best_eig;
    if (!feasible(best)) {
        return res;
    }
    res.feasible = true;

    // Chord lengths through the solution.
    auto reach = [&](const FamilyPoint &u) {
        double lo = 0.0;
        double hi = 8.0;  // beyond any PSD member of the family
        while (hi - lo > opt.resolution) {
            double mid = 0.5 * (lo + hi);
            (feasible(step_along(best, u, mid)) ? lo : hi) = mid;
        }
        return lo;
    };
    double diameter = 0.0;
    for (const auto &u : dirs) {
        FamilyPoint neg{};
        for (std::size_t k = 0; k < family_dims; ++k) {
            neg[k] = -u[k];
        }
        diameter = std::max(diameter, reach(u) + reach(neg));
    }
    auto dist = [](const FamilyPoint &x, const FamilyPoint &y) {
        double acc = 0.0;
        for (std::size_t k = 0; k < family_dims; ++k) {
            acc += (x[k] - y[k]) * (x[k] - y[k]);
        }
        return std::sqrt(acc);
    };
    if (res.feasible_grid_points > 0) {
        for_each_grid_point([&](const FamilyPoint &x) {
            if (feasible(x)) {
                diameter = std::max(diameter, dist(x, best));
            }
        });
    }
    res.diameter = diameter;
    return res;
}

}  // namespace qwit
