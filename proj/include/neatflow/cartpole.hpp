#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>

namespace neatflow {

struct Phenotype;

// Classic cart-pole constants, gravity raised to 26.
struct CartPoleParams {
    double gravity = 26.0;
    double cart_mass = 1.0;
    double pole_mass = 0.1;
    double half_pole_length = 0.5;
    double force_magnitude = 10.0;
    double dt = 0.02;
    double angle_limit = 12.0 * M_PI / 180.0;
    double position_limit = 2.4;
    double episode_seconds = 60.0;

    int step_limit() const {
        return static_cast<int>(std::llround(episode_seconds / dt)); // 3000
    }
};

struct CartPoleState {
    double x = 0.0;
    double x_dot = 0.0;
    double theta = 0.0;
    double theta_dot = 0.0;
};

enum class CartAction { left, right };

struct CartPoleStep {
    CartPoleState state;
    bool terminal;
};

// One semi-implicit Euler step of the pole-on-cart dynamics; terminal when
// |x| or |theta| leaves its limit.
CartPoleStep cartpole_step(const CartPoleState& s, CartAction action,
                           const CartPoleParams& p);

// Episode start: all four components uniform in [-0.05, 0.05].
CartPoleState cartpole_start_state(std::uint64_t seed);

// Network inputs: (x/position_limit, x_dot/3, theta/angle_limit, theta_dot/3).
std::array<double, 4> cartpole_observe(const CartPoleState& s,
                                       const CartPoleParams& p);

// Steps survived before termination, capped at p.step_limit().
int cartpole_episode(const std::function<CartAction(const CartPoleState&)>& policy,
                     std::uint64_t seed, const CartPoleParams& p);

// Mean over seeds of steps-survived / step_limit, driving the phenotype with
// scaled observations and action = right iff output >= 0.5. The phenotype
// must have 4 inputs and 1 output (ArityMismatch otherwise).
double cartpole_fitness(const Phenotype& net, const CartPoleParams& p,
                        std::span<const std::uint64_t> seeds);

} // namespace neatflow
