#include "neatflow/cartpole.hpp"

#include <cmath>

#include "neatflow/errors.hpp"
#include "neatflow/phenotype.hpp"
#include "neatflow/rng.hpp"

namespace neatflow {

CartPoleStep cartpole_step(const CartPoleState& s, CartAction action,
                           const CartPoleParams& p) {
    const double force =
        action == CartAction::right ? p.force_magnitude : -p.force_magnitude;
    const double total_mass = p.cart_mass + p.pole_mass;
    const double cos_t = std::cos(s.theta);
    const double sin_t = std::sin(s.theta);
    const double temp =
        (force + p.pole_mass * p.half_pole_length * s.theta_dot * s.theta_dot * sin_t) /
        total_mass;
    const double theta_acc =
        (p.gravity * sin_t - cos_t * temp) /
        (p.half_pole_length * (4.0 / 3.0 - p.pole_mass * cos_t * cos_t / total_mass));
    const double x_acc =
        (force + p.pole_mass * p.half_pole_length *
                     (s.theta_dot * s.theta_dot * sin_t - theta_acc * cos_t)) /
        total_mass;

    // semi-implicit Euler: velocities first, positions with the new velocities
    CartPoleState n;
    n.x_dot = s.x_dot + p.dt * x_acc;
    n.x = s.x + p.dt * n.x_dot;
    n.theta_dot = s.theta_dot + p.dt * theta_acc;
    n.theta = s.theta + p.dt * n.theta_dot;

    const bool terminal = std::abs(n.x) > p.position_limit ||
                          std::abs(n.theta) > p.angle_limit;
    return {n, terminal};
}

CartPoleState cartpole_start_state(std::uint64_t seed) {
    Rng rng(mix_seed(seed));
    CartPoleState s;
    s.x = rng.uniform(-0.05, 0.05);
    s.x_dot = rng.uniform(-0.05, 0.05);
    s.theta = rng.uniform(-0.05, 0.05);
    s.theta_dot = rng.uniform(-0.05, 0.05);
    return s;
}

std::array<double, 4> cartpole_observe(const CartPoleState& s, const CartPoleParams& p) {
    return {s.x / p.position_limit, s.x_dot / 3.0, s.theta / p.angle_limit,
            s.theta_dot / 3.0};
}

int cartpole_episode(const std::function<CartAction(const CartPoleState&)>& policy,
                     std::uint64_t seed, const CartPoleParams& p) {
    CartPoleState state = cartpole_start_state(seed);
    const int limit = p.step_limit();
    for (int step = 0; step < limit; ++step) {
        const auto result = cartpole_step(state, policy(state), p);
        if (result.terminal) return step + 1;
        state = result.state;
    }
    return limit;
}

double cartpole_fitness(const Phenotype& net, const CartPoleParams& p,
                        std::span<const std::uint64_t> seeds) {
    if (net.input_arity() != 4 || net.output_arity() != 1)
        throw ArityMismatch("cart-pole expects a 4-input, 1-output network");
    const auto policy = [&](const CartPoleState& s) {
        const auto obs = cartpole_observe(s, p);
        return activate(net, obs)[0] >= 0.5 ? CartAction::right : CartAction::left;
    };
    double sum = 0.0;
    for (std::uint64_t seed : seeds)
        sum += static_cast<double>(cartpole_episode(policy, seed, p)) /
               static_cast<double>(p.step_limit());
    return seeds.empty() ? 0.0 : sum / static_cast<double>(seeds.size());
}

} // namespace neatflow
