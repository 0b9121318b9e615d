#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/lindblad.hpp"
#include "core/rng.hpp"
#include "core/scattering.hpp"

namespace qtx {

enum class RewardMode {
    Shaped,     // improvement over best-so-far plus a small signed term
    Indicator,  // 1 when the efficiency beats the best so far, else 0
};

enum class EfficiencyProbe {
    Scattering,  // fast frequency-domain evaluation (default)
    Lindblad,    // full steady-state master-equation probe, for cross-checks
};

enum class DriftTarget { DeltaM, NTh, Gamma1, Gamma2 };

DriftTarget parse_drift_target(const std::string& name);
std::string drift_target_name(DriftTarget target);

// Slow parameter wander used for the adaptation scenario. From onset_step
// (a global step index that keeps counting across episodes) the target is
// multiplied once by jump_factor and then performs a Gaussian random walk.
struct DriftSpec {
    DriftTarget target = DriftTarget::DeltaM;
    double walk_sd = 0.0;
    long onset_step = 0;
    double jump_factor = 1.0;
};

struct EnvConfig {
    TransducerParams base_params;
    std::array<double, 2> log_pump_min{0.0, 0.0};
    std::array<double, 2> log_pump_max{9.210340371976184, 9.210340371976184};  // ln 1e4
    int episode_length = 64;
    double observation_noise_sd = 0.01;
    std::optional<DriftSpec> drift;
    uint64_t seed = 0;
    RewardMode reward_mode = RewardMode::Shaped;
    EfficiencyProbe probe = EfficiencyProbe::Scattering;
    std::array<int, 3> probe_cutoffs{3, 3, 3};

    void validate() const;
};

struct Observation {
    double eta_measured = 0.0;
    double added_noise_quanta = 0.0;
    std::array<double, 2> actuators_normalized{0.0, 0.0};
};

// Bounded increments on the normalized actuators.
inline constexpr double kMaxActionIncrement = 0.2;

struct Action {
    std::array<double, 2> delta{0.0, 0.0};
};

struct Transition {
    Observation state;
    Action action;  // increments actually applied, after clipping
    double reward = 0.0;
    Observation next_state;
    bool done = false;
};

struct TraceRow {
    int step = 0;
    double u1 = 0.0;
    double u2 = 0.0;
    double eta_true = 0.0;
    double eta_observed = 0.0;
    double reward = 0.0;
};
using EpisodeTrace = std::vector<TraceRow>;

// Steady-state master-equation measurement of the conversion efficiency: a
// weak resonant probe tone on the microwave port, output read at the optical
// port. Thermal occupations are zeroed for the probe.
double probe_efficiency_lindblad(const TransducerParams& p,
                                 const std::array<int, 3>& cutoffs);

// Episodic control environment around the transducer. Actuators are the two
// log pump photon numbers, normalized to [-1, 1]. Drifted parameters persist
// across resets; only actuators, counters and reward state are re-drawn.
class Environment {
public:
    explicit Environment(EnvConfig cfg);

    Observation reset(uint64_t seed);
    Transition step(const Action& a);

    bool done() const { return done_; }
    int steps_taken() const { return step_count_; }
    long total_steps() const { return total_steps_; }
    double true_efficiency() const { return eta_true_; }
    double best_efficiency() const { return eta_best_; }
    double initial_efficiency() const { return eta_initial_; }
    const TransducerParams& current_params() const { return params_; }
    const EnvConfig& config() const { return cfg_; }
    const EpisodeTrace& trace() const { return trace_; }

    // One drift move; exposed for direct testing of the walk statistics.
    void inject_drift(const DriftSpec& spec);

    static int feature_dim() { return 4; }
    RVec features(const Observation& obs) const;

private:
    void sync_pumps();
    double compute_true_eta() const;
    Observation observe();

    EnvConfig cfg_;
    TransducerParams params_;
    std::array<double, 2> actuators_{0.0, 0.0};
    Rng rng_;
    int step_count_ = 0;
    long total_steps_ = 0;
    bool done_ = true;
    bool drift_jump_applied_ = false;
    double eta_true_ = 0.0;
    double eta_prev_ = 0.0;
    double eta_best_ = 0.0;
    double eta_initial_ = 0.0;
    Observation last_obs_;
    EpisodeTrace trace_;
};

using PolicyCallback = std::function<Action(const Observation&)>;

struct EvaluationSummary {
    double mean_final_eta = 0.0;
    double max_final_eta = 0.0;
    double mean_return = 0.0;
    int episodes = 0;
};

// Runs the policy without learning updates; deterministic for a given seed
// and a deterministic policy.
EvaluationSummary evaluate_policy(const EnvConfig& cfg, const PolicyCallback& policy,
                                  int episodes, uint64_t seed);

}  // namespace qtx
