//! Monte-Carlo simulation of sequential spin-projection measurements.
//!
//! A trial starts in the initial context and passes through each axis in
//! order. At every axis the outcome is sampled from the Born probabilities
//! and the state collapses to `(sampled outcome, that axis)`. The random draw
//! for trial `t` at step `k` is `CounterRng::uniform(t, k)`, so results do not
//! depend on how trials are split across workers.

use std::num::NonZeroUsize;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::amplitudes::{probability, Outcome, SpinContext};
use crate::error::LandeError;
use crate::geometry::Direction;
use crate::rng::CounterRng;

/// Trials per work unit. Units are handed out round-robin to workers.
const BLOCK: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainSpec {
    pub initial: SpinContext,
    pub axes: Vec<Direction>,
    pub trials: u64,
    pub seed: u64,
}

impl ChainSpec {
    pub fn validate(&self) -> Result<(), LandeError> {
        if self.axes.is_empty() {
            return Err(LandeError::InvalidSpec("at least one axis is required".into()));
        }
        if self.trials == 0 {
            return Err(LandeError::InvalidSpec("trials must be positive".into()));
        }
        Ok(())
    }
}

/// Up/down tally at one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AxisCount {
    pub up: u64,
    pub down: u64,
}

impl AxisCount {
    pub fn total(&self) -> u64 {
        self.up + self.down
    }

    fn merge(&mut self, other: &AxisCount) {
        self.up += other.up;
        self.down += other.down;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainResult {
    pub counts: Vec<AxisCount>,
    /// `[P(up), P(down)]` per axis, observed.
    pub empirical_freqs: Vec<[f64; 2]>,
    /// `[P(up), P(down)]` per axis, exact.
    pub analytic_freqs: Vec<[f64; 2]>,
    /// Largest per-axis `|up − n p| / sqrt(n p (1 − p))`.
    pub max_sigma_deviation: f64,
}

/// Up-probability at each step conditioned on the previous outcome.
#[derive(Debug, Clone, Copy)]
struct Transition {
    from_up: f64,
    from_down: f64,
}

fn transitions(initial: &SpinContext, axes: &[Direction]) -> Vec<Transition> {
    let mut prev = initial.axis;
    axes
        .iter()
        .map(|axis| {
            let to = SpinContext::up(*axis);
            let t = Transition {
                from_up: probability(&SpinContext::up(prev), &to),
                from_down: probability(&SpinContext::down(prev), &to),
            };
            prev = *axis;
            t
        })
        .collect()
}

/// Exact marginal `[P(up), P(down)]` at each axis, by forward propagation of
/// the two-state chain.
pub fn exact_chain_distribution(
    initial: &SpinContext,
    axes: &[Direction],
) -> Result<Vec<[f64; 2]>, LandeError> {
    if axes.is_empty() {
        return Err(LandeError::InvalidSpec("at least one axis is required".into()));
    }
    let steps = transitions(initial, axes);
    let mut dist = match initial.outcome {
        Outcome::Up => [1.0, 0.0],
        Outcome::Down => [0.0, 1.0],
    };
    Ok(steps
        .iter()
        .map(|t| {
            let up = dist[0] * t.from_up + dist[1] * t.from_down;
            dist = [up, 1.0 - up];
            dist
        })
        .collect())
}

fn simulate_range(
    rng: &CounterRng,
    initial: Outcome,
    steps: &[Transition],
    trials: std::ops::Range<u64>,
    counts: &mut [AxisCount],
) {
    for trial in trials {
        let mut state = initial;
        for (k, (t, tally)) in steps.iter().zip(counts.iter_mut()).enumerate() {
            let p_up = match state {
                Outcome::Up => t.from_up,
                Outcome::Down => t.from_down,
            };
            if rng.uniform(trial, k as u64) < p_up {
                tally.up += 1;
                state = Outcome::Up;
            } else {
                tally.down += 1;
                state = Outcome::Down;
            }
        }
    }
}

/// Runs on all available cores.
pub fn run_chain(spec: &ChainSpec) -> Result<ChainResult, LandeError> {
    let workers = thread::available_parallelism().map_or(1, NonZeroUsize::get);
    run_chain_with_workers(spec, workers)
}

/// Runs with an explicit worker count. The result is bit-identical for every
/// `workers >= 1`; `0` is treated as `1`.
pub fn run_chain_with_workers(spec: &ChainSpec, workers: usize) -> Result<ChainResult, LandeError> {
    spec.validate()?;
    let steps = transitions(&spec.initial, &spec.axes);
    let rng = CounterRng::new(spec.seed);
    let blocks = spec.trials.div_ceil(BLOCK);
    let workers = workers.clamp(1, blocks.min(usize::MAX as u64) as usize);
    let n_axes = spec.axes.len();

    let block_range = |b: u64| b * BLOCK..((b + 1) * BLOCK).min(spec.trials);
    let run_worker = |w: usize| {
        let mut local = vec![AxisCount::default(); n_axes];
        let mut b = w as u64;
        while b < blocks {
            simulate_range(&rng, spec.initial.outcome, &steps, block_range(b), &mut local);
            b += workers as u64;
        }
        local
    };

    let partials: Vec<Vec<AxisCount>> = if workers == 1 {
        vec![run_worker(0)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| scope.spawn(move || run_worker(w)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("simulation worker panicked"))
                .collect()
        })
    };

    let mut counts = vec![AxisCount::default(); n_axes];
    for part in &partials {
        for (total, c) in counts.iter_mut().zip(part) {
            total.merge(c);
        }
    }

    let analytic_freqs = exact_chain_distribution(&spec.initial, &spec.axes)?;
    let n = spec.trials as f64;
    let empirical_freqs = counts
        .iter()
        .map(|c| [c.up as f64 / n, c.down as f64 / n])
        .collect();
    let max_sigma_deviation = counts
        .iter()
        .zip(&analytic_freqs)
        .map(|(c, p)| sigma_deviation(c.up, spec.trials, p[0]))
        .fold(0.0, f64::max);

    Ok(ChainResult {
        counts,
        empirical_freqs,
        analytic_freqs,
        max_sigma_deviation,
    })
}

/// `|k − n p| / sqrt(n p (1 − p))`. With zero variance the deviation is 0 on an
/// exact match and infinite otherwise.
pub fn sigma_deviation(k: u64, n: u64, p: f64) -> f64 {
    let n = n as f64;
    let diff = (k as f64 - n * p).abs();
    let var = n * p * (1.0 - p);
    if var > 0.0 {
        diff / var.sqrt()
    } else if diff < 0.5 {
        0.0
    } else {
        f64::INFINITY
    }
}
