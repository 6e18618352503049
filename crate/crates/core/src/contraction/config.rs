use serde::{Deserialize, Serialize};

use super::ContractionError;

/// How a single contraction thins edges after the 2-out step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reducer {
    /// Contract everything outside a `certificate_multiplier * δ` certificate.
    #[default]
    Certificate,
    /// Contract each edge independently with probability `1 / (denominator * δ)`.
    RandomSample,
}

impl std::str::FromStr for Reducer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "certificate" => Ok(Reducer::Certificate),
            "random_sample" | "random-sample" | "sample" => Ok(Reducer::RandomSample),
            other => Err(format!("unknown reducer `{other}`")),
        }
    }
}

/// Parameters of repetition-and-voting.
///
/// `q` and `r` default to `ceil(c_q * gamma * ln n / p_hat)` and
/// `ceil(p_hat * q / 2)`. The dense variant's oracles succeed with half the
/// probability, so its `dense_q` and `dense_r` use `p_hat / 2` in both formulas.
/// Explicit overrides stick until cleared by [`Self::derive_counts`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmplificationConfig {
    pub vertex_count: usize,
    pub eps: f64,
    pub gamma: f64,
    /// Assumed per-repetition preservation probability.
    pub p_hat: f64,
    pub c_q: f64,
    pub q: usize,
    pub r: usize,
    pub dense_q: usize,
    pub dense_r: usize,
    pub certificate_multiplier: f64,
    pub edge_sample_rate_denominator: f64,
    /// Forest oracles fall back to trivial mode above `factor * n / δ` colors.
    pub supernode_budget_factor: f64,
    pub reducer: Reducer,
}

pub const DEFAULT_P_HAT: f64 = 0.01;
pub const DEFAULT_C_Q: f64 = 8.0;

fn repetitions(c_q: f64, gamma: f64, n: usize, p: f64) -> (usize, usize) {
    let ln_n = (n.max(1) as f64).ln();
    let q = ((c_q * gamma * ln_n / p).ceil() as usize).max(1);
    let r = ((p * q as f64 / 2.0).ceil() as usize).clamp(1, q);
    (q, r)
}

impl AmplificationConfig {
    pub fn new(vertex_count: usize) -> Self {
        let mut cfg = Self {
            vertex_count,
            eps: 1.0,
            gamma: 1.0,
            p_hat: DEFAULT_P_HAT,
            c_q: DEFAULT_C_Q,
            q: 1,
            r: 1,
            dense_q: 1,
            dense_r: 1,
            certificate_multiplier: 2.0,
            edge_sample_rate_denominator: 2.0,
            supernode_budget_factor: 8.0,
            reducer: Reducer::Certificate,
        };
        cfg.derive_counts();
        cfg
    }

    /// Recomputes `q, r, dense_q, dense_r` from the current parameters.
    pub fn derive_counts(&mut self) {
        (self.q, self.r) = repetitions(self.c_q, self.gamma, self.vertex_count, self.p_hat);
        (self.dense_q, self.dense_r) =
            repetitions(self.c_q, self.gamma, self.vertex_count, self.p_hat / 2.0);
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self.derive_counts();
        self
    }

    pub fn with_p_hat(mut self, p_hat: f64) -> Self {
        self.p_hat = p_hat;
        self.derive_counts();
        self
    }

    pub fn with_c_q(mut self, c_q: f64) -> Self {
        self.c_q = c_q;
        self.derive_counts();
        self
    }

    /// Overrides `q` and `r` for both variants.
    pub fn with_repetitions(mut self, q: usize, r: usize) -> Self {
        self.q = q;
        self.r = r;
        self.dense_q = q;
        self.dense_r = r;
        self
    }

    pub fn with_reducer(mut self, reducer: Reducer) -> Self {
        self.reducer = reducer;
        self
    }

    /// Supernode budget for a forest oracle on a graph of minimum degree `delta`.
    pub fn supernode_budget(&self, delta: usize) -> usize {
        (self.supernode_budget_factor * self.vertex_count as f64 / delta.max(1) as f64).ceil() as usize
    }

    /// Certificate parameter `k` for minimum degree `delta`.
    pub fn certificate_k(&self, delta: usize) -> usize {
        ((self.certificate_multiplier * delta as f64).ceil() as usize).max(1)
    }

    pub fn validate(&self) -> Result<(), ContractionError> {
        let bad = |msg: &str| Err(ContractionError::InvalidConfig(msg.to_string()));
        if !(self.eps > 0.0 && self.eps <= 1.0) {
            return bad("eps must lie in (0, 1]");
        }
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return bad("gamma must be positive");
        }
        if !(self.p_hat > 0.0 && self.p_hat < 1.0) {
            return bad("p_hat must lie in (0, 1)");
        }
        if !(self.c_q > 0.0 && self.c_q.is_finite()) {
            return bad("c_q must be positive");
        }
        if self.q == 0 || self.r == 0 || self.r > self.q {
            return bad("need 1 <= r <= q");
        }
        if self.dense_q == 0 || self.dense_r == 0 || self.dense_r > self.dense_q {
            return bad("need 1 <= dense_r <= dense_q");
        }
        if !(self.certificate_multiplier > 0.0 && self.certificate_multiplier.is_finite()) {
            return bad("certificate_multiplier must be positive");
        }
        if self.edge_sample_rate_denominator.is_nan() || self.edge_sample_rate_denominator <= 0.0 {
            return bad("edge_sample_rate_denominator must be positive");
        }
        if self.supernode_budget_factor.is_nan() || self.supernode_budget_factor < 0.0 {
            return bad("supernode_budget_factor must be non-negative");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_follow_the_formulas() {
        let cfg = AmplificationConfig::new(100);
        let q = (8.0 * 100f64.ln() / DEFAULT_P_HAT).ceil() as usize;
        assert_eq!(cfg.q, q);
        assert_eq!(cfg.r, (DEFAULT_P_HAT * q as f64 / 2.0).ceil() as usize);
        let dq = (8.0 * 100f64.ln() / (DEFAULT_P_HAT / 2.0)).ceil() as usize;
        assert_eq!(cfg.dense_q, dq);
        assert_eq!(cfg.dense_r, (DEFAULT_P_HAT / 2.0 * dq as f64 / 2.0).ceil() as usize);
        cfg.validate().unwrap();
    }

    #[test]
    fn tiny_graphs_still_get_one_repetition() {
        let cfg = AmplificationConfig::new(1);
        assert_eq!((cfg.q, cfg.r), (1, 1));
    }

    #[test]
    fn r_floors_at_one() {
        let cfg = AmplificationConfig::new(3).with_p_hat(0.9).with_c_q(0.01);
        assert_eq!(cfg.q, 1);
        assert_eq!(cfg.r, 1);
    }

    #[test]
    fn validation() {
        assert!(AmplificationConfig::new(10).with_eps(0.0).validate().is_err());
        assert!(AmplificationConfig::new(10).with_eps(1.5).validate().is_err());
        assert!(AmplificationConfig::new(10).with_repetitions(2, 3).validate().is_err());
        assert!(AmplificationConfig::new(10).with_repetitions(1, 1).validate().is_ok());
    }
}
