//! Unit direction sets and their certification.
//!
//! A direction set `u_1, …, u_d` is *good* when an integer combination
//! `Σ a_k u_k` can only land on the unit circle if exactly one `a_k` is
//! nonzero. Floating-point arithmetic cannot decide that over all integers,
//! so [`DirectionSet::check_good`] certifies it for coefficients bounded by
//! `B` and a tolerance `δ`.
//!
//! Bound `B = 1` is what the planar construction needs: every difference of
//! two of its points has coefficients in `{-1, 0, 1}`.

use std::f64::consts::PI;
use std::ops::Deref;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Minimum angular separation (modulo π) between two directions.
pub const MIN_SEPARATION: f64 = 1e-6;

pub const DEFAULT_DELTA: f64 = 1e-9;

pub const DEFAULT_TUPLE_BUDGET: u64 = 100_000_000;

pub const DEFAULT_MAX_ATTEMPTS: usize = 1000;

/// Angles `θ_k ∈ [0, π)`, each standing for `u_k = (cos θ_k, sin θ_k)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct DirectionSet {
    angles: Vec<f64>,
}

fn angular_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    d.min(PI - d)
}

impl DirectionSet {
    pub fn new(angles: Vec<f64>) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::InvalidDirections("no directions".into()));
        }
        if let Some(a) = angles.iter().find(|a| !(0.0..PI).contains(*a)) {
            return Err(Error::InvalidDirections(format!(
                "angle {a} outside [0, π)"
            )));
        }
        for (i, a) in angles.iter().enumerate() {
            for b in &angles[i + 1..] {
                if angular_gap(*a, *b) <= MIN_SEPARATION {
                    return Err(Error::InvalidDirections(format!(
                        "angles {a} and {b} are closer than {MIN_SEPARATION}"
                    )));
                }
            }
        }
        Ok(DirectionSet { angles })
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// The unit vector `u_k`.
    pub fn unit(&self, k: usize) -> [f64; 2] {
        let (s, c) = self.angles[k].sin_cos();
        [c, s]
    }

    /// `‖Σ a_k u_k‖` through `Σ a_k² + 2 Σ_{j<k} a_j a_k cos(θ_j - θ_k)`.
    pub fn combination_norm(&self, coefficients: &[i64]) -> f64 {
        let cos = self.cosine_table();
        norm_from_table(&cos, self.len(), coefficients)
    }

    fn cosine_table(&self) -> Vec<f64> {
        let d = self.len();
        let mut t = vec![0.0; d * d];
        for j in 0..d {
            for k in 0..d {
                t[j * d + k] = (self.angles[j] - self.angles[k]).cos();
            }
        }
        t
    }

    /// Searches `[-B, B]^d` for a combination with at least two nonzero
    /// coefficients whose norm is within `δ` of 1. Only the sign-canonical
    /// tuples (first nonzero entry positive) are visited, in lexicographic
    /// order, so the reported witness is the lexicographically first one.
    pub fn check_good(&self, bound: u32, delta: f64) -> Result<GoodnessCertificate> {
        self.check_good_with_budget(bound, delta, DEFAULT_TUPLE_BUDGET)
    }

    pub fn check_good_with_budget(
        &self,
        bound: u32,
        delta: f64,
        budget: u64,
    ) -> Result<GoodnessCertificate> {
        if bound == 0 {
            return Err(Error::InvalidArgument(
                "coefficient bound must be >= 1".into(),
            ));
        }
        if !(delta > 0.0 && delta <= 1e-3) {
            return Err(Error::InvalidArgument(format!(
                "tolerance {delta} outside (0, 1e-3]"
            )));
        }
        let d = self.len();
        let needed =
            (d as u128).saturating_mul((2 * u128::from(bound) + 1).saturating_pow(d as u32));
        if needed > u128::from(budget) {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let cos = self.cosine_table();
        let b = i64::from(bound);
        let mut a = vec![-b; d];
        loop {
            let first = a.iter().find(|&&x| x != 0);
            let nonzero = a.iter().filter(|&&x| x != 0).count();
            if nonzero >= 2 && first.is_some_and(|&x| x > 0) {
                let residual = (norm_from_table(&cos, d, &a) - 1.0).abs();
                if residual <= delta {
                    return Ok(GoodnessCertificate {
                        bound,
                        delta,
                        verdict: Verdict::Bad,
                        witness: Some(a),
                        residual: Some(residual),
                    });
                }
            }
            if !advance(&mut a, b) {
                break;
            }
        }
        Ok(GoodnessCertificate {
            bound,
            delta,
            verdict: Verdict::GoodUpToB,
            witness: None,
            residual: None,
        })
    }

    /// Checks goodness and wraps the set if it passes.
    pub fn certify(self, bound: u32, delta: f64) -> Result<CertifiedDirections> {
        let certificate = self.check_good(bound, delta)?;
        match certificate.verdict {
            Verdict::GoodUpToB => Ok(CertifiedDirections {
                set: self,
                certificate,
            }),
            Verdict::Bad => Err(Error::NotGood {
                bound,
                witness: certificate.witness.unwrap_or_default(),
            }),
        }
    }
}

fn norm_from_table(cos: &[f64], d: usize, a: &[i64]) -> f64 {
    let mut sq = 0.0;
    for j in 0..d {
        if a[j] == 0 {
            continue;
        }
        let aj = a[j] as f64;
        sq += aj * aj;
        for k in j + 1..d {
            if a[k] != 0 {
                sq += 2.0 * aj * a[k] as f64 * cos[j * d + k];
            }
        }
    }
    sq.max(0.0).sqrt()
}

// Lexicographic successor in [-b, b]^d (last entry fastest).
fn advance(a: &mut [i64], b: i64) -> bool {
    for x in a.iter_mut().rev() {
        if *x < b {
            *x += 1;
            return true;
        }
        *x = -b;
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "good_up_to_B")]
    GoodUpToB,
    #[serde(rename = "bad")]
    Bad,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoodnessCertificate {
    #[serde(rename = "B")]
    pub bound: u32,
    pub delta: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

impl GoodnessCertificate {
    /// Re-evaluates the witness of a bad verdict against `set`.
    pub fn witness_holds(&self, set: &DirectionSet) -> bool {
        match (&self.verdict, &self.witness) {
            (Verdict::Bad, Some(w)) => {
                w.iter().filter(|&&x| x != 0).count() >= 2
                    && (set.combination_norm(w) - 1.0).abs() <= self.delta
            }
            (Verdict::Bad, None) => false,
            (Verdict::GoodUpToB, _) => true,
        }
    }
}

/// A direction set that passed [`DirectionSet::check_good`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertifiedDirections {
    #[serde(rename = "angles")]
    set: DirectionSet,
    certificate: GoodnessCertificate,
}

impl CertifiedDirections {
    pub fn certificate(&self) -> &GoodnessCertificate {
        &self.certificate
    }

    pub fn into_inner(self) -> DirectionSet {
        self.set
    }
}

impl Deref for CertifiedDirections {
    type Target = DirectionSet;

    fn deref(&self) -> &DirectionSet {
        &self.set
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub delta: f64,
    pub max_attempts: usize,
    pub budget: u64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            delta: DEFAULT_DELTA,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
            budget: DEFAULT_TUPLE_BUDGET,
        }
    }
}

/// Rejection-samples `d` uniform angles in `[0, π)` until the set is good
/// up to `bound`. Deterministic for a given seed.
pub fn random_good_directions(d: usize, bound: u32, seed: u64) -> Result<CertifiedDirections> {
    random_good_directions_with(d, bound, seed, &SamplerConfig::default())
}

pub fn random_good_directions_with(
    d: usize,
    bound: u32,
    seed: u64,
    config: &SamplerConfig,
) -> Result<CertifiedDirections> {
    if d == 0 {
        return Err(Error::InvalidArgument("need at least one direction".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..config.max_attempts {
        let angles: Vec<f64> = (0..d).map(|_| rng.random_range(0.0..PI)).collect();
        let Ok(set) = DirectionSet::new(angles) else {
            continue;
        };
        let certificate = set.check_good_with_budget(bound, config.delta, config.budget)?;
        if certificate.verdict == Verdict::GoodUpToB {
            return Ok(CertifiedDirections { set, certificate });
        }
    }
    Err(Error::SamplingFailed(config.max_attempts))
}
