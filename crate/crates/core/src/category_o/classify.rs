//! The `O^ss` membership predicate, its finite-degree coherence test, and
//! `π`-shifted weight data of induced modules.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::{Piece, StandardModule, WeightMultiplicity};
use crate::error::{Error, Result};
use crate::pbw::AlgebraParams;
use crate::scalar::Scalar;
use crate::symgroup::Partition;

/// A concrete nonzero rational `κ`, or a formal irrational one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KappaSpec {
    Rational(Scalar),
    Irrational,
}

impl FromStr for KappaSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "irrational" {
            return Ok(KappaSpec::Irrational);
        }
        s.trim().parse::<Scalar>().map(KappaSpec::Rational)
    }
}

impl fmt::Display for KappaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KappaSpec::Rational(k) => write!(f, "{k}"),
            KappaSpec::Irrational => f.write_str("irrational"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationEntry {
    pub lambda: Partition,
    pub kappa: String,
    pub in_oss: bool,
    /// `r − m − μ_1 + μ_m` for `μ = λ` (κ > 0) or `μ = λ'` (κ < 0).
    pub witness: Option<i64>,
}

fn witness(r: i64, mu: &Partition) -> i64 {
    r - mu.len() as i64 - mu.first() as i64 + mu.last() as i64
}

/// For `κ = ±r/p` in lowest terms: `λ` is in when `r − m − λ_1 + λ_m ≥ 0`
/// (κ > 0), or when the same holds for `λ'` (κ < 0). Every `λ` is in for
/// irrational `κ`.
pub fn oss_predicate(lambda: &Partition, kappa: &KappaSpec) -> Result<ClassificationEntry> {
    let witness = match kappa {
        KappaSpec::Irrational => None,
        KappaSpec::Rational(k) if k.is_zero() => {
            return Err(Error::InvalidParams("κ must be nonzero".into()));
        }
        KappaSpec::Rational(k) => {
            let r = k.numer().abs().to_i64().unwrap_or(i64::MAX / 4);
            let mu = if k.is_positive() {
                lambda.clone()
            } else {
                lambda.conjugate()
            };
            Some(witness(r, &mu))
        }
    };
    Ok(ClassificationEntry {
        lambda: lambda.clone(),
        kappa: kappa.to_string(),
        in_oss: witness.is_none_or(|w| w >= 0),
        witness,
    })
}

/// `oss_predicate` for every partition of `n`, `(n)` first.
pub fn classify(n: usize, kappa: &KappaSpec) -> Result<Vec<ClassificationEntry>> {
    Partition::all(n)
        .iter()
        .map(|l| oss_predicate(l, kappa))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CoherenceRow {
    pub lambda: Partition,
    pub predicate_in: bool,
    pub degrees_tested: usize,
    /// Lowest degree where `u` fails to act semisimply on `L(λ)_d`.
    pub first_failure: Option<usize>,
}

impl CoherenceRow {
    /// A failure must come with the verdict "out".
    pub fn consistent(&self) -> bool {
        self.first_failure.is_none() || !self.predicate_in
    }
}

/// Tests `F[u]`-semisimplicity of `L(λ)_d` for `d ≤ dmax` against the
/// predicate, for every `λ ⊢ n`.
pub fn coherence_check(n: usize, kappa: &Scalar, dmax: usize) -> Result<Vec<CoherenceRow>> {
    let params = AlgebraParams::new(n, kappa.clone())?;
    let spec = KappaSpec::Rational(kappa.clone());
    Partition::all(n)
        .into_iter()
        .map(|lambda| {
            let entry = oss_predicate(&lambda, &spec)?;
            let sm = StandardModule::new(params.clone(), lambda.clone())?;
            let mut first_failure = None;
            for d in 0..=dmax {
                if !sm.is_u_diagonalizable(d, Piece::Simple)? {
                    first_failure = Some(d);
                    break;
                }
            }
            Ok(CoherenceRow {
                lambda,
                predicate_in: entry.in_oss,
                degrees_tested: dmax + 1,
                first_failure,
            })
        })
        .collect()
}

/// `π u_i = u_{i+1} π` and `π u_n = (u_1 − κ) π`: a weight vector `v` of
/// weight `ζ` gives `π v` of weight `(ζ_n + κ, ζ_1, …, ζ_{n−1})`.
pub fn pi_weight_shift(zeta: &[Scalar], kappa: &Scalar) -> Vec<Scalar> {
    let n = zeta.len();
    let mut out = Vec::with_capacity(n);
    if n > 0 {
        out.push(&zeta[n - 1] + kappa);
        out.extend_from_slice(&zeta[..n - 1]);
    }
    out
}

/// Inverse of [`pi_weight_shift`].
pub fn pi_weight_shift_inv(zeta: &[Scalar], kappa: &Scalar) -> Vec<Scalar> {
    let n = zeta.len();
    let mut out = Vec::with_capacity(n);
    if n > 0 {
        out.extend_from_slice(&zeta[1..]);
        out.push(&zeta[0] - kappa);
    }
    out
}

fn shift_k(zeta: &[Scalar], kappa: &Scalar, k: i64) -> Vec<Scalar> {
    let mut z = zeta.to_vec();
    for _ in 0..k.unsigned_abs() {
        z = if k > 0 {
            pi_weight_shift(&z, kappa)
        } else {
            pi_weight_shift_inv(&z, kappa)
        };
    }
    z
}

#[derive(Clone, Debug, Serialize)]
pub struct InducedSlice {
    pub k: i64,
    pub weights: Vec<WeightMultiplicity>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InducedWeightData {
    pub n: usize,
    pub kappa: Scalar,
    pub lambda: Partition,
    pub dmax: usize,
    /// Spectrum of `Δ(λ)_d` for `d ∈ [0, dmax]`.
    pub base: Vec<Vec<WeightMultiplicity>>,
    /// Weights of `π^k ⊗ Δ(λ)_{≤dmax}`.
    pub slices: Vec<InducedSlice>,
}

impl InducedWeightData {
    /// Consecutive slices are related by one application of the shift.
    pub fn is_shift_closed(&self) -> bool {
        self.slices.windows(2).all(|w| {
            let mut moved: Vec<WeightMultiplicity> = w[0]
                .weights
                .iter()
                .map(|x| WeightMultiplicity {
                    weight: pi_weight_shift(&x.weight, &self.kappa),
                    multiplicity: x.multiplicity,
                })
                .collect();
            moved.sort();
            moved == w[1].weights
        })
    }

    /// Shifting every weight `n` times adds `κ` to each coordinate.
    pub fn n_fold_shift_adds_kappa(&self) -> bool {
        self.slices.iter().flat_map(|s| &s.weights).all(|x| {
            let moved = shift_k(&x.weight, &self.kappa, self.n as i64);
            moved
                .iter()
                .zip(&x.weight)
                .all(|(a, b)| a == &(b + &self.kappa))
        })
    }
}

/// Weights of the slice `{π^k v : v ∈ Δ(λ)_{≤dmax}, k ∈ [kmin, kmax]}` of
/// the induced module.
pub fn induced_weight_spectrum(
    sm: &StandardModule,
    dmax: usize,
    kmin: i64,
    kmax: i64,
) -> Result<InducedWeightData> {
    if kmin > kmax {
        return Err(Error::InvalidArgument(format!(
            "empty shift range [{kmin}, {kmax}]"
        )));
    }
    let base: Vec<Vec<WeightMultiplicity>> = (0..=dmax)
        .map(|d| sm.weight_spectrum(d))
        .collect::<Result<_>>()?;
    let kappa = sm.kappa().clone();
    let slices = (kmin..=kmax)
        .map(|k| {
            let mut acc: BTreeMap<Vec<Scalar>, usize> = BTreeMap::new();
            for w in base.iter().flatten() {
                *acc.entry(shift_k(&w.weight, &kappa, k)).or_default() += w.multiplicity;
            }
            InducedSlice {
                k,
                weights: acc
                    .into_iter()
                    .map(|(weight, multiplicity)| WeightMultiplicity {
                        weight,
                        multiplicity,
                    })
                    .collect(),
            }
        })
        .collect();
    Ok(InducedWeightData {
        n: sm.n(),
        kappa,
        lambda: sm.lambda().clone(),
        dmax,
        base,
        slices,
    })
}
