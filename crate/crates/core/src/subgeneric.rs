//! Subgeneric critical weights and their chains.
//!
//! A critical weight `γ` is α-subgeneric when `α` is the only positive
//! finite root with integral coroot pairing `⟨γ+ρ, α∨⟩` and that pairing is
//! non-zero. At the critical level integrality of `α + nδ` does not depend
//! on `n`, and the restricted class is the orbit of the rank-one affine Weyl
//! group generated by `s_{α,0}` and `s_{α,-1}`, so the finite check above is
//! equivalent to the orbit condition.
//!
//! The class is a chain `… < α↓γ < γ < α↑γ < …`. The multiplicity and
//! Hom-dimension tables below are encoded directly; the `zigzag` module
//! checks them independently.

use num_traits::Zero;
use serde::Serialize;

use crate::affine_weights::{AffineRoot, AffineSystem, AffineWeight};
use crate::error::{Error, Result};
use crate::rational::{self, q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SubgenericDatum {
    pub gamma: AffineWeight,
    pub alpha: Vec<i64>,
    /// `⟨γ+ρ, α∨⟩`, never zero.
    pub pairing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Subgeneric(SubgenericDatum),
    /// Critical with no integral positive finite root.
    Generic,
    NonSubgeneric { reason: String },
    NonCritical,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Subgeneric(_) => "subgeneric",
            Verdict::Generic => "generic",
            Verdict::NonSubgeneric { .. } => "non-subgeneric",
            Verdict::NonCritical => "non-critical",
        }
    }
}

pub fn detect_subgeneric(sys: &AffineSystem, gamma: &AffineWeight) -> Verdict {
    if sys.check_weight(gamma).is_err() || !sys.is_critical(gamma) {
        return Verdict::NonCritical;
    }
    let shifted = sys.shifted(gamma);
    let integral: Vec<(Vec<i64>, Q)> = sys
        .finite()
        .positive_roots()
        .iter()
        .map(|a| (a.clone(), sys.finite().coroot_pairing(&shifted.fin, a)))
        .filter(|(_, p)| p.is_integer())
        .collect();
    match integral.as_slice() {
        [] => Verdict::Generic,
        [(alpha, p)] if !p.is_zero() => Verdict::Subgeneric(SubgenericDatum {
            gamma: gamma.clone(),
            alpha: alpha.clone(),
            pairing: rational::to_i64(p).expect("pairing fits in i64"),
        }),
        [(alpha, _)] => Verdict::NonSubgeneric { reason: format!("singular: pairing with {alpha:?} is 0") },
        many => Verdict::NonSubgeneric {
            reason: format!("{} positive roots have integral pairing", many.len()),
        },
    }
}

impl SubgenericDatum {
    pub fn new(sys: &AffineSystem, gamma: &AffineWeight) -> Result<SubgenericDatum> {
        match detect_subgeneric(sys, gamma) {
            Verdict::Subgeneric(d) => Ok(d),
            Verdict::NonSubgeneric { reason } => Err(Error::NotSubgeneric(reason)),
            v => Err(Error::NotSubgeneric(format!("{gamma} is {}", v.name()))),
        }
    }

    /// The critical weight with finite part `base + tα − ρ` where `t` makes
    /// `⟨γ+ρ, α∨⟩ = pairing`, if it is α-subgeneric.
    pub fn with_pairing(sys: &AffineSystem, alpha: &[i64], pairing: i64, base: &[Q], degree: Q) -> Result<SubgenericDatum> {
        sys.finite().check_dim(base.len())?;
        if !sys.finite().is_positive_root(alpha) {
            return Err(Error::NotARoot(alpha.to_vec()));
        }
        let t = (q(pairing) - sys.finite().coroot_pairing(base, alpha)) / q(2);
        let rho = sys.rho();
        let fin = base
            .iter()
            .zip(alpha)
            .zip(&rho.fin)
            .map(|((b, &a), r)| b + &t * q(a) - r)
            .collect();
        let gamma = AffineWeight::new(fin, sys.critical_level(), degree);
        let d = SubgenericDatum::new(sys, &gamma)?;
        if d.alpha != alpha {
            return Err(Error::NotSubgeneric(format!("integral root is {:?}, not {alpha:?}", d.alpha)));
        }
        Ok(d)
    }

    /// `(ν+ρ, α) > 0`.
    pub fn is_dominant(&self) -> bool {
        self.pairing > 0
    }

    fn step(&self, n: i64) -> AffineWeight {
        AffineRoot::real(&self.alpha, n).to_weight().scale(&q(self.pairing))
    }

    /// `α↑γ`: `s_{α,-1}.γ` if γ is α-dominant, `s_{α,0}.γ` otherwise.
    pub fn alpha_up(&self) -> AffineWeight {
        if self.is_dominant() {
            &self.gamma - &self.step(-1)
        } else {
            &self.gamma - &self.step(0)
        }
    }

    /// `α↓γ`, the inverse of `α↑`.
    pub fn alpha_down(&self) -> AffineWeight {
        if self.is_dominant() {
            &self.gamma - &self.step(0)
        } else {
            &self.gamma - &self.step(-1)
        }
    }

    /// The datum at another weight of the same chain. Moving along the
    /// chain negates the pairing at every step.
    fn moved(&self, gamma: AffineWeight, steps: i64) -> SubgenericDatum {
        let pairing = if steps % 2 == 0 { self.pairing } else { -self.pairing };
        SubgenericDatum { gamma, alpha: self.alpha.clone(), pairing }
    }

    pub fn up(&self) -> SubgenericDatum {
        self.moved(self.alpha_up(), 1)
    }

    pub fn down(&self) -> SubgenericDatum {
        self.moved(self.alpha_down(), 1)
    }

    /// Datum at `α↑ⁿγ`; negative `n` walks down.
    pub fn shifted(&self, n: i64) -> SubgenericDatum {
        let mut d = self.clone();
        for _ in 0..n.unsigned_abs() {
            d = if n > 0 { d.up() } else { d.down() };
        }
        d
    }

    pub fn alpha_up_n(&self, n: i64) -> AffineWeight {
        self.shifted(n).gamma
    }

    /// `k` with `α↑²ν = ν + kδ` for every `ν` in the chain.
    pub fn period(&self) -> i64 {
        self.pairing.abs()
    }

    /// Index `i` with `μ = α↑ⁱγ`, if `μ` lies in the chain.
    pub fn chain_index(&self, sys: &AffineSystem, mu: &AffineWeight) -> Option<i64> {
        if sys.check_weight(mu).is_err() {
            return None;
        }
        let k = self.period();
        let delta_multiple = |base: &AffineWeight| -> Option<i64> {
            let d = mu - base;
            if !d.level.is_zero() || d.fin.iter().any(|x| !x.is_zero()) {
                return None;
            }
            let m = rational::to_i64(&d.degree)?;
            (m % k == 0).then_some(m / k)
        };
        if let Some(m) = delta_multiple(&self.gamma) {
            return Some(2 * m);
        }
        delta_multiple(&self.alpha_up()).map(|m| 2 * m + 1)
    }

    fn index_or_err(&self, sys: &AffineSystem, mu: &AffineWeight) -> Result<i64> {
        self.chain_index(sys, mu)
            .ok_or_else(|| Error::NotInClass(format!("{mu} is not in the restricted class of {}", self.gamma)))
    }

    /// `[Δ̄(γ) : L(μ)]`: one for `μ ∈ {γ, α↓γ}`, zero otherwise.
    pub fn restricted_verma_multiplicity(&self, mu: &AffineWeight) -> u32 {
        u32::from(*mu == self.gamma || *mu == self.alpha_down())
    }

    /// Restricted Verma flag of the projective cover of `L(γ)`:
    /// submodule `Δ̄(α↑γ)` first, quotient `Δ̄(γ)` last.
    pub fn projective_flag(&self) -> [AffineWeight; 2] {
        [self.alpha_up(), self.gamma.clone()]
    }

    /// `dim Hom(P̄(γ), P̄(μ))`.
    pub fn hom_dimension(&self, sys: &AffineSystem, mu: &AffineWeight) -> Result<u32> {
        Ok(match self.index_or_err(sys, mu)? {
            0 => 2,
            1 | -1 => 1,
            _ => 0,
        })
    }

    /// `(P̄(μ) : L(γ))` where `self` is the datum at `μ`.
    pub fn projective_simple_multiplicity(&self, sys: &AffineSystem, gamma: &AffineWeight) -> Result<u32> {
        let i = self.index_or_err(sys, gamma)?;
        Ok(match i {
            0 => 2,
            1 | -1 => 1,
            _ => 0,
        })
    }

    /// Chain `α↑ⁱγ` for `i ∈ [-radius, radius]`.
    pub fn chain(&self, radius: i64) -> Vec<AffineWeight> {
        let mut down = Vec::new();
        let mut d = self.clone();
        for _ in 0..radius {
            d = d.down();
            down.push(d.gamma.clone());
        }
        down.reverse();
        down.push(self.gamma.clone());
        let mut d = self.clone();
        for _ in 0..radius {
            d = d.up();
            down.push(d.gamma.clone());
        }
        down
    }
}
