//! The affine Weyl group acting on weights through reflection words.
//!
//! Group elements are never normalized; a word is applied letter by letter.

use serde::{Deserialize, Serialize};

use crate::affine_weights::{AffineRoot, AffineSystem, AffineWeight};
use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// The reflection `s_{α,n}` in the hyperplane orthogonal to `α + nδ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Reflection {
    pub alpha: Vec<i64>,
    pub n: i64,
}

impl Reflection {
    pub fn new(alpha: &[i64], n: i64) -> Reflection {
        Reflection { alpha: alpha.to_vec(), n }
    }

    pub fn root(&self) -> AffineRoot {
        AffineRoot::real(&self.alpha, self.n)
    }
}

/// A word `s_1 ∘ s_2 ∘ … ∘ s_k`; the last letter acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReflectionWord(pub Vec<Reflection>);

impl ReflectionWord {
    pub fn identity() -> ReflectionWord {
        ReflectionWord(Vec::new())
    }

    pub fn from_json(s: &str) -> Result<ReflectionWord> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("reflection word JSON: {e}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ReflectionWord) -> ReflectionWord {
        ReflectionWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// The inverse word (reflections are involutions).
    pub fn inverse(&self) -> ReflectionWord {
        ReflectionWord(self.0.iter().rev().cloned().collect())
    }

    /// Drop adjacent equal letters until none remain.
    pub fn cancel_adjacent(&self) -> ReflectionWord {
        let mut out: Vec<Reflection> = Vec::with_capacity(self.0.len());
        for r in &self.0 {
            if out.last() == Some(r) {
                out.pop();
            } else {
                out.push(r.clone());
            }
        }
        ReflectionWord(out)
    }
}

/// Linear action `λ ↦ λ − 2(λ, α+nδ)/(α, α) · (α+nδ)`.
pub fn reflect(sys: &AffineSystem, alpha: &[i64], n: i64, lambda: &AffineWeight) -> Result<AffineWeight> {
    if !sys.finite().is_root(alpha) {
        return Err(Error::NotARoot(alpha.to_vec()));
    }
    sys.check_weight(lambda)?;
    Ok(reflect_unchecked(sys, &AffineRoot::real(alpha, n), lambda))
}

pub(crate) fn reflect_unchecked(sys: &AffineSystem, root: &AffineRoot, lambda: &AffineWeight) -> AffineWeight {
    let c = q(2) * sys.pair_with_root(lambda, root) / sys.finite().root_length_sq(&root.finite_part);
    lambda - &root.to_weight().scale(&c)
}

/// Linear action of a word.
pub fn apply(sys: &AffineSystem, w: &ReflectionWord, lambda: &AffineWeight) -> Result<AffineWeight> {
    let mut x = lambda.clone();
    for r in w.0.iter().rev() {
        x = reflect(sys, &r.alpha, r.n, &x)?;
    }
    Ok(x)
}

/// Dot action `w.λ = w(λ + ρ) − ρ`.
pub fn dot(sys: &AffineSystem, w: &ReflectionWord, lambda: &AffineWeight) -> Result<AffineWeight> {
    let moved = apply(sys, w, &sys.shifted(lambda))?;
    Ok(&moved - sys.rho())
}

/// Dot action of a single reflection.
pub fn dot_reflect(sys: &AffineSystem, alpha: &[i64], n: i64, lambda: &AffineWeight) -> Result<AffineWeight> {
    dot(sys, &ReflectionWord(vec![Reflection::new(alpha, n)]), lambda)
}

/// `s_{α,n}.ν = ν − ⟨ν+ρ, α∨⟩(α+nδ)`, valid for critical `ν` only.
pub fn critical_dot_reflect(sys: &AffineSystem, alpha: &[i64], n: i64, nu: &AffineWeight) -> Result<AffineWeight> {
    if !sys.finite().is_root(alpha) {
        return Err(Error::NotARoot(alpha.to_vec()));
    }
    sys.check_weight(nu)?;
    if !sys.is_critical(nu) {
        return Err(Error::InvalidArgument(format!("{nu} is not critical")));
    }
    let pairing: Q = sys.finite().coroot_pairing(&sys.shifted(nu).fin, alpha);
    Ok(nu - &AffineRoot::real(alpha, n).to_weight().scale(&pairing))
}
