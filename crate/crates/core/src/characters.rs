//! Truncated formal characters and the right-hand side of the Jantzen sum
//! formula.
//!
//! Weights below a highest weight `top` are addressed by the affine-simple
//! coordinates of `top − μ`; truncation is by total height. Imaginary roots
//! `nδ` have multiplicity `rank`, realized as `rank` distinguishable colors
//! in the partition count.
//!
//! At the critical level the sum-formula condition for an imaginary root
//! degenerates to `(μ+ρ, δ) = 0`; every pair `(mδ, n)` with `m, n ≥ 1` then
//! contributes `Δ(μ − nmδ)` with multiplicity `rank` (the Kac–Kazhdan
//! convention). Only the Verma terms are produced, never the filtration.

use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

use crate::affine_weights::{AffineRoot, AffineSystem, AffineWeight};
use crate::error::{Error, Result};
use crate::linkage::{self, Window};
use crate::rational::{self, q};

/// Partition counts for every coordinate vector of height at most `depth`.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    depth: u32,
    values: HashMap<Vec<i64>, u128>,
}

impl PartitionTable {
    pub fn new(sys: &AffineSystem, depth: u32) -> PartitionTable {
        let vectors = vectors_up_to(sys.rank() + 1, depth as i64);
        let mut values: HashMap<Vec<i64>, u128> = vectors.iter().map(|v| (v.clone(), 0)).collect();
        values.insert(vec![0; sys.rank() + 1], 1);
        // Unbounded knapsack: one pass per part, vectors in increasing height.
        for root in sys.positive_roots_up_to(depth as i64) {
            let part = sys.root_coords(&root);
            for _color in 0..sys.root_multiplicity(&root) {
                for v in &vectors {
                    let rest: Vec<i64> = v.iter().zip(&part).map(|(a, b)| a - b).collect();
                    if rest.iter().any(|&x| x < 0) {
                        continue;
                    }
                    let add = values[&rest];
                    if add != 0 {
                        let slot = values.get_mut(v).unwrap();
                        *slot = slot.checked_add(add).expect("partition count overflow");
                    }
                }
            }
        }
        PartitionTable { depth, values }
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Zero for vectors with a negative entry; `None` beyond the table depth.
    pub fn get(&self, c: &[i64]) -> Option<u128> {
        if c.iter().any(|&x| x < 0) {
            return Some(0);
        }
        self.values.get(c).copied()
    }
}

/// Non-negative integer vectors of the given length and total at most
/// `max`, sorted by total then lexicographically.
pub fn vectors_up_to(len: usize, max: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(len, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max.max(-1), &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then(a.cmp(b)));
    out
}

/// Number of ways to write the vector (affine-simple coordinates) as a sum
/// of positive affine roots, imaginary roots counted with `rank` colors.
pub fn affine_kostant_partition(sys: &AffineSystem, c: &[i64]) -> Result<u128> {
    if c.len() != sys.rank() + 1 {
        return Err(Error::DimensionMismatch { expected: sys.rank() + 1, found: c.len() });
    }
    if c.iter().any(|&x| x < 0) {
        return Ok(0);
    }
    let h = c.iter().sum::<i64>();
    let table = PartitionTable::new(sys, u32::try_from(h).map_err(|_| Error::InvalidArgument("height too large".into()))?);
    Ok(table.get(c).unwrap())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormalCharacter {
    pub top: AffineWeight,
    pub depth: u32,
    /// Coordinates of `top − μ` to the multiplicity of `μ`; zeros are absent.
    pub coefficients: BTreeMap<Vec<i64>, i128>,
}

impl FormalCharacter {
    pub fn zero(top: AffineWeight, depth: u32) -> FormalCharacter {
        FormalCharacter { top, depth, coefficients: BTreeMap::new() }
    }

    pub fn coefficient(&self, c: &[i64]) -> i128 {
        self.coefficients.get(c).copied().unwrap_or(0)
    }

    /// Multiplicity of the weight `mu`.
    pub fn multiplicity(&self, sys: &AffineSystem, mu: &AffineWeight) -> i128 {
        sys.affine_coords(&(&self.top - mu)).map_or(0, |c| self.coefficient(&c))
    }

    /// Re-express relative to a higher `top`, keeping heights `≤ depth`.
    pub fn rebase(&self, sys: &AffineSystem, top: &AffineWeight, depth: u32) -> Result<FormalCharacter> {
        let shift = sys
            .affine_coords(&(top - &self.top))
            .filter(|s| s.iter().all(|&x| x >= 0))
            .ok_or_else(|| Error::InvalidArgument(format!("{top} is not above {}", self.top)))?;
        let mut out = FormalCharacter::zero(top.clone(), depth);
        for (c, &v) in &self.coefficients {
            let moved: Vec<i64> = c.iter().zip(&shift).map(|(a, b)| a + b).collect();
            if moved.iter().sum::<i64>() <= depth as i64 {
                out.coefficients.insert(moved, v);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &FormalCharacter) -> Result<FormalCharacter> {
        if self.top != other.top || self.depth != other.depth {
            return Err(Error::InvalidArgument("characters must share top and depth; rebase first".into()));
        }
        let mut out = self.clone();
        for (c, &v) in &other.coefficients {
            let e = out.coefficients.entry(c.clone()).or_insert(0);
            *e += v;
            if *e == 0 {
                out.coefficients.remove(c);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i128) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.top.clone(), self.depth);
        if k != 0 {
            out.coefficients = self.coefficients.iter().map(|(c, v)| (c.clone(), v * k)).collect();
        }
        out
    }
}

/// Character of the Verma module `Δ(λ)` truncated at height `depth`.
pub fn verma_character(sys: &AffineSystem, lambda: &AffineWeight, depth: u32) -> FormalCharacter {
    let table = PartitionTable::new(sys, depth);
    let mut ch = FormalCharacter::zero(lambda.clone(), depth);
    for c in vectors_up_to(sys.rank() + 1, depth as i64) {
        let v = table.get(&c).unwrap();
        if v != 0 {
            ch.coefficients.insert(c, v as i128);
        }
    }
    ch
}

/// `ch Δ(λ) + ch Δ(μ)` for `λ < μ`, based at `μ`: the character of a
/// non-split extension with Verma subquotients `Δ(μ)` and `Δ(λ)`.
pub fn two_step_character(sys: &AffineSystem, lambda: &AffineWeight, mu: &AffineWeight, depth: u32) -> Result<FormalCharacter> {
    let top = verma_character(sys, mu, depth);
    let low = verma_character(sys, lambda, depth).rebase(sys, mu, depth)?;
    top.add(&low)
}

/// One summand `Δ(μ − nβ)` of the sum formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JantzenTerm {
    pub weight: AffineWeight,
    pub root: AffineRoot,
    pub n: i64,
    pub multiplicity: u32,
}

/// Highest weights `μ − nβ` over positive roots `β` and `n ≥ 1` with
/// `2(μ+ρ, β) = n(β, β)`, restricted to the window, sorted by weight.
pub fn jantzen_rhs_terms(sys: &AffineSystem, mu: &AffineWeight, window: &Window) -> Vec<JantzenTerm> {
    let Some(offset) = sys.l1_distance(mu, &window.center) else {
        return Vec::new();
    };
    let max_height = window.depth as i64 + offset;
    let critical = sys.is_critical(mu);
    let mut terms = Vec::new();
    for root in sys.positive_roots_up_to(max_height) {
        let h = sys.root_height(&root);
        if root.is_imaginary() {
            if !critical {
                continue;
            }
            for n in (1..).take_while(|n| n * h <= max_height) {
                let weight = mu - &root.to_weight().scale(&q(n));
                if window.contains(sys, &weight) {
                    terms.push(JantzenTerm { weight, root: root.clone(), n, multiplicity: sys.rank() as u32 });
                }
            }
        } else {
            let p = sys.shifted_coroot_pairing(mu, &root);
            let Some(n) = rational::to_i64(&p).filter(|&n| n >= 1) else { continue };
            if n * h > max_height {
                continue;
            }
            let weight = mu - &root.to_weight().scale(&q(n));
            if window.contains(sys, &weight) {
                terms.push(JantzenTerm { weight, root, n, multiplicity: 1 });
            }
        }
    }
    terms.sort_by(|a, b| {
        a.weight
            .sort_key()
            .cmp(&b.weight.sort_key())
            .then_with(|| a.root.cmp(&b.root))
            .then(a.n.cmp(&b.n))
    });
    terms
}

/// Terms collapsed to a multiset of highest weights.
pub fn term_multiset(terms: &[JantzenTerm]) -> Vec<(AffineWeight, u32)> {
    let mut out: Vec<(AffineWeight, u32)> = Vec::new();
    for t in terms {
        match out.iter_mut().find(|(w, _)| *w == t.weight) {
            Some((_, m)) => *m += t.multiplicity,
            None => out.push((t.weight.clone(), t.multiplicity)),
        }
    }
    out.sort_by_key(|(w, _)| w.sort_key());
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighbourReport {
    pub lower: AffineWeight,
    pub upper: AffineWeight,
    pub multiplicity_of_lower: u32,
    /// Terms `ν ≠ λ` with `ν ≥ λ`.
    pub offenders: Vec<AffineWeight>,
}

impl NeighbourReport {
    pub fn passes(&self) -> bool {
        self.multiplicity_of_lower == 1 && self.offenders.is_empty()
    }
}

/// Leading-term check for neighbouring `λ < μ`: in the sum formula for
/// `Δ(μ)`, `Δ(λ)` occurs exactly once and no other term lies above `λ`.
pub fn jantzen_neighbour_check(sys: &AffineSystem, lambda: &AffineWeight, mu: &AffineWeight, window: &Window) -> Result<NeighbourReport> {
    if !linkage::neighbouring(sys, lambda, mu, window)? {
        return Err(Error::NotNeighbouring(format!("{lambda} and {mu}")));
    }
    let multiset = term_multiset(&jantzen_rhs_terms(sys, mu, window));
    let multiplicity_of_lower = multiset.iter().filter(|(w, _)| w == lambda).map(|(_, m)| *m).sum();
    let offenders = multiset
        .into_iter()
        .filter(|(w, _)| w != lambda && sys.leq(lambda, w))
        .map(|(w, _)| w)
        .collect();
    Ok(NeighbourReport { lower: lambda.clone(), upper: mu.clone(), multiplicity_of_lower, offenders })
}
