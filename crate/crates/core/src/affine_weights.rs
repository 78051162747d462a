//! The dual Cartan subalgebra of the affine algebra: weights, affine roots,
//! the extended invariant form, the Weyl vector and the dominance order.
//!
//! A weight is stored as its finite part in simple-root coordinates
//! together with its value on the central element `K` (the level) and on
//! the degree operator `D`. There is no fundamental-weight coordinate
//! system; finite parts are always in the simple-root basis.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::{self, q, Q};
use crate::root_data::FiniteRootSystem;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineWeight {
    #[serde(with = "rational::serde_q_vec")]
    pub fin: Vec<Q>,
    #[serde(with = "rational::serde_q")]
    pub level: Q,
    #[serde(with = "rational::serde_q")]
    pub degree: Q,
}

impl AffineWeight {
    pub fn new(fin: Vec<Q>, level: Q, degree: Q) -> AffineWeight {
        AffineWeight { fin, level, degree }
    }

    pub fn zero(rank: usize) -> AffineWeight {
        AffineWeight::new(vec![Q::zero(); rank], Q::zero(), Q::zero())
    }

    /// `δ`: zero on the finite Cartan and on `K`, one on `D`.
    pub fn delta(rank: usize) -> AffineWeight {
        AffineWeight::new(vec![Q::zero(); rank], Q::zero(), Q::one())
    }

    pub fn from_ints(fin: &[i64], level: i64, degree: i64) -> AffineWeight {
        AffineWeight::new(fin.iter().map(|&x| q(x)).collect(), q(level), q(degree))
    }

    pub fn from_json(s: &str) -> Result<AffineWeight> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("weight JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("weights always serialize")
    }

    pub fn rank(&self) -> usize {
        self.fin.len()
    }

    pub fn scale(&self, c: &Q) -> AffineWeight {
        AffineWeight::new(self.fin.iter().map(|x| x * c).collect(), &self.level * c, &self.degree * c)
    }

    pub fn is_zero(&self) -> bool {
        self.level.is_zero() && self.degree.is_zero() && self.fin.iter().all(Zero::is_zero)
    }

    /// Sort key: degree, then finite coordinates lexicographically, then level.
    pub fn sort_key(&self) -> (Q, Vec<Q>, Q) {
        (self.degree.clone(), self.fin.clone(), self.level.clone())
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fin: Vec<String> = self.fin.iter().map(rational::fmt_q).collect();
        write!(
            f,
            "([{}], K={}, D={})",
            fin.join(", "),
            rational::fmt_q(&self.level),
            rational::fmt_q(&self.degree)
        )
    }
}

impl<'a> Add<&'a AffineWeight> for &'a AffineWeight {
    type Output = AffineWeight;
    fn add(self, rhs: &AffineWeight) -> AffineWeight {
        assert_eq!(self.fin.len(), rhs.fin.len(), "weight rank mismatch");
        AffineWeight::new(
            self.fin.iter().zip(&rhs.fin).map(|(a, b)| a + b).collect(),
            &self.level + &rhs.level,
            &self.degree + &rhs.degree,
        )
    }
}

impl<'a> Sub<&'a AffineWeight> for &'a AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: &AffineWeight) -> AffineWeight {
        assert_eq!(self.fin.len(), rhs.fin.len(), "weight rank mismatch");
        AffineWeight::new(
            self.fin.iter().zip(&rhs.fin).map(|(a, b)| a - b).collect(),
            &self.level - &rhs.level,
            &self.degree - &rhs.degree,
        )
    }
}

impl Add for AffineWeight {
    type Output = AffineWeight;
    fn add(self, rhs: AffineWeight) -> AffineWeight {
        &self + &rhs
    }
}

impl Sub for AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: AffineWeight) -> AffineWeight {
        &self - &rhs
    }
}

impl Neg for &AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        AffineWeight::new(self.fin.iter().map(|x| -x).collect(), -&self.level, -&self.degree)
    }
}

impl Neg for AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        -&self
    }
}

impl Mul<&AffineWeight> for &Q {
    type Output = AffineWeight;
    fn mul(self, rhs: &AffineWeight) -> AffineWeight {
        rhs.scale(self)
    }
}

/// An affine root `α + nδ` (real) or `nδ` (imaginary).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot {
    pub finite_part: Vec<i64>,
    pub delta_coeff: i64,
}

impl AffineRoot {
    pub fn real(alpha: &[i64], n: i64) -> AffineRoot {
        AffineRoot { finite_part: alpha.to_vec(), delta_coeff: n }
    }

    pub fn imaginary(rank: usize, n: i64) -> AffineRoot {
        AffineRoot { finite_part: vec![0; rank], delta_coeff: n }
    }

    pub fn is_imaginary(&self) -> bool {
        self.finite_part.iter().all(|&x| x == 0) && self.delta_coeff != 0
    }

    /// Whether this is a root of the affinization of `rs`.
    pub fn is_root(&self, rs: &FiniteRootSystem) -> bool {
        self.is_imaginary() || rs.is_root(&self.finite_part)
    }

    pub fn is_real(&self, rs: &FiniteRootSystem) -> bool {
        rs.is_root(&self.finite_part)
    }

    /// Positive iff `n ≥ 1`, or `n = 0` and the finite part is a positive root.
    pub fn is_positive(&self, rs: &FiniteRootSystem) -> bool {
        self.is_root(rs) && (self.delta_coeff >= 1 || (self.delta_coeff == 0 && rs.is_positive_root(&self.finite_part)))
    }

    /// The root as an element of the weight space (level zero).
    pub fn to_weight(&self) -> AffineWeight {
        AffineWeight::new(self.finite_part.iter().map(|&x| q(x)).collect(), Q::zero(), q(self.delta_coeff))
    }
}

/// A finite root system together with its affinization data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSystem {
    finite: FiniteRootSystem,
    rho: AffineWeight,
}

impl AffineSystem {
    pub fn new(finite: FiniteRootSystem) -> AffineSystem {
        let rho_fin = finite.rho_fin();
        // ρ(K) = ρ(α₀∨) + ⟨ρ, θ∨⟩ = 1 + (ρ, θ) since (θ, θ) = 2.
        let level = Q::one() + finite.form_with_root(&rho_fin, finite.highest_root());
        // ρ(D) is fixed to zero.
        let rho = AffineWeight::new(rho_fin, level, Q::zero());
        AffineSystem { finite, rho }
    }

    pub fn preset(name: &str) -> Result<AffineSystem> {
        Ok(AffineSystem::new(FiniteRootSystem::preset(name)?))
    }

    pub fn finite(&self) -> &FiniteRootSystem {
        &self.finite
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    pub fn check_weight(&self, w: &AffineWeight) -> Result<()> {
        self.finite.check_dim(w.fin.len())
    }

    pub fn delta(&self) -> AffineWeight {
        AffineWeight::delta(self.rank())
    }

    /// The affine simple root `α₀ = δ − θ`.
    pub fn alpha0(&self) -> AffineRoot {
        AffineRoot::real(&self.finite.highest_root().iter().map(|x| -x).collect::<Vec<_>>(), 1)
    }

    /// `(x, y) = (x_fin, y_fin) + x(K) y(D) + x(D) y(K)`.
    pub fn bilinear(&self, x: &AffineWeight, y: &AffineWeight) -> Q {
        self.finite.form_unchecked(&x.fin, &y.fin) + &x.level * &y.degree + &x.degree * &y.level
    }

    /// `(x, α + nδ)` without materializing the root.
    pub fn pair_with_root(&self, x: &AffineWeight, root: &AffineRoot) -> Q {
        self.finite.form_with_root(&x.fin, &root.finite_part) + &x.level * q(root.delta_coeff)
    }

    /// The Weyl vector: one on every simple affine coroot, zero on `D`.
    pub fn rho(&self) -> &AffineWeight {
        &self.rho
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.finite.dual_coxeter_number()
    }

    pub fn critical_level(&self) -> Q {
        q(-self.dual_coxeter_number())
    }

    pub fn is_critical(&self, w: &AffineWeight) -> bool {
        w.level == self.critical_level()
    }

    /// `w + ρ`.
    pub fn shifted(&self, w: &AffineWeight) -> AffineWeight {
        w + &self.rho
    }

    /// Coordinates of a level-zero difference in the affine simple roots
    /// `α₀, α₁, …, α_r` (index 0 is `α₀`). `None` if the level is non-zero or
    /// a coordinate is not an integer.
    pub fn affine_coords(&self, diff: &AffineWeight) -> Option<Vec<i64>> {
        if !diff.level.is_zero() {
            return None;
        }
        let c0 = rational::to_i64(&diff.degree)?;
        let mut out = Vec::with_capacity(self.rank() + 1);
        out.push(c0);
        for (b, &m) in diff.fin.iter().zip(self.finite.highest_root()) {
            let bi = rational::to_i64(b)?;
            out.push(bi.checked_add(c0.checked_mul(m)?)?);
        }
        Some(out)
    }

    /// Inverse of [`affine_coords`](Self::affine_coords).
    pub fn from_affine_coords(&self, c: &[i64]) -> AffineWeight {
        assert_eq!(c.len(), self.rank() + 1, "affine coordinate length");
        let c0 = c[0];
        let fin = c[1..]
            .iter()
            .zip(self.finite.highest_root())
            .map(|(&ci, &m)| q(ci - c0 * m))
            .collect();
        AffineWeight::new(fin, Q::zero(), q(c0))
    }

    /// Decide `mu ≤ lambda`, i.e. `lambda − mu` is a sum of positive affine roots.
    pub fn leq(&self, mu: &AffineWeight, lambda: &AffineWeight) -> bool {
        match self.affine_coords(&(lambda - mu)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    pub fn lt(&self, mu: &AffineWeight, lambda: &AffineWeight) -> bool {
        mu != lambda && self.leq(mu, lambda)
    }

    /// Affine height of a root (sum of affine simple coordinates).
    pub fn root_height(&self, root: &AffineRoot) -> i64 {
        let coxeter = 1 + FiniteRootSystem::height(self.finite.highest_root());
        FiniteRootSystem::height(&root.finite_part) + root.delta_coeff * coxeter
    }

    /// Positive affine roots of height at most `max_height`, each listed once
    /// (imaginary roots are not repeated for their multiplicity).
    pub fn positive_roots_up_to(&self, max_height: i64) -> Vec<AffineRoot> {
        let rank = self.rank();
        let mut out = Vec::new();
        for beta in self.finite.positive_roots() {
            let r = AffineRoot::real(beta, 0);
            if self.root_height(&r) <= max_height {
                out.push(r);
            }
        }
        let mut n = 1;
        while self.root_height(&AffineRoot::real(&self.finite.highest_root().iter().map(|x| -x).collect::<Vec<_>>(), n))
            <= max_height
        {
            for beta in self.finite.roots() {
                let r = AffineRoot::real(&beta, n);
                if self.root_height(&r) <= max_height {
                    out.push(r);
                }
            }
            let im = AffineRoot::imaginary(rank, n);
            if self.root_height(&im) <= max_height {
                out.push(im);
            }
            n += 1;
        }
        out.sort_by_key(|r| (self.root_height(r), r.clone()));
        out
    }

    /// Multiplicity of a positive root: `rank` for imaginary roots, else 1.
    pub fn root_multiplicity(&self, root: &AffineRoot) -> usize {
        if root.is_imaginary() {
            self.rank()
        } else {
            1
        }
    }

    /// Coordinates of a root in the affine simple roots.
    pub fn root_coords(&self, root: &AffineRoot) -> Vec<i64> {
        self.affine_coords(&root.to_weight()).expect("roots are in the root lattice")
    }

    /// Absolute L1 size of a lattice difference, `None` off-lattice.
    pub fn l1_distance(&self, a: &AffineWeight, b: &AffineWeight) -> Option<i64> {
        self.affine_coords(&(a - b)).map(|c| c.iter().map(|x| x.abs()).sum())
    }

    /// `2(x + ρ, β)/(β, β)` for a real root `β`.
    pub fn shifted_coroot_pairing(&self, x: &AffineWeight, root: &AffineRoot) -> Q {
        let num = self.pair_with_root(&self.shifted(x), root);
        q(2) * num / self.finite.root_length_sq(&root.finite_part)
    }
}
