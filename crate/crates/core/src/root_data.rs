//! Finite simple root systems built from Cartan matrices.
//!
//! The invariant form is normalized so that the highest root has squared
//! length 2. Every integrality condition used downstream (coroot pairings,
//! reflections, the critical level) is a ratio of form values and does not
//! see this choice of scale.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::rational::{self, q, Q};

const MAX_RANK: usize = 12;

/// A finite simple root system with its normalized invariant form.
///
/// Immutable after construction; roots are integer vectors in the
/// simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    form: Vec<Vec<Q>>,
    highest_root: Vec<i64>,
    dual_marks: Vec<i64>,
    dual_coxeter_number: i64,
}

/// JSON form of a Cartan matrix: `{"cartan": [[2,-1],[-1,2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanSpec {
    pub cartan: Vec<Vec<i64>>,
}

impl CartanSpec {
    pub fn from_json(s: &str) -> Result<CartanSpec> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("Cartan JSON: {e}")))
    }
}

/// Cartan matrix for one of the named presets `A1`, `A2`, `B2`, `G2`.
///
/// Convention: `a_ij = 2(α_i, α_j) / (α_j, α_j)`. In `B2` the first simple
/// root is long; in `G2` the first simple root is short.
pub fn preset_cartan(name: &str) -> Option<Vec<Vec<i64>>> {
    let m = match name {
        "A1" => vec![vec![2]],
        "A2" => vec![vec![2, -1], vec![-1, 2]],
        "B2" => vec![vec![2, -2], vec![-1, 2]],
        "G2" => vec![vec![2, -1], vec![-3, 2]],
        _ => return None,
    };
    Some(m)
}

pub const PRESETS: [&str; 4] = ["A1", "A2", "B2", "G2"];

impl FiniteRootSystem {
    pub fn preset(name: &str) -> Result<FiniteRootSystem> {
        let m = preset_cartan(name).ok_or_else(|| Error::Parse(format!("unknown preset {name:?}")))?;
        FiniteRootSystem::from_cartan(&m)
    }

    /// Build and validate the root system of a simple Cartan matrix.
    pub fn from_cartan(cartan: &[Vec<i64>]) -> Result<FiniteRootSystem> {
        let rank = cartan.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if rank > MAX_RANK {
            return Err(Error::InvalidCartan(format!("rank {rank} exceeds the supported maximum {MAX_RANK}")));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidCartan(format!("row {i} has length {}, expected {rank}", row.len())));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is {a}, expected 2")));
                }
                if i != j && a > 0 {
                    return Err(Error::InvalidCartan(format!("off-diagonal entry ({i},{j}) is positive")));
                }
                if i != j && a < -3 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({i},{j}) is {a}; not of finite type"
                    )));
                }
                if i != j && (a == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) must vanish together"
                    )));
                }
            }
        }

        // Half squared lengths eps_j, solving a_ij eps_j = a_ji eps_i along the diagram.
        let mut eps: Vec<Option<Q>> = vec![None; rank];
        eps[0] = Some(Q::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..rank {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let e_i = eps[i].clone().unwrap();
                let want = e_i * q(cartan[j][i]) / q(cartan[i][j]);
                match &eps[j] {
                    None => {
                        eps[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(e_j) if *e_j != want => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
        if eps.iter().any(Option::is_none) {
            return Err(Error::InvalidCartan("Dynkin diagram is disconnected; matrix is not simple".into()));
        }
        let eps: Vec<Q> = eps.into_iter().map(Option::unwrap).collect();
        let mut form: Vec<Vec<Q>> = (0..rank)
            .map(|i| (0..rank).map(|j| q(cartan[i][j]) * &eps[j]).collect())
            .collect();

        for k in 1..=rank {
            let minor: Vec<Vec<Q>> = form[..k].iter().map(|r| r[..k].to_vec()).collect();
            if rational::determinant(&minor) <= Q::zero() {
                return Err(Error::InvalidCartan(format!(
                    "symmetrized matrix is not positive definite (leading minor of order {k} is not positive)"
                )));
            }
        }

        let positive_roots = close_under_reflections(cartan)?;
        let highest_root = positive_roots.last().unwrap().clone();

        let theta_sq = quad(&form, &highest_root);
        let scale = q(2) / theta_sq;
        for row in form.iter_mut() {
            for x in row.iter_mut() {
                *x *= &scale;
            }
        }

        // θ = θ∨ = Σ m_i (α_i,α_i)/2 α_i∨
        let dual_marks: Vec<i64> = (0..rank)
            .map(|i| {
                let c = q(highest_root[i]) * &form[i][i] / q(2);
                rational::to_i64(&c).ok_or_else(|| Error::InvalidCartan("non-integral dual mark".into()))
            })
            .collect::<Result<_>>()?;
        let dual_coxeter_number = 1 + dual_marks.iter().sum::<i64>();

        Ok(FiniteRootSystem {
            rank,
            cartan: cartan.to_vec(),
            positive_roots,
            form,
            highest_root,
            dual_marks,
            dual_coxeter_number,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// All roots, positive ones first, then their negatives.
    pub fn roots(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(|r| r.iter().map(|x| -x).collect()))
    }

    pub fn form_matrix(&self) -> &[Vec<Q>] {
        &self.form
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    pub fn dual_marks(&self) -> &[i64] {
        &self.dual_marks
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter_number
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        coords.len() == self.rank
            && (self.positive_roots.iter().any(|r| r == coords)
                || self.positive_roots.iter().any(|r| r.iter().zip(coords).all(|(a, b)| *a == -b)))
    }

    pub fn is_positive_root(&self, coords: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r == coords)
    }

    /// The invariant form on rational vectors in simple-root coordinates.
    pub fn inner_product_finite(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        self.check_dim(x.len())?;
        self.check_dim(y.len())?;
        Ok(self.form_unchecked(x, y))
    }

    pub(crate) fn form_unchecked(&self, x: &[Q], y: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.form[i][j].is_zero() {
                    acc += xi * &self.form[i][j] * yj;
                }
            }
        }
        acc
    }

    pub(crate) fn form_with_root(&self, x: &[Q], root: &[i64]) -> Q {
        let mut acc = Q::zero();
        for (j, &r) in root.iter().enumerate() {
            if r == 0 {
                continue;
            }
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() {
                    acc += xi * &self.form[i][j] * q(r);
                }
            }
        }
        acc
    }

    /// `(β, β)` for an integer vector.
    pub fn root_length_sq(&self, root: &[i64]) -> Q {
        quad(&self.form, root)
    }

    /// `⟨x, β∨⟩ = 2(x, β)/(β, β)`.
    pub fn coroot_pairing(&self, x: &[Q], root: &[i64]) -> Q {
        q(2) * self.form_with_root(x, root) / self.root_length_sq(root)
    }

    /// The finite Weyl vector, characterized by `⟨ρ, α_i∨⟩ = 1`.
    pub fn rho_fin(&self) -> Vec<Q> {
        self.from_coroot_pairings(&vec![Q::one(); self.rank])
            .expect("Cartan matrix is invertible")
    }

    /// Half the sum of positive roots; equals [`rho_fin`](Self::rho_fin).
    pub fn half_sum_positive_roots(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.rank];
        for r in &self.positive_roots {
            for (a, &b) in v.iter_mut().zip(r) {
                *a += q(b);
            }
        }
        v.into_iter().map(|x| x / q(2)).collect()
    }

    /// The vector `x` with `⟨x, α_i∨⟩ = pairings[i]`.
    pub fn from_coroot_pairings(&self, pairings: &[Q]) -> Result<Vec<Q>> {
        self.check_dim(pairings.len())?;
        // ⟨x, α_j∨⟩ = Σ_i x_i a_ij, i.e. the transposed Cartan matrix.
        let m: Vec<Vec<Q>> = (0..self.rank)
            .map(|j| (0..self.rank).map(|i| q(self.cartan[i][j])).collect())
            .collect();
        rational::solve(&m, pairings).ok_or_else(|| Error::InvalidCartan("singular Cartan matrix".into()))
    }

    /// Root height `Σ c_i`.
    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// Simple reflection `s_i` on an integer vector.
    pub fn simple_reflection(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let pairing: i64 = v.iter().enumerate().map(|(j, &x)| x * self.cartan[j][i]).sum();
        let mut out = v.to_vec();
        out[i] -= pairing;
        out
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: n });
        }
        Ok(())
    }
}

fn quad(form: &[Vec<Q>], v: &[i64]) -> Q {
    let mut acc = Q::zero();
    for (i, &a) in v.iter().enumerate() {
        for (j, &b) in v.iter().enumerate() {
            if a != 0 && b != 0 {
                acc += &form[i][j] * q(a * b);
            }
        }
    }
    acc
}

/// Positive roots as the orbit of the simple roots under simple reflections.
fn close_under_reflections(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    const MAX_ROOTS: usize = 4096;
    let rank = cartan.len();
    let reflect = |i: usize, v: &[i64]| -> Vec<i64> {
        let p: i64 = v.iter().enumerate().map(|(j, &x)| x * cartan[j][i]).sum();
        let mut out = v.to_vec();
        out[i] -= p;
        out
    };
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..rank {
            let w = reflect(i, &v);
            if seen.insert(w.clone()) {
                if seen.len() > MAX_ROOTS {
                    return Err(Error::InvalidCartan("root system is not finite".into()));
                }
                queue.push_back(w);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
    pos.sort_by(|a, b| FiniteRootSystem::height(a).cmp(&FiniteRootSystem::height(b)).then(a.cmp(b)));
    Ok(pos)
}
