//! Integral affine roots, the linkage relations `~` (all roots) and `~̄`
//! (real roots only), class enumeration inside finite windows and the
//! neighbouring-weight test.
//!
//! Classes are infinite in general; they are only ever materialized as the
//! part reachable inside a [`Window`], using moves that stay in the window.

use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

use crate::affine_weights::{AffineRoot, AffineSystem, AffineWeight};
use crate::error::{Error, Result};
use crate::rational::{self, integer_solutions, q, IntegerSolutions};
use crate::weyl::{self, Reflection};

/// A finite neighbourhood of `center`: weights of the same level whose
/// difference with `center` has integer affine-simple coordinates of total
/// absolute value at most `depth`. On weights comparable with `center` this
/// is the height of the difference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub center: AffineWeight,
    pub depth: u32,
}

impl Window {
    pub fn new(center: AffineWeight, depth: u32) -> Window {
        Window { center, depth }
    }

    pub fn contains(&self, sys: &AffineSystem, w: &AffineWeight) -> bool {
        matches!(sys.l1_distance(w, &self.center), Some(d) if d <= self.depth as i64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `~`: generated by all positive affine roots.
    Full,
    /// `~̄`: generated by positive real roots only.
    Restricted,
}

impl std::str::FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Relation> {
        match s {
            "full" => Ok(Relation::Full),
            "restricted" => Ok(Relation::Restricted),
            _ => Err(Error::Parse(format!("unknown relation {s:?}; expected full or restricted"))),
        }
    }
}

/// A single generating move of a linkage class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    /// Dot action of `s_{α,n}`.
    Reflect(Reflection),
    /// Translation by `kδ`, a move of `~` at the critical level.
    DeltaShift(i64),
}

impl Move {
    pub fn apply(&self, sys: &AffineSystem, w: &AffineWeight) -> Result<AffineWeight> {
        match self {
            Move::Reflect(r) => weyl::dot_reflect(sys, &r.alpha, r.n, w),
            Move::DeltaShift(k) => Ok(w + &sys.delta().scale(&q(*k))),
        }
    }
}

/// Integer solutions `n` making `α + nδ` integral for one finite root `α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntegralRoot {
    pub alpha: Vec<i64>,
    pub n: IntegerSolutions,
}

/// The integral roots of a weight: real roots `α + nδ` with
/// `2(λ+ρ, α+nδ) ∈ ℤ(α,α)`, and whether the imaginary roots are integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntegralRoots {
    pub critical: bool,
    pub imaginary: bool,
    pub real: Vec<IntegralRoot>,
}

impl IntegralRoots {
    /// Finite roots `α` for which some `α + nδ` is integral.
    pub fn finite_roots(&self) -> Vec<Vec<i64>> {
        self.real.iter().map(|r| r.alpha.clone()).collect()
    }

    pub fn contains(&self, root: &AffineRoot) -> bool {
        if root.is_imaginary() {
            return self.imaginary;
        }
        self.real
            .iter()
            .any(|r| r.alpha == root.finite_part && r.n.contains(root.delta_coeff))
    }
}

pub fn integral_real_roots(sys: &AffineSystem, lambda: &AffineWeight) -> IntegralRoots {
    let shifted = sys.shifted(lambda);
    // (λ+ρ, δ) is the shifted level; it vanishes exactly at the critical level.
    let k = shifted.level.clone();
    let mut real = Vec::new();
    for alpha in sys.finite().roots() {
        let len = sys.finite().root_length_sq(&alpha);
        let a = q(2) * sys.finite().form_with_root(&shifted.fin, &alpha) / &len;
        let step = q(2) * &k / &len;
        let n = integer_solutions(&a, &step);
        if !n.is_empty() {
            real.push(IntegralRoot { alpha, n });
        }
    }
    real.sort();
    IntegralRoots { critical: sys.is_critical(lambda), imaginary: num_traits::Zero::is_zero(&k), real }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassMember {
    pub weight: AffineWeight,
    /// Moves taking the representative to `weight`, first move first.
    pub certificate: Vec<Move>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockClass {
    pub representative: AffineWeight,
    pub relation: Relation,
    pub integral_roots: IntegralRoots,
    /// Sorted by degree, then finite coordinates.
    pub members: Vec<ClassMember>,
}

impl BlockClass {
    pub fn weights(&self) -> impl Iterator<Item = &AffineWeight> {
        self.members.iter().map(|m| &m.weight)
    }

    pub fn contains(&self, w: &AffineWeight) -> bool {
        self.members.iter().any(|m| &m.weight == w)
    }

    /// Replay every certificate and recheck the class invariants.
    pub fn verify(&self, sys: &AffineSystem) -> std::result::Result<(), String> {
        let crit = sys.is_critical(&self.representative);
        for m in &self.members {
            let mut x = self.representative.clone();
            for mv in &m.certificate {
                if !move_is_allowed(sys, &x, mv, self.relation) {
                    return Err(format!("move {mv:?} is not a generating move at {x}"));
                }
                x = mv.apply(sys, &x).map_err(|e| e.to_string())?;
            }
            if x != m.weight {
                return Err(format!("certificate ends at {x}, member is {}", m.weight));
            }
            if m.weight.level != self.representative.level || sys.is_critical(&m.weight) != crit {
                return Err(format!("level changed at {}", m.weight));
            }
            if integral_real_roots(sys, &m.weight) != self.integral_roots {
                return Err(format!("integral roots differ at {}", m.weight));
            }
        }
        Ok(())
    }

    /// Whether every pair of members is comparable.
    pub fn is_totally_ordered(&self, sys: &AffineSystem) -> bool {
        let ws: Vec<&AffineWeight> = self.weights().collect();
        ws.iter()
            .enumerate()
            .all(|(i, a)| ws[i + 1..].iter().all(|b| sys.leq(a, b) || sys.leq(b, a)))
    }
}

fn move_is_allowed(sys: &AffineSystem, x: &AffineWeight, mv: &Move, relation: Relation) -> bool {
    match mv {
        Move::Reflect(r) => {
            sys.finite().is_root(&r.alpha) && sys.shifted_coroot_pairing(x, &r.root()).is_integer()
        }
        Move::DeltaShift(_) => relation == Relation::Full && sys.is_critical(x),
    }
}

/// Breadth-first enumeration of the class of `lambda` inside `window`.
///
/// Moves are dot reflections through integral real roots and, for `~` at
/// the critical level, the shifts `±δ`. Only moves landing in the window are
/// followed.
pub fn class_enumerate(sys: &AffineSystem, lambda: &AffineWeight, relation: Relation, window: &Window) -> BlockClass {
    let offset = sys.l1_distance(lambda, &window.center).unwrap_or(0);
    // A move α+nδ shifts the δ-coordinate by -pn with p a non-zero integer,
    // so |n| is bounded by the distance between the two weights.
    let n_bound = window.depth as i64 + offset + 1;
    let positive: Vec<Vec<i64>> = sys.finite().positive_roots().to_vec();
    let full_critical = relation == Relation::Full && sys.is_critical(lambda);

    let mut seen: HashMap<AffineWeight, Vec<Move>> = HashMap::new();
    seen.insert(lambda.clone(), Vec::new());
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(x) = queue.pop_front() {
        let cert = seen[&x].clone();
        let mut push = |mv: Move, y: AffineWeight| {
            if !seen.contains_key(&y) && window.contains(sys, &y) {
                let mut c = cert.clone();
                c.push(mv);
                seen.insert(y.clone(), c);
                queue.push_back(y);
            }
        };
        for alpha in &positive {
            for n in -n_bound..=n_bound {
                let root = AffineRoot::real(alpha, n);
                let p = sys.shifted_coroot_pairing(&x, &root);
                if !p.is_integer() || num_traits::Zero::is_zero(&p) {
                    continue;
                }
                let y = &x - &root.to_weight().scale(&p);
                push(Move::Reflect(Reflection::new(alpha, n)), y);
            }
        }
        if full_critical {
            for k in [1, -1] {
                let y = &x + &sys.delta().scale(&q(k));
                push(Move::DeltaShift(k), y);
            }
        }
    }

    let mut members: Vec<ClassMember> = seen
        .into_iter()
        .map(|(weight, certificate)| ClassMember { weight, certificate })
        .collect();
    members.sort_by_key(|m| m.weight.sort_key());
    BlockClass {
        representative: lambda.clone(),
        relation,
        integral_roots: integral_real_roots(sys, lambda),
        members,
    }
}

/// All lattice weights `ν` with `lower ≤ ν ≤ upper`, in coordinate order.
pub fn order_interval(sys: &AffineSystem, lower: &AffineWeight, upper: &AffineWeight) -> Vec<AffineWeight> {
    let Some(top) = sys.affine_coords(&(upper - lower)) else {
        return Vec::new();
    };
    if top.iter().any(|&c| c < 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c = vec![0i64; top.len()];
    loop {
        out.push(lower + &sys.from_affine_coords(&c));
        let mut i = 0;
        loop {
            if i == c.len() {
                return out;
            }
            if c[i] < top[i] {
                c[i] += 1;
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// The real positive root `β` and `m ≥ 1` with `μ = λ + mβ` and
/// `2(μ+ρ, β) = m(β, β)`, if any, so that `λ = s_β.μ`.
pub fn linking_root(sys: &AffineSystem, lambda: &AffineWeight, mu: &AffineWeight) -> Option<(AffineRoot, i64)> {
    let c = sys.affine_coords(&(mu - lambda))?;
    if c.iter().any(|&x| x < 0) || c.iter().all(|&x| x == 0) {
        return None;
    }
    let g = c.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    for m in (1..=g).filter(|m| g % m == 0) {
        let beta_c: Vec<i64> = c.iter().map(|x| x / m).collect();
        let w = sys.from_affine_coords(&beta_c);
        let fin: Option<Vec<i64>> = w.fin.iter().map(rational::to_i64).collect();
        let root = AffineRoot::real(&fin?, rational::to_i64(&w.degree)?);
        if !root.is_positive(sys.finite()) || root.is_imaginary() {
            continue;
        }
        if sys.shifted_coroot_pairing(mu, &root) == q(m) {
            return Some((root, m));
        }
    }
    None
}

/// Whether `lambda < mu` are neighbouring: linked through a single real
/// reflection with no `~`-equivalent weight strictly between them.
///
/// The window must contain the whole order interval `[lambda, mu]`.
pub fn neighbouring(sys: &AffineSystem, lambda: &AffineWeight, mu: &AffineWeight, window: &Window) -> Result<bool> {
    sys.check_weight(lambda)?;
    sys.check_weight(mu)?;
    if !sys.lt(lambda, mu) {
        return Ok(false);
    }
    let interval = order_interval(sys, lambda, mu);
    if let Some(out) = interval.iter().find(|v| !window.contains(sys, v)) {
        return Err(Error::WindowTooSmall(format!("{out} lies in [{lambda}, {mu}] but outside the window")));
    }
    if linking_root(sys, lambda, mu).is_none() {
        return Ok(false);
    }
    let class = class_enumerate(sys, lambda, Relation::Full, window);
    let linked: std::collections::HashSet<&AffineWeight> = class.weights().collect();
    Ok(!interval
        .iter()
        .any(|v| v != lambda && v != mu && linked.contains(v)))
}

/// The least window centred at `center` containing `[lower, upper]`.
pub fn window_for_interval(sys: &AffineSystem, center: &AffineWeight, lower: &AffineWeight, upper: &AffineWeight, slack: u32) -> Window {
    let depth = order_interval(sys, lower, upper)
        .iter()
        .filter_map(|v| sys.l1_distance(v, center))
        .max()
        .unwrap_or(0);
    Window::new(center.clone(), depth as u32 + slack)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn a1() -> AffineSystem {
        AffineSystem::preset("A1").unwrap()
    }

    fn gamma_a1() -> AffineWeight {
        AffineWeight::from_ints(&[0], -2, 0)
    }

    #[test]
    fn integral_roots_critical() {
        let sys = a1();
        let r = integral_real_roots(&sys, &gamma_a1());
        assert!(r.critical && r.imaginary);
        assert_eq!(r.finite_roots(), vec![vec![-1], vec![1]]);
        assert!(r.real.iter().all(|x| x.n == IntegerSolutions::All));
        // ⟨λ+ρ, α∨⟩ = 1/2
        let half = AffineWeight::new(vec![frac(-1, 4)], q(-2), q(0));
        let r = integral_real_roots(&sys, &half);
        assert!(r.real.is_empty() && r.imaginary);
    }

    #[test]
    fn integral_roots_noncritical_progression() {
        let sys = a1();
        // level 1: shifted level 3, ⟨λ+ρ, (α+nδ)∨⟩ = a + 3n
        let lam = AffineWeight::new(vec![frac(-1, 2) + frac(1, 6)], q(1), q(0));
        let r = integral_real_roots(&sys, &lam);
        assert!(!r.imaginary && !r.critical);
        for ir in &r.real {
            for n in -10..10 {
                let p = sys.shifted_coroot_pairing(&lam, &AffineRoot::real(&ir.alpha, n));
                assert_eq!(ir.n.contains(n), p.is_integer());
            }
        }
        assert!(!r.contains(&AffineRoot::imaginary(1, 1)));
    }

    #[test]
    fn depth_zero_is_singleton() {
        let sys = AffineSystem::preset("A2").unwrap();
        let lam = AffineWeight::new(vec![q(1), q(0)], q(-3), q(0));
        for rel in [Relation::Full, Relation::Restricted] {
            let c = class_enumerate(&sys, &lam, rel, &Window::new(lam.clone(), 0));
            assert_eq!(c.members.len(), 1);
            assert_eq!(c.members[0].weight, lam);
        }
    }

    #[test]
    fn restricted_chain_a1() {
        let sys = a1();
        let g = gamma_a1();
        let c = class_enumerate(&sys, &g, Relation::Restricted, &Window::new(g.clone(), 6));
        assert_eq!(c.members.len(), 13);
        assert!(c.is_totally_ordered(&sys));
        c.verify(&sys).unwrap();
    }

    #[test]
    fn full_contains_restricted_plus_delta() {
        let sys = a1();
        // pairing 2: the chain has period 2δ, so ~ is strictly coarser
        let g = AffineWeight::new(vec![frac(1, 2)], q(-2), q(0));
        let win = Window::new(g.clone(), 6);
        let full = class_enumerate(&sys, &g, Relation::Full, &win);
        let res = class_enumerate(&sys, &g, Relation::Restricted, &win);
        full.verify(&sys).unwrap();
        for w in res.weights() {
            for k in -6..=6 {
                let shifted = w + &sys.delta().scale(&q(k));
                if win.contains(&sys, &shifted) {
                    assert!(full.contains(&shifted), "{shifted}");
                }
            }
        }
        assert!(full.members.len() > res.members.len());
    }

    #[test]
    fn noncritical_full_equals_restricted() {
        let sys = a1();
        let lam = AffineWeight::from_ints(&[0], 1, 0);
        let win = Window::new(lam.clone(), 8);
        let full = class_enumerate(&sys, &lam, Relation::Full, &win);
        let res = class_enumerate(&sys, &lam, Relation::Restricted, &win);
        let a: Vec<_> = full.weights().collect();
        let b: Vec<_> = res.weights().collect();
        assert_eq!(a, b);
        assert!(a.len() > 1);
        full.verify(&sys).unwrap();
    }

    #[test]
    fn neighbouring_examples() {
        let sys = a1();
        let g = gamma_a1();
        let up = AffineWeight::from_ints(&[-1], -2, 1);
        let up2 = AffineWeight::from_ints(&[0], -2, 1);
        let win = Window::new(g.clone(), 6);
        assert!(neighbouring(&sys, &g, &up, &win).unwrap());
        assert!(!neighbouring(&sys, &g, &up2, &win).unwrap());
        assert!(!neighbouring(&sys, &g, &g, &win).unwrap());
        assert!(!neighbouring(&sys, &up, &g, &win).unwrap());
        let tiny = Window::new(g.clone(), 0);
        assert!(matches!(neighbouring(&sys, &g, &up, &tiny), Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn linking_root_direction() {
        let sys = a1();
        let g = gamma_a1();
        let up = AffineWeight::from_ints(&[-1], -2, 1);
        let (root, m) = linking_root(&sys, &g, &up).unwrap();
        assert_eq!(root, AffineRoot::real(&[-1], 1));
        assert_eq!(m, 1);
        assert_eq!(weyl::dot_reflect(&sys, &root.finite_part, root.delta_coeff, &up).unwrap(), g);
    }

    #[test]
    fn interval_enumeration() {
        let sys = a1();
        let g = gamma_a1();
        let top = &g + &sys.from_affine_coords(&[2, 1]);
        let iv = order_interval(&sys, &g, &top);
        assert_eq!(iv.len(), 6);
        assert!(iv.iter().all(|v| sys.leq(&g, v) && sys.leq(v, &top)));
        assert!(order_interval(&sys, &top, &g).is_empty());
    }

    #[test]
    fn relation_parse() {
        assert_eq!("full".parse::<Relation>().unwrap(), Relation::Full);
        assert!("other".parse::<Relation>().is_err());
    }
}
