//! The line quiver with zigzag relations, truncated to a window of a
//! subgeneric chain.
//!
//! Vertices are `v_i = α↑ⁱγ` for `i ∈ [-N, N]`. Arrows `a_i: v_i → v_{i+1}`
//! and `b_i: v_i → v_{i-1}` satisfy
//!
//! ```text
//! a_{i+1} ∘ a_i = 0,   b_{i-1} ∘ b_i = 0,   a_{i-1} ∘ b_i = c · b_{i+1} ∘ a_i
//! ```
//!
//! with `c = 1` unless configured otherwise. The loop `n_i` is stored as
//! `b_{i+1} ∘ a_i`, except at the right edge `i = N` where only
//! `a_{N-1} ∘ b_N` exists. Relations are imposed only where every path they
//! mention lies in the window; paths of length three or more are zero (in
//! the untruncated algebra this follows from the relations, see the tests).

use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::affine_weights::{AffineSystem, AffineWeight};
use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::subgeneric::SubgenericDatum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Arrow {
    /// `a_i: v_i → v_{i+1}`
    A(i64),
    /// `b_i: v_i → v_{i-1}`
    B(i64),
}

impl Arrow {
    pub fn source(self) -> i64 {
        match self {
            Arrow::A(i) | Arrow::B(i) => i,
        }
    }

    pub fn target(self) -> i64 {
        match self {
            Arrow::A(i) => i + 1,
            Arrow::B(i) => i - 1,
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arrow::A(i) => write!(f, "a_{i}"),
            Arrow::B(i) => write!(f, "b_{i}"),
        }
    }
}

/// A path, arrows listed in the order they are traversed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: i64,
    pub arrows: Vec<Arrow>,
}

impl Path {
    pub fn idempotent(i: i64) -> Path {
        Path { source: i, arrows: Vec::new() }
    }

    pub fn arrow(a: Arrow) -> Path {
        Path { source: a.source(), arrows: vec![a] }
    }

    /// Build from traversal order; `None` if consecutive arrows do not meet.
    pub fn from_arrows(source: i64, arrows: Vec<Arrow>) -> Option<Path> {
        let mut at = source;
        for a in &arrows {
            if a.source() != at {
                return None;
            }
            at = a.target();
        }
        Some(Path { source, arrows })
    }

    pub fn target(&self) -> i64 {
        self.arrows.last().map_or(self.source, |a| a.target())
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Vertices visited, source first.
    pub fn vertices(&self) -> Vec<i64> {
        std::iter::once(self.source).chain(self.arrows.iter().map(|a| a.target())).collect()
    }
}

/// Composition notation, last arrow first: `b_1∘a_0`, or `e_0` for a
/// trivial path.
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "e_{}", self.source);
        }
        let parts: Vec<String> = self.arrows.iter().rev().map(Arrow::to_string).collect();
        write!(f, "{}", parts.join("∘"))
    }
}

impl Serialize for Path {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Rational combination of paths.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgebraElement {
    terms: BTreeMap<Path, Q>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    pub fn from_path(p: Path) -> AlgebraElement {
        AlgebraElement::scaled(Q::one(), p)
    }

    pub fn scaled(c: Q, p: Path) -> AlgebraElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(p, c);
        }
        AlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Q)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, c: Q, p: Path) {
        let e = self.terms.entry(p.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(c.clone(), p.clone());
        }
        out
    }

    pub fn scale(&self, k: &Q) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (p, c) in &self.terms {
            out.add_term(c * k, p.clone());
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| if c.is_one() { p.to_string() } else { format!("{}*{p}", rational::fmt_q(c)) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Which defining relations are imposed. All are on by default; switching
/// one off is only useful to check that verification notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationSet {
    pub a_squared_zero: bool,
    pub b_squared_zero: bool,
    pub commutation: bool,
    pub cut_long_paths: bool,
}

impl Default for RelationSet {
    fn default() -> RelationSet {
        RelationSet { a_squared_zero: true, b_squared_zero: true, commutation: true, cut_long_paths: true }
    }
}

/// A single rewriting opportunity inside a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Redex {
    /// Two consecutive arrows starting at this position.
    Pair(usize),
    /// The whole word has length at least three.
    Cut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagWindow {
    pub datum: SubgenericDatum,
    pub radius: i64,
    pub vertices: Vec<AffineWeight>,
    /// `c` in `a_{i-1} ∘ b_i = c · b_{i+1} ∘ a_i`.
    pub commutation_scalar: Q,
    pub relations: RelationSet,
}

impl ZigzagWindow {
    pub fn build(datum: &SubgenericDatum, radius: i64) -> Result<ZigzagWindow> {
        if radius < 1 {
            return Err(Error::InvalidArgument(format!("radius must be at least 1, got {radius}")));
        }
        if datum.pairing == 0 {
            return Err(Error::NotSubgeneric("pairing is zero".into()));
        }
        Ok(ZigzagWindow {
            datum: datum.clone(),
            radius,
            vertices: datum.chain(radius),
            commutation_scalar: Q::one(),
            relations: RelationSet::default(),
        })
    }

    pub fn with_relations(mut self, relations: RelationSet) -> ZigzagWindow {
        self.relations = relations;
        self
    }

    pub fn with_commutation_scalar(mut self, c: Q) -> Result<ZigzagWindow> {
        if c.is_zero() {
            return Err(Error::InvalidArgument("commutation scalar must be non-zero".into()));
        }
        self.commutation_scalar = c;
        Ok(self)
    }

    pub fn vertex(&self, i: i64) -> Result<&AffineWeight> {
        self.check_index(i)?;
        Ok(&self.vertices[(i + self.radius) as usize])
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        -self.radius..=self.radius
    }

    fn check_index(&self, i: i64) -> Result<()> {
        if i.abs() > self.radius {
            return Err(Error::OutOfWindow { index: i, radius: self.radius });
        }
        Ok(())
    }

    pub fn has_arrow(&self, a: Arrow) -> bool {
        let n = self.radius;
        match a {
            Arrow::A(i) => -n <= i && i < n,
            Arrow::B(i) => -n < i && i <= n,
        }
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out: Vec<Arrow> = self.indices().map(Arrow::A).filter(|&a| self.has_arrow(a)).collect();
        out.extend(self.indices().map(Arrow::B).filter(|&a| self.has_arrow(a)));
        out
    }

    /// Arrows leaving vertex `i`.
    pub fn arrows_from(&self, i: i64) -> Vec<Arrow> {
        [Arrow::A(i), Arrow::B(i)].into_iter().filter(|&a| self.has_arrow(a)).collect()
    }

    /// Normal form of the loop `n_i`.
    pub fn loop_path(&self, i: i64) -> Result<Path> {
        self.check_index(i)?;
        let arrows = if i < self.radius { vec![Arrow::A(i), Arrow::B(i + 1)] } else { vec![Arrow::B(i), Arrow::A(i - 1)] };
        Ok(Path { source: i, arrows })
    }

    /// All normal-form basis paths.
    pub fn basis(&self) -> Vec<Path> {
        let mut out = Vec::new();
        for i in self.indices() {
            out.push(Path::idempotent(i));
            out.extend(self.arrows_from(i).into_iter().map(Path::arrow));
            out.push(self.loop_path(i).unwrap());
        }
        out.sort();
        out
    }

    fn is_valid_path(&self, p: &Path) -> bool {
        p.source.abs() <= self.radius && p.arrows.iter().all(|&a| self.has_arrow(a)) && Path::from_arrows(p.source, p.arrows.clone()).is_some()
    }

    /// Rewriting opportunities in a word, leftmost first.
    pub fn redexes(&self, p: &Path) -> Vec<Redex> {
        let mut out = Vec::new();
        for (k, w) in p.arrows.windows(2).enumerate() {
            if self.rewrite_pair(w[0], w[1]).is_some() {
                out.push(Redex::Pair(k));
            }
        }
        if self.relations.cut_long_paths && p.len() >= 3 {
            out.push(Redex::Cut);
        }
        out
    }

    /// Rewrite of two consecutive arrows (traversal order): `Some(None)` is
    /// zero, `Some(Some((c, w)))` is `c · w`, `None` is irreducible.
    fn rewrite_pair(&self, first: Arrow, second: Arrow) -> Option<Option<(Q, [Arrow; 2])>> {
        match (first, second) {
            (Arrow::A(i), Arrow::A(j)) if j == i + 1 && self.relations.a_squared_zero => Some(None),
            (Arrow::B(i), Arrow::B(j)) if j == i - 1 && self.relations.b_squared_zero => Some(None),
            // a_{i-1} ∘ b_i at vertex i
            (Arrow::B(i), Arrow::A(j)) if j == i - 1 && self.relations.commutation && i < self.radius => {
                Some(Some((self.commutation_scalar.clone(), [Arrow::A(i), Arrow::B(i + 1)])))
            }
            _ => None,
        }
    }

    /// Apply one redex. `None` means the word became zero.
    pub fn apply_redex(&self, p: &Path, r: Redex) -> Option<(Q, Path)> {
        match r {
            Redex::Cut => None,
            Redex::Pair(k) => match self.rewrite_pair(p.arrows[k], p.arrows[k + 1]).expect("redex is reducible") {
                None => None,
                Some((c, repl)) => {
                    let mut arrows = p.arrows.clone();
                    arrows[k] = repl[0];
                    arrows[k + 1] = repl[1];
                    Some((c, Path { source: p.source, arrows }))
                }
            },
        }
    }

    /// Normal form of a single word, always taking the leftmost redex.
    pub fn reduce(&self, p: &Path) -> AlgebraElement {
        let mut coeff = Q::one();
        let mut cur = p.clone();
        loop {
            let Some(&r) = self.redexes(&cur).first() else {
                return AlgebraElement::scaled(coeff, cur);
            };
            match self.apply_redex(&cur, r) {
                None => return AlgebraElement::zero(),
                Some((c, next)) => {
                    coeff *= c;
                    cur = next;
                }
            }
        }
    }

    pub fn reduce_element(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (p, c) in x.terms() {
            out = out.add(&self.reduce(p).scale(c));
        }
        out
    }

    /// `x ∘ y`: first `y`, then `x`.
    pub fn compose(&self, x: &Path, y: &Path) -> Result<AlgebraElement> {
        if !self.is_valid_path(x) || !self.is_valid_path(y) {
            return Err(Error::NotComposable(format!("{x} or {y} is not a path in the window")));
        }
        if y.target() != x.source {
            return Err(Error::NotComposable(format!("{y} ends at {}, {x} starts at {}", y.target(), x.source)));
        }
        let arrows = y.arrows.iter().chain(&x.arrows).copied().collect();
        Ok(self.reduce(&Path { source: y.source, arrows }))
    }

    /// Bilinear product; non-composable pairs multiply to zero.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (px, cx) in x.terms() {
            for (py, cy) in y.terms() {
                if py.target() == px.source {
                    let prod = self.compose(px, py).expect("valid paths");
                    out = out.add(&prod.scale(&(cx * cy)));
                }
            }
        }
        out
    }

    /// Every composable word from `i` to `j` of length at most `max_len`.
    pub fn words(&self, i: i64, j: i64, max_len: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![Path::idempotent(i)];
        while let Some(p) = stack.pop() {
            if p.target() == j {
                out.push(p.clone());
            }
            if p.len() < max_len {
                for a in self.arrows_from(p.target()) {
                    let mut q = p.clone();
                    q.arrows.push(a);
                    stack.push(q);
                }
            }
        }
        out.sort();
        out
    }

    /// Normal-form paths spanning `e_j · A · e_i`, found by reducing every
    /// word from `i` to `j`.
    pub fn hom_space_basis(&self, i: i64, j: i64) -> Result<Vec<Path>> {
        self.check_index(i)?;
        self.check_index(j)?;
        let mut out = BTreeSet::new();
        for w in self.words(i, j, 3) {
            out.extend(self.reduce(&w).support().cloned());
        }
        Ok(out.into_iter().collect())
    }

    pub fn hom_space_dim(&self, i: i64, j: i64) -> Result<usize> {
        Ok(self.hom_space_basis(i, j)?.len())
    }

    pub fn dimension_matrix(&self) -> Vec<Vec<usize>> {
        self.indices()
            .map(|i| self.indices().map(|j| self.hom_space_dim(i, j).unwrap()).collect())
            .collect()
    }

    /// Every normal form reachable by rewriting in any order.
    pub fn reductions_all_orders(&self, p: &Path) -> BTreeSet<AlgebraElement> {
        let mut out = BTreeSet::new();
        self.explore(Q::one(), p, &mut out);
        out
    }

    fn explore(&self, coeff: Q, p: &Path, out: &mut BTreeSet<AlgebraElement>) {
        let redexes = self.redexes(p);
        if redexes.is_empty() {
            out.insert(AlgebraElement::scaled(coeff, p.clone()));
            return;
        }
        for r in redexes {
            match self.apply_redex(p, r) {
                None => {
                    out.insert(AlgebraElement::zero());
                }
                Some((c, next)) => self.explore(&coeff * c, &next, out),
            }
        }
    }

    /// Products of all composable pairs of basis paths.
    pub fn cayley_table(&self) -> Vec<CayleyEntry> {
        let basis = self.basis();
        let mut out = Vec::new();
        for x in &basis {
            for y in &basis {
                if y.target() == x.source {
                    out.push(CayleyEntry { left: x.clone(), right: y.clone(), product: self.compose(x, y).unwrap() });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyEntry {
    pub left: Path,
    pub right: Path,
    /// `left ∘ right`
    pub product: AlgebraElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionMismatch {
    pub i: i64,
    pub j: i64,
    pub expected: u32,
    pub found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub radius: i64,
    pub pairs_checked: usize,
    pub dimension_mismatches: Vec<DimensionMismatch>,
    pub relation_failures: Vec<String>,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.dimension_mismatches.is_empty() && self.relation_failures.is_empty()
    }
}

/// Compare Hom dimensions on interior pairs (`|i|, |j| < N`) with the
/// subgeneric formula and check the defining relations at interior vertices.
pub fn verify_against_formulas(sys: &AffineSystem, w: &ZigzagWindow) -> VerificationReport {
    let n = w.radius;
    let interior: Vec<i64> = (-n + 1..n).collect();
    let mut dimension_mismatches = Vec::new();
    let mut pairs_checked = 0;
    for &i in &interior {
        let di = w.datum.shifted(i);
        for &j in &interior {
            let expected = di.hom_dimension(sys, w.vertex(j).unwrap()).unwrap_or(u32::MAX);
            let found = w.hom_space_dim(i, j).unwrap();
            pairs_checked += 1;
            if found as u32 != expected {
                dimension_mismatches.push(DimensionMismatch { i, j, expected, found });
            }
        }
    }

    let mut relation_failures = Vec::new();
    let el = |arrows: Vec<Arrow>, source: i64| Path::from_arrows(source, arrows).unwrap();
    let expect_zero = |failures: &mut Vec<String>, what: String, x: AlgebraElement| {
        if !x.is_zero() {
            failures.push(format!("{what} = {x}, expected 0"));
        }
    };
    for &i in &interior {
        let a = el(vec![Arrow::A(i)], i);
        let b = el(vec![Arrow::B(i)], i);
        let n_i = w.loop_path(i).unwrap();
        if w.has_arrow(Arrow::A(i + 1)) {
            expect_zero(&mut relation_failures, format!("a_{}∘a_{i}", i + 1), w.compose(&el(vec![Arrow::A(i + 1)], i + 1), &a).unwrap());
        }
        if w.has_arrow(Arrow::B(i - 1)) {
            expect_zero(&mut relation_failures, format!("b_{}∘b_{i}", i - 1), w.compose(&el(vec![Arrow::B(i - 1)], i - 1), &b).unwrap());
        }
        expect_zero(&mut relation_failures, format!("n_{i}∘n_{i}"), w.compose(&n_i, &n_i).unwrap());
        expect_zero(&mut relation_failures, format!("n_{}∘a_{i}", i + 1), w.compose(&w.loop_path(i + 1).unwrap(), &a).unwrap());
        expect_zero(&mut relation_failures, format!("n_{}∘b_{i}", i - 1), w.compose(&w.loop_path(i - 1).unwrap(), &b).unwrap());
        let ba = w.compose(&el(vec![Arrow::B(i + 1)], i + 1), &a).unwrap();
        let ab = w.compose(&el(vec![Arrow::A(i - 1)], i - 1), &b).unwrap();
        let n_el = AlgebraElement::from_path(n_i.clone());
        if ba != n_el {
            relation_failures.push(format!("b_{}∘a_{i} = {ba}, expected {n_i}", i + 1));
        }
        if ab != n_el.scale(&w.commutation_scalar) {
            relation_failures.push(format!("a_{}∘b_{i} = {ab}, expected multiple of {n_i}", i - 1));
        }
    }
    VerificationReport { radius: n, pairs_checked, dimension_mismatches, relation_failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn window(radius: i64) -> (AffineSystem, ZigzagWindow) {
        let sys = AffineSystem::preset("A1").unwrap();
        let d = SubgenericDatum::new(&sys, &AffineWeight::from_ints(&[0], -2, 0)).unwrap();
        let w = ZigzagWindow::build(&d, radius).unwrap();
        (sys, w)
    }

    fn arrow(a: Arrow) -> Path {
        Path::arrow(a)
    }

    #[test]
    fn radius_one_shape() {
        let (_, w) = window(1);
        assert_eq!(w.vertices.len(), 3);
        assert_eq!(w.arrows().len(), 4);
        assert_eq!(w.loop_path(1).unwrap().arrows, vec![Arrow::B(1), Arrow::A(0)]);
        assert_eq!(w.loop_path(-1).unwrap().arrows, vec![Arrow::A(-1), Arrow::B(0)]);
        assert_eq!(w.basis().len(), 3 + 4 + 3);
        assert!(ZigzagWindow::build(&w.datum, 0).is_err());
    }

    #[test]
    fn arrow_count() {
        for n in 1..6 {
            let (_, w) = window(n);
            assert_eq!(w.arrows().len() as i64, 2 * (2 * n));
        }
    }

    #[test]
    fn compose_examples() {
        let (_, w) = window(3);
        let n0 = AlgebraElement::from_path(w.loop_path(0).unwrap());
        assert_eq!(w.compose(&arrow(Arrow::B(1)), &arrow(Arrow::A(0))).unwrap(), n0);
        assert!(w.compose(&arrow(Arrow::A(1)), &arrow(Arrow::A(0))).unwrap().is_zero());
        let l = w.loop_path(0).unwrap();
        assert!(w.compose(&l, &l).unwrap().is_zero());
        assert_eq!(w.compose(&arrow(Arrow::A(-1)), &arrow(Arrow::B(0))).unwrap(), n0);
        assert!(matches!(w.compose(&arrow(Arrow::A(0)), &arrow(Arrow::A(0))), Err(Error::NotComposable(_))));
        assert!(w.compose(&arrow(Arrow::A(3)), &Path::idempotent(3)).is_err());
    }

    #[test]
    fn idempotents() {
        let (_, w) = window(2);
        for i in w.indices() {
            let e = Path::idempotent(i);
            assert_eq!(w.compose(&e, &e).unwrap(), AlgebraElement::from_path(e.clone()));
            for a in w.arrows_from(i) {
                let p = arrow(a);
                assert_eq!(w.compose(&Path::idempotent(a.target()), &p).unwrap(), AlgebraElement::from_path(p.clone()));
                assert_eq!(w.compose(&p, &e).unwrap(), AlgebraElement::from_path(p.clone()));
            }
        }
        let x = AlgebraElement::from_path(Path::idempotent(0));
        let y = AlgebraElement::from_path(arrow(Arrow::A(1)));
        assert!(w.mul(&x, &y).is_zero());
    }

    #[test]
    fn hom_examples() {
        let (_, w) = window(4);
        assert_eq!(w.hom_space_dim(0, 0).unwrap(), 2);
        assert_eq!(w.hom_space_dim(0, 1).unwrap(), 1);
        assert_eq!(w.hom_space_dim(0, 3).unwrap(), 0);
        assert_eq!(w.hom_space_basis(0, 0).unwrap(), vec![Path::idempotent(0), w.loop_path(0).unwrap()]);
        assert_eq!(w.hom_space_basis(0, -1).unwrap(), vec![arrow(Arrow::B(0))]);
        assert!(matches!(w.hom_space_dim(0, 5), Err(Error::OutOfWindow { .. })));
    }

    #[test]
    fn verification_passes_and_detects_mutations() {
        let (sys, w) = window(4);
        let rep = verify_against_formulas(&sys, &w);
        assert!(rep.passes(), "{rep:?}");
        assert_eq!(rep.pairs_checked, 49);
        for drop in 0..3 {
            let mut rel = RelationSet::default();
            match drop {
                0 => rel.a_squared_zero = false,
                1 => rel.b_squared_zero = false,
                _ => rel.commutation = false,
            }
            let rep = verify_against_formulas(&sys, &w.clone().with_relations(rel));
            assert!(!rep.dimension_mismatches.is_empty(), "dropping relation {drop} went unnoticed");
        }
    }

    #[test]
    fn scalar_hook() {
        let (sys, w) = window(3);
        let w = w.with_commutation_scalar(q(5)).unwrap();
        assert!(verify_against_formulas(&sys, &w).passes());
        let ab = w.compose(&arrow(Arrow::A(-1)), &arrow(Arrow::B(0))).unwrap();
        assert_eq!(ab, AlgebraElement::scaled(q(5), w.loop_path(0).unwrap()));
        assert!(w.clone().with_commutation_scalar(q(0)).is_err());
    }

    #[test]
    fn vertices_match_chain() {
        let (sys, w) = window(3);
        for i in w.indices() {
            assert_eq!(w.datum.chain_index(&sys, w.vertex(i).unwrap()), Some(i));
        }
        for pair in w.vertices.windows(2) {
            assert!(sys.lt(&pair[0], &pair[1]));
        }
    }

    #[test]
    fn display() {
        let (_, w) = window(2);
        assert_eq!(w.loop_path(0).unwrap().to_string(), "b_1∘a_0");
        assert_eq!(Path::idempotent(-1).to_string(), "e_-1");
        assert_eq!(AlgebraElement::zero().to_string(), "0");
    }
}
