//! Exact rational scalars and the `"p/q"` string encoding used in every
//! JSON surface.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serializer};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

/// Longest accepted numeral. Keeps hostile input from allocating huge integers.
const MAX_NUMERAL_LEN: usize = 256;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p"`, `"-p"`, `"p/q"` or `"-p/q"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if t.len() > MAX_NUMERAL_LEN {
        return Err(Error::Parse(format!("rational longer than {MAX_NUMERAL_LEN} characters")));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let parse_int = |x: &str| -> Result<BigInt> {
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("invalid integer {x:?} in rational {s:?}")));
        }
        BigInt::from_str(x).map_err(|e| Error::Parse(format!("{e} in {s:?}")))
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(n, d))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// The value as an `i64`, if it is an integer in range.
pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// Solve `m * x = b` exactly. Returns `None` for a singular matrix.
#[allow(clippy::needless_range_loop)]
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Exact determinant by fraction-valued Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &p;
                for c in col..n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    det
}

/// Solutions `n` of `a + n*k ∈ ℤ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IntegerSolutions {
    None,
    All,
    /// `n ≡ residue (mod modulus)`, with `0 <= residue < modulus`.
    Progression { residue: i64, modulus: i64 },
}

impl IntegerSolutions {
    pub fn contains(&self, n: i64) -> bool {
        match self {
            IntegerSolutions::None => false,
            IntegerSolutions::All => true,
            IntegerSolutions::Progression { residue, modulus } => n.rem_euclid(*modulus) == *residue,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IntegerSolutions::None)
    }
}

/// Solve `a + n*k ∈ ℤ` for integer `n`.
pub fn integer_solutions(a: &Q, k: &Q) -> IntegerSolutions {
    if k.is_zero() {
        return if a.is_integer() { IntegerSolutions::All } else { IntegerSolutions::None };
    }
    // a = an/ad, k = kn/kd; multiply through by l = lcm(ad, kd):
    // n * (kn*l/kd) ≡ -(an*l/ad)  (mod l)
    let l = a.denom().lcm(k.denom());
    let coef = (k.numer() * &l / k.denom()).mod_floor(&l);
    let rhs = (-(a.numer() * &l / a.denom())).mod_floor(&l);
    if l.is_one() {
        return IntegerSolutions::All;
    }
    let g = coef.gcd(&l);
    if !rhs.is_multiple_of(&g) {
        return IntegerSolutions::None;
    }
    let m = &l / &g;
    if m.is_one() {
        return IntegerSolutions::All;
    }
    let c = (&coef / &g).mod_floor(&m);
    let r = (&rhs / &g).mod_floor(&m);
    let inv = mod_inverse(&c, &m).expect("coprime after dividing by gcd");
    let residue = (r * inv).mod_floor(&m);
    match (residue.to_i64(), m.to_i64()) {
        (Some(residue), Some(modulus)) => IntegerSolutions::Progression { residue, modulus },
        _ => IntegerSolutions::None,
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

pub(crate) mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod serde_q_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&fmt_q(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_q(s).map_err(serde::de::Error::custom)).collect()
    }
}
