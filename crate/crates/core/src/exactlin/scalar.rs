//! Scalars: arbitrary-precision rationals and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The coefficient field: ℚ, or 𝔽_p for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

/// An exact field element.  Rationals are kept in canonical form (reduced,
/// positive denominator) by `num-rational`; 𝔽_p elements are residues in
/// `0..p`, with the modulus carried by the ambient [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

impl FieldSpec {
    /// 𝔽_p with `p` validated prime.
    pub fn fp(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec::Fp(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::zero()),
            FieldSpec::Fp(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::one()),
            FieldSpec::Fp(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::from(BigInt::from(v))),
            FieldSpec::Fp(p) => Scalar::Fp(v.rem_euclid(*p as i64) as u64),
        }
    }

    /// True iff `s` belongs to this field (variant and residue range).
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Q, Scalar::Q(_)) => true,
            (FieldSpec::Fp(p), Scalar::Fp(v)) => v < p,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        match (self, a, b) {
            (FieldSpec::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Q, Scalar::Q(x)) => Scalar::Q(-x),
            (FieldSpec::Fp(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        // Structure constants are mostly 0 and ±1; the short-circuits save
        // the big-integer traffic that would otherwise dominate.
        if a.is_one() {
            return b.clone();
        }
        if b.is_one() {
            return a.clone();
        }
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        match (self, a, b) {
            (FieldSpec::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (FieldSpec::Q, Scalar::Q(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(x.recip()))
                }
            }
            (FieldSpec::Fp(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    Some(Scalar::Fp(pow_mod(*x, p - 2, *p)))
                }
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Parse the serialized form: canonical `a/b` (or plain `a`) over ℚ,
    /// a decimal residue in `0..p` over 𝔽_p.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::BadScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        match self {
            FieldSpec::Q => {
                let (ns, ds) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let n = BigInt::from_str(ns.trim()).map_err(|e| bad(&e.to_string()))?;
                let d = BigInt::from_str(ds.trim()).map_err(|e| bad(&e.to_string()))?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                let r = BigRational::new(n.clone(), d.clone());
                // Serialized rationals must already be canonical.
                if r.numer() != &n || r.denom() != &d {
                    return Err(bad("not in canonical form"));
                }
                Ok(Scalar::Q(r))
            }
            FieldSpec::Fp(p) => {
                let v = u64::from_str(text.trim()).map_err(|e| bad(&e.to_string()))?;
                if v >= *p {
                    return Err(bad(&format!("residue not reduced mod {p}")));
                }
                Ok(Scalar::Fp(v))
            }
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_one(),
            Scalar::Fp(v) => *v == 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_requires_prime() {
        assert!(FieldSpec::fp(7).is_ok());
        assert!(FieldSpec::fp(1_000_000_007).is_ok());
        assert_eq!(FieldSpec::fp(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::fp(91), Err(Error::NotPrime(91)));
    }

    #[test]
    fn rational_parse_is_canonical_only() {
        let q = FieldSpec::Q;
        assert_eq!(q.parse("3/4").unwrap().to_string(), "3/4");
        assert_eq!(q.parse("-5").unwrap().to_string(), "-5");
        assert!(q.parse("2/4").is_err());
        assert!(q.parse("1/-2").is_err());
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::fp(7).unwrap();
        let a = f.parse("5").unwrap();
        let b = f.parse("4").unwrap();
        assert_eq!(f.add(&a, &b), Scalar::Fp(2));
        assert_eq!(f.mul(&a, &b), Scalar::Fp(6));
        assert_eq!(f.inv(&a), Some(Scalar::Fp(3)));
        assert!(f.parse("7").is_err());
    }

    #[test]
    fn rendering_round_trips() {
        let q = FieldSpec::Q;
        for s in ["0", "1", "-7/3", "22/7", "-1"] {
            let v = q.parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }
}
