//! Exact scalars over `Q(zeta_n)` (with `n = 1` the rationals) or a prime field `F_p`.
//!
//! Every value carries enough information to know which field it lives in, so
//! mixing fields is detected at runtime instead of silently producing garbage.
//! Cyclotomic elements are stored as coefficient vectors of length `phi(n)`,
//! reduced modulo the `n`-th cyclotomic polynomial after every operation.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Cyclotomic(u32),
    Prime(u64),
}

impl FieldSpec {
    pub fn cyclotomic(n: u32) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidField("cyclotomic order must be positive".into()));
        }
        Ok(FieldSpec::Cyclotomic(n))
    }

    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if !is_prime(p) {
            return Err(ScalarError::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            _ => 0,
        }
    }

    /// Degree of the field over its prime field.
    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Cyclotomic(n) => euler_phi(*n as u64) as usize,
            _ => 1,
        }
    }

    /// The `n` for which this field is `Q(zeta_n)`; the rationals count as `n = 1`.
    pub fn cyclotomic_order(&self) -> Option<u32> {
        match self {
            FieldSpec::Rational => Some(1),
            FieldSpec::Cyclotomic(n) => Some(*n),
            FieldSpec::Prime(_) => None,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    /// Coefficients of `1, zeta, ..., zeta^(phi(n)-1)`.
    Cyclotomic { n: u32, coeffs: Vec<BigRational> },
    Prime { p: u64, value: u64 },
}

impl FieldElement {
    pub fn zero(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rational => FieldElement::Rational(BigRational::zero()),
            FieldSpec::Cyclotomic(n) => FieldElement::Cyclotomic {
                n,
                coeffs: vec![BigRational::zero(); spec.degree()],
            },
            FieldSpec::Prime(p) => FieldElement::Prime { p, value: 0 },
        }
    }

    pub fn one(spec: FieldSpec) -> Self {
        Self::from_i64(spec, 1)
    }

    pub fn from_i64(spec: FieldSpec, v: i64) -> Self {
        Self::from_rational(spec, &BigRational::from_integer(BigInt::from(v)))
            .expect("integers embed in every field")
    }

    /// Embeds a rational number. Fails in `F_p` when the denominator vanishes mod `p`.
    pub fn from_rational(spec: FieldSpec, q: &BigRational) -> Result<Self, ScalarError> {
        Ok(match spec {
            FieldSpec::Rational => FieldElement::Rational(q.clone()),
            FieldSpec::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); spec.degree()];
                coeffs[0] = q.clone();
                FieldElement::Cyclotomic { n, coeffs }
            }
            FieldSpec::Prime(p) => {
                let num = mod_bigint(q.numer(), p);
                let den = mod_bigint(q.denom(), p);
                if den == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                FieldElement::Prime { p, value: mul_mod(num, inv_mod(den, p), p) }
            }
        })
    }

    /// The generator `zeta_n` of `Q(zeta_n)`.
    pub fn zeta(n: u32) -> Self {
        Self::cyclotomic_from_coeffs(n, &[BigRational::zero(), BigRational::one()])
    }

    /// Builds `sum c_i zeta^i` for an arbitrary-length coefficient list and reduces it.
    pub fn cyclotomic_from_coeffs(n: u32, coeffs: &[BigRational]) -> Self {
        FieldElement::Cyclotomic { n, coeffs: reduce_cyclotomic(n, coeffs.to_vec()) }
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rational,
            FieldElement::Cyclotomic { n, .. } => FieldSpec::Cyclotomic(*n),
            FieldElement::Prime { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Cyclotomic { coeffs, .. } => coeffs.iter().all(Zero::is_zero),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Cyclotomic { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(Zero::is_zero)
            }
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    /// Returns the value as a rational number when it lies in the prime subfield of a
    /// characteristic-zero field.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Cyclotomic { coeffs, .. } => {
                coeffs[1..].iter().all(Zero::is_zero).then(|| coeffs[0].clone())
            }
            FieldElement::Prime { .. } => None,
        }
    }

    /// Re-applies the canonical reduction. Values produced by this module are already
    /// canonical, so this is the identity on them.
    pub fn normalize(&self) -> Self {
        match self {
            FieldElement::Rational(q) => {
                FieldElement::Rational(BigRational::new(q.numer().clone(), q.denom().clone()))
            }
            FieldElement::Cyclotomic { n, coeffs } => Self::cyclotomic_from_coeffs(*n, coeffs),
            FieldElement::Prime { p, value } => FieldElement::Prime { p: *p, value: value % p },
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), ScalarError> {
        if self.spec() == other.spec() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.spec(), other.spec()))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Cyclotomic { n, coeffs: a }, FieldElement::Cyclotomic { coeffs: b, .. }) => {
                FieldElement::Cyclotomic { n: *n, coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect() }
            }
            (FieldElement::Prime { p, value: a }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime { p: *p, value: ((*a as u128 + *b as u128) % *p as u128) as u64 }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&rhs.neg_ref())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Cyclotomic { n, coeffs: a }, FieldElement::Cyclotomic { coeffs: b, .. }) => {
                FieldElement::Cyclotomic { n: *n, coeffs: reduce_cyclotomic(*n, poly_mul_q(a, b)) }
            }
            (FieldElement::Prime { p, value: a }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime { p: *p, value: mul_mod(*a, *b, *p) }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.same_field(rhs)?;
        self.checked_mul(&rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Cyclotomic { n, coeffs } => {
                let modulus: Vec<BigRational> = cyclotomic_polynomial(*n as u64)
                    .iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect();
                let inverse = poly_inverse_mod_q(coeffs, &modulus);
                FieldElement::Cyclotomic { n: *n, coeffs: reduce_cyclotomic(*n, inverse) }
            }
            FieldElement::Prime { p, value } => FieldElement::Prime { p: *p, value: inv_mod(*value, *p) },
        })
    }

    fn neg_ref(&self) -> Self {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Cyclotomic { n, coeffs } => {
                FieldElement::Cyclotomic { n: *n, coeffs: coeffs.iter().map(|c| -c).collect() }
            }
            FieldElement::Prime { p, value } => {
                FieldElement::Prime { p: *p, value: if *value == 0 { 0 } else { p - value } }
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::one(self.spec());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Applies the Galois automorphism `zeta -> zeta^a` (`gcd(a, n) = 1`); identity outside
    /// cyclotomic fields.
    pub fn galois(&self, a: u32) -> Self {
        match self {
            FieldElement::Cyclotomic { n, coeffs } => {
                let n = *n;
                let mut out = vec![BigRational::zero(); n as usize];
                for (i, c) in coeffs.iter().enumerate() {
                    let k = (i as u64 * a as u64 % n as u64) as usize;
                    out[k] += c;
                }
                Self::cyclotomic_from_coeffs(n, &out)
            }
            other => other.clone(),
        }
    }

    /// Parses an exact rational literal such as `-3`, `5/6` into the given field.
    pub fn parse_rational(spec: FieldSpec, s: &str) -> Result<Self, ScalarError> {
        let q = parse_rational(s)?;
        Self::from_rational(spec, &q)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let t = s.trim();
    let err = || ScalarError::Parse(s.to_string());
    match t.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| err())?;
            let b: BigInt = b.trim().parse().map_err(|_| err())?;
            if b.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| err())?)),
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
            FieldElement::Cyclotomic { coeffs, .. } => {
                let mut first = true;
                for (i, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match i {
                        0 => write!(f, "{c}")?,
                        1 => write!(f, "({c})*z")?,
                        _ => write!(f, "({c})*z^{i}")?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

// Operator forms panic on mismatched fields or division by zero; use the `checked_*`
// methods where either can legitimately happen.
forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

// ---------------------------------------------------------------------------
// integer helpers

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(p as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i128) as u64
}

fn mod_bigint(a: &BigInt, p: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials

static CYCLOTOMIC_CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Integer coefficients (low degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    let cache = CYCLOTOMIC_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    let poly = Arc::new(compute_cyclotomic(n));
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

fn compute_cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let primes = prime_factors(n);
    let rad: u64 = primes.iter().product();
    // Phi_rad(x) = prod_{d | rad} (x^d - 1)^{mu(rad/d)}
    let mut num = vec![BigInt::one()];
    let mut dens = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let d: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| *p)
            .product();
        let missing = primes.len() as u32 - mask.count_ones();
        if missing % 2 == 0 {
            num = mul_x_d_minus_one(&num, d as usize);
        } else {
            dens.push(d as usize);
        }
    }
    for d in dens {
        num = div_x_d_minus_one(&num, d);
    }
    let stride = (n / rad) as usize;
    if stride == 1 {
        return num;
    }
    let mut out = vec![BigInt::zero(); (num.len() - 1) * stride + 1];
    for (i, c) in num.into_iter().enumerate() {
        out[i * stride] = c;
    }
    out
}

fn mul_x_d_minus_one(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn div_x_d_minus_one(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // p = q * (x^d - 1)  =>  p[j] = q[j-d] - q[j]
    let deg = p.len() - 1;
    let qlen = deg + 1 - d;
    let mut q = vec![BigInt::zero(); qlen];
    for j in (d..=deg).rev() {
        let above = if j < qlen { q[j].clone() } else { BigInt::zero() };
        q[j - d] = &p[j] + above;
    }
    debug_assert!((0..d).all(|j| p[j] == -q[j].clone()));
    q
}

fn reduce_cyclotomic(n: u32, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(n as u64);
    let deg = phi.len() - 1;
    if coeffs.len() > deg {
        for top in (deg..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[top]);
            if c.is_zero() {
                continue;
            }
            // x^top = x^(top-deg) * (x^deg) and x^deg = -sum_{i<deg} phi_i x^i
            for (i, pc) in phi[..deg].iter().enumerate() {
                if !pc.is_zero() {
                    coeffs[top - deg + i] -= &c * BigRational::from_integer(pc.clone());
                }
            }
        }
        coeffs.truncate(deg);
    }
    coeffs.resize(deg, BigRational::zero());
    coeffs
}

fn poly_mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn trim_q(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divrem_q(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim_q(&mut r);
    let mut b = b.to_vec();
    trim_q(&mut b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                r[i + j] -= &c * bc;
            }
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    trim_q(&mut r);
    (q, r)
}

/// Inverse of `a` modulo `m` in `Q[x]` by the extended Euclidean algorithm.
fn poly_inverse_mod_q(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let zero = || vec![BigRational::zero()];
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim_q(&mut r1);
    let (mut t0, mut t1) = (zero(), vec![BigRational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem_q(&r0, &r1);
        let qt = poly_mul_q(&q, &t1);
        let mut t2 = t0.clone();
        if t2.len() < qt.len() {
            t2.resize(qt.len(), BigRational::zero());
        }
        for (i, c) in qt.iter().enumerate() {
            t2[i] -= c;
        }
        trim_q(&mut t2);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is a nonzero constant since gcd(a, Phi_n) = 1 for a != 0 mod Phi_n
    let c = r0[0].clone();
    assert!(r0.len() == 1 && !c.is_zero(), "element not invertible modulo cyclotomic polynomial");
    t0.iter().map(|x| x / &c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(a.into(), b.into()))
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn zeta3_relation() {
        let z = FieldElement::zeta(3);
        let one = FieldElement::one(FieldSpec::Cyclotomic(3));
        assert!((&z * &z + &z + one).is_zero());
    }

    #[test]
    fn inverse_of_two_mod_five() {
        let two = FieldElement::from_i64(FieldSpec::Prime(5), 2);
        assert_eq!(two.inv().unwrap(), FieldElement::from_i64(FieldSpec::Prime(5), 3));
        let p = 101u64;
        let two = FieldElement::from_i64(FieldSpec::Prime(p), 2);
        assert_eq!(two.inv().unwrap(), FieldElement::from_i64(FieldSpec::Prime(p), ((p + 1) / 2) as i64));
    }

    #[test]
    fn errors() {
        let zero = FieldElement::zero(FieldSpec::Rational);
        assert_eq!(q(1, 1).checked_div(&zero), Err(ScalarError::DivisionByZero));
        let a = FieldElement::one(FieldSpec::Prime(7));
        assert!(matches!(q(1, 1).checked_add(&a), Err(ScalarError::FieldMismatch(..))));
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| cyclotomic_polynomial(n).iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).iter().any(|c| *c == BigInt::from(-2)));
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
    }

    #[test]
    fn zeta_has_order_n() {
        for n in [1u32, 2, 3, 4, 5, 7, 8, 9, 12, 15] {
            let z = FieldElement::zeta(n);
            assert!(z.pow(n as u64).is_one(), "n = {n}");
            for d in divisors(n as u64) {
                if d < n as u64 {
                    assert!(!z.pow(d).is_one(), "n = {n}, d = {d}");
                }
            }
        }
    }

    #[test]
    fn cyclotomic_inverse() {
        let z = FieldElement::zeta(12);
        let one = FieldElement::one(FieldSpec::Cyclotomic(12));
        let x = &z + &one;
        assert!((&x * &x.inv().unwrap()).is_one());
        assert_eq!(z.inv().unwrap(), z.pow(11));
    }

    #[test]
    fn galois_action() {
        let z = FieldElement::zeta(5);
        assert_eq!(z.galois(2), z.pow(2));
        let r = q(3, 4);
        assert_eq!(FieldElement::from_rational(FieldSpec::Cyclotomic(5), &BigRational::new(3.into(), 4.into())).unwrap().galois(3).to_rational(), r.to_rational());
    }

    #[test]
    fn parse() {
        assert_eq!(FieldElement::parse_rational(FieldSpec::Rational, "-5/10").unwrap(), q(-1, 2));
        assert_eq!(FieldElement::parse_rational(FieldSpec::Prime(7), "1/2").unwrap(), FieldElement::from_i64(FieldSpec::Prime(7), 4));
        assert!(FieldElement::parse_rational(FieldSpec::Rational, "x").is_err());
    }
}
