//! Dense univariate polynomials over a [`FieldSpec`], low degree first.

use std::fmt;

use crate::scalar::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    spec: FieldSpec,
    /// Trimmed: no trailing zeros; the zero polynomial is empty.
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(spec: FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly { spec, coeffs }
    }

    pub fn zero(spec: FieldSpec) -> Self {
        Poly { spec, coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::new(c.spec(), vec![c])
    }

    pub fn one(spec: FieldSpec) -> Self {
        Poly::constant(FieldElement::one(spec))
    }

    pub fn x(spec: FieldSpec) -> Self {
        Poly::monomial(FieldElement::one(spec), 1)
    }

    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let spec = c.spec();
        let mut coeffs = vec![FieldElement::zero(spec); k];
        coeffs.push(c);
        Poly::new(spec, coeffs)
    }

    pub fn from_i64(spec: FieldSpec, coeffs: &[i64]) -> Self {
        Poly::new(spec, coeffs.iter().map(|&c| FieldElement::from_i64(spec, c)).collect())
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FieldElement::zero(self.spec))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lead(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.spec, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.spec, (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        Poly::new(self.spec, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.spec);
        }
        let mut out = vec![FieldElement::zero(self.spec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(self.spec, out)
    }

    /// Quotient and remainder; panics on division by the zero polynomial.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        let db = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.coeffs[db].inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return (Poly::zero(self.spec), self.clone());
        }
        let mut q = vec![FieldElement::zero(self.spec); r.len() - db];
        for i in (0..q.len()).rev() {
            let c = &r[i + db] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    if !b.is_zero() {
                        r[i + j] = &r[i + j] - &(&c * b);
                    }
                }
            }
            q[i] = c;
        }
        r.truncate(db);
        (Poly::new(self.spec, q), Poly::new(self.spec, r))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.spec);
        }
        let g = self.gcd(other);
        self.mul(other).divrem(&g).0.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.spec,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &FieldElement::from_i64(self.spec, i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::zero(self.spec), |acc, c| &(&acc * x) + c)
    }

    /// `self * other mod modulus`.
    pub fn mulmod(&self, other: &Poly, modulus: &Poly) -> Poly {
        self.mul(other).rem(modulus)
    }

    /// `x^k mod modulus` by square-and-multiply.
    pub fn x_pow_mod(k: u64, modulus: &Poly) -> Poly {
        Poly::x(modulus.spec).pow_mod(k, modulus)
    }

    pub fn pow_mod(&self, mut k: u64, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(self.spec).rem(modulus);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mulmod(&base, modulus);
            }
            k >>= 1;
            if k > 0 {
                base = base.mulmod(&base, modulus);
            }
        }
        acc
    }

    /// Applies a Galois automorphism of a cyclotomic base field coefficientwise.
    pub fn galois(&self, a: u32) -> Poly {
        Poly::new(self.spec, self.coeffs.iter().map(|c| c.galois(a)).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn divrem_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = Poly::from_i64(Q, &[-1, 0, 1]);
        let b = Poly::from_i64(Q, &[1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q, Poly::from_i64(Q, &[-1, 1]));
        assert!(r.is_zero());
        let c = Poly::from_i64(Q, &[1, 2, 1]);
        assert_eq!(a.gcd(&c), b);
        assert_eq!(a.lcm(&c), Poly::from_i64(Q, &[-1, -1, 1, 1]));
    }

    #[test]
    fn x_pow_mod_cycles() {
        let m = Poly::from_i64(Q, &[1, 1, 1]);
        assert!(Poly::x_pow_mod(3, &m).is_one());
        assert!(!Poly::x_pow_mod(2, &m).is_one());
    }

    #[test]
    fn derivative() {
        let a = Poly::from_i64(Q, &[5, 3, 0, 2]);
        assert_eq!(a.derivative(), Poly::from_i64(Q, &[3, 0, 6]));
    }
}
