//! Certified multiplicative order of invertible operators in GL and PGL.
//!
//! Over characteristic zero the verdict is exact: a non-squarefree minimal polynomial
//! certifies infinite order; otherwise the norm of the minimal polynomial down to `Q`
//! is stripped of cyclotomic factors, and a nontrivial remainder certifies an eigenvalue
//! that is not a root of unity. Over `F_p` the order is found by iteration up to a cap.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Matrix;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{cyclotomic_polynomial, divisors, euler_phi, FieldElement, FieldSpec};

pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InfiniteReason {
    NotSemisimple,
    RootNotUnity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "VerdictRepr", into = "VerdictRepr")]
pub enum OrderVerdict {
    Finite(u64),
    Infinite(InfiniteReason),
    /// Iteration over a prime field hit the cap without finding the order.
    Unknown(u64),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VerdictRepr {
    Finite(u64),
    Infinite { infinite: InfiniteReason },
    Unknown { unknown_cap: u64 },
}

impl From<VerdictRepr> for OrderVerdict {
    fn from(r: VerdictRepr) -> Self {
        match r {
            VerdictRepr::Finite(n) => OrderVerdict::Finite(n),
            VerdictRepr::Infinite { infinite } => OrderVerdict::Infinite(infinite),
            VerdictRepr::Unknown { unknown_cap } => OrderVerdict::Unknown(unknown_cap),
        }
    }
}

impl From<OrderVerdict> for VerdictRepr {
    fn from(v: OrderVerdict) -> Self {
        match v {
            OrderVerdict::Finite(n) => VerdictRepr::Finite(n),
            OrderVerdict::Infinite(infinite) => VerdictRepr::Infinite { infinite },
            OrderVerdict::Unknown(unknown_cap) => VerdictRepr::Unknown { unknown_cap },
        }
    }
}

impl OrderVerdict {
    pub fn finite(&self) -> Option<u64> {
        match self {
            OrderVerdict::Finite(n) => Some(*n),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, OrderVerdict::Infinite(_))
    }
}

impl fmt::Display for OrderVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderVerdict::Finite(n) => write!(f, "{n}"),
            OrderVerdict::Infinite(r) => write!(f, "infinite ({r:?})"),
            OrderVerdict::Unknown(cap) => write!(f, "unknown (cap {cap})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCertificate {
    pub gl_order: OrderVerdict,
    pub pgl_order: OrderVerdict,
    pub minpoly_squarefree: bool,
    /// Minimal polynomial, low degree first.
    pub minpoly: Vec<String>,
    pub reason: Option<InfiniteReason>,
}

impl OrderCertificate {
    pub fn same_orders(&self, other: &OrderCertificate) -> bool {
        self.gl_order == other.gl_order && self.pgl_order == other.pgl_order
    }
}

pub fn operator_order(t: &Matrix) -> Result<OrderCertificate> {
    operator_order_with_cap(t, DEFAULT_ORDER_CAP)
}

pub fn operator_order_with_cap(t: &Matrix, cap: u64) -> Result<OrderCertificate> {
    if !t.is_square() {
        return Err(Error::DimensionMismatch(format!("order of a {}x{} matrix", t.rows(), t.cols())));
    }
    let m = t.minimal_polynomial();
    if m.coeff(0).is_zero() {
        return Err(Error::NotInvertible);
    }
    let squarefree = m.gcd(&m.derivative()).is_one();
    let minpoly = m.coeffs().iter().map(ToString::to_string).collect();
    let (gl, pgl) = if t.spec().characteristic() != 0 {
        (iterate_order(&m, cap, false), iterate_order(&m, cap, true))
    } else if !squarefree {
        let v = OrderVerdict::Infinite(InfiniteReason::NotSemisimple);
        (v, v)
    } else {
        let gl = semisimple_order(&m);
        let pgl = match gl {
            OrderVerdict::Finite(n) => OrderVerdict::Finite(least_scalar_divisor(&m, n)),
            _ => projective_order(&m),
        };
        (gl, pgl)
    };
    let reason = match (gl, pgl) {
        (OrderVerdict::Infinite(r), _) | (_, OrderVerdict::Infinite(r)) => Some(r),
        _ => None,
    };
    Ok(OrderCertificate { gl_order: gl, pgl_order: pgl, minpoly_squarefree: squarefree, minpoly, reason })
}

/// Smallest `k <= cap` with `x^k mod m` equal to 1 (or to a constant when `projective`).
fn iterate_order(m: &Poly, cap: u64, projective: bool) -> OrderVerdict {
    let x = Poly::x(m.spec());
    let mut r = x.rem(m);
    for k in 1..=cap {
        if (projective && r.is_constant()) || r.is_one() {
            return OrderVerdict::Finite(k);
        }
        r = r.mulmod(&x, m);
    }
    OrderVerdict::Unknown(cap)
}

/// Smallest divisor `d` of `n` with `x^d` constant modulo `m`.
fn least_scalar_divisor(m: &Poly, n: u64) -> u64 {
    divisors(n)
        .into_iter()
        .find(|&d| Poly::x_pow_mod(d, m).is_constant())
        .expect("x^n is 1 modulo m")
}

/// Order of the roots of a squarefree `m` over a field of characteristic zero.
fn semisimple_order(m: &Poly) -> OrderVerdict {
    let Some(norm) = integral_norm(m) else {
        return OrderVerdict::Infinite(InfiniteReason::RootNotUnity);
    };
    match cyclotomic_orders(norm) {
        Some(ks) => {
            let n = ks.into_iter().fold(1u64, |acc, k| acc.lcm(&k));
            debug_assert!(Poly::x_pow_mod(n, m).is_one());
            OrderVerdict::Finite(n)
        }
        None => OrderVerdict::Infinite(InfiniteReason::RootNotUnity),
    }
}

/// PGL order when the GL order is infinite. With `d = deg m` and `c` the product of the
/// roots, `u = x^d / c` has roots `l_i^d / prod l_j`; these are roots of unity exactly
/// when all ratios `l_i / l_j` are, and then the PGL order divides `d * ord(u)`.
fn projective_order(m: &Poly) -> OrderVerdict {
    let spec = m.spec();
    let d = m.degree().expect("nonzero");
    let c = if d % 2 == 0 { m.coeff(0) } else { -m.coeff(0) };
    let u = Poly::x_pow_mod(d as u64, m).scale(&c.inv().expect("invertible"));
    let mu = minimal_polynomial_mod(&u, m, spec);
    match semisimple_order(&mu) {
        OrderVerdict::Finite(nu) => OrderVerdict::Finite(least_scalar_divisor(m, d as u64 * nu)),
        _ => OrderVerdict::Infinite(InfiniteReason::RootNotUnity),
    }
}

/// Minimal polynomial of the class of `u` in `F[x]/(m)`.
fn minimal_polynomial_mod(u: &Poly, m: &Poly, spec: FieldSpec) -> Poly {
    let d = m.degree().expect("nonzero");
    let coords: Vec<Vec<FieldElement>> = {
        let mut out = Vec::new();
        let mut p = Poly::one(spec).rem(m);
        for _ in 0..=d {
            out.push((0..d).map(|i| p.coeff(i)).collect());
            p = p.mulmod(u, m);
        }
        out
    };
    // multiplication-by-u matrix on the power basis 1, x, ..., x^(d-1)
    let cols: Vec<Vec<FieldElement>> = (0..d)
        .map(|j| {
            let p = Poly::monomial(FieldElement::one(spec), j).mulmod(u, m);
            (0..d).map(|i| p.coeff(i)).collect()
        })
        .collect();
    let mat = Matrix::from_columns(spec, d, &cols);
    let one = &coords[0];
    mat.vector_minimal_polynomial(one)
}

/// Norm of `m` down to `Q[x]`, provided it has integer coefficients (roots of unity are
/// algebraic integers, so a non-integral norm already certifies infinite order).
fn integral_norm(m: &Poly) -> Option<Vec<BigInt>> {
    let spec = m.spec();
    let n = spec.cyclotomic_order().expect("characteristic zero");
    let norm = if spec.degree() == 1 {
        m.clone()
    } else {
        (1..n)
            .filter(|a| a.gcd(&n) == 1)
            .fold(Poly::one(spec), |acc, a| acc.mul(&m.galois(a)))
    };
    norm.coeffs()
        .iter()
        .map(|c| {
            let q = c.to_rational()?;
            q.is_integer().then(|| q.to_integer())
        })
        .collect()
}

/// Orders `k` such that `f = prod Phi_k`, or `None` if `f` has a non-cyclotomic factor.
fn cyclotomic_orders(mut f: Vec<BigInt>) -> Option<Vec<u64>> {
    let deg = f.len() - 1;
    // phi(k) >= sqrt(k/2)
    let bound = 2 * (deg as u64).pow(2) + 2;
    let mut ks = Vec::new();
    let mut k = 1u64;
    while f.len() > 1 && k <= bound {
        if euler_phi(k) as usize <= f.len() - 1 {
            let phi = cyclotomic_polynomial(k);
            while let Some(q) = exact_monic_div(&f, &phi) {
                f = q;
                ks.push(k);
            }
        }
        k += 1;
    }
    (f.len() == 1 && f[0].is_one()).then_some(ks)
}

/// `a / b` for monic integer polynomials when the division is exact.
fn exact_monic_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r[..db].iter().all(Zero::is_zero).then_some(q)
}
