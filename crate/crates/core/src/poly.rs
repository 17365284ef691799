//! Dense univariate polynomials over ℚ, enough to turn an eigenvalue of a
//! commutant element into an idempotent.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{SparseMatrix, Subspace};
use crate::scalar::Q;

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<Q>);

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Q::one()])
    }

    /// `x − r`.
    pub fn linear(r: &Q) -> Poly {
        Poly(vec![-r.clone(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.0.last()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.0.get(i).cloned().unwrap_or_else(Q::zero);
                let b = other.0.get(i).cloned().unwrap_or_else(Q::zero);
                a + b
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.0[d].recip();
        let mut rem = self.0.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.0.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.ext_gcd(other).0
    }

    /// `(g, u, v)` with `g = u·self + v·other` monic (or zero when both are zero).
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (qt, r) = r0.divrem(&r1);
            let neg_q = qt.scale(&-Q::one());
            let u = u0.add(&neg_q.mul(&u1));
            let v = v0.add(&neg_q.mul(&v1));
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u);
            v0 = std::mem::replace(&mut v1, v);
        }
        match r0.leading().cloned() {
            None => (r0, u0, v0),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// `p(a)` by Horner's rule.
    pub fn eval_matrix(&self, a: &SparseMatrix) -> SparseMatrix {
        let n = a.nrows();
        let mut acc = SparseMatrix::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = acc.mul(a);
            acc.add_scaled(c, &SparseMatrix::identity(n));
        }
        acc
    }

    /// Multiplicity of `r` as a root.
    pub fn multiplicity(&self, r: &Q) -> usize {
        let lin = Poly::linear(r);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (qt, rem) = p.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = qt;
            k += 1;
        }
        k
    }

    /// Distinct rational roots in increasing order, by the rational root
    /// theorem. Returns `None` when the constant or leading coefficient,
    /// after clearing denominators, exceeds `bound` in absolute value.
    pub fn rational_roots(&self, bound: &BigInt) -> Option<Vec<Q>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.0[0].is_zero() {
            roots.push(Q::zero());
            let shift = p.0.iter().take_while(|c| c.is_zero()).count();
            p = Poly::new(p.0[shift..].to_vec());
        }
        let denom_lcm = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.0.iter().map(|c| (c * Q::from(denom_lcm.clone())).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        if &a0 > bound || &an > bound {
            return None;
        }
        let nums = divisors(&a0);
        let dens = divisors(&an);
        for n in &nums {
            for d in &dens {
                for sign in [-1, 1] {
                    let r = Q::new(BigInt::from(sign) * n, d.clone());
                    if p.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let other = n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Minimal polynomial of a square matrix, found as the first linear
/// dependency among `I, a, a², …`.
pub fn minimal_polynomial(a: &SparseMatrix) -> Poly {
    let n = a.nrows();
    let offset = n * n;
    let mut span = Subspace::new();
    let mut power = SparseMatrix::identity(n);
    for k in 0..=n {
        let mut v = power.flatten();
        v.insert(offset + k, Q::one());
        let reduced = span.reduce(v.clone());
        if reduced.keys().next().is_some_and(|&i| i >= offset) {
            let mut coeffs = vec![Q::zero(); k + 1];
            for (i, c) in &reduced {
                coeffs[i - offset] = c.clone();
            }
            return Poly::new(coeffs).monic();
        }
        span.insert(v);
        power = power.mul(a);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// An idempotent `e ∈ ℚ[a]` that is the spectral projection for the
/// eigenvalue `r`, or `None` if `r` is not a root of the minimal polynomial or
/// the projection is trivial.
pub fn spectral_idempotent(a: &SparseMatrix, minpoly: &Poly, r: &Q) -> Option<SparseMatrix> {
    let k = minpoly.multiplicity(r);
    if k == 0 || minpoly.degree() == Some(k) {
        return None;
    }
    let f = Poly::linear(r).pow(k);
    let (g, rem) = minpoly.divrem(&f);
    debug_assert!(rem.is_zero());
    // u·f + v·g = 1, so v·g acts as 1 on ker f(a) and 0 on ker g(a).
    let (one, _u, v) = f.ext_gcd(&g);
    debug_assert_eq!(one, Poly::one());
    Some(v.mul(&g).divrem(minpoly).1.eval_matrix(a))
}
