//! Univariate polynomials over the rationals, enough for CRT idempotents:
//! division with remainder, extended gcd, evaluation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::ring::{FieldCoeff, Rat};

/// Dense univariate polynomial; `coeffs[i]` multiplies `X^i`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    /// `X - root`
    pub fn linear(root: &Rat) -> Self {
        UniPoly::new(vec![-root.clone(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut out = UniPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        out
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let lead_inv = div.coeffs[dd].recip();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = rem.coeffs[dr].clone() * lead_inv.clone();
            quot[dr - dd] = factor.clone();
            let mut shifted = vec![Rat::zero(); dr - dd];
            shifted.extend(div.coeffs.iter().map(|c| c.clone() * factor.clone()));
            rem = rem.sub(&UniPoly::new(shifted));
        }
        (UniPoly::new(quot), rem)
    }

    pub fn rem(&self, div: &UniPoly) -> UniPoly {
        self.divrem(div).1
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*rhs = g`, `g` monic.
    pub fn ext_gcd(&self, rhs: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(d) = r0.degree() {
            let inv = r0.coeffs[d].recip();
            r0 = r0.scale(&inv);
            s0 = s0.scale(&inv);
            t0 = t0.scale(&inv);
        }
        (r0, s0, t0)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

impl fmt::Display for UniPoly {
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
                0 => write!(f, "{}", c)?,
                1 if c.is_one() => write!(f, "X")?,
                1 => write!(f, "{}*X", c)?,
                _ if c.is_one() => write!(f, "X^{}", i)?,
                _ => write!(f, "{}*X^{}", c, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat_int;

    #[test]
    fn divrem_and_gcd() {
        // (X-1)(X-2) divided by (X-1)
        let p = UniPoly::linear(&rat_int(1)).mul(&UniPoly::linear(&rat_int(2)));
        let (q, r) = p.divrem(&UniPoly::linear(&rat_int(1)));
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::linear(&rat_int(2)));

        let a = UniPoly::linear(&rat_int(0)).pow(2);
        let b = UniPoly::linear(&rat_int(1));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, UniPoly::one());
        let combo = s.mul(&a).add(&t.mul(&b));
        assert_eq!(combo, UniPoly::one());
    }
}
