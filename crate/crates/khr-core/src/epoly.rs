//! Integer polynomials in the equivariant variables `e1, e2, ...`.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so values are
//! canonical independently of how many variables are in play.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{Coeff, Int, Rat};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct EPoly {
    terms: BTreeMap<Vec<u16>, Int>,
}

fn trim(mut exps: Vec<u16>) -> Vec<u16> {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

impl EPoly {
    pub fn constant(c: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        EPoly { terms }
    }

    /// The variable `e_i` (1-indexed).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1);
        let mut exps = Vec::new();
        exps.resize(i, 0);
        exps[i - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Int::one());
        EPoly { terms }
    }

    fn insert(&mut self, exps: Vec<u16>, c: Int) {
        if c.is_zero() {
            return;
        }
        let exps = trim(exps);
        match self.terms.get_mut(&exps) {
            Some(acc) => {
                *acc += c;
                if acc.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_empty())
    }

    /// Largest variable index occurring, 0 for constants.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Evaluate at rational values for `e1..`; `values` must cover every
    /// variable that occurs.
    pub fn eval(&self, values: &[Rat]) -> Result<Rat, UnassignedVar> {
        let mut total = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = Rat::from_integer(c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values.get(i).ok_or(UnassignedVar(i + 1))?;
                for _ in 0..e {
                    term *= v.clone();
                }
            }
            total += term;
        }
        Ok(total)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Int)> {
        self.terms.iter()
    }
}

/// A variable occurring in a polynomial received no value under evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnassignedVar(pub usize);

impl fmt::Display for UnassignedVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no value assigned to variable e{}", self.0)
    }
}

impl Add for EPoly {
    type Output = EPoly;
    fn add(self, rhs: EPoly) -> EPoly {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.insert(e, c);
        }
        out
    }
}

impl Sub for EPoly {
    type Output = EPoly;
    fn sub(self, rhs: EPoly) -> EPoly {
        self + (-rhs)
    }
}

impl Neg for EPoly {
    type Output = EPoly;
    fn neg(self) -> EPoly {
        EPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for EPoly {
    type Output = EPoly;
    fn mul(self, rhs: EPoly) -> EPoly {
        let mut out = EPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let len = e1.len().max(e2.len());
                let mut e = Vec::with_capacity(len);
                for i in 0..len {
                    e.push(e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0));
                }
                out.insert(e, c1 * c2);
            }
        }
        out
    }
}

impl Zero for EPoly {
    fn zero() -> Self {
        EPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for EPoly {
    fn one() -> Self {
        EPoly::constant(Int::one())
    }
}

impl Coeff for EPoly {
    fn from_int(v: i64) -> Self {
        EPoly::constant(Int::from(v))
    }
}

impl fmt::Debug for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            let mut s = String::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !s.is_empty() {
                    s.push('*');
                }
                s.push('e');
                s.push_str(itoa(i + 1).as_str());
                if e > 1 {
                    s.push('^');
                    s.push_str(itoa(e as usize).as_str());
                }
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if s.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", s)?;
            } else if (-c.clone()).is_one() {
                write!(f, "-{}", s)?;
            } else {
                write!(f, "{}*{}", c, s)?;
            }
        }
        Ok(())
    }
}

fn itoa(mut v: usize) -> String {
    if v == 0 {
        return String::from("0");
    }
    let mut buf = Vec::new();
    while v > 0 {
        buf.push(b'0' + (v % 10) as u8);
        v /= 10;
    }
    buf.reverse();
    String::from_utf8(buf).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat_int;

    #[test]
    fn arithmetic_and_eval() {
        let e1 = EPoly::var(1);
        let e2 = EPoly::var(2);
        let p = e1.clone() * e1.clone() - EPoly::from_int(4) * e2.clone();
        // e1^2 - 4 e2 at (3, 2) = 1
        let v = p.eval(&[rat_int(3), rat_int(2)]).unwrap();
        assert_eq!(v, rat_int(1));
        assert!(p.eval(&[rat_int(3)]).is_err());
        assert_eq!((e2.clone() - e2).num_vars(), 0);
    }

    #[test]
    fn canonical_trailing_zeros() {
        let e1 = EPoly::var(1);
        let e2 = EPoly::var(2);
        let p = (e1.clone() + e2.clone()) - e2;
        assert_eq!(p, e1);
    }
}
