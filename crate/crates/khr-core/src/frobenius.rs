//! The rank-N unknot Frobenius algebra `k[X]/p(X)` in its undeformed,
//! deformed, and symbolic equivariant forms, with CRT idempotents and
//! twisting scalars.
//!
//! The basis is `1, X, ..., X^{N-1}` with q-degrees `1-N, 3-N, ..., N-1`.
//! The counit kills all monomials except `X^{N-1}`; comultiplication is
//! derived from the dual basis under the counit pairing, whose Gram matrix in
//! the monomial basis is anti-triangular with unit anti-diagonal and hence
//! invertible over any coefficient ring.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::epoly::EPoly;
use crate::ring::{Coeff, Int, Rat};
use crate::unipoly::UniPoly;

/// Multiset of deformation parameters with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeformationMultiset {
    entries: Vec<(Rat, u32)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SigmaError {
    DuplicateRoot(String),
    ZeroMultiplicity,
    TotalMismatch { expected: usize, got: usize },
}

impl fmt::Display for SigmaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaError::DuplicateRoot(r) => write!(f, "duplicate deformation parameter {}", r),
            SigmaError::ZeroMultiplicity => write!(f, "multiplicities must be positive"),
            SigmaError::TotalMismatch { expected, got } => {
                write!(f, "deformation has total {} but rank {} required", got, expected)
            }
        }
    }
}

impl DeformationMultiset {
    pub fn new(entries: Vec<(Rat, u32)>) -> Result<Self, SigmaError> {
        for (i, (l, m)) in entries.iter().enumerate() {
            if *m == 0 {
                return Err(SigmaError::ZeroMultiplicity);
            }
            for (l2, _) in entries.iter().take(i) {
                if l == l2 {
                    return Err(SigmaError::DuplicateRoot(format!("{}", l)));
                }
            }
        }
        Ok(DeformationMultiset { entries })
    }

    /// Simple multiset `{λ1, ..., λn}` with all multiplicities one.
    pub fn simple(roots: Vec<Rat>) -> Result<Self, SigmaError> {
        DeformationMultiset::new(roots.into_iter().map(|r| (r, 1)).collect())
    }

    pub fn entries(&self) -> &[(Rat, u32)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total rank `N = Σ N_i`.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, m)| *m as usize).sum()
    }

    pub fn all_simple(&self) -> bool {
        self.entries.iter().all(|(_, m)| *m == 1)
    }

    /// The relation polynomial `∏ (X - λ_i)^{N_i}`.
    pub fn relation_poly(&self) -> UniPoly {
        let mut p = UniPoly::one();
        for (l, m) in &self.entries {
            p = p.mul(&UniPoly::linear(l).pow(*m));
        }
        p
    }

    /// Elementary symmetric values `e_1(Σ), ..., e_N(Σ)`.
    pub fn elementary_symmetric(&self) -> Vec<Rat> {
        let p = self.relation_poly();
        let n = self.total();
        (1..=n)
            .map(|i| {
                let c = p.coeff(n - i);
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }

    /// `d_i = ∏_{j≠i} (λ_i - λ_j)^{N_j}`, the twisting scalar of the
    /// `λ_i`-monochromatic summand. Its reciprocal is the dotted-sphere
    /// evaluation of that summand.
    pub fn twisting_scalar(&self, i: usize) -> Rat {
        let (li, _) = &self.entries[i];
        let mut d = Rat::one();
        for (j, (lj, mj)) in self.entries.iter().enumerate() {
            if j == i {
                continue;
            }
            let diff = li.clone() - lj.clone();
            for _ in 0..*mj {
                d *= diff.clone();
            }
        }
        d
    }

    /// CRT idempotents `e(λ_i)` of `k[X]/∏(X-λ_j)^{N_j}`, as polynomials of
    /// degree < N: pairwise orthogonal, summing to 1, with `e(λ_i)` congruent
    /// to 1 mod `(X-λ_i)^{N_i}` and to 0 mod the complementary factors.
    pub fn crt_idempotents(&self) -> Vec<UniPoly> {
        let p = self.relation_poly();
        self.entries
            .iter()
            .enumerate()
            .map(|(i, (li, mi))| {
                let fi = UniPoly::linear(li).pow(*mi);
                let (mi_poly, _) = p.divrem(&fi);
                let (g, s, _) = mi_poly.ext_gcd(&fi);
                debug_assert_eq!(g, UniPoly::one());
                s.mul(&mi_poly).rem(&p)
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// the Frobenius algebra
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Debug)]
pub struct FrobeniusData<R> {
    rank: usize,
    /// `X^N = Σ_j relation[j] X^j`
    relation: Vec<R>,
    /// q-degrees of the monomial basis, `2a + 1 - N`.
    qdeg: Vec<i64>,
    /// `mult[a][b]` = coefficients of `X^a · X^b` in the monomial basis.
    mult: Vec<Vec<Vec<R>>>,
    /// `comult[a][b][c]` = coefficient of `X^b ⊗ X^c` in `Δ(X^a)`.
    comult: Vec<Vec<Vec<R>>>,
    /// `counit[a]` = ε(X^a); nonzero only at `a = N-1`.
    counit: Vec<R>,
}

impl<R: Coeff> FrobeniusData<R> {
    /// Build from a relation vector `X^N = Σ relation[j] X^j`.
    pub fn from_relation(relation: Vec<R>) -> Self {
        let n = relation.len();
        assert!(n >= 1, "rank must be at least 1");
        // powers of X reduced mod the relation, up to X^{2N-2}
        let mut pow: Vec<Vec<R>> = Vec::with_capacity(2 * n - 1);
        for k in 0..n {
            let mut v = vec![R::zero(); n];
            v[k] = R::one();
            pow.push(v);
        }
        for _ in n..=(2 * n - 2).max(n - 1) {
            let prev = pow.last().unwrap().clone();
            let lead = prev[n - 1].clone();
            let mut next = vec![R::zero(); n];
            for j in 1..n {
                next[j] = prev[j - 1].clone();
            }
            for j in 0..n {
                next[j] = next[j].clone() + lead.clone() * relation[j].clone();
            }
            pow.push(next);
        }
        let mult: Vec<Vec<Vec<R>>> = (0..n)
            .map(|a| (0..n).map(|b| pow[a + b].clone()).collect())
            .collect();
        let mut counit = vec![R::zero(); n];
        counit[n - 1] = R::one();
        // Gram matrix g[a][b] = ε(X^{a+b}) and its inverse columns (dual basis)
        let gram: Vec<Vec<R>> = (0..n)
            .map(|a| (0..n).map(|b| pow[a + b][n - 1].clone()).collect())
            .collect();
        let mut dual: Vec<Vec<R>> = Vec::with_capacity(n);
        for a in 0..n {
            // solve G u = e_a by back-substitution along anti-diagonals:
            // row i determines u_{n-1-i} because g[i][j] = [i + j = n-1] for
            // i + j <= n-1.
            let mut u = vec![R::zero(); n];
            for i in 0..n {
                let target = if i == a { R::one() } else { R::zero() };
                let mut acc = target;
                for j in (n - 1 - i + 1)..n {
                    acc = acc - gram[i][j].clone() * u[j].clone();
                }
                u[n - 1 - i] = acc;
            }
            dual.push(u);
        }
        let comult: Vec<Vec<Vec<R>>> = (0..n)
            .map(|a| {
                let mut table = vec![vec![R::zero(); n]; n];
                for (i, dual_i) in dual.iter().enumerate() {
                    let prod = &mult[a][i];
                    for (b, pb) in prod.iter().enumerate() {
                        if pb.is_zero() {
                            continue;
                        }
                        for (c, dc) in dual_i.iter().enumerate() {
                            if dc.is_zero() {
                                continue;
                            }
                            table[b][c] = table[b][c].clone() + pb.clone() * dc.clone();
                        }
                    }
                }
                table
            })
            .collect();
        let qdeg = (0..n).map(|a| 2 * a as i64 + 1 - n as i64).collect();
        FrobeniusData {
            rank: n,
            relation,
            qdeg,
            mult,
            comult,
            counit,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relation(&self) -> &[R] {
        &self.relation
    }

    pub fn qdeg(&self) -> &[i64] {
        &self.qdeg
    }

    pub fn mult_table(&self, a: usize, b: usize) -> &[R] {
        &self.mult[a][b]
    }

    pub fn comult_table(&self, a: usize) -> &Vec<Vec<R>> {
        &self.comult[a]
    }

    pub fn counit_table(&self) -> &[R] {
        &self.counit
    }

    pub fn unit(&self) -> Vec<R> {
        let mut v = vec![R::zero(); self.rank];
        v[0] = R::one();
        v
    }

    pub fn mul_elems(&self, x: &[R], y: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); self.rank];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa.clone() * yb.clone();
                for j in 0..self.rank {
                    out[j] = out[j].clone() + c.clone() * self.mult[a][b][j].clone();
                }
            }
        }
        out
    }

    pub fn counit_elem(&self, x: &[R]) -> R {
        let mut acc = R::zero();
        for (a, xa) in x.iter().enumerate() {
            acc = acc + xa.clone() * self.counit[a].clone();
        }
        acc
    }

    /// Exhaustive structure-constant verification of the Frobenius axioms.
    pub fn verify_axioms(&self) -> Result<(), String> {
        let n = self.rank;
        let basis = |a: usize| -> Vec<R> {
            let mut v = vec![R::zero(); n];
            v[a] = R::one();
            v
        };
        // commutativity and associativity
        for a in 0..n {
            for b in 0..n {
                if self.mult[a][b] != self.mult[b][a] {
                    return Err(format!("multiplication not commutative at ({}, {})", a, b));
                }
                for c in 0..n {
                    let left = self.mul_elems(&self.mult[a][b], &basis(c));
                    let right = self.mul_elems(&basis(a), &self.mult[b][c]);
                    if left != right {
                        return Err(format!("associativity fails at ({}, {}, {})", a, b, c));
                    }
                }
            }
        }
        // unit law
        for a in 0..n {
            if self.mult[0][a] != basis(a) {
                return Err(format!("unit law fails at {}", a));
            }
        }
        // counit laws: (ε ⊗ id) Δ = id = (id ⊗ ε) Δ
        for a in 0..n {
            for c in 0..n {
                let mut left = R::zero();
                let mut right = R::zero();
                for b in 0..n {
                    left = left + self.counit[b].clone() * self.comult[a][b][c].clone();
                    right = right + self.counit[b].clone() * self.comult[a][c][b].clone();
                }
                let expect = if a == c { R::one() } else { R::zero() };
                if left != expect || right != expect {
                    return Err(format!("counit law fails at ({}, {})", a, c));
                }
            }
        }
        // coassociativity
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let mut left = R::zero();
                        let mut right = R::zero();
                        for m in 0..n {
                            left = left
                                + self.comult[a][m][z].clone() * self.comult[m][x][y].clone();
                            right = right
                                + self.comult[a][x][m].clone() * self.comult[m][y][z].clone();
                        }
                        if left != right {
                            return Err(format!(
                                "coassociativity fails at ({}; {}, {}, {})",
                                a, x, y, z
                            ));
                        }
                    }
                }
            }
        }
        // Frobenius law: (m ⊗ id)(id ⊗ Δ) = Δ m  on X^a ⊗ X^b
        for a in 0..n {
            for b in 0..n {
                for x in 0..n {
                    for y in 0..n {
                        let mut lhs = R::zero();
                        for u in 0..n {
                            lhs = lhs + self.comult[b][u][y].clone() * self.mult[a][u][x].clone();
                        }
                        let mut rhs = R::zero();
                        for w in 0..n {
                            rhs = rhs + self.mult[a][b][w].clone() * self.comult[w][x][y].clone();
                        }
                        if lhs != rhs {
                            return Err(format!(
                                "Frobenius law fails at ({}, {}; {}, {})",
                                a, b, x, y
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Map all structure constants through `f`.
    pub fn map_coeffs<S: Coeff>(&self, f: &mut impl FnMut(&R) -> S) -> FrobeniusData<S> {
        FrobeniusData {
            rank: self.rank,
            relation: self.relation.iter().map(&mut *f).collect(),
            qdeg: self.qdeg.clone(),
            mult: self
                .mult
                .iter()
                .map(|t| t.iter().map(|v| v.iter().map(&mut *f).collect()).collect())
                .collect(),
            comult: self
                .comult
                .iter()
                .map(|t| t.iter().map(|v| v.iter().map(&mut *f).collect()).collect())
                .collect(),
            counit: self.counit.iter().map(&mut *f).collect(),
        }
    }
}

impl FrobeniusData<Int> {
    /// The undeformed algebra `Z[X]/X^N`.
    pub fn undeformed(n: usize) -> Self {
        FrobeniusData::from_relation(vec![Int::zero(); n])
    }
}

impl FrobeniusData<Rat> {
    /// The undeformed algebra with rational coefficients.
    pub fn undeformed_rational(n: usize) -> Self {
        FrobeniusData::from_relation(vec![Rat::zero(); n])
    }

    /// The Σ-deformed algebra `k[X]/∏(X-λ_i)^{N_i}`; the total multiplicity
    /// must equal the requested rank.
    pub fn deformed(n: usize, sigma: &DeformationMultiset) -> Result<Self, SigmaError> {
        if sigma.total() != n {
            return Err(SigmaError::TotalMismatch {
                expected: n,
                got: sigma.total(),
            });
        }
        let p = sigma.relation_poly();
        let relation = (0..n).map(|j| -p.coeff(j)).collect();
        Ok(FrobeniusData::from_relation(relation))
    }

    /// Express a polynomial of degree < N as an algebra element.
    pub fn element_from_poly(&self, p: &UniPoly) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.rank];
        for (i, c) in p.coeffs().iter().enumerate() {
            assert!(i < self.rank, "polynomial degree exceeds algebra rank");
            v[i] = c.clone();
        }
        v
    }
}

impl FrobeniusData<EPoly> {
    /// The symbolic equivariant algebra over `Z[e_1, ..., e_N]`, with
    /// `X^N = Σ_{i=1..N} (-1)^{i-1} e_i X^{N-i}`. Kept symbolic only for
    /// small ranks; homology is computed after specialization.
    pub fn equivariant(n: usize) -> Result<Self, UnsupportedRank> {
        if n == 0 || n > 2 {
            return Err(UnsupportedRank(n));
        }
        let mut relation = vec![EPoly::zero(); n];
        for i in 1..=n {
            let sign = if i % 2 == 1 { EPoly::one() } else { -EPoly::one() };
            relation[n - i] = sign * EPoly::var(i);
        }
        Ok(FrobeniusData::from_relation(relation))
    }

    /// Specialize every `e_i` to the given rational values.
    pub fn specialize(&self, values: &[Rat]) -> Result<FrobeniusData<Rat>, crate::epoly::UnassignedVar> {
        let mut err = None;
        let out = self.map_coeffs(&mut |p: &EPoly| match p.eval(values) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                Rat::zero()
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

/// Rank outside the supported range for the requested construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnsupportedRank(pub usize);

impl fmt::Display for UnsupportedRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unsupported rank {}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_int};

    fn sigma(vals: &[i64]) -> DeformationMultiset {
        DeformationMultiset::simple(vals.iter().map(|&v| rat_int(v)).collect()).unwrap()
    }

    #[test]
    fn undeformed_n2() {
        let a = FrobeniusData::undeformed(2);
        assert_eq!(a.qdeg(), &[-1, 1]);
        // X^2 = 0
        assert!(a.mult_table(1, 1).iter().all(|c| c.is_zero()));
        // counit
        assert_eq!(a.counit_table(), &[Int::zero(), Int::one()]);
        // comult(1) = 1 ⊗ X + X ⊗ 1
        let c = a.comult_table(0);
        assert_eq!(c[0][1], Int::one());
        assert_eq!(c[1][0], Int::one());
        assert!(c[0][0].is_zero() && c[1][1].is_zero());
        a.verify_axioms().unwrap();
    }

    #[test]
    fn deformed_n2_zero_one() {
        let a = FrobeniusData::deformed(2, &sigma(&[0, 1])).unwrap();
        // X^2 = X
        assert_eq!(a.mult_table(1, 1), &[rat_int(0), rat_int(1)]);
        a.verify_axioms().unwrap();
    }

    #[test]
    fn deformed_n1() {
        let s = DeformationMultiset::simple(vec![rat(3, 2)]).unwrap();
        let a = FrobeniusData::deformed(1, &s).unwrap();
        assert_eq!(a.rank(), 1);
        // X = 3/2 in the quotient
        assert_eq!(a.relation(), &[rat(3, 2)]);
        a.verify_axioms().unwrap();
    }

    #[test]
    fn sigma_total_mismatch() {
        assert!(FrobeniusData::deformed(3, &sigma(&[0, 1])).is_err());
    }

    #[test]
    fn equivariant_n2() {
        let a = FrobeniusData::equivariant(2).unwrap();
        a.verify_axioms().unwrap();
        // X^2 = e1 X - e2
        assert_eq!(a.relation()[1], EPoly::var(1));
        assert_eq!(a.relation()[0], -EPoly::var(2));
        // comult(1) = 1 ⊗ X + X ⊗ 1 - e1 (1 ⊗ 1)
        let c = a.comult_table(0);
        assert_eq!(c[0][0], -EPoly::var(1));
        assert_eq!(c[0][1], EPoly::one());
        assert_eq!(c[1][0], EPoly::one());
        // comult(X) = X ⊗ X - e2 (1 ⊗ 1)
        let cx = a.comult_table(1);
        assert_eq!(cx[1][1], EPoly::one());
        assert_eq!(cx[0][0], -EPoly::var(2));
    }

    #[test]
    fn specialization_reproduces_deformed_and_undeformed() {
        let eq = FrobeniusData::equivariant(2).unwrap();
        // e1 = 1, e2 = 0 is Σ = {0, 1}
        let spec = eq.specialize(&[rat_int(1), rat_int(0)]).unwrap();
        let def = FrobeniusData::deformed(2, &sigma(&[0, 1])).unwrap();
        assert_eq!(spec, def);
        // e_i = 0 is the undeformed algebra
        let spec0 = eq.specialize(&[rat_int(0), rat_int(0)]).unwrap();
        let und = FrobeniusData::undeformed(2).map_coeffs(&mut |c| Rat::from_integer(c.clone()));
        assert_eq!(spec0, und);
    }

    #[test]
    fn crt_idempotents_examples() {
        // Σ = {0, 1}: e(0) = 1 - X, e(1) = X
        let s = sigma(&[0, 1]);
        let es = s.crt_idempotents();
        assert_eq!(es[0], UniPoly::new(vec![rat_int(1), rat_int(-1)]));
        assert_eq!(es[1], UniPoly::new(vec![rat_int(0), rat_int(1)]));
        // Σ = {λ}: e = 1
        let single = DeformationMultiset::simple(vec![rat(7, 3)]).unwrap();
        assert_eq!(single.crt_idempotents(), vec![UniPoly::one()]);
        // Σ = {0^2, 1}: e(0) = 1 - X^2, e(1) = X^2
        let s2 = DeformationMultiset::new(vec![(rat_int(0), 2), (rat_int(1), 1)]).unwrap();
        let es2 = s2.crt_idempotents();
        assert_eq!(es2[0], UniPoly::new(vec![rat_int(1), rat_int(0), rat_int(-1)]));
        assert_eq!(es2[1], UniPoly::new(vec![rat_int(0), rat_int(0), rat_int(1)]));
    }

    #[test]
    fn crt_identities() {
        for s in [
            sigma(&[0, 1]),
            sigma(&[0, 1, 3]),
            DeformationMultiset::new(vec![(rat_int(0), 2), (rat_int(1), 1)]).unwrap(),
            DeformationMultiset::new(vec![(rat(1, 2), 2), (rat_int(-1), 2)]).unwrap(),
        ] {
            let n = s.total();
            let alg = FrobeniusData::deformed(n, &s).unwrap();
            let es: Vec<Vec<Rat>> = s
                .crt_idempotents()
                .iter()
                .map(|p| alg.element_from_poly(p))
                .collect();
            // orthogonal idempotents summing to 1
            let mut total = vec![Rat::zero(); n];
            for (i, ei) in es.iter().enumerate() {
                for (x, t) in ei.iter().zip(total.iter_mut()) {
                    *t += x.clone();
                }
                for (j, ej) in es.iter().enumerate() {
                    let prod = alg.mul_elems(ei, ej);
                    if i == j {
                        assert_eq!(&prod, ei);
                    } else {
                        assert!(prod.iter().all(|c| c.is_zero()));
                    }
                }
            }
            assert_eq!(total, alg.unit());
            // (X - λ_i)^{N_i} · e(λ_i) = 0
            for (i, (li, mi)) in s.entries().iter().enumerate() {
                let f = UniPoly::linear(li).pow(*mi);
                let fv = {
                    let r = f.rem(&s.relation_poly());
                    alg.element_from_poly(&r)
                };
                let prod = alg.mul_elems(&fv, &es[i]);
                assert!(prod.iter().all(|c| c.is_zero()));
            }
        }
    }

    #[test]
    fn twisting_scalars() {
        assert_eq!(sigma(&[0, 1]).twisting_scalar(1), rat_int(1));
        assert_eq!(sigma(&[0, 2]).twisting_scalar(1), rat_int(2));
        assert_eq!(sigma(&[0, 1, 3]).twisting_scalar(2), rat_int(6));
    }

    #[test]
    fn sphere_evaluations() {
        // undeformed: the (N-1)-dotted sphere evaluates to 1
        for n in 1..=4 {
            let a = FrobeniusData::undeformed_rational(n);
            let mut x = a.unit();
            for _ in 0..n - 1 {
                let xgen = {
                    let mut v = vec![Rat::zero(); n];
                    v[1.min(n - 1)] = Rat::one();
                    v
                };
                x = a.mul_elems(&x, &xgen);
            }
            if n > 1 {
                assert_eq!(a.counit_elem(&x), Rat::one());
            }
        }
        // deformed: ε(e(λ_i)(X-λ_i)^{N_i-1}) = 1/d_i
        for s in [
            sigma(&[0, 1]),
            sigma(&[0, 2]),
            sigma(&[0, 1, 3]),
            DeformationMultiset::new(vec![(rat_int(0), 2), (rat_int(1), 1)]).unwrap(),
        ] {
            let n = s.total();
            let alg = FrobeniusData::deformed(n, &s).unwrap();
            let es = s.crt_idempotents();
            for (i, (li, mi)) in s.entries().iter().enumerate() {
                let dotted = UniPoly::linear(li).pow(mi - 1);
                let elem = alg.element_from_poly(&es[i].mul(&dotted).rem(&s.relation_poly()));
                let d = s.twisting_scalar(i);
                assert_eq!(alg.counit_elem(&elem), d.recip());
            }
        }
    }

    #[test]
    fn axioms_hold_for_all_modes() {
        FrobeniusData::undeformed(1).verify_axioms().unwrap();
        FrobeniusData::undeformed(2).verify_axioms().unwrap();
        FrobeniusData::undeformed(3).verify_axioms().unwrap();
        FrobeniusData::equivariant(1).unwrap().verify_axioms().unwrap();
        FrobeniusData::equivariant(2).unwrap().verify_axioms().unwrap();
        assert!(FrobeniusData::equivariant(3).is_err());
        FrobeniusData::deformed(3, &sigma(&[0, 1, 3]))
            .unwrap()
            .verify_axioms()
            .unwrap();
    }
}
