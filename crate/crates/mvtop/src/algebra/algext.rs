//! Coefficient fields for branch expansion: the rationals and a single
//! algebraic extension `Q(theta)` represented as `Q[t]/(m(t))`.
//!
//! The extension is never nested. Polynomial arithmetic over either field is
//! provided by generic helpers on coefficient vectors, and factorization over
//! the extension uses Trager's norm descent to univariate factorization over
//! the rationals.

use num_traits::{One, Zero};

use super::bipoly::BiPoly;
use super::factor::factor_uni;
use super::rat::Rat;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// A field the Newton-Puiseux recursion can compute in.
pub trait FieldCtx: Clone {
    type El: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn from_rat(&self, r: &Rat) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn inv(&self, a: &Self::El) -> Option<Self::El>;
    fn is_zero(&self, a: &Self::El) -> bool;
    /// The element as a rational, when it lies in the prime field.
    fn as_rat(&self, a: &Self::El) -> Option<Rat>;
    /// Extension degree over the rationals.
    fn ext_degree(&self) -> usize;
    /// Monic irreducible factors with multiplicities of a nonzero polynomial
    /// (coefficient vector, ascending powers).
    fn factor(&self, p: &[Self::El]) -> Result<Vec<(Vec<Self::El>, usize)>>;
}

/// The rationals.
#[derive(Clone, Debug)]
pub struct RatField;

impl FieldCtx for RatField {
    type El = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a.clone()
    }
    fn inv(&self, a: &Rat) -> Option<Rat> {
        if a.is_zero() {
            None
        } else {
            Some(Rat::one() / a)
        }
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn as_rat(&self, a: &Rat) -> Option<Rat> {
        Some(a.clone())
    }
    fn ext_degree(&self) -> usize {
        1
    }
    fn factor(&self, p: &[Rat]) -> Result<Vec<(Vec<Rat>, usize)>> {
        let up = UniPoly::new(p.to_vec());
        let (_, fs) = factor_uni(&up)?;
        Ok(fs
            .into_iter()
            .map(|(f, m)| (f.coeffs().to_vec(), m))
            .collect())
    }
}

/// An element of `Q[t]/(m(t))`, reduced representative.
pub type AlgExt = UniPoly;

/// The extension field `Q(theta)` with `theta` a root of a monic irreducible
/// polynomial.
#[derive(Clone, Debug)]
pub struct ExtField {
    modulus: UniPoly,
}

impl ExtField {
    pub fn new(modulus: UniPoly) -> Self {
        assert!(modulus.degree() >= 1);
        assert!(modulus.leading().is_one(), "modulus must be monic");
        ExtField { modulus }
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn theta(&self) -> AlgExt {
        UniPoly::x().divmod(&self.modulus).1
    }

    fn reduce(&self, p: UniPoly) -> AlgExt {
        p.divmod(&self.modulus).1
    }
}

impl FieldCtx for ExtField {
    type El = AlgExt;

    fn zero(&self) -> AlgExt {
        UniPoly::zero()
    }
    fn one(&self) -> AlgExt {
        UniPoly::one()
    }
    fn from_rat(&self, r: &Rat) -> AlgExt {
        UniPoly::constant(r.clone())
    }
    fn add(&self, a: &AlgExt, b: &AlgExt) -> AlgExt {
        a.add(b)
    }
    fn sub(&self, a: &AlgExt, b: &AlgExt) -> AlgExt {
        a.sub(b)
    }
    fn mul(&self, a: &AlgExt, b: &AlgExt) -> AlgExt {
        self.reduce(a.mul(b))
    }
    fn neg(&self, a: &AlgExt) -> AlgExt {
        a.neg()
    }
    fn inv(&self, a: &AlgExt) -> Option<AlgExt> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.xgcd(&self.modulus);
        if !g.is_one() {
            return None;
        }
        Some(self.reduce(s))
    }
    fn is_zero(&self, a: &AlgExt) -> bool {
        a.is_zero()
    }
    fn as_rat(&self, a: &AlgExt) -> Option<Rat> {
        if a.is_constant() {
            Some(a.coeff(0))
        } else {
            None
        }
    }
    fn ext_degree(&self) -> usize {
        self.modulus.degree()
    }
    fn factor(&self, p: &[AlgExt]) -> Result<Vec<(Vec<AlgExt>, usize)>> {
        let poly: Vec<AlgExt> = p.to_vec();
        let mut out = Vec::new();
        for (sqf, mult) in polyk::squarefree_decomposition(self, &poly) {
            for f in trager_factor_squarefree(self, &sqf)? {
                out.push((f, mult));
            }
        }
        Ok(out)
    }
}

/// Trager's algorithm: factor a monic squarefree polynomial over `Q(theta)`
/// by factoring a squarefree norm over the rationals.
fn trager_factor_squarefree(k: &ExtField, f: &[AlgExt]) -> Result<Vec<Vec<AlgExt>>> {
    let f = polyk::monic(k, f).ok_or(Error::ZeroPolynomial)?;
    if f.len() <= 2 {
        return Ok(vec![f]);
    }
    for s in 0..40i64 {
        let shift = Rat::from_integer(s.into());
        // g(c) = f(c - s*theta)
        let lin = vec![k.mul(&k.from_rat(&-shift.clone()), &k.theta()), k.one()];
        let g = polyk::compose(k, &f, &lin);
        // Norm(c) = Res_t(m(t), g(c; t)) as a bivariate resultant over Q.
        let norm = norm_poly(k, &g)?;
        if !norm.is_squarefree() {
            continue;
        }
        let (_, factors) = factor_uni(&norm)?;
        let mut out = Vec::new();
        for (n_i, _) in factors {
            // n_i(c + s*theta) over K, then gcd with f.
            let lin_back = vec![k.mul(&k.from_rat(&shift), &k.theta()), k.one()];
            let ni_k: Vec<AlgExt> = n_i.coeffs().iter().map(|c| k.from_rat(c)).collect();
            let ni_shift = polyk::compose(k, &ni_k, &lin_back);
            let g_i = polyk::gcd(k, &f, &ni_shift);
            if g_i.len() >= 2 {
                out.push(g_i);
            }
        }
        let total: usize = out.iter().map(|v| v.len() - 1).sum();
        if total == f.len() - 1 {
            return Ok(out);
        }
    }
    Err(Error::PrecisionExhausted(40))
}

/// The norm of a polynomial over the extension, as a rational polynomial in
/// the outer variable.
fn norm_poly(k: &ExtField, g: &[AlgExt]) -> Result<UniPoly> {
    // Build the bivariate polynomial G(t, c) with rows indexed by t-powers.
    let rows = k.modulus().degree();
    let cols = g.len();
    let mut grid = vec![vec![Rat::zero(); cols]; rows.max(1)];
    for (j, coef) in g.iter().enumerate() {
        for (i, a) in coef.coeffs().iter().enumerate() {
            grid[i][j] = a.clone();
        }
    }
    let gt = BiPoly::new(grid, ("t", "c"));
    let mt = BiPoly::from_x(k.modulus(), ("t", "c"));
    mt.resultant(&gt, "t")
}

/// Polynomial helpers over an arbitrary `FieldCtx`; coefficient vectors in
/// ascending powers, trailing zeros trimmed, zero = empty vector.
pub mod polyk {
    use super::FieldCtx;

    pub fn trim<K: FieldCtx>(k: &K, mut v: Vec<K::El>) -> Vec<K::El> {
        while v.last().map_or(false, |c| k.is_zero(c)) {
            v.pop();
        }
        v
    }

    pub fn add<K: FieldCtx>(k: &K, a: &[K::El], b: &[K::El]) -> Vec<K::El> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(|| k.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| k.zero());
            out.push(k.add(&x, &y));
        }
        trim(k, out)
    }

    pub fn sub<K: FieldCtx>(k: &K, a: &[K::El], b: &[K::El]) -> Vec<K::El> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(|| k.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| k.zero());
            out.push(k.sub(&x, &y));
        }
        trim(k, out)
    }

    pub fn mul<K: FieldCtx>(k: &K, a: &[K::El], b: &[K::El]) -> Vec<K::El> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![k.zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if k.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(ai, bj));
            }
        }
        trim(k, out)
    }

    pub fn scale<K: FieldCtx>(k: &K, a: &[K::El], c: &K::El) -> Vec<K::El> {
        trim(k, a.iter().map(|x| k.mul(x, c)).collect())
    }

    pub fn divmod<K: FieldCtx>(k: &K, a: &[K::El], d: &[K::El]) -> (Vec<K::El>, Vec<K::El>) {
        assert!(!d.is_empty());
        let inv = k.inv(d.last().unwrap()).expect("leading invertible");
        let dd = d.len() - 1;
        let mut r: Vec<K::El> = a.to_vec();
        if r.len() <= dd {
            return (vec![], trim(k, r));
        }
        let mut q = vec![k.zero(); r.len() - dd];
        while r.len() > dd {
            let c = k.mul(r.last().unwrap(), &inv);
            let pos = r.len() - 1 - dd;
            if !k.is_zero(&c) {
                q[pos] = c.clone();
                for (i, di) in d.iter().enumerate() {
                    r[pos + i] = k.sub(&r[pos + i], &k.mul(&c, di));
                }
            }
            r.pop();
            while r.last().map_or(false, |x| k.is_zero(x)) {
                r.pop();
            }
        }
        (trim(k, q), trim(k, r))
    }

    pub fn monic<K: FieldCtx>(k: &K, a: &[K::El]) -> Option<Vec<K::El>> {
        let l = a.last()?;
        let inv = k.inv(l)?;
        Some(scale(k, a, &inv))
    }

    pub fn gcd<K: FieldCtx>(k: &K, a: &[K::El], b: &[K::El]) -> Vec<K::El> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        while !b.is_empty() {
            let (_, r) = divmod(k, &a, &b);
            a = b;
            b = r;
        }
        monic(k, &a).unwrap_or(a)
    }

    pub fn derivative<K: FieldCtx>(k: &K, a: &[K::El]) -> Vec<K::El> {
        if a.len() <= 1 {
            return vec![];
        }
        let mut out = Vec::with_capacity(a.len() - 1);
        for (i, c) in a.iter().enumerate().skip(1) {
            let n = k.from_rat(&crate::algebra::rat::rat_i(i as i64));
            out.push(k.mul(c, &n));
        }
        trim(k, out)
    }

    pub fn eval<K: FieldCtx>(k: &K, a: &[K::El], x: &K::El) -> K::El {
        let mut acc = k.zero();
        for c in a.iter().rev() {
            acc = k.add(&k.mul(&acc, x), c);
        }
        acc
    }

    /// Substitution of a polynomial for the variable.
    pub fn compose<K: FieldCtx>(k: &K, a: &[K::El], inner: &[K::El]) -> Vec<K::El> {
        let mut acc: Vec<K::El> = vec![];
        for c in a.iter().rev() {
            acc = mul(k, &acc, inner);
            acc = add(k, &acc, &[c.clone()]);
        }
        acc
    }

    /// Yun-style squarefree decomposition over a field of characteristic 0.
    pub fn squarefree_decomposition<K: FieldCtx>(
        k: &K,
        f: &[K::El],
    ) -> Vec<(Vec<K::El>, usize)> {
        let f = match monic(k, f) {
            Some(f) => f,
            None => return vec![],
        };
        if f.len() <= 1 {
            return vec![];
        }
        let fp = derivative(k, &f);
        let g = gcd(k, &f, &fp);
        if g.len() == 1 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = divmod(k, &f, &g).0;
        let mut c = divmod(k, &fp, &g).0;
        let mut d = sub(k, &c, &derivative(k, &b));
        let mut i = 1;
        while b.len() > 1 {
            let a = gcd(k, &b, &d);
            b = divmod(k, &b, &a).0;
            c = divmod(k, &d, &a).0;
            d = sub(k, &c, &derivative(k, &b));
            if a.len() > 1 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat_i;

    #[test]
    fn ext_inverse() {
        // Q(sqrt 2): (1 + theta)(theta - 1) = theta^2 - 1 = 1 over t^2 - 2.
        let k = ExtField::new(UniPoly::from_i64(&[-2, 0, 1]));
        let a = UniPoly::from_i64(&[1, 1]);
        let inv = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &inv), k.one());
    }

    #[test]
    fn trager_splits_over_sqrt2() {
        // c^2 - 2 factors over Q(sqrt 2) as (c - theta)(c + theta).
        let k = ExtField::new(UniPoly::from_i64(&[-2, 0, 1]));
        let f: Vec<AlgExt> = vec![k.from_rat(&rat_i(-2)), k.zero(), k.one()];
        let fs = k.factor(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(f, m)| f.len() == 2 && *m == 1));
    }

    #[test]
    fn trager_keeps_irreducible() {
        // c^2 - 3 stays irreducible over Q(sqrt 2).
        let k = ExtField::new(UniPoly::from_i64(&[-2, 0, 1]));
        let f: Vec<AlgExt> = vec![k.from_rat(&rat_i(-3)), k.zero(), k.one()];
        let fs = k.factor(&f).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0.len(), 3);
    }
}
