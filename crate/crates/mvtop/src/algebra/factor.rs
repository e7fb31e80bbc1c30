//! Univariate factorization over the rationals: Yun squarefree
//! decomposition, factorization modulo a small prime, Hensel lifting to a
//! Mignotte-sized modulus, and subset recombination.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::Rat;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Hard cap on the degree accepted by `factor_uni`.
pub const FACTOR_DEGREE_CAP: usize = 24;

/// Factors a nonzero rational polynomial into monic irreducible factors with
/// multiplicities, together with the rational unit: the product of
/// `unit * prod f_i^{m_i}` equals the input exactly. Factors are sorted by
/// degree, then lexicographically on coefficients.
pub fn factor_uni(p: &UniPoly) -> Result<(Rat, Vec<(UniPoly, usize)>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() > FACTOR_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded(p.degree(), FACTOR_DEGREE_CAP));
    }
    if p.is_constant() {
        return Ok((p.leading(), vec![]));
    }
    let mut factors: Vec<(UniPoly, usize)> = Vec::new();
    for (sqf, mult) in yun_squarefree(p) {
        for f in factor_squarefree(&sqf)? {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    // Merge equal factors defensively (cannot happen for distinct square-free
    // levels, but keeps the output canonical).
    let mut merged: Vec<(UniPoly, usize)> = Vec::new();
    for (f, m) in factors {
        if let Some(last) = merged.last_mut() {
            if last.0 == f {
                last.1 += m;
                continue;
            }
        }
        merged.push((f, m));
    }
    let unit = p.leading();
    debug_assert_eq!(
        {
            let mut q = UniPoly::constant(unit.clone());
            for (f, m) in &merged {
                q = q.mul(&f.pow(*m as u32));
            }
            q
        },
        *p
    );
    Ok((unit, merged))
}

/// True when the polynomial is irreducible over the rationals.
pub fn is_irreducible(p: &UniPoly) -> Result<bool> {
    if p.is_zero() || p.is_constant() {
        return Ok(false);
    }
    let (_, fs) = factor_uni(p)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// All rational roots with multiplicities.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<(Rat, usize)>> {
    let (_, fs) = factor_uni(p)?;
    Ok(fs
        .into_iter()
        .filter(|(f, _)| f.degree() == 1)
        .map(|(f, m)| (-f.coeff(0), m))
        .collect())
}

/// Yun's squarefree decomposition: returns monic squarefree pairwise coprime
/// parts with their multiplicities.
pub fn yun_squarefree(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    let f = p.monic();
    if f.is_constant() {
        return vec![];
    }
    let fp = f.derivative();
    let g = f.gcd(&fp);
    if g.is_one() {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut b = f.div_exact(&g).unwrap();
    let mut c = fp.div_exact(&g).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.div_exact(&a).unwrap();
        c = d.div_exact(&a).unwrap();
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Factors a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree(a: &UniPoly) -> Result<Vec<UniPoly>> {
    if a.degree() == 1 {
        return Ok(vec![a.monic()]);
    }
    let (_, g) = a.primitive_integer();
    // Monicize over the integers: G(y) = b^(n-1) * g(y/b).
    let n = g.len() - 1;
    let b = g[n].clone();
    let mut monic = vec![BigInt::zero(); n + 1];
    // coefficient of y^i in G = b^(n-1) g(y/b): g_i * b^(n-1-i); the leading
    // one is g_n / b = 1.
    for (i, gi) in g.iter().enumerate() {
        if i == n {
            monic[i] = BigInt::one();
        } else {
            monic[i] = gi * b.pow((n - 1 - i) as u32);
        }
    }
    let int_factors = factor_monic_squarefree_int(&monic)?;
    // Map back: h(y) irreducible factor of G gives h(b*x) / b^(deg h), monic.
    let brat = Rat::from_integer(b);
    let out = int_factors
        .into_iter()
        .map(|h| {
            let hp = UniPoly::new(h.into_iter().map(Rat::from_integer).collect());
            hp.scale_var(&brat).monic()
        })
        .collect();
    Ok(out)
}

/// Factors a monic squarefree integer polynomial over the integers.
fn factor_monic_squarefree_int(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let n = f.len() - 1;
    if n == 1 {
        return Ok(vec![f.to_vec()]);
    }
    // Choose a prime keeping f squarefree mod p, preferring few factors.
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0usize;
    let mut p = 3u64;
    while tried < 6 {
        if is_prime(p) {
            let fp = reduce_mod(f, p);
            if fp.len() == f.len() && modp_is_squarefree(&fp, p) {
                tried += 1;
                let factors = modp_factor_squarefree(&fp, p);
                if factors.len() == 1 {
                    return Ok(vec![f.to_vec()]);
                }
                if best.as_ref().map_or(true, |(_, bf)| factors.len() < bf.len()) {
                    best = Some((p, factors));
                }
            }
        }
        p += 2;
        if p > 10_000 {
            break;
        }
    }
    let (p, mut modular) = best.ok_or(Error::DegreeCapExceeded(n, FACTOR_DEGREE_CAP))?;
    modular.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));

    // Lift to p^(2^k) beyond twice the Mignotte bound.
    let norm2: BigInt = {
        let s: BigInt = f.iter().map(|c| c * c).sum();
        s.sqrt() + 1
    };
    let bound: BigInt = (BigInt::one() << n) * norm2 * 2 + 1;
    let mut modulus = BigInt::from(p);
    let mut steps = 0u32;
    while modulus < bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = hensel_lift_multi(f, &modular, p, steps);
    let big_mod = {
        let mut m = BigInt::from(p);
        for _ in 0..steps {
            m = &m * &m;
        }
        m
    };

    // Zassenhaus recombination.
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut current = f.to_vec();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut size = 1usize;
    'outer: while !remaining.is_empty() {
        if size > remaining.len() / 2 {
            // What is left is irreducible.
            out.push(current.clone());
            current = vec![BigInt::one()];
            remaining.clear();
            break;
        }
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut cand = vec![BigInt::one()];
            for &i in &combo {
                cand = poly_mul_mod(&cand, &remaining[i], &big_mod);
            }
            let cand = symmetric_rep(&cand, &big_mod);
            if let Some(q) = poly_div_exact_int(&current, &cand) {
                out.push(cand);
                current = q;
                let keep: Vec<Vec<BigInt>> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                remaining = keep;
                if current.len() == 1 {
                    remaining.clear();
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.len() > 1 {
        out.push(current);
    }
    Ok(out)
}

pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (dense Vec<BigInt>, trailing = leading coeff)
// ---------------------------------------------------------------------------

fn trim_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = (&out[i + j] + ai * bj) % m;
        }
    }
    trim_int(out.into_iter().map(|c| c.mod_floor_big(m)).collect())
}

trait ModFloor {
    fn mod_floor_big(self, m: &BigInt) -> BigInt;
}
impl ModFloor for BigInt {
    fn mod_floor_big(self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn poly_add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            + b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x.mod_floor_big(m));
    }
    trim_int(out)
}

fn poly_sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            - b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x.mod_floor_big(m));
    }
    trim_int(out)
}

/// Division with remainder by a monic divisor, all coefficients mod `m`.
fn poly_divmod_monic_mod(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(d.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let mut r: Vec<BigInt> = a.to_vec();
    let dd = d.len() - 1;
    if r.len() <= dd {
        return (vec![], trim_int(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - dd];
    while r.len() > dd {
        let c = r.last().unwrap().clone();
        let k = r.len() - 1 - dd;
        if !c.is_zero() {
            q[k] = c.clone();
            for (i, di) in d.iter().enumerate() {
                r[k + i] = (&r[k + i] - &c * di).mod_floor_big(m);
            }
        }
        r.pop();
        while r.last().map_or(false, |x| x.is_zero()) {
            r.pop();
        }
    }
    (trim_int(q), trim_int(r))
}

fn symmetric_rep(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    trim_int(
        a.iter()
            .map(|c| {
                let c = c.clone().mod_floor_big(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Exact division over the integers; `None` when not divisible.
fn poly_div_exact_int(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    if d.is_empty() {
        return None;
    }
    let mut r: Vec<BigInt> = a.to_vec();
    let dd = d.len() - 1;
    let dl = d.last().unwrap();
    if r.len() < d.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - dd];
    while r.len() > dd {
        let (c, rem) = r.last().unwrap().div_rem(dl);
        if !rem.is_zero() {
            return None;
        }
        let k = r.len() - 1 - dd;
        q[k] = c.clone();
        for (i, di) in d.iter().enumerate() {
            r[k + i] = &r[k + i] - &c * di;
        }
        r.pop();
        while r.last().map_or(false, |x| x.is_zero()) {
            r.pop();
        }
    }
    if r.is_empty() {
        Some(trim_int(q))
    } else {
        None
    }
}

use num_integer::Integer as _;

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// One quadratic Hensel step: from `f = g*h (mod m)`, `s*g + t*h = 1 (mod m)`
/// with `h` monic, to the same data mod `m^2`.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = poly_sub_mod(f, &poly_mul_mod(g, h, &m2), &m2);
    let se = poly_mul_mod(s, &e, &m2);
    let (q, r) = poly_divmod_monic_mod(&se, h, &m2);
    let g1 = poly_add_mod(
        &poly_add_mod(g, &poly_mul_mod(t, &e, &m2), &m2),
        &poly_mul_mod(&q, g, &m2),
        &m2,
    );
    let h1 = poly_add_mod(h, &r, &m2);
    let one = vec![BigInt::one()];
    let b = poly_sub_mod(
        &poly_add_mod(
            &poly_mul_mod(s, &g1, &m2),
            &poly_mul_mod(t, &h1, &m2),
            &m2,
        ),
        &one,
        &m2,
    );
    let sb = poly_mul_mod(s, &b, &m2);
    let (c, d) = poly_divmod_monic_mod(&sb, &h1, &m2);
    let s1 = poly_sub_mod(s, &d, &m2);
    let t1 = poly_sub_mod(
        &poly_sub_mod(t, &poly_mul_mod(t, &b, &m2), &m2),
        &poly_mul_mod(&c, &g1, &m2),
        &m2,
    );
    (g1, h1, s1, t1)
}

/// Lifts a factorization of a monic `f` from mod `p` to mod `p^(2^steps)`
/// by a recursive two-way split.
fn hensel_lift_multi(
    f: &[BigInt],
    factors_mod_p: &[Vec<u64>],
    p: u64,
    steps: u32,
) -> Vec<Vec<BigInt>> {
    if factors_mod_p.len() == 1 {
        return vec![f.to_vec()];
    }
    let mid = factors_mod_p.len() / 2;
    let (left, right) = factors_mod_p.split_at(mid);
    let g0 = modp_product(left, p);
    let h0 = modp_product(right, p);
    let (gg, ss, tt) = modp_xgcd(&g0, &h0, p);
    debug_assert_eq!(gg, vec![1u64]);
    let mut g: Vec<BigInt> = g0.iter().map(|&c| BigInt::from(c)).collect();
    let mut h: Vec<BigInt> = h0.iter().map(|&c| BigInt::from(c)).collect();
    let mut s: Vec<BigInt> = ss.iter().map(|&c| BigInt::from(c)).collect();
    let mut t: Vec<BigInt> = tt.iter().map(|&c| BigInt::from(c)).collect();
    let mut m = BigInt::from(p);
    let fm = {
        let m_target = {
            let mut mt = BigInt::from(p);
            for _ in 0..steps {
                mt = &mt * &mt;
            }
            mt
        };
        trim_int(f.iter().map(|c| c.clone().mod_floor_big(&m_target)).collect())
    };
    for _ in 0..steps {
        let (g1, h1, s1, t1) = hensel_step(&fm, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let mut out = hensel_lift_sub(&g, left, p, steps);
    out.extend(hensel_lift_sub(&h, right, p, steps));
    out
}

fn hensel_lift_sub(f: &[BigInt], factors_mod_p: &[Vec<u64>], p: u64, steps: u32) -> Vec<Vec<BigInt>> {
    if factors_mod_p.len() == 1 {
        return vec![f.to_vec()];
    }
    hensel_lift_multi(f, factors_mod_p, p, steps)
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] with small p
// ---------------------------------------------------------------------------

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_mod(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f
        .iter()
        .map(|c| c.clone().mod_floor_big(&pb).to_u64().unwrap())
        .collect();
    while v.last().map_or(false, |&c| c == 0) {
        v.pop();
    }
    v
}

fn modp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last().map_or(false, |&c| c == 0) {
        v.pop();
    }
    v
}

fn modp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai as u128 as u64 % p * bj % p) % p;
        }
    }
    modp_trim(out)
}

fn modp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out.push((x + p - y) % p);
    }
    modp_trim(out)
}

fn modp_inv(a: u64, p: u64) -> u64 {
    // Extended Euclid on integers.
    let (mut t, mut newt) = (0i128, 1i128);
    let (mut r, mut newr) = (p as i128, a as i128);
    while newr != 0 {
        let q = r / newr;
        let tmp = t - q * newt;
        t = newt;
        newt = tmp;
        let tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    assert_eq!(r, 1, "not invertible");
    ((t % p as i128 + p as i128) % p as i128) as u64
}

fn modp_divmod(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!d.is_empty());
    let mut r: Vec<u64> = a.to_vec();
    let dd = d.len() - 1;
    let inv = modp_inv(*d.last().unwrap(), p);
    if r.len() <= dd {
        return (vec![], modp_trim(r));
    }
    let mut q = vec![0u64; r.len() - dd];
    while r.len() > dd {
        let c = *r.last().unwrap() % p * inv % p;
        let k = r.len() - 1 - dd;
        if c != 0 {
            q[k] = c;
            for (i, &di) in d.iter().enumerate() {
                r[k + i] = (r[k + i] + p - c * di % p) % p;
            }
        }
        r.pop();
        while r.last().map_or(false, |&x| x == 0) {
            r.pop();
        }
    }
    (modp_trim(q), modp_trim(r))
}

fn modp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let (_, r) = modp_divmod(&a, &b, p);
        a = b;
        b = r;
    }
    // monic
    if let Some(&l) = a.last() {
        let inv = modp_inv(l, p);
        for c in &mut a {
            *c = *c * inv % p;
        }
    }
    a
}

fn modp_xgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![1u64];
    let mut s1: Vec<u64> = vec![];
    let mut t0: Vec<u64> = vec![];
    let mut t1 = vec![1u64];
    while !r1.is_empty() {
        let (q, r) = modp_divmod(&r0, &r1, p);
        let s = modp_sub(&s0, &modp_mul(&q, &s1, p), p);
        let t = modp_sub(&t0, &modp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let inv = modp_inv(*r0.last().unwrap(), p);
    let norm = |v: Vec<u64>| -> Vec<u64> { v.into_iter().map(|c| c * inv % p).collect() };
    (norm(r0), norm(s0), norm(t0))
}

fn modp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return vec![];
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (i, &c) in a.iter().enumerate().skip(1) {
        out.push(c * (i as u64 % p) % p);
    }
    modp_trim(out)
}

fn modp_is_squarefree(a: &[u64], p: u64) -> bool {
    let d = modp_derivative(a, p);
    if d.is_empty() {
        return false;
    }
    modp_gcd(a, &d, p).len() == 1
}

fn modp_product(fs: &[Vec<u64>], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    for f in fs {
        acc = modp_mul(&acc, f, p);
    }
    acc
}

fn modp_powmod(base: &[u64], mut e: BigInt, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = {
        let (_, r) = modp_divmod(base, modulus, p);
        r
    };
    let two = BigInt::from(2);
    while e > BigInt::zero() {
        if (&e % &two) == BigInt::one() {
            let m = modp_mul(&acc, &b, p);
            acc = modp_divmod(&m, modulus, p).1;
        }
        let sq = modp_mul(&b, &b, p);
        b = modp_divmod(&sq, modulus, p).1;
        e /= &two;
    }
    acc
}

/// Factors a monic squarefree polynomial over F_p into monic irreducibles,
/// via distinct-degree splitting then Cantor-Zassenhaus equal-degree
/// splitting with a fixed-seed generator.
fn modp_factor_squarefree(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    // make monic
    let inv = modp_inv(*f.last().unwrap(), p);
    let f: Vec<u64> = f.iter().map(|&c| c * inv % p).collect();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut d = 1usize;
    // w = x^(p^d) mod rest, maintained incrementally.
    let x = vec![0u64, 1u64];
    let mut w = modp_divmod(&x, &rest, p).1;
    while rest.len() > 1 && d <= (rest.len() - 1) / 2 {
        w = modp_powmod(&w, BigInt::from(p), &rest, p);
        let wx = modp_sub(&w, &x, p);
        let g = modp_gcd(&wx, &rest, p);
        if g.len() > 1 {
            // g = product of irreducible factors of degree d
            equal_degree_split(&g, d, p, &mut out);
            rest = modp_divmod(&rest, &g, p).0;
            w = modp_divmod(&w, &rest, p).1;
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out.sort();
    out
}

struct XorShift(u64);
impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

fn equal_degree_split(f: &[u64], d: usize, p: u64, out: &mut Vec<Vec<u64>>) {
    let k = (f.len() - 1) / d;
    if k == 1 {
        out.push(f.to_vec());
        return;
    }
    let mut rng = XorShift(0x9e3779b97f4a7c15 ^ (f.len() as u64) << 8 ^ p);
    let exp: BigInt = (BigInt::from(p).pow(d as u32) - 1) / 2;
    loop {
        // random polynomial of degree < deg f
        let mut r: Vec<u64> = (0..f.len() - 1).map(|_| rng.next() % p).collect();
        r = modp_trim(r);
        if r.len() <= 1 {
            continue;
        }
        let pw = modp_powmod(&r, exp.clone(), f, p);
        let pw1 = modp_sub(&pw, &[1u64], p);
        let g = modp_gcd(&pw1, f, p);
        if g.len() > 1 && g.len() < f.len() {
            equal_degree_split(&g, d, p, out);
            let (q, _) = modp_divmod(f, &g, p);
            equal_degree_split(&q, d, p, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat_fr, rat_i};

    #[test]
    fn difference_of_squares() {
        let p = UniPoly::from_i64(&[-1, 0, 1]);
        let (unit, fs) = factor_uni(&p).unwrap();
        assert_eq!(unit, rat_i(1));
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_i64(&[-1, 1]), 1),
                (UniPoly::from_i64(&[1, 1]), 1)
            ]
        );
    }

    #[test]
    fn irreducible_quadratic() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        let (_, fs) = factor_uni(&p).unwrap();
        assert_eq!(fs, vec![(UniPoly::from_i64(&[-2, 0, 1]), 1)]);
    }

    #[test]
    fn rational_root_factors() {
        // 6x^2 - 5x + 1 = 6 (x - 1/2)(x - 1/3)
        let p = UniPoly::from_i64(&[1, -5, 6]);
        let (unit, fs) = factor_uni(&p).unwrap();
        assert_eq!(unit, rat_i(6));
        let expected: Vec<(UniPoly, usize)> = vec![
            (UniPoly::new(vec![-rat_fr(1, 2), rat_i(1)]), 1),
            (UniPoly::new(vec![-rat_fr(1, 3), rat_i(1)]), 1),
        ];
        let mut sorted = expected;
        sorted.sort_by(|a, b| a.0.cmp_canonical(&b.0));
        assert_eq!(fs, sorted);
    }

    #[test]
    fn multiplicities() {
        // (x-1)^2 (x+2)^3
        let p = UniPoly::from_i64(&[-1, 1]).pow(2).mul(&UniPoly::from_i64(&[2, 1]).pow(3));
        let (_, fs) = factor_uni(&p).unwrap();
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_i64(&[-1, 1]), 2),
                (UniPoly::from_i64(&[2, 1]), 3)
            ]
        );
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(factor_uni(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn cyclotomic_like() {
        // x^4 + x^3 + x^2 + x + 1 is irreducible
        let p = UniPoly::from_i64(&[1, 1, 1, 1, 1]);
        assert!(is_irreducible(&p).unwrap());
        // x^4 - 1 = (x-1)(x+1)(x^2+1)
        let q = UniPoly::from_i64(&[-1, 0, 0, 0, 1]);
        let (_, fs) = factor_uni(&q).unwrap();
        assert_eq!(fs.len(), 3);
    }
}
