//! Bivariate factorization over the rationals: factor at a specialization of
//! the first variable, Hensel-lift in the adic topology of the specialized
//! point, and recombine.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bipoly::BiPoly;
use super::factor::{factor_uni, yun_squarefree};
use super::rat::Rat;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Factors a nonzero bivariate polynomial into irreducible factors over the
/// rationals with multiplicities and a rational unit. Factors are normalized
/// to primitive integer coefficients with positive top coefficient, sorted
/// canonically.
pub fn factor_bi(f: &BiPoly) -> Result<(Rat, Vec<(BiPoly, usize)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = f.vars();
    let vars = (vars.0.to_string(), vars.1.to_string());
    let vars = (vars.0.as_str(), vars.1.as_str());
    let mut factors: Vec<(BiPoly, usize)> = Vec::new();

    if f.deg_y() == 0 {
        // univariate in the first variable
        let p = UniPoly::new(f.x_coeffs().iter().map(|c| c.coeff(0)).collect());
        let (_, fs) = factor_uni(&p)?;
        for (g, m) in fs {
            factors.push((BiPoly::from_x(&g, vars), m));
        }
        return finish(f, factors);
    }

    // Split off the content in the first variable.
    let content = f.content_y();
    if !content.is_constant() {
        let (_, fs) = factor_uni(&content)?;
        for (g, m) in fs {
            factors.push((BiPoly::from_x(&g, vars), m));
        }
    }
    let prim = f.primitive_part_y();

    // Squarefree decomposition with respect to the second variable.
    for (sqf, mult) in yun_squarefree_y(&prim) {
        for g in factor_squarefree_bi(&sqf)? {
            factors.push((g, mult));
        }
    }
    finish(f, factors)
}

/// True when the polynomial is irreducible over the rationals (as a
/// bivariate polynomial; constants are not irreducible).
pub fn is_irreducible_bi(f: &BiPoly) -> Result<bool> {
    if f.is_zero() || f.is_constant() {
        return Ok(false);
    }
    let (_, fs) = factor_bi(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

fn finish(f: &BiPoly, mut factors: Vec<(BiPoly, usize)>) -> Result<(Rat, Vec<(BiPoly, usize)>)> {
    for (g, _) in &mut factors {
        let (_, canon) = g.canonical_integer();
        *g = canon;
    }
    factors.sort();
    // merge duplicates
    let mut merged: Vec<(BiPoly, usize)> = Vec::new();
    for (g, m) in factors {
        if let Some(last) = merged.last_mut() {
            if last.0 == g {
                last.1 += m;
                continue;
            }
        }
        merged.push((g, m));
    }
    let mut prod = BiPoly::constant(Rat::one(), f.vars());
    for (g, m) in &merged {
        for _ in 0..*m {
            prod = prod.mul(g);
        }
    }
    // unit = ratio at the top monomial of the product
    let ti = prod.deg_x();
    let tj = prod
        .x_coeffs()
        .last()
        .map(|c| c.degree())
        .unwrap_or(0);
    let denom = prod.coeff(ti, tj);
    if denom.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.coeff(ti, tj) / denom;
    debug_assert_eq!(prod.scale(&unit), *f, "factorization must reproduce the input");
    Ok((unit, merged))
}

/// Yun squarefree decomposition with respect to the second variable, over
/// `Q(x)` with primitive representatives.
pub fn yun_squarefree_y(f: &BiPoly) -> Vec<(BiPoly, usize)> {
    if f.is_zero() || f.deg_y() == 0 {
        return vec![];
    }
    let fp = f.derivative_y();
    let g = f.gcd_y(&fp);
    if g.deg_y() == 0 {
        return vec![(f.primitive_part_y(), 1)];
    }
    let mut out = Vec::new();
    let mut b = f.div_exact_frac(&g);
    let mut c = fp.div_exact_frac(&g);
    let mut d = c.sub(&b.derivative_y());
    let mut i = 1;
    while b.deg_y() > 0 {
        let a = b.gcd_y(&d);
        b = b.div_exact_frac(&a);
        c = d.div_exact_frac(&a);
        d = c.sub(&b.derivative_y());
        if a.deg_y() > 0 {
            out.push((a.primitive_part_y(), i));
        }
        i += 1;
    }
    out
}

impl BiPoly {
    /// Division that is exact over `Q(x)[y]`: clears the divisor content and
    /// scales so the division goes through over `Q[x][y]`.
    fn div_exact_frac(&self, d: &Self) -> Self {
        if let Some(q) = self.div_exact_y(d) {
            return q;
        }
        // Multiply by the divisor's leading coefficient enough times.
        let dl = d.leading_y();
        let mut scaled = self.clone();
        for _ in 0..=self.deg_y() {
            scaled = scaled.mul(&BiPoly::from_x(&dl, self.vars()));
            if let Some(q) = scaled.div_exact_y(d) {
                return q.primitive_part_y();
            }
        }
        panic!("division expected to be exact over Q(x)[y]");
    }
}

/// Factors a primitive squarefree (in the second variable) polynomial with
/// `deg_y >= 1` into irreducible factors.
fn factor_squarefree_bi(g: &BiPoly) -> Result<Vec<BiPoly>> {
    let vars = g.vars();
    let vars = (vars.0.to_string(), vars.1.to_string());
    let vars = (vars.0.as_str(), vars.1.as_str());
    let n = g.deg_y();
    if n == 1 {
        return Ok(vec![g.clone()]);
    }
    if g.deg_x() == 0 {
        // univariate in y
        let p = UniPoly::new(g.y_coeffs().iter().map(|c| c.coeff(0)).collect());
        let (_, fs) = factor_uni(&p)?;
        return Ok(fs.into_iter().map(|(h, _)| BiPoly::from_y(&h, vars)).collect());
    }

    // Monicize in y: G*(x, y) = lc(x)^(n-1) * g(x, y / lc(x)).
    let lc = g.leading_y();
    let gstar = monicize_y(g);

    // Find a specialization point: full y-degree and squarefree.
    let mut tried = 0;
    let mut k: i64 = 0;
    while tried < 5 {
        let a = Rat::from_integer(BigInt::from(k));
        k = if k > 0 { -k } else { -k + 1 };
        if k.abs() > 200 {
            break;
        }
        let u = gstar.eval_x(&a);
        if u.degree() != gstar.deg_y() || !u.is_squarefree() {
            continue;
        }
        tried += 1;
        let (_, ufs) = factor_uni(&u)?;
        if ufs.len() == 1 {
            return Ok(vec![g.clone()]);
        }
        if let Some(fs) = lift_and_recombine(&gstar, &a, &ufs) {
            // Map factors of G* back to factors of g: y -> y * lc(x).
            let out = fs
                .into_iter()
                .map(|h| substitute_y_scale(&h, &lc).primitive_part_y())
                .map(|h| h.canonical_integer().1)
                .collect();
            return Ok(out);
        }
    }
    Err(Error::UnsupportedCurve(format!(
        "bivariate factorization failed on {}",
        g.display()
    )))
}

/// `lc(x)^(n-1) * g(x, y / lc(x))` — monic in y.
fn monicize_y(g: &BiPoly) -> BiPoly {
    let n = g.deg_y();
    let lc = g.leading_y();
    let cs = g.y_coeffs();
    let mut out: Vec<UniPoly> = Vec::with_capacity(n + 1);
    for (j, c) in cs.iter().enumerate() {
        // coefficient of y^j: c_j * lc^(n-1-j); leading becomes 1
        if j == n {
            out.push(UniPoly::one());
        } else {
            out.push(c.mul(&lc.pow((n - 1 - j) as u32)));
        }
    }
    BiPoly::from_y_coeffs(&out, g.vars())
}

/// `h(x, y * s(x))` without clearing content.
fn substitute_y_scale(h: &BiPoly, s: &UniPoly) -> BiPoly {
    let cs = h.y_coeffs();
    let mut out = Vec::with_capacity(cs.len());
    let mut p = UniPoly::one();
    for c in cs {
        out.push(c.mul(&p));
        p = p.mul(s);
    }
    BiPoly::from_y_coeffs(&out, h.vars())
}

/// Hensel-lifts the specialized factorization of a monic (in y) polynomial in
/// the `(x - a)`-adic topology and recombines subsets into true factors.
/// Returns `None` when recombination fails (caller retries elsewhere).
fn lift_and_recombine(
    gstar: &BiPoly,
    a: &Rat,
    ufs: &[(UniPoly, usize)],
) -> Option<Vec<BiPoly>> {
    let vars = gstar.vars();
    let vars = (vars.0.to_string(), vars.1.to_string());
    let vars = (vars.0.as_str(), vars.1.as_str());
    // Shift so the specialization is at x = 0.
    let shifted = gstar.shift_x(a);
    let prec = gstar.deg_y() * shifted.deg_x() + 1;
    let base: Vec<UniPoly> = ufs.iter().map(|(f, _)| f.clone()).collect();
    let lifted = hensel_lift_series(&shifted, &base, prec);

    let mut remaining = lifted;
    let mut current = shifted;
    let mut out: Vec<BiPoly> = Vec::new();
    let mut size = 1usize;
    'outer: while !remaining.is_empty() {
        if size > remaining.len() / 2 {
            out.push(current.clone());
            current = BiPoly::constant(Rat::one(), vars);
            remaining.clear();
            break;
        }
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in super::factor::combinations(&idxs, size) {
            let mut cand: Vec<UniPoly> = vec![UniPoly::one()];
            for &i in &combo {
                cand = series_poly_mul(&cand, &remaining[i], prec);
            }
            let cand_poly = BiPoly::from_y_coeffs(&cand, vars);
            if let Some(q) = current.div_exact_y(&cand_poly) {
                out.push(cand_poly);
                current = q;
                remaining = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                if current.deg_y() == 0 {
                    remaining.clear();
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.deg_y() > 0 {
        out.push(current);
    }
    // Shift back.
    let back = -a.clone();
    Some(out.into_iter().map(|h| h.shift_x(&back)).collect())
}

// --- truncated power-series polynomials: Vec<UniPoly> = y-coefficients,
// each truncated to x-degree < prec ---

fn truncate_series(p: &UniPoly, prec: usize) -> UniPoly {
    UniPoly::new(p.coeffs().iter().take(prec).cloned().collect())
}

fn series_poly_trim(v: &mut Vec<UniPoly>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn series_poly_mul(a: &[UniPoly], b: &[UniPoly], prec: usize) -> Vec<UniPoly> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![UniPoly::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&truncate_series(&ai.mul(bj), prec));
        }
    }
    series_poly_trim(&mut out);
    out
}

fn series_poly_add(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(UniPoly::zero);
        let y = b.get(i).cloned().unwrap_or_else(UniPoly::zero);
        out.push(x.add(&y));
    }
    series_poly_trim(&mut out);
    out
}

fn series_poly_sub(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(UniPoly::zero);
        let y = b.get(i).cloned().unwrap_or_else(UniPoly::zero);
        out.push(x.sub(&y));
    }
    series_poly_trim(&mut out);
    out
}

/// Division with remainder by a y-monic series polynomial.
fn series_poly_divmod(
    a: &[UniPoly],
    d: &[UniPoly],
    prec: usize,
) -> (Vec<UniPoly>, Vec<UniPoly>) {
    assert!(d.last().map_or(false, |c| c.is_one()), "divisor must be y-monic");
    let dd = d.len() - 1;
    let mut r: Vec<UniPoly> = a.to_vec();
    series_poly_trim(&mut r);
    if r.len() <= dd {
        return (vec![], r);
    }
    let mut q = vec![UniPoly::zero(); r.len() - dd];
    while r.len() > dd {
        let c = truncate_series(r.last().unwrap(), prec);
        let k = r.len() - 1 - dd;
        if !c.is_zero() {
            q[k] = c.clone();
            for (i, di) in d.iter().enumerate() {
                r[k + i] = r[k + i].sub(&truncate_series(&c.mul(di), prec));
            }
        }
        r.pop();
        series_poly_trim(&mut r);
    }
    series_poly_trim(&mut q);
    (q, r)
}

fn series_poly_truncate(a: &[UniPoly], prec: usize) -> Vec<UniPoly> {
    let mut v: Vec<UniPoly> = a.iter().map(|c| truncate_series(c, prec)).collect();
    series_poly_trim(&mut v);
    v
}

/// Multifactor Hensel lifting in the x-adic topology for a y-monic
/// polynomial: from `f(0,y) = prod u_i` to `f = prod h_i (mod x^prec)` with
/// `h_i` y-monic and `h_i(0,y) = u_i`.
fn hensel_lift_series(f: &BiPoly, base: &[UniPoly], prec: usize) -> Vec<Vec<UniPoly>> {
    let fy: Vec<UniPoly> = f.y_coeffs();
    lift_tree(&fy, base, prec)
}

fn lift_tree(f: &[UniPoly], base: &[UniPoly], prec: usize) -> Vec<Vec<UniPoly>> {
    if base.len() == 1 {
        return vec![series_poly_truncate(f, prec)];
    }
    let mid = base.len() / 2;
    let (lb, rb) = base.split_at(mid);
    let g0: UniPoly = lb.iter().fold(UniPoly::one(), |acc, u| acc.mul(u));
    let h0: UniPoly = rb.iter().fold(UniPoly::one(), |acc, u| acc.mul(u));
    let (gg, s0, t0) = g0.xgcd(&h0);
    assert!(gg.is_one(), "specialized factors must be coprime");

    // linear-in-precision lift, doubling each step
    let mut g: Vec<UniPoly> = g0.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let mut h: Vec<UniPoly> = h0.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let mut s: Vec<UniPoly> = s0.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let mut t: Vec<UniPoly> = t0.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let mut m = 1usize;
    while m < prec {
        let m2 = (m * 2).min(prec.next_power_of_two());
        // e = f - g*h mod x^m2
        let e = series_poly_sub(&series_poly_truncate(f, m2), &series_poly_mul(&g, &h, m2));
        let se = series_poly_mul(&s, &e, m2);
        let (q, r) = series_poly_divmod(&se, &h, m2);
        let g1 = series_poly_add(
            &series_poly_add(&g, &series_poly_mul(&t, &e, m2)),
            &series_poly_mul(&q, &g, m2),
        );
        let h1 = series_poly_add(&h, &r);
        let one = vec![UniPoly::one()];
        let b = series_poly_sub(
            &series_poly_add(&series_poly_mul(&s, &g1, m2), &series_poly_mul(&t, &h1, m2)),
            &one,
        );
        let sb = series_poly_mul(&s, &b, m2);
        let (c, d) = series_poly_divmod(&sb, &h1, m2);
        s = series_poly_sub(&s, &d);
        t = series_poly_sub(
            &series_poly_sub(&t, &series_poly_mul(&t, &b, m2)),
            &series_poly_mul(&c, &g1, m2),
        );
        g = series_poly_truncate(&g1, m2);
        h = series_poly_truncate(&h1, m2);
        m = m2;
        if m >= prec {
            break;
        }
    }
    let g = series_poly_truncate(&g, prec);
    let h = series_poly_truncate(&h, prec);
    let mut out = lift_tree(&g, lb, prec);
    out.extend(lift_tree(&h, rb, prec));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat_i;

    fn xy() -> (&'static str, &'static str) {
        ("x", "y")
    }

    fn p(rows: Vec<Vec<i64>>) -> BiPoly {
        BiPoly::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_i).collect())
                .collect(),
            xy(),
        )
    }

    #[test]
    fn difference_of_squares() {
        // x^2 - y^2 = (x - y)(x + y)
        let f = p(vec![vec![0, 0, -1], vec![0, 0, 0], vec![1, 0, 0]]);
        let (unit, fs) = factor_bi(&f).unwrap();
        assert_eq!(unit, rat_i(1));
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn sum_of_squares_irreducible() {
        let f = p(vec![vec![0, 0, 1], vec![0, 0, 0], vec![1, 0, 0]]);
        assert!(is_irreducible_bi(&f).unwrap());
    }

    #[test]
    fn cubic_difference() {
        // x^3 - y^3 = (x - y)(x^2 + xy + y^2)
        let f = p(vec![
            vec![0, 0, 0, -1],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![1, 0, 0, 0],
        ]);
        let (_, fs) = factor_bi(&f).unwrap();
        assert_eq!(fs.len(), 2);
        let degs: Vec<usize> = fs.iter().map(|(g, _)| g.deg_x() + g.deg_y()).collect();
        assert!(degs.contains(&2) && degs.contains(&4) || degs == vec![2, 2]);
        // the total degree must add up: 1+1 and 1+... check via product degree
        let mut prod = BiPoly::constant(rat_i(1), xy());
        for (g, m) in &fs {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod.deg_x(), 3);
    }

    #[test]
    fn with_multiplicity_and_content() {
        // x * (x - y)^2
        let xminusy = p(vec![vec![0, -1], vec![1, 0]]);
        let f = xminusy.mul(&xminusy).mul(&p(vec![vec![0], vec![1]]));
        let (_, fs) = factor_bi(&f).unwrap();
        assert_eq!(fs.len(), 2);
        let mults: Vec<usize> = fs.iter().map(|(_, m)| *m).collect();
        assert!(mults.contains(&2) && mults.contains(&1));
    }

    #[test]
    fn kummer_fiber() {
        // x - y^2 is irreducible
        let f = p(vec![vec![0, 0, -1], vec![1, 0, 0]]);
        assert!(is_irreducible_bi(&f).unwrap());
    }

    #[test]
    fn joukowski_numerator() {
        // numerator of (x + 1/x) - (y + 1/y): x^2 y + y - x y^2 - x
        // = (x - y)(x y - 1)
        let f = p(vec![
            vec![0, 0, 0],
            vec![-1, 0, -1],
            vec![0, 1, 0],
        ])
        .add(&p(vec![vec![0, 1], vec![0, 0]]));
        // grid check: x^2*y has coeff at (2,1); y at (0,1); -x*y^2 at (1,2); -x at (1,0)
        let f = p(vec![
            vec![0, 1, 0],   // 1*y
            vec![-1, 0, -1], // -x - x*y^2
            vec![0, 1, 0],   // x^2*y
        ]);
        let (_, fs) = factor_bi(&f).unwrap();
        assert_eq!(fs.len(), 2);
        for (g, m) in &fs {
            assert_eq!(*m, 1);
            assert_eq!(g.deg_x() + g.deg_y(), 2);
        }
    }
}
