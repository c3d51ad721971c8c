//! Multivariate gcd by primitive pseudo-remainder sequences, plus content
//! splitting and denominator lcms.

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::ratfunc::RatFunc;
use crate::registry::same_registry;

/// A greatest common divisor, primitive with positive leading coefficient.
/// `gcd(0, 0) = 0`; a gcd with a nonzero constant is `1`.
pub fn gcd_multivar(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert!(
        same_registry(a.registry(), b.registry()),
        "registry mismatch in gcd"
    );
    gcd_inner(a, b)
}

fn gcd_inner(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.registry());
    }
    // main variable: lowest degree shared variable keeps the PRS short
    let used_a = a.used_vars();
    let used_b = b.used_vars();
    let common: Vec<usize> = used_a
        .iter()
        .copied()
        .filter(|v| used_b.contains(v))
        .collect();
    if common.is_empty() {
        return MultiPoly::one(a.registry());
    }
    let var = *common
        .iter()
        .min_by_key(|&&v| a.degree_in(v).min(b.degree_in(v)))
        .unwrap();

    let (cont_a, pp_a) = split_wrt_var(a, var);
    let (cont_b, pp_b) = split_wrt_var(b, var);
    let cont_gcd = gcd_inner(&cont_a, &cont_b);

    // primitive PRS in `var`
    let (mut f, mut g) = if pp_a.degree_in(var) >= pp_b.degree_in(var) {
        (pp_a, pp_b)
    } else {
        (pp_b, pp_a)
    };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, var);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            split_wrt_var(&r, var).1
        };
    }
    let g_main = split_wrt_var(&f, var).1.primitive_part();
    (&cont_gcd * &g_main).primitive_part()
}

/// Pseudo-remainder of `a` by `b` in `var`: the remainder of
/// `lc(b)^(da-db+1) * a` under division by `b`, both viewed as univariate in
/// `var` with polynomial coefficients.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let db = b.degree_in(var);
    let lc_b = coeff_wrt_var(b, var, db);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var);
        if dr < db {
            break;
        }
        let lc_r = coeff_wrt_var(&r, var, dr);
        // r <- lc_b * r - lc_r * var^(dr-db) * b
        let mut shift = vec![0u32; r.registry().len()];
        shift[var] = dr - db;
        let lead = &lc_r * &b.mul_term(&shift, &num_traits::One::one());
        r = &(&r * &lc_b) - &lead;
    }
    r
}

/// Coefficient of `var^k` in `p` (a polynomial free of `var`... in the
/// remaining variables).
fn coeff_wrt_var(p: &MultiPoly, var: usize, k: u32) -> MultiPoly {
    let terms = p
        .terms()
        .filter(|(e, _)| e[var] == k)
        .map(|(e, c)| {
            let mut ne = e.clone();
            ne[var] = 0;
            (ne, c.clone())
        })
        .collect();
    MultiPoly::from_terms(p.registry(), terms)
}

/// Content/primitive split of `p` with respect to a single variable: the
/// content is a gcd of the `var`-coefficients.
fn split_wrt_var(p: &MultiPoly, var: usize) -> (MultiPoly, MultiPoly) {
    let mut content = MultiPoly::zero(p.registry());
    for k in 0..=p.degree_in(var) {
        let c = coeff_wrt_var(p, var, k);
        if !c.is_zero() {
            content = gcd_inner(&content, &c);
            if content.is_constant() {
                break;
            }
        }
    }
    if content.is_zero() {
        return (MultiPoly::zero(p.registry()), MultiPoly::one(p.registry()));
    }
    let pp = p.exact_div(&content).expect("content divides");
    (content, pp)
}

/// Splits `p` into `(content, primitive)` where the content involves no
/// variable of `block` and `p = content * primitive`. The primitive part has
/// trivial content as a polynomial in the block variables. The zero
/// polynomial returns `(0, 1)`.
pub fn split_content(p: &MultiPoly, block: &[usize]) -> (MultiPoly, MultiPoly) {
    if p.is_zero() {
        return (MultiPoly::zero(p.registry()), MultiPoly::one(p.registry()));
    }
    // collect coefficients of the block monomials
    let mut content = MultiPoly::zero(p.registry());
    let mut groups: std::collections::BTreeMap<Vec<u32>, Vec<(Vec<u32>, crate::rational::Rational)>> =
        std::collections::BTreeMap::new();
    for (e, c) in p.terms() {
        let mut key = vec![0u32; e.len()];
        let mut rest = e.clone();
        for &v in block {
            key[v] = e[v];
            rest[v] = 0;
        }
        groups.entry(key).or_default().push((rest, c.clone()));
    }
    for coeffs in groups.values() {
        let cp = MultiPoly::from_terms(p.registry(), coeffs.clone());
        content = gcd_inner(&content, &cp);
        if content.is_constant() {
            break;
        }
    }
    if content.is_zero() {
        // p itself was zero, handled above
        unreachable!("nonzero polynomial has nonzero content");
    }
    let prim = p.exact_div(&content).expect("content divides");
    (content, prim)
}

/// Least common multiple, primitive with positive leading coefficient.
pub fn lcm_multivar(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero(a.registry());
    }
    let g = gcd_multivar(a, b);
    let q = a.exact_div(&g).expect("gcd divides");
    (&q * b).primitive_part()
}

/// Lcm of the canonical denominators of a nonempty list of rational
/// functions.
pub fn lcm_denominators(fs: &[RatFunc]) -> Result<MultiPoly> {
    let first = fs
        .first()
        .ok_or_else(|| Error::InvalidInput("lcm_denominators of empty list".into()))?;
    let mut acc = first.den().clone();
    for f in &fs[1..] {
        if !same_registry(f.den().registry(), acc.registry()) {
            return Err(Error::RegistryMismatch {
                context: "lcm_denominators".into(),
            });
        }
        acc = lcm_multivar(&acc, f.den());
    }
    Ok(acc.primitive_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::registry::{Registry, VarRegistry};

    fn xy() -> Registry {
        VarRegistry::from_names(&["x", "y"]).unwrap()
    }

    #[test]
    fn shared_linear_factor() {
        // gcd(x^2-1, x^2+2x+1) = x+1
        let reg = xy();
        let x = MultiPoly::var(&reg, 0);
        let one = MultiPoly::one(&reg);
        let a = &x.pow(2) - &one;
        let b = &(&x.pow(2) + &x.scale(&rat_int(2))) + &one;
        assert_eq!(gcd_multivar(&a, &b).to_string(), "x+1");
    }

    #[test]
    fn gcd_with_zero_is_primitive_part() {
        let reg = xy();
        let x = MultiPoly::var(&reg, 0);
        let p = x.scale(&rat_int(-4));
        let z = MultiPoly::zero(&reg);
        assert_eq!(gcd_multivar(&p, &z).to_string(), "x");
        assert!(gcd_multivar(&z, &z).is_zero());
    }

    #[test]
    fn monomial_gcd() {
        let reg = xy();
        let x = MultiPoly::var(&reg, 0);
        let y = MultiPoly::var(&reg, 1);
        assert_eq!(gcd_multivar(&(&x * &y), &x.pow(2)).to_string(), "x");
    }

    #[test]
    fn split_content_recovers_factors() {
        // p = (y^2+1) * (x^3 - 2x), block {x}
        let reg = xy();
        let x = MultiPoly::var(&reg, 0);
        let y = MultiPoly::var(&reg, 1);
        let u = &x.pow(3) - &x.scale(&rat_int(2));
        let c = &y.pow(2) + &MultiPoly::one(&reg);
        let p = &c * &u;
        let (content, prim) = split_content(&p, &[0]);
        assert_eq!(content, c);
        assert_eq!(prim, u);

        let (c0, p0) = split_content(&MultiPoly::zero(&reg), &[0]);
        assert!(c0.is_zero());
        assert_eq!(p0, MultiPoly::one(&reg));
    }

    #[test]
    fn lcm_divisibility() {
        // lcm(x^2-1, x-1) = x^2-1
        let reg = xy();
        let x = MultiPoly::var(&reg, 0);
        let one = MultiPoly::one(&reg);
        let a = &x.pow(2) - &one;
        let b = &x - &one;
        assert_eq!(lcm_multivar(&a, &b), a);
        // coprime: lcm(x, y) = x*y
        let y = MultiPoly::var(&reg, 1);
        assert_eq!(lcm_multivar(&x, &y), &x * &y);
    }
}
