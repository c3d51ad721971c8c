//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are a map from exponent vector to nonzero coefficient; the zero
//! polynomial is the empty map. Exponent vectors always have registry length.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::rational::{format_rational, rat_to_f64, Rational};
use crate::registry::{same_registry, Registry};

pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    reg: Registry,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(reg: &Registry) -> MultiPoly {
        MultiPoly {
            reg: reg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(reg: &Registry) -> MultiPoly {
        MultiPoly::constant(reg, Rational::one())
    }

    pub fn constant(reg: &Registry, c: Rational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; reg.len()], c);
        }
        MultiPoly {
            reg: reg.clone(),
            terms,
        }
    }

    /// The monomial `var^1`.
    pub fn var(reg: &Registry, index: usize) -> MultiPoly {
        assert!(index < reg.len(), "variable index out of range");
        let mut exps = vec![0; reg.len()];
        exps[index] = 1;
        MultiPoly::from_terms(reg, vec![(exps, Rational::one())])
    }

    pub fn from_terms(reg: &Registry, terms: Vec<(Exponents, Rational)>) -> MultiPoly {
        let mut map: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), reg.len(), "exponent vector length mismatch");
            if c.is_zero() {
                continue;
            }
            match map.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get() + &c;
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
        MultiPoly { reg: reg.clone(), terms: map }
    }

    pub fn registry(&self) -> &Registry {
        &self.reg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant test; the unit criterion for ideals over a field.
    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1
            && self
                .terms
                .keys()
                .all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_coefficient(&self) -> Rational {
        self.coefficient(&vec![0; self.reg.len()])
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn used_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.reg.len()];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    used[i] = true;
                }
            }
        }
        (0..self.reg.len()).filter(|&i| used[i]).collect()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    fn check_registry(&self, other: &MultiPoly) {
        assert!(
            same_registry(&self.reg, &other.reg),
            "registry mismatch: {} vs {}",
            self.reg,
            other.reg
        );
    }

    /// Checked arithmetic entry point for untrusted operand pairs.
    pub fn checked_binop(
        &self,
        other: &MultiPoly,
        op: fn(&MultiPoly, &MultiPoly) -> MultiPoly,
    ) -> Result<MultiPoly> {
        if !same_registry(&self.reg, &other.reg) {
            return Err(Error::RegistryMismatch {
                context: format!("{} vs {}", self.reg, other.reg),
            });
        }
        Ok(op(self, other))
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.reg);
        }
        MultiPoly {
            reg: self.reg.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.reg);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by the monomial `exps` with coefficient `c`.
    pub fn mul_term(&self, exps: &[u32], c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.reg);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| {
                let mut ne = e.clone();
                for (a, b) in ne.iter_mut().zip(exps) {
                    *a += b;
                }
                (ne, k * c)
            })
            .collect();
        MultiPoly { reg: self.reg.clone(), terms }
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[var] -= 1;
            terms.push((ne, c * Rational::from_integer(BigInt::from(e[var]))));
        }
        MultiPoly::from_terms(&self.reg, terms)
    }

    /// Leading term under the given order, or `None` for the zero polynomial.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Exponents, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_exps(a, b))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| order.cmp_exps(b, a));
        v
    }

    /// Splits off the rational content so the remaining polynomial has
    /// coprime integer coefficients and positive leading coefficient under
    /// grevlex. Returns `(scale, primitive)` with `self = scale * primitive`;
    /// the zero polynomial yields `(1, 0)`.
    pub fn integer_normalize(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut scale = Rational::new(num_gcd, den_lcm);
        let lead = self
            .leading_term(&MonomialOrder::Grevlex)
            .expect("nonzero")
            .1;
        if lead.is_negative() {
            scale = -scale;
        }
        let inv = scale.recip();
        (scale, self.scale(&inv))
    }

    /// The primitive positive-leading-coefficient representative.
    pub fn primitive_part(&self) -> MultiPoly {
        self.integer_normalize().1
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None`.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.check_registry(d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let order = MonomialOrder::Grevlex;
        let (d_lead_e, d_lead_c) = d.leading_term(&order).unwrap();
        let d_lead_e = d_lead_e.clone();
        let d_lead_c = d_lead_c.clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Exponents, Rational)> = Vec::new();
        while !rem.is_zero() {
            let (r_e, r_c) = rem.leading_term(&order).unwrap();
            let mut q_e = r_e.clone();
            for (a, b) in q_e.iter_mut().zip(&d_lead_e) {
                if *a < *b {
                    return None;
                }
                *a -= b;
            }
            let q_c = r_c / &d_lead_c;
            rem = &rem - &d.mul_term(&q_e, &q_c);
            quot.push((q_e, q_c));
        }
        Some(MultiPoly::from_terms(&self.reg, quot))
    }

    /// Substitutes polynomials for variables; entries missing from `bindings`
    /// keep their variable (registry of the bound values must contain it).
    pub fn substitute_polys(
        &self,
        target: &Registry,
        bindings: &BTreeMap<usize, MultiPoly>,
    ) -> Result<MultiPoly> {
        let mut images: Vec<MultiPoly> = Vec::with_capacity(self.reg.len());
        for i in 0..self.reg.len() {
            match bindings.get(&i) {
                Some(p) => {
                    if !same_registry(p.registry(), target) {
                        return Err(Error::RegistryMismatch {
                            context: "substitution binding registry".into(),
                        });
                    }
                    images.push(p.clone());
                }
                None => {
                    let j = target.index_of(self.reg.name(i)).ok_or_else(|| {
                        Error::RegistryMismatch {
                            context: format!(
                                "variable {} absent from target registry",
                                self.reg.name(i)
                            ),
                        }
                    })?;
                    images.push(MultiPoly::var(target, j));
                }
            }
        }
        // power cache per variable
        let mut caches: Vec<Vec<MultiPoly>> =
            images.iter().map(|p| vec![MultiPoly::one(target), p.clone()]).collect();
        let mut power = |caches: &mut Vec<Vec<MultiPoly>>, var: usize, k: u32| -> MultiPoly {
            let cache = &mut caches[var];
            while (cache.len() as u32) <= k {
                let next = cache.last().unwrap() * &cache[1];
                cache.push(next);
            }
            cache[k as usize].clone()
        };
        let mut acc = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (var, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &power(&mut caches, var, k);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Renames this polynomial into `target` by mapping variable `i` to the
    /// variable at `var_map[i]`.
    pub fn map_registry(&self, target: &Registry, var_map: &[usize]) -> MultiPoly {
        assert_eq!(var_map.len(), self.reg.len());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0u32; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    assert!(
                        x == 0 || var_map[i] != usize::MAX,
                        "variable {} used but unmapped",
                        self.reg.name(i)
                    );
                    if x > 0 {
                        ne[var_map[i]] += x;
                    }
                }
                (ne, c.clone())
            })
            .collect();
        MultiPoly::from_terms(target, terms)
    }

    /// Renames by matching variable names, requiring every used variable to
    /// exist in `target`.
    pub fn map_registry_by_name(&self, target: &Registry) -> Result<MultiPoly> {
        let mut var_map = vec![usize::MAX; self.reg.len()];
        for i in 0..self.reg.len() {
            match target.index_of(self.reg.name(i)) {
                Some(j) => var_map[i] = j,
                None => {
                    if self.uses_var(i) {
                        return Err(Error::RegistryMismatch {
                            context: format!("variable {} absent from target", self.reg.name(i)),
                        });
                    }
                }
            }
        }
        Ok(self.map_registry(target, &var_map))
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.reg.len());
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut m = rat_to_f64(c);
            for (i, &k) in e.iter().enumerate() {
                m *= point[i].powi(k as i32);
            }
            acc += m;
        }
        acc
    }

    /// Sum of absolute term magnitudes at a point, the scale used for
    /// relative residuals.
    pub fn eval_f64_magnitude(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut m = rat_to_f64(c).abs();
            for (i, &k) in e.iter().enumerate() {
                m *= point[i].abs().powi(k as i32);
            }
            acc += m;
        }
        acc
    }

    pub fn eval_rational(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.reg.len());
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    m *= &point[i];
                }
            }
            acc += m;
        }
        acc
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_registry(rhs);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            match terms.entry(e.clone()) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get() + c;
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
        MultiPoly { reg: self.reg.clone(), terms }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            reg: self.reg.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_registry(rhs);
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(&self.reg);
        }
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca * cb;
                match terms.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let sum = o.get() + &c;
                        if sum.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = sum;
                        }
                    }
                }
            }
        }
        MultiPoly { reg: self.reg.clone(), terms }
    }
}

impl fmt::Display for MultiPoly {
    /// Terms grevlex-descending, matching the layout used throughout the
    /// paper-style pretty printer: `3*t1^10-6*t1^9+...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms(&MonomialOrder::Grevlex).iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        self.reg.name(v).to_string()
                    } else {
                        format!("{}^{}", self.reg.name(v), k)
                    }
                })
                .collect();
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            if mono.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::registry::VarRegistry;

    fn xy() -> Registry {
        VarRegistry::from_names(&["x", "y"]).unwrap()
    }

    fn x_poly(reg: &Registry) -> MultiPoly {
        MultiPoly::var(reg, 0)
    }

    #[test]
    fn difference_of_squares() {
        let reg = xy();
        let x = x_poly(&reg);
        let one = MultiPoly::one(&reg);
        let lhs = &(&x + &one) * &(&x - &one);
        let expected = &(&x * &x) - &one;
        assert_eq!(lhs, expected);
    }

    #[test]
    fn additive_identity() {
        let reg = xy();
        let p = &x_poly(&reg) + &MultiPoly::constant(&reg, rat(3, 4));
        assert_eq!(&p + &MultiPoly::zero(&reg), p);
    }

    #[test]
    fn pow_and_display() {
        let reg = xy();
        let x = x_poly(&reg);
        let y = MultiPoly::var(&reg, 1);
        let p = &(&x + &y).pow(2) - &(&x * &y).scale(&rat_int(2));
        assert_eq!(p.to_string(), "x^2+y^2");
        assert_eq!((&x - &y).pow(0), MultiPoly::one(&reg));
    }

    #[test]
    fn integer_normalize_sign_and_content() {
        let reg = xy();
        let x = x_poly(&reg);
        let p = &x.scale(&rat(-2, 3)) + &MultiPoly::constant(&reg, rat(4, 3));
        let (scale, prim) = p.integer_normalize();
        assert_eq!(prim.to_string(), "x-2");
        assert_eq!(&prim.scale(&scale), &p);
        let (_, z) = MultiPoly::zero(&reg).integer_normalize();
        assert!(z.is_zero());
    }

    #[test]
    fn exact_division() {
        let reg = xy();
        let x = x_poly(&reg);
        let y = MultiPoly::var(&reg, 1);
        let a = &(&x + &y) * &(&x - &y);
        assert_eq!(a.exact_div(&(&x + &y)).unwrap(), &x - &y);
        assert!(a.exact_div(&(&x + &MultiPoly::one(&reg))).is_none());
    }

    #[test]
    fn derivative_and_eval() {
        let reg = xy();
        let x = x_poly(&reg);
        let p = &x.pow(3) + &x.scale(&rat_int(2));
        assert_eq!(p.derivative(0).to_string(), "3*x^2+2");
        assert_eq!(p.eval_f64(&[2.0, 0.0]), 12.0);
        assert_eq!(
            p.eval_rational(&[rat_int(2), rat_int(0)]),
            rat_int(12)
        );
    }
}
