//! Sparse multivariate polynomials over exact rationals.
//!
//! The ring S = Q[x_0..x_n] is represented term-wise with a fixed graded
//! reverse-lexicographic term order (higher total degree first; ties broken
//! by the smaller exponent on the latest differing variable). The fixed
//! order makes matrix columns, kernels, and printed output reproducible.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{rat, Rational};

/// Exponent vector of a monomial; ordered by grevlex (ascending).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn zeros(nvars: usize) -> Self {
        Exponents(vec![0; nvars])
    }

    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Exponents(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {
                for i in (0..self.0.len()).rev() {
                    match self.0[i].cmp(&other.0[i]) {
                        Ordering::Equal => continue,
                        // larger exponent on a later variable = smaller monomial
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Less => return Ordering::Greater,
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Number of monomials of the given total degree: C(nvars-1+degree, nvars-1).
pub fn dim_graded(nvars: usize, degree: i64) -> usize {
    if degree < 0 || nvars == 0 {
        return 0;
    }
    let n = nvars as u128 - 1;
    let k = degree as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        num *= k + 1 + i;
        den *= i + 1;
    }
    (num / den) as usize
}

/// All exponent vectors of the given total degree, largest monomial first.
pub fn monomial_basis(nvars: usize, degree: u32) -> Vec<Exponents> {
    fn rec(nvars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if nvars == 1 {
            prefix.push(degree);
            out.push(Exponents(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(nvars - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(dim_graded(nvars, degree as i64));
    rec(nvars, degree, &mut Vec::with_capacity(nvars), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Sparse polynomial with no grading constraint (mixed degrees allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePoly {
    num_vars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl AffinePoly {
    pub fn zero(num_vars: usize) -> Self {
        AffinePoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(Exponents::zeros(num_vars), c);
        p
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars);
        let mut p = Self::zero(num_vars);
        p.add_term(Exponents::unit(num_vars, i), Rational::one());
        p
    }

    pub fn monomial(num_vars: usize, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), num_vars);
        let mut p = Self::zero(num_vars);
        p.add_term(exps, c);
        p
    }

    pub fn from_integer_terms(num_vars: usize, terms: &[(i64, &[u32])]) -> Self {
        let mut p = Self::zero(num_vars);
        for (c, e) in terms {
            assert_eq!(e.len(), num_vars);
            p.add_term(Exponents(e.to_vec()), rat(*c));
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Highest total degree among the terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Exponents::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Lowest total degree among the terms (the order of the germ).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Exponents::total_degree).min()
    }

    pub fn coefficient(&self, e: &Exponents) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> AffinePoly {
        if c.is_zero() {
            return AffinePoly::zero(self.num_vars);
        }
        AffinePoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, e: &Exponents, c: &Rational) -> AffinePoly {
        if c.is_zero() {
            return AffinePoly::zero(self.num_vars);
        }
        AffinePoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(t, v)| (t.mul(e), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> AffinePoly {
        let mut acc = AffinePoly::constant(self.num_vars, Rational::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> AffinePoly {
        assert!(i < self.num_vars);
        let mut out = AffinePoly::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e.0[i] > 0 {
                let mut e2 = e.clone();
                e2.0[i] -= 1;
                out.add_term(e2, c * rat(e.0[i] as i64));
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.num_vars, "point length mismatch");
        let mut powers: Vec<Vec<Rational>> = point
            .iter()
            .map(|q| vec![Rational::one(), q.clone()])
            .collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &ei) in e.0.iter().enumerate() {
                let p = &mut powers[i];
                while p.len() <= ei as usize {
                    let next = &p[p.len() - 1] * &point[i];
                    p.push(next);
                }
                if ei > 0 {
                    term *= &p[ei as usize];
                }
            }
            acc += term;
        }
        acc
    }

    /// Drop all terms of total degree >= `k`.
    pub fn truncate_below(&self, k: u32) -> AffinePoly {
        AffinePoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() < k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The sum of terms of exact total degree `k`.
    pub fn part_of_degree(&self, k: u32) -> AffinePoly {
        AffinePoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute variable `i` with `forms[i]` (all in the target ring).
    pub fn substitute(&self, forms: &[AffinePoly]) -> AffinePoly {
        assert_eq!(forms.len(), self.num_vars);
        let out_vars = forms.first().map_or(0, AffinePoly::num_vars);
        assert!(forms.iter().all(|f| f.num_vars() == out_vars));
        // power cache per variable
        let mut cache: Vec<Vec<AffinePoly>> = forms
            .iter()
            .map(|f| vec![AffinePoly::constant(out_vars, Rational::one()), f.clone()])
            .collect();
        let mut out = AffinePoly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = AffinePoly::constant(out_vars, c.clone());
            for (i, &ei) in e.0.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let p = &mut cache[i];
                while p.len() <= ei as usize {
                    let next = &p[p.len() - 1] * &forms[i];
                    p.push(next);
                }
                term = &term * &p[ei as usize];
            }
            out = &out + &term;
        }
        out
    }

    pub fn coeff_vector(
        &self,
        basis_index: &BTreeMap<Exponents, usize>,
        len: usize,
    ) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); len];
        for (e, c) in &self.terms {
            let i = *basis_index.get(e).expect("monomial outside basis");
            v[i] = c.clone();
        }
        v
    }

    pub fn to_expression(&self, names: &[&str]) -> String {
        format_terms(&self.terms, names)
    }
}

impl std::ops::Add for &AffinePoly {
    type Output = AffinePoly;
    fn add(self, rhs: &AffinePoly) -> AffinePoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &AffinePoly {
    type Output = AffinePoly;
    fn sub(self, rhs: &AffinePoly) -> AffinePoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &AffinePoly {
    type Output = AffinePoly;
    fn neg(self) -> AffinePoly {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Mul for &AffinePoly {
    type Output = AffinePoly;
    fn mul(self, rhs: &AffinePoly) -> AffinePoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = AffinePoly::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for AffinePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.num_vars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&format_terms(&self.terms, &refs))
    }
}

/// Homogeneous polynomial of a fixed degree (empty term set allowed, carrying
/// a nominal degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPoly {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Exponents, Rational>,
}

impl HomogeneousPoly {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        HomogeneousPoly {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Validate a mixed-degree polynomial as homogeneous. The zero polynomial
    /// gets nominal degree 0.
    pub fn from_affine(p: &AffinePoly) -> Result<Self> {
        let degree = p.total_degree();
        Self::from_affine_with_degree(p, degree)
    }

    pub fn from_affine_with_degree(p: &AffinePoly, degree: u32) -> Result<Self> {
        let offending: Vec<String> = p
            .terms()
            .filter(|(e, _)| e.total_degree() != degree)
            .map(|(e, c)| {
                let names: Vec<String> = (0..p.num_vars()).map(|i| format!("x{i}")).collect();
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                format_term(c, e, &refs)
            })
            .collect();
        if !offending.is_empty() {
            return Err(Error::NotHomogeneous(offending.join(", ")));
        }
        Ok(HomogeneousPoly {
            num_vars: p.num_vars(),
            degree,
            terms: p.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
        })
    }

    pub fn from_integer_terms(num_vars: usize, terms: &[(i64, &[u32])]) -> Result<Self> {
        Self::from_affine(&AffinePoly::from_integer_terms(num_vars, terms))
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        Self::from_affine(&AffinePoly::var(num_vars, i)).expect("single variable is homogeneous")
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponents) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_affine(&self) -> AffinePoly {
        AffinePoly {
            num_vars: self.num_vars,
            terms: self.terms.clone(),
        }
    }

    pub fn add(&self, rhs: &HomogeneousPoly) -> Result<HomogeneousPoly> {
        if self.num_vars != rhs.num_vars {
            return Err(Error::VariableMismatch {
                expected: self.num_vars,
                got: rhs.num_vars,
            });
        }
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: rhs.degree,
            });
        }
        let sum = &self.as_affine() + &rhs.as_affine();
        Self::from_affine_with_degree(&sum, self.degree)
    }

    pub fn scale(&self, c: &Rational) -> HomogeneousPoly {
        HomogeneousPoly {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: if c.is_zero() {
                BTreeMap::new()
            } else {
                self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect()
            },
        }
    }

    pub fn mul(&self, rhs: &HomogeneousPoly) -> HomogeneousPoly {
        assert_eq!(self.num_vars, rhs.num_vars);
        let prod = &self.as_affine() * &rhs.as_affine();
        HomogeneousPoly {
            num_vars: self.num_vars,
            degree: self.degree + rhs.degree,
            terms: prod.terms,
        }
    }

    pub fn mul_monomial(&self, e: &Exponents, c: &Rational) -> HomogeneousPoly {
        let p = self.as_affine().mul_monomial(e, c);
        HomogeneousPoly {
            num_vars: self.num_vars,
            degree: self.degree + e.total_degree(),
            terms: p.terms,
        }
    }

    /// Degree drops by one; the derivative of a degree-0 polynomial is the
    /// zero polynomial of degree 0.
    pub fn partial_derivative(&self, i: usize) -> HomogeneousPoly {
        let d = self.as_affine().partial_derivative(i);
        HomogeneousPoly {
            num_vars: self.num_vars,
            degree: self.degree.saturating_sub(1),
            terms: d.terms,
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.as_affine().evaluate(point)
    }

    pub fn coeff_vector(
        &self,
        basis_index: &BTreeMap<Exponents, usize>,
        len: usize,
    ) -> Vec<Rational> {
        self.as_affine().coeff_vector(basis_index, len)
    }

    /// Substitute x_c = 0 and drop the variable.
    pub fn restrict(&self, chart: usize) -> HomogeneousPoly {
        assert!(chart < self.num_vars);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.0[chart] == 0 {
                let mut reduced = e.0.clone();
                reduced.remove(chart);
                terms.insert(Exponents(reduced), c.clone());
            }
        }
        HomogeneousPoly {
            num_vars: self.num_vars - 1,
            degree: self.degree,
            terms,
        }
    }

    pub fn to_expression(&self, names: &[&str]) -> String {
        format_terms(&self.terms, names)
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.num_vars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&format_terms(&self.terms, &refs))
    }
}

/// Exact Euler identity Sum_i x_i * df/dx_i == deg(f) * f; holds for every
/// homogeneous polynomial, so a `false` points at corrupted input.
pub fn euler_check(f: &HomogeneousPoly) -> bool {
    let n = f.num_vars();
    let mut acc = AffinePoly::zero(n);
    for i in 0..n {
        let xi = AffinePoly::var(n, i);
        acc = &acc + &(&xi * &f.as_affine().partial_derivative(i));
    }
    let rhs = f.as_affine().scale(&rat(f.degree() as i64));
    acc == rhs
}

/// f composed with the linear change A: x -> A x.
pub fn linear_change(f: &HomogeneousPoly, a: &RatMatrix) -> Result<HomogeneousPoly> {
    let n = f.num_vars();
    if a.rows() != n || a.cols() != n {
        return Err(Error::VariableMismatch {
            expected: n,
            got: a.rows(),
        });
    }
    if a.rank() != n {
        return Err(Error::SingularChange);
    }
    let forms: Vec<AffinePoly> = (0..n)
        .map(|i| {
            let mut form = AffinePoly::zero(n);
            for j in 0..n {
                form.add_term(Exponents::unit(n, j), a.at(i, j).clone());
            }
            form
        })
        .collect();
    let image = f.as_affine().substitute(&forms);
    HomogeneousPoly::from_affine_with_degree(&image, f.degree())
}

/// Local equation of f in the chart x_c = 1, translated so the (rescaled)
/// point q maps to the origin. The result lives in the remaining variables,
/// in their original order.
pub fn local_germ(f: &HomogeneousPoly, chart: usize, point: &[Rational]) -> Result<AffinePoly> {
    let n = f.num_vars();
    if point.len() != n {
        return Err(Error::VariableMismatch {
            expected: n,
            got: point.len(),
        });
    }
    assert!(chart < n);
    if point[chart].is_zero() {
        return Err(Error::PointNotInChart { chart });
    }
    let scaled: Vec<Rational> = point.iter().map(|q| q / &point[chart]).collect();
    let out_vars = n - 1;
    let mut forms = Vec::with_capacity(n);
    let mut pos = 0;
    for (i, q) in scaled.iter().enumerate() {
        if i == chart {
            forms.push(AffinePoly::constant(out_vars, Rational::one()));
        } else {
            let mut form = AffinePoly::var(out_vars, pos);
            form.add_term(Exponents::zeros(out_vars), q.clone());
            pos += 1;
            forms.push(form);
        }
    }
    Ok(f.as_affine().substitute(&forms))
}

fn format_term(c: &Rational, e: &Exponents, names: &[&str]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let coeff = c.abs();
    let is_const = e.total_degree() == 0;
    if !coeff.is_one() || is_const {
        parts.push(coeff.to_string());
    }
    for (i, &ei) in e.0.iter().enumerate() {
        match ei {
            0 => {}
            1 => parts.push(names[i].to_string()),
            _ => parts.push(format!("{}^{}", names[i], ei)),
        }
    }
    let body = parts.join("*");
    if c.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

fn format_terms(terms: &BTreeMap<Exponents, Rational>, names: &[&str]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().rev().enumerate() {
        let t = format_term(c, e, names);
        if i == 0 {
            out.push_str(&t);
        } else if let Some(stripped) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

/// Build a lookup from monomials to their positions in a basis list.
pub fn basis_index(basis: &[Exponents]) -> BTreeMap<Exponents, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn grevlex_order_degree_two() {
        // descending: x^2, xy, y^2, xz, yz, z^2
        let basis = monomial_basis(3, 2);
        let shown: Vec<Vec<u32>> = basis.iter().map(|e| e.0.clone()).collect();
        assert_eq!(
            shown,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![0, 0, 2],
            ]
        );
    }

    #[test]
    fn monomial_basis_lengths() {
        assert_eq!(monomial_basis(4, 2).len(), 10);
        assert_eq!(monomial_basis(3, 3).len(), 10);
        assert_eq!(monomial_basis(5, 0), vec![Exponents::zeros(5)]);
        for vars in 1..=6 {
            for degree in 0..=12 {
                assert_eq!(
                    monomial_basis(vars, degree).len(),
                    dim_graded(vars, degree as i64),
                    "vars={vars} degree={degree}"
                );
            }
        }
    }

    #[test]
    fn derivative_examples() {
        // d/dx x^2 y = 2xy
        let p = HomogeneousPoly::from_integer_terms(3, &[(1, &[2, 1, 0])]).unwrap();
        let d = p.partial_derivative(0);
        assert_eq!(
            d,
            HomogeneousPoly::from_integer_terms(3, &[(2, &[1, 1, 0])]).unwrap()
        );
        // d/dw x^3 = 0
        let c = HomogeneousPoly::from_integer_terms(4, &[(1, &[3, 0, 0, 0])]).unwrap();
        assert!(c.partial_derivative(3).is_zero());
    }

    #[test]
    fn cayley_partial() {
        let f = HomogeneousPoly::from_integer_terms(
            4,
            &[
                (1, &[1, 1, 1, 0]),
                (1, &[1, 1, 0, 1]),
                (1, &[1, 0, 1, 1]),
                (1, &[0, 1, 1, 1]),
            ],
        )
        .unwrap();
        let fx = f.partial_derivative(0);
        let expect = HomogeneousPoly::from_integer_terms(
            4,
            &[(1, &[0, 1, 1, 0]), (1, &[0, 1, 0, 1]), (1, &[0, 0, 1, 1])],
        )
        .unwrap();
        assert_eq!(fx, expect);
    }

    #[test]
    fn evaluate_paper_table_entries() {
        // t_1 = -yz + z^2 + xw + 2yw + 2zw + w^2
        let t1 = HomogeneousPoly::from_integer_terms(
            4,
            &[
                (-1, &[0, 1, 1, 0]),
                (1, &[0, 0, 2, 0]),
                (1, &[1, 0, 0, 1]),
                (2, &[0, 1, 0, 1]),
                (2, &[0, 0, 1, 1]),
                (1, &[0, 0, 0, 2]),
            ],
        )
        .unwrap();
        let q1 = [rat(-1), rat(1), rat(1), rat(1)];
        let q4 = [rat(1), rat(1), rat(1), rat(-1)];
        assert_eq!(t1.evaluate(&q1), rat(4));
        assert_eq!(t1.evaluate(&q4), rat(-4));
        let zeros = [rat(0), rat(0), rat(0), rat(0)];
        assert_eq!(t1.evaluate(&zeros), rat(0));
    }

    #[test]
    fn euler_holds_and_rejects_mixed() {
        let f = HomogeneousPoly::from_integer_terms(
            4,
            &[
                (1, &[1, 1, 1, 0]),
                (1, &[1, 1, 0, 1]),
                (1, &[1, 0, 1, 1]),
                (1, &[0, 1, 1, 1]),
            ],
        )
        .unwrap();
        assert!(euler_check(&f));
        // mixed degrees are rejected at construction
        let mixed = AffinePoly::from_integer_terms(2, &[(1, &[2, 0]), (1, &[0, 1])]);
        assert!(matches!(
            HomogeneousPoly::from_affine(&mixed),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn linear_change_examples() {
        let f = HomogeneousPoly::from_integer_terms(
            4,
            &[
                (1, &[1, 1, 1, 0]),
                (1, &[1, 1, 0, 1]),
                (1, &[1, 0, 1, 1]),
                (1, &[0, 1, 1, 1]),
            ],
        )
        .unwrap();
        let id = RatMatrix::identity(4);
        assert_eq!(linear_change(&f, &id).unwrap(), f);
        // cyclic permutation fixes the symmetric cubic
        let perm =
            RatMatrix::from_i64_rows(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0]]);
        assert_eq!(linear_change(&f, &perm).unwrap(), f);
        // scaling x by 2 on x^3
        let cube = HomogeneousPoly::from_integer_terms(2, &[(1, &[3, 0])]).unwrap();
        let scale = RatMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]);
        assert_eq!(
            linear_change(&cube, &scale).unwrap(),
            HomogeneousPoly::from_integer_terms(2, &[(8, &[3, 0])]).unwrap()
        );
        let singular = RatMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert!(matches!(
            linear_change(&cube, &singular),
            Err(Error::SingularChange)
        ));
    }

    #[test]
    fn local_germ_cayley_node() {
        let f = HomogeneousPoly::from_integer_terms(
            4,
            &[
                (1, &[1, 1, 1, 0]),
                (1, &[1, 1, 0, 1]),
                (1, &[1, 0, 1, 1]),
                (1, &[0, 1, 1, 1]),
            ],
        )
        .unwrap();
        // q4 = (0:0:0:1), chart w: germ = xy + xz + yz + xyz
        let q4 = [rat(0), rat(0), rat(0), rat(1)];
        let germ = local_germ(&f, 3, &q4).unwrap();
        let expect = AffinePoly::from_integer_terms(
            3,
            &[
                (1, &[1, 1, 0]),
                (1, &[1, 0, 1]),
                (1, &[0, 1, 1]),
                (1, &[1, 1, 1]),
            ],
        );
        assert_eq!(germ, expect);
        // smooth point (1:1:0:0): nonzero linear part
        let smooth = [rat(1), rat(1), rat(0), rat(0)];
        let g = local_germ(&f, 0, &smooth).unwrap();
        assert!(g.coefficient(&Exponents::zeros(3)).is_zero());
        assert!(!g.part_of_degree(1).is_zero());
        // off the hypersurface: nonzero constant term
        let off = [rat(1), rat(1), rat(1), rat(1)];
        let g = local_germ(&f, 0, &off).unwrap();
        assert!(!g.coefficient(&Exponents::zeros(3)).is_zero());
        // chart error
        assert!(matches!(
            local_germ(&f, 0, &q4),
            Err(Error::PointNotInChart { chart: 0 })
        ));
    }

    #[test]
    fn germ_respects_projective_rescaling() {
        let f = HomogeneousPoly::from_integer_terms(
            3,
            &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (-1, &[1, 1, 1])],
        )
        .unwrap();
        let q = [rat(0), rat(0), rat(1)];
        let q_scaled = [rat(0), rat(0), ratio(-5, 3)];
        let g1 = local_germ(&f, 2, &q).unwrap();
        let g2 = local_germ(&f, 2, &q_scaled).unwrap();
        // scaling q multiplies f(q-chart form) by a nonzero constant overall
        let c = &g2.coefficient(&Exponents(vec![1, 1])) / &g1.coefficient(&Exponents(vec![1, 1]));
        assert_eq!(g2, g1.scale(&c));
    }

    #[test]
    fn display_round_trips_visually() {
        let p = AffinePoly::from_integer_terms(
            3,
            &[(2, &[2, 0, 0]), (-1, &[0, 1, 1]), (3, &[0, 0, 0])],
        );
        assert_eq!(p.to_expression(&["x", "y", "z"]), "2*x^2 - y*z + 3");
        assert_eq!(AffinePoly::zero(2).to_expression(&["x", "y"]), "0");
    }
}
