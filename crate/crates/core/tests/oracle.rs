//! Independent oracle for the local quotient dimensions.
//!
//! Everything here is deliberately written from scratch: its own monomial
//! enumeration (plain lexicographic), its own sparse products, and a naive
//! rational Gaussian elimination. For a fixed truncation D it computes
//! dim O/(ideal + m^D); that value stabilizes to the true quotient dimension
//! once D passes the saturation degree, so agreement across several D values
//! freezes the expected numbers independently of the crate's certified
//! implementation.

use std::collections::BTreeMap;

use num_traits::Zero;
use syzygy_core::germ::{local_quotient, LocalGerm};
use syzygy_core::poly::{local_germ, AffinePoly};
use syzygy_core::rational::{rat, Rational};

type Mono = Vec<u32>;
type Poly = BTreeMap<Mono, Rational>;

fn poly(terms: &[(i64, &[u32])]) -> Poly {
    let mut p = Poly::new();
    for (c, e) in terms {
        *p.entry(e.to_vec()).or_insert_with(Rational::zero) += rat(*c);
    }
    p.retain(|_, c| !c.is_zero());
    p
}

fn monomials_upto(nvars: usize, bound: u32) -> Vec<Mono> {
    // lexicographic enumeration, nothing shared with the crate's order
    let mut out: Vec<Mono> = vec![vec![]];
    for _ in 0..nvars {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().sum();
            for e in 0..(bound - used) {
                let mut m2 = m.clone();
                m2.push(e);
                next.push(m2);
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn mul_mono(p: &Poly, m: &Mono) -> Poly {
    p.iter()
        .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
        .collect()
}

fn derivative(p: &Poly, i: usize) -> Poly {
    let mut out = Poly::new();
    for (e, c) in p {
        if e[i] > 0 {
            let mut e2 = e.clone();
            e2[i] -= 1;
            *out.entry(e2).or_insert_with(Rational::zero) += c * rat(e[i] as i64);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// dim of (polynomials of degree < bound) modulo the truncated span of all
/// monomial multiples of the generators, by plain Gaussian elimination.
fn truncated_quotient_dim(gens: &[Poly], nvars: usize, bound: u32) -> usize {
    let mons = monomials_upto(nvars, bound);
    let index: BTreeMap<&Mono, usize> = mons.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut reduced: Vec<Vec<Rational>> = Vec::new();
    for g in gens {
        for m in &mons {
            let product = mul_mono(g, m);
            let mut row = vec![Rational::zero(); mons.len()];
            let mut nonzero = false;
            for (e, c) in &product {
                if e.iter().sum::<u32>() < bound {
                    row[index[e]] = c.clone();
                    nonzero = true;
                }
            }
            if !nonzero {
                continue;
            }
            // eliminate against rows already collected
            for other in &reduced {
                let lead = other.iter().position(|x| !x.is_zero()).unwrap();
                if !row[lead].is_zero() {
                    let factor = &row[lead] / &other[lead];
                    for j in lead..mons.len() {
                        if !other[j].is_zero() {
                            let delta = &factor * &other[j];
                            row[j] -= delta;
                        }
                    }
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                reduced.push(row);
                reduced.sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap());
            }
        }
    }
    mons.len() - reduced.len()
}

fn oracle_mu_tau(g: &Poly, nvars: usize, bounds: &[u32]) -> (usize, usize) {
    let jacobian: Vec<Poly> = (0..nvars).map(|i| derivative(g, i)).collect();
    let mut tjurina = jacobian.clone();
    tjurina.push(g.clone());
    let mu: Vec<usize> = bounds
        .iter()
        .map(|&b| truncated_quotient_dim(&jacobian, nvars, b))
        .collect();
    let tau: Vec<usize> = bounds
        .iter()
        .map(|&b| truncated_quotient_dim(&tjurina, nvars, b))
        .collect();
    assert!(
        mu.windows(2).all(|w| w[0] == w[1]),
        "mu not stabilized across {bounds:?}: {mu:?}"
    );
    assert!(
        tau.windows(2).all(|w| w[0] == w[1]),
        "tau not stabilized across {bounds:?}: {tau:?}"
    );
    (mu[0], tau[0])
}

fn crate_mu_tau(terms: &[(i64, &[u32])], nvars: usize) -> (usize, usize) {
    let germ = LocalGerm::new(AffinePoly::from_integer_terms(nvars, terms)).unwrap();
    (
        local_quotient(&germ, false).unwrap().dimension(),
        local_quotient(&germ, true).unwrap().dimension(),
    )
}

#[test]
fn quintic_non_wh_germ_frozen_values() {
    let terms: &[(i64, &[u32])] = &[(1, &[5, 0]), (1, &[2, 2]), (1, &[0, 5])];
    let oracle = oracle_mu_tau(&poly(terms), 2, &[12, 13, 14]);
    assert_eq!(oracle, (11, 10));
    assert_eq!(crate_mu_tau(terms, 2), (11, 10));
}

#[test]
fn fermat_quintic_germ() {
    let terms: &[(i64, &[u32])] = &[(1, &[5, 0]), (1, &[0, 5])];
    let oracle = oracle_mu_tau(&poly(terms), 2, &[12, 14]);
    assert_eq!(oracle, (16, 16));
    assert_eq!(crate_mu_tau(terms, 2), (16, 16));
}

#[test]
fn ordinary_triple_point_germ() {
    let terms: &[(i64, &[u32])] = &[(1, &[3, 0]), (-1, &[1, 2])];
    let oracle = oracle_mu_tau(&poly(terms), 2, &[8, 10]);
    assert_eq!(oracle, (4, 4));
    assert_eq!(crate_mu_tau(terms, 2), (4, 4));
}

#[test]
fn cayley_node_germ_three_variables() {
    let terms: &[(i64, &[u32])] = &[
        (1, &[1, 1, 0]),
        (1, &[1, 0, 1]),
        (1, &[0, 1, 1]),
        (1, &[1, 1, 1]),
    ];
    let oracle = oracle_mu_tau(&poly(terms), 3, &[5, 6]);
    assert_eq!(oracle, (1, 1));
    assert_eq!(crate_mu_tau(terms, 3), (1, 1));
}

#[test]
fn line_arrangement_triple_point_through_germ_extraction() {
    // germ of (x^2-y^2)(x^2-z^2)(y^2-z^2) at (1:1:1) in chart x; the germ is
    // extracted by the crate, the quotient dimensions by the oracle
    let (h, points) = syzygy_core::fixtures::line_arrangement();
    let germ = local_germ(h.f(), 0, &points[3]).unwrap();
    let as_oracle: Poly = germ
        .terms()
        .map(|(e, c)| (e.0.clone(), c.clone()))
        .collect();
    let jacobian: Vec<Poly> = (0..2).map(|i| derivative(&as_oracle, i)).collect();
    let mut tjurina = jacobian.clone();
    tjurina.push(as_oracle.clone());
    let mu_values: Vec<usize> = [10u32, 12]
        .iter()
        .map(|&b| truncated_quotient_dim(&jacobian, 2, b))
        .collect();
    let tau_values: Vec<usize> = [10u32, 12]
        .iter()
        .map(|&b| truncated_quotient_dim(&tjurina, 2, b))
        .collect();
    assert_eq!(mu_values, vec![4, 4]);
    assert_eq!(tau_values, vec![4, 4]);
    // crate path agrees
    let record = syzygy_core::germ::SingularPointRecord::build(&h, &points[3], 0).unwrap();
    assert_eq!((record.mu(), record.tau()), (4, 4));
    assert!(record.is_weighted_homogeneous());
}
