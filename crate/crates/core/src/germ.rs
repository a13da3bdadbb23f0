//! Local analytic algebra at an isolated singular point.
//!
//! Quotient dimensions (Milnor number mu, Tjurina number tau) are computed by
//! linear algebra in a truncated polynomial ring. Termination is exact: the
//! truncation order D grows until the Nakayama certificate holds — every
//! monomial of some degree k < D lies in the span of the truncated ideal plus
//! terms of degree > k, which proves m^k is contained in the ideal, so the
//! quotient is faithfully represented below degree k.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hypersurface::Hypersurface;
use crate::matrix::RowSpace;
use crate::par;
use crate::poly::{local_germ, monomial_basis, AffinePoly, Exponents, HomogeneousPoly};
use crate::rational::Rational;

/// Default cap on the truncation search; the scan aborts at D = 2*cap.
pub const DEFAULT_TRUNCATION_CAP: usize = 24;

/// Local equation at a singular point, translated to the origin. Constant and
/// linear parts must vanish; anything else is rejected up front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalGerm {
    poly: AffinePoly,
}

impl LocalGerm {
    pub fn new(poly: AffinePoly) -> Result<Self> {
        if !poly
            .coefficient(&Exponents::zeros(poly.num_vars()))
            .is_zero()
        {
            return Err(Error::NotSingular("constant"));
        }
        if !poly.part_of_degree(1).is_zero() {
            return Err(Error::NotSingular("linear"));
        }
        Ok(LocalGerm { poly })
    }

    pub fn poly(&self) -> &AffinePoly {
        &self.poly
    }

    pub fn num_vars(&self) -> usize {
        self.poly.num_vars()
    }
}

/// Monomial cobasis of O_n/(ideal) obtained from a certified truncation.
#[derive(Debug, Clone)]
pub struct LocalQuotientBasis {
    truncation: usize,
    cap_used: usize,
    monomials: Vec<Exponents>,
    reducer: RowSpace,
    cobasis: Vec<usize>,
}

impl LocalQuotientBasis {
    pub fn dimension(&self) -> usize {
        self.cobasis.len()
    }

    /// Certified power: m^truncation lies inside the ideal; the quotient is
    /// represented on monomials of lower degree.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn cap_used(&self) -> usize {
        self.cap_used
    }

    pub fn cobasis_monomials(&self) -> Vec<&Exponents> {
        self.cobasis.iter().map(|&i| &self.monomials[i]).collect()
    }

    /// Coordinates of the class of `p` on the cobasis. All zero exactly when
    /// the germ of `p` lies in the ideal.
    pub fn normal_form(&self, p: &AffinePoly) -> Vec<Rational> {
        let truncated = p.truncate_below(self.truncation as u32);
        let mut vec = vec![Rational::zero(); self.monomials.len()];
        for (e, c) in truncated.terms() {
            let i = self
                .monomials
                .iter()
                .position(|m| m == e)
                .expect("monomial within truncation");
            vec[i] = c.clone();
        }
        let reduced = self.reducer.reduce(vec);
        self.cobasis.iter().map(|&i| reduced[i].clone()).collect()
    }
}

/// All monomials of degree < bound, largest (grevlex) first, so that columns
/// of a fixed total degree form contiguous blocks and "degree <= k" is a
/// suffix.
fn truncated_monomials(nvars: usize, bound: usize) -> Vec<Exponents> {
    let mut out = Vec::new();
    for d in (0..bound).rev() {
        out.extend(monomial_basis(nvars, d as u32));
    }
    out
}

fn span_rows(
    gens: &[AffinePoly],
    mons: &[Exponents],
    bound: usize,
    nvars: usize,
) -> Vec<Vec<Rational>> {
    let index: std::collections::BTreeMap<&Exponents, usize> =
        mons.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let ord = g.order().unwrap_or(bound as u32) as usize;
        if ord >= bound {
            continue;
        }
        for d in 0..bound - ord {
            for mono in monomial_basis(nvars, d as u32) {
                let product = g.mul_monomial(&mono, &Rational::from_integer(1.into()));
                let truncated = product.truncate_below(bound as u32);
                if truncated.is_zero() {
                    continue;
                }
                let mut row = vec![Rational::zero(); mons.len()];
                for (e, c) in truncated.terms() {
                    row[index[e]] = c.clone();
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Quotient of the local ring by J_g (include_g = false) or by the Tjurina
/// ideal (g) + J_g (include_g = true).
pub fn local_quotient(germ: &LocalGerm, include_g: bool) -> Result<LocalQuotientBasis> {
    local_quotient_with_cap(germ, include_g, DEFAULT_TRUNCATION_CAP)
}

pub fn local_quotient_with_cap(
    germ: &LocalGerm,
    include_g: bool,
    cap: usize,
) -> Result<LocalQuotientBasis> {
    let nvars = germ.num_vars();
    let mut gens: Vec<AffinePoly> = (0..nvars)
        .map(|i| germ.poly().partial_derivative(i))
        .filter(|p| !p.is_zero())
        .collect();
    if include_g && !germ.poly().is_zero() {
        gens.push(germ.poly().clone());
    }
    let max_d = 2 * cap;
    for bound in 2..=max_d {
        let mons = truncated_monomials(nvars, bound);
        let rows = span_rows(&gens, &mons, bound, nvars);
        for k in 1..bound {
            // columns of degree <= k are the suffix starting here
            let suffix_start = mons
                .iter()
                .position(|e| e.total_degree() as usize <= k)
                .unwrap_or(mons.len());
            let suffix_len = mons.len() - suffix_start;
            let restricted = rows
                .iter()
                .map(|r| r[suffix_start..].to_vec())
                .filter(|r| r.iter().any(|e| !e.is_zero()));
            let span = RowSpace::from_vectors(suffix_len, restricted);
            // certificate: every degree-k monomial is in span + higher terms;
            // the higher-degree columns were already projected away, so plain
            // membership of the unit vectors decides it.
            let deg_k_count = mons[suffix_start..]
                .iter()
                .take_while(|e| e.total_degree() as usize == k)
                .count();
            let certified = (0..deg_k_count).all(|i| {
                let mut unit = vec![Rational::zero(); suffix_len];
                unit[i] = Rational::from_integer(1.into());
                span.contains(&unit)
            });
            if certified {
                return Ok(finalize_quotient(&rows, &mons, k, bound));
            }
        }
    }
    Err(Error::CertificateFailed {
        reached: max_d,
        cap,
    })
}

fn finalize_quotient(
    rows: &[Vec<Rational>],
    mons: &[Exponents],
    k: usize,
    cap_used: usize,
) -> LocalQuotientBasis {
    // quotient representation on monomials of degree < k
    let suffix_start = mons
        .iter()
        .position(|e| (e.total_degree() as usize) < k)
        .unwrap_or(mons.len());
    let final_mons: Vec<Exponents> = mons[suffix_start..].to_vec();
    let restricted = rows
        .iter()
        .map(|r| r[suffix_start..].to_vec())
        .filter(|r| r.iter().any(|e| !e.is_zero()));
    let reducer = RowSpace::from_vectors(final_mons.len(), restricted);
    let pivot_set: std::collections::HashSet<usize> = reducer.pivots().iter().copied().collect();
    let cobasis: Vec<usize> = (0..final_mons.len())
        .filter(|i| !pivot_set.contains(i))
        .collect();
    LocalQuotientBasis {
        truncation: k,
        cap_used,
        monomials: final_mons,
        reducer,
        cobasis,
    }
}

/// (mu, tau) of an isolated singular germ.
pub fn milnor_tjurina(germ: &LocalGerm) -> Result<(usize, usize)> {
    let mu = local_quotient(germ, false)?.dimension();
    let tau = local_quotient(germ, true)?.dimension();
    debug_assert!(tau <= mu);
    Ok((mu, tau))
}

/// Saito's criterion: the germ is weighted homogeneous iff mu == tau.
pub fn is_weighted_homogeneous(germ: &LocalGerm) -> Result<bool> {
    let (mu, tau) = milnor_tjurina(germ)?;
    Ok(mu == tau)
}

/// Full local data of one user-supplied singular point.
#[derive(Debug, Clone)]
pub struct SingularPointRecord {
    point: Vec<Rational>,
    chart: usize,
    germ: LocalGerm,
    mu: usize,
    tau: usize,
    weighted_homogeneous: bool,
    tjurina: LocalQuotientBasis,
}

impl SingularPointRecord {
    pub fn build(h: &Hypersurface, point: &[Rational], chart: usize) -> Result<Self> {
        Self::build_with_cap(h, point, chart, DEFAULT_TRUNCATION_CAP)
    }

    pub fn build_with_cap(
        h: &Hypersurface,
        point: &[Rational],
        chart: usize,
        cap: usize,
    ) -> Result<Self> {
        if point.len() != h.num_vars() {
            return Err(Error::VariableMismatch {
                expected: h.num_vars(),
                got: point.len(),
            });
        }
        if point[chart].is_zero() {
            return Err(Error::PointNotInChart { chart });
        }
        if !h.f().evaluate(point).is_zero() {
            return Err(Error::PointNotOnHypersurface);
        }
        let germ = LocalGerm::new(local_germ(h.f(), chart, point)?)?;
        let mu = local_quotient_with_cap(&germ, false, cap)?.dimension();
        let tjurina = local_quotient_with_cap(&germ, true, cap)?;
        let tau = tjurina.dimension();
        Ok(SingularPointRecord {
            point: point.to_vec(),
            chart,
            weighted_homogeneous: mu == tau,
            germ,
            mu,
            tau,
            tjurina,
        })
    }

    pub fn point(&self) -> &[Rational] {
        &self.point
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn germ(&self) -> &LocalGerm {
        &self.germ
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        self.weighted_homogeneous
    }

    pub fn tjurina_quotient(&self) -> &LocalQuotientBasis {
        &self.tjurina
    }

    /// Normal-form coordinates of the germ of `p` at this point modulo the
    /// local Tjurina ideal; all zero exactly when the germ of `p` vanishes on
    /// the singular locus subscheme there.
    pub fn tjurina_functionals(&self, p: &HomogeneousPoly) -> Result<Vec<Rational>> {
        if p.num_vars() != self.point.len() {
            return Err(Error::VariableMismatch {
                expected: self.point.len(),
                got: p.num_vars(),
            });
        }
        let germ = local_germ(p, self.chart, &self.point)?;
        Ok(self.tjurina.normal_form(&germ))
    }
}

/// Build records for all points in a single chart; fails if any point is off
/// that chart.
pub fn build_records_in_chart(
    h: &Hypersurface,
    points: &[Vec<Rational>],
    chart: usize,
) -> Result<Vec<SingularPointRecord>> {
    par::map_collect(points.to_vec(), |q| {
        SingularPointRecord::build(h, &q, chart)
    })
    .into_iter()
    .collect()
}

/// Build records choosing, per point, the preferred chart when usable and the
/// first nonzero coordinate otherwise.
pub fn build_records_auto(
    h: &Hypersurface,
    points: &[Vec<Rational>],
    preferred_chart: usize,
) -> Result<Vec<SingularPointRecord>> {
    par::map_collect(points.to_vec(), |q| {
        let chart = if !q[preferred_chart].is_zero() {
            preferred_chart
        } else {
            q.iter()
                .position(|c| !c.is_zero())
                .ok_or(Error::PointNotInChart {
                    chart: preferred_chart,
                })?
        };
        SingularPointRecord::build(h, &q, chart)
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::rat;

    fn germ2(terms: &[(i64, &[u32])]) -> LocalGerm {
        LocalGerm::new(AffinePoly::from_integer_terms(2, terms)).unwrap()
    }

    #[test]
    fn node_quotients() {
        let g = germ2(&[(1, &[2, 0]), (1, &[0, 2])]);
        for include_g in [false, true] {
            let q = local_quotient(&g, include_g).unwrap();
            assert_eq!(q.dimension(), 1);
            assert_eq!(q.cobasis_monomials(), vec![&Exponents::zeros(2)]);
        }
    }

    #[test]
    fn fermat_quintic_germ() {
        let g = germ2(&[(1, &[5, 0]), (1, &[0, 5])]);
        assert_eq!(local_quotient(&g, false).unwrap().dimension(), 16);
        assert_eq!(milnor_tjurina(&g).unwrap(), (16, 16));
    }

    #[test]
    fn triple_point_germ() {
        // y1^3 - y1 y2^2: ordinary triple point
        let g = germ2(&[(1, &[3, 0]), (-1, &[1, 2])]);
        assert_eq!(milnor_tjurina(&g).unwrap(), (4, 4));
        assert!(is_weighted_homogeneous(&g).unwrap());
    }

    #[test]
    fn non_wh_quintic_germ() {
        // frozen from the independent truncated-algebra oracle
        let g = germ2(&[(1, &[5, 0]), (1, &[2, 2]), (1, &[0, 5])]);
        assert_eq!(local_quotient(&g, false).unwrap().dimension(), 11);
        assert_eq!(local_quotient(&g, true).unwrap().dimension(), 10);
        assert!(!is_weighted_homogeneous(&g).unwrap());
    }

    #[test]
    fn quotient_dimension_stable_under_cap_increase() {
        let g = germ2(&[(1, &[5, 0]), (1, &[2, 2]), (1, &[0, 5])]);
        let a = local_quotient_with_cap(&g, true, 8).unwrap();
        let b = local_quotient_with_cap(&g, true, 10).unwrap();
        assert_eq!(a.dimension(), b.dimension());
        assert_eq!(a.truncation(), b.truncation());
    }

    #[test]
    fn non_isolated_germ_fails_certificate() {
        // y1^2 alone cuts a non-isolated singular locus
        let g = germ2(&[(1, &[2, 0])]);
        assert!(matches!(
            local_quotient_with_cap(&g, false, 4),
            Err(Error::CertificateFailed { .. })
        ));
    }

    #[test]
    fn rejects_non_singular_germs() {
        assert!(matches!(
            LocalGerm::new(AffinePoly::from_integer_terms(2, &[(1, &[0, 0])])),
            Err(Error::NotSingular("constant"))
        ));
        assert!(matches!(
            LocalGerm::new(AffinePoly::from_integer_terms(
                2,
                &[(1, &[1, 0]), (1, &[2, 0])]
            )),
            Err(Error::NotSingular("linear"))
        ));
    }

    #[test]
    fn cayley_node_records() {
        let (h, points) = fixtures::cayley();
        // q_4 = (0:0:0:1) lives in chart w = 3
        let rec = SingularPointRecord::build(&h, &points[3], 3).unwrap();
        assert_eq!((rec.mu(), rec.tau()), (1, 1));
        assert!(rec.is_weighted_homogeneous());
        // f itself lies in its own local Tjurina ideal
        let values = rec.tjurina_functionals(h.f()).unwrap();
        assert!(values.iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn constant_does_not_vanish_on_the_subscheme() {
        let (h, points) = fixtures::cayley();
        let rec = SingularPointRecord::build(&h, &points[3], 3).unwrap();
        let one =
            crate::poly::HomogeneousPoly::from_integer_terms(4, &[(1, &[0, 0, 0, 0])]).unwrap();
        assert_eq!(rec.tjurina_functionals(&one).unwrap(), vec![rat(1)]);
    }

    #[test]
    fn paper_t8_vanishes_at_all_four_nodes() {
        let (h, points) = fixtures::cayley_generic();
        let t8 = crate::poly::HomogeneousPoly::from_integer_terms(
            4,
            &[(1, &[0, 2, 0, 0]), (-1, &[0, 0, 2, 0])],
        )
        .unwrap();
        for q in &points {
            let rec = SingularPointRecord::build(&h, q, 0).unwrap();
            assert_eq!((rec.mu(), rec.tau()), (1, 1));
            let values = rec.tjurina_functionals(&t8).unwrap();
            assert!(values.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn a1_functional_is_evaluation_up_to_unit() {
        let (h, points) = fixtures::cayley_generic();
        let rec = SingularPointRecord::build(&h, &points[0], 0).unwrap();
        assert_eq!(rec.tau(), 1);
        // t_1 evaluates to 4 at q_1 = (-1:1:1:1); the single functional is a
        // nonzero rational multiple of that value
        let t1 = crate::poly::HomogeneousPoly::from_integer_terms(
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
        let v = rec.tjurina_functionals(&t1).unwrap();
        assert_eq!(v.len(), 1);
        assert!(!v[0].is_zero());
        // vanishing iff h(q) = 0
        let t8 = crate::poly::HomogeneousPoly::from_integer_terms(
            4,
            &[(1, &[0, 2, 0, 0]), (-1, &[0, 0, 2, 0])],
        )
        .unwrap();
        assert!(rec.tjurina_functionals(&t8).unwrap()[0].is_zero());
    }
}
