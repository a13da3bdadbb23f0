//! Graded syzygy spaces of the partial derivatives of f.
//!
//! For a degree-m piece this module computes the space of all relations
//! (a_0,..,a_n) with Sum a_i f_i = 0, the Koszul subspace spanned by the
//! obvious relations f_j e_i - f_i e_j, and the essential quotient. The
//! splitting test pairs each relation's chart component with the local
//! Tjurina functionals of the singular points: under a transversal chart the
//! kernel of that pairing equals the Koszul subspace precisely in every
//! degree when all singularities are weighted homogeneous.
//!
//! Whether the coincidence of the kernels over all charts forces weighted
//! homogeneity in dimension n > 2 is not established; the multi-chart data is
//! reported but only the forward direction is ever asserted.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::germ::SingularPointRecord;
use crate::hypersurface::Hypersurface;
use crate::matrix::{RatMatrix, RowSpace};
use crate::milnor::{milnor_dim, projective_smoothness, smooth_hilbert};
use crate::par;
use crate::poly::{basis_index, dim_graded, monomial_basis, HomogeneousPoly};
use crate::rational::Rational;

/// A degree-m relation among the partial derivatives, verified exactly at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyVector {
    degree: u32,
    components: Vec<HomogeneousPoly>,
}

impl SyzygyVector {
    pub fn new(h: &Hypersurface, components: Vec<HomogeneousPoly>) -> Result<Self> {
        if components.len() != h.num_vars() {
            return Err(Error::VariableMismatch {
                expected: h.num_vars(),
                got: components.len(),
            });
        }
        let degree = components
            .iter()
            .filter(|c| !c.is_zero())
            .map(HomogeneousPoly::degree)
            .max()
            .unwrap_or(0);
        for c in &components {
            if !c.is_zero() && c.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: c.degree(),
                });
            }
        }
        if !verify_syzygy(h, &components) {
            return Err(Error::NotASyzygy);
        }
        Ok(SyzygyVector { degree, components })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[HomogeneousPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &HomogeneousPoly {
        &self.components[i]
    }

    /// Component-wise evaluation, the tuple s(q).
    pub fn evaluate(&self, q: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|c| c.evaluate(q)).collect()
    }

    /// Concatenated coefficient vector over the degree-m monomial basis,
    /// component-major — the same layout as the jacobian matrix columns.
    pub fn coords(&self) -> Vec<Rational> {
        let v = self.components.len();
        let basis = monomial_basis(v, self.degree);
        let index = basis_index(&basis);
        let mut out = Vec::with_capacity(v * basis.len());
        for c in &self.components {
            out.extend(c.coeff_vector(&index, basis.len()));
        }
        out
    }
}

/// Exact check that Sum a_i f_i = 0.
pub fn verify_syzygy(h: &Hypersurface, components: &[HomogeneousPoly]) -> bool {
    if components.len() != h.num_vars() {
        return false;
    }
    let v = h.num_vars();
    let mut acc = crate::poly::AffinePoly::zero(v);
    for (a, f_i) in components.iter().zip(h.partials()) {
        if !a.is_zero() {
            acc = &acc + &(&a.as_affine() * &f_i.as_affine());
        }
    }
    acc.is_zero()
}

/// Deterministic basis of the degree-m syzygy space, from the kernel of the
/// jacobian multiplication matrix.
pub fn syzygy_basis(h: &Hypersurface, m: u32) -> Vec<SyzygyVector> {
    let v = h.num_vars();
    let basis = monomial_basis(v, m);
    let kernel = h.jacobian_matrix(m).nullspace_basis();
    kernel
        .into_iter()
        .map(|vector| {
            let components = (0..v)
                .map(|block| {
                    let mut p = crate::poly::AffinePoly::zero(v);
                    for (j, mono) in basis.iter().enumerate() {
                        let c = &vector[block * basis.len() + j];
                        if !c.is_zero() {
                            p.add_term(mono.clone(), c.clone());
                        }
                    }
                    HomogeneousPoly::from_affine_with_degree(&p, m).expect("degree-m terms")
                })
                .collect();
            SyzygyVector {
                degree: m,
                components,
            }
        })
        .collect()
}

/// dim of the degree-m syzygy space via rank-nullity on the same matrix.
pub fn syzygy_dim(h: &Hypersurface, m: u32) -> usize {
    let mat = h.jacobian_matrix(m);
    mat.cols() - mat.rank()
}

/// Spanning set of the degree-m Koszul subspace: monomial multiples of
/// f_j e_i - f_i e_j, ordered by (i, j) then monomial.
pub fn koszul_generators(h: &Hypersurface, m: u32) -> Vec<SyzygyVector> {
    let v = h.num_vars();
    let shift = h.degree() - 1;
    if m < shift {
        return Vec::new();
    }
    let mult = monomial_basis(v, m - shift);
    let mut out = Vec::new();
    for i in 0..v {
        for j in i + 1..v {
            for mono in &mult {
                let mut components = vec![HomogeneousPoly::zero(v, m); v];
                components[i] = h.partial(j).mul_monomial(mono, &Rational::one());
                components[j] = h.partial(i).mul_monomial(mono, &-Rational::one());
                out.push(SyzygyVector {
                    degree: m,
                    components,
                });
            }
        }
    }
    out
}

fn coord_matrix(vectors: &[SyzygyVector], v: usize, m: u32) -> RatMatrix {
    let cols = v * dim_graded(v, m as i64);
    if vectors.is_empty() {
        return RatMatrix::zeros(0, cols);
    }
    let rows: Vec<Vec<Rational>> = par::map_collect(vectors.to_vec(), |s| s.coords());
    RatMatrix::from_rows(rows).expect("uniform coordinate length")
}

/// dim of the degree-m Koszul subspace (rank of the spanning set).
pub fn koszul_dim(h: &Hypersurface, m: u32) -> usize {
    let gens = koszul_generators(h, m);
    coord_matrix(&gens, h.num_vars(), m).rank()
}

/// Row space of the Koszul generators in syzygy coordinates.
pub fn koszul_space(h: &Hypersurface, m: u32) -> RowSpace {
    let gens = koszul_generators(h, m);
    RowSpace::from_matrix(&coord_matrix(&gens, h.num_vars(), m))
}

/// The three graded dimensions at one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationDims {
    pub all: usize,
    pub koszul: usize,
    pub essential: usize,
}

/// Dimension formulas in terms of the Milnor algebra of f and of a smooth
/// reference hypersurface of the same degree.
pub fn dims_by_formula(h: &Hypersurface, m: i64) -> RelationDims {
    if m < 0 {
        return RelationDims {
            all: 0,
            koszul: 0,
            essential: 0,
        };
    }
    let milnor_at = milnor_dim(h, m + h.degree() as i64 - 1);
    dims_from_milnor_value(h.n(), h.degree(), m, milnor_at)
}

/// Same formulas with dim M(f)_{m+N-1} supplied by the caller (e.g. from a
/// precomputed Hilbert table).
pub fn dims_from_milnor_value(n: usize, degree: u32, m: i64, milnor_at: usize) -> RelationDims {
    if m < 0 {
        return RelationDims {
            all: 0,
            koszul: 0,
            essential: 0,
        };
    }
    let v = n + 1;
    let binomials =
        (v as i64) * dim_graded(v, m) as i64 - dim_graded(v, m + degree as i64 - 1) as i64;
    let smooth_at = smooth_hilbert(n, degree, m + degree as i64 - 1);
    let all = binomials + milnor_at as i64;
    let koszul = binomials + smooth_at as i64;
    debug_assert!(all >= 0 && koszul >= 0 && all >= koszul);
    RelationDims {
        all: all as usize,
        koszul: koszul as usize,
        essential: (all - koszul) as usize,
    }
}

/// dim of the degree-m essential quotient, by the formulas.
pub fn essential_dim(h: &Hypersurface, m: i64) -> usize {
    dims_by_formula(h, m).essential
}

/// None when the chart is transversal; otherwise the failing condition.
pub fn transversality_reason(
    h: &Hypersurface,
    chart: usize,
    points: &[Vec<Rational>],
) -> Option<String> {
    for (i, q) in points.iter().enumerate() {
        if q[chart].is_zero() {
            return Some(format!(
                "singular point #{i} lies on the hyperplane x_{chart} = 0"
            ));
        }
    }
    let restricted = h.f().restrict(chart);
    if restricted.is_zero() {
        return Some(format!(
            "the hyperplane x_{chart} = 0 is a component of the hypersurface"
        ));
    }
    if !projective_smoothness(&restricted) {
        return Some(format!("the section by x_{chart} = 0 is singular"));
    }
    None
}

/// True when no singular point lies on x_chart = 0 and the hyperplane
/// section is smooth.
pub fn transversality_check(h: &Hypersurface, chart: usize, points: &[Vec<Rational>]) -> bool {
    transversality_reason(h, chart, points).is_none()
}

/// Apply the inverse change to the singular points (the hypersurface itself
/// transforms by `linear_change`). Coordinates are normalized to a primitive
/// integer vector with positive leading entry.
pub fn transform_points(a: &RatMatrix, points: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let inv = a.inverse().ok_or(Error::SingularChange)?;
    Ok(points
        .iter()
        .map(|q| normalize_projective(inv.mul_vec(q)))
        .collect())
}

fn normalize_projective(mut q: Vec<Rational>) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for c in &q {
        if !c.is_zero() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let scale = Rational::from_integer(lcm);
    for c in q.iter_mut() {
        *c *= &scale;
    }
    let mut gcd = BigInt::zero();
    for c in &q {
        gcd = gcd.gcd(c.numer());
    }
    if !gcd.is_zero() && !gcd.is_one() {
        let content = Rational::from_integer(gcd);
        for c in q.iter_mut() {
            *c /= &content;
        }
    }
    if let Some(first) = q.iter().find(|c| !c.is_zero()) {
        if first.numer().sign() == num_bigint::Sign::Minus {
            for c in q.iter_mut() {
                *c = -c.clone();
            }
        }
    }
    q
}

/// Seeded deterministic search for a coordinate change making every
/// coordinate hyperplane transversal. The identity is tried first, then up to
/// 100 random small-integer matrices (singular draws count as trials).
pub fn find_transversal_coordinates(
    h: &Hypersurface,
    points: &[Vec<Rational>],
    seed: u64,
) -> Result<RatMatrix> {
    let v = h.num_vars();
    let all_transversal =
        |h2: &Hypersurface, pts: &[Vec<Rational>]| -> std::result::Result<(), String> {
            for chart in 0..v {
                if let Some(reason) = transversality_reason(h2, chart, pts) {
                    return Err(reason);
                }
            }
            Ok(())
        };
    if all_transversal(h, points).is_ok() {
        return Ok(RatMatrix::identity(v));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::from("no candidate tried");
    const TRIALS: usize = 100;
    for _ in 0..TRIALS {
        let mut a = RatMatrix::zeros(v, v);
        for r in 0..v {
            for c in 0..v {
                a.set(r, c, crate::rational::rat(rng.random_range(-3..=3)));
            }
        }
        if a.rank() < v {
            last = "candidate matrix was singular".into();
            continue;
        }
        let f2 = crate::poly::linear_change(h.f(), &a)?;
        let h2 = Hypersurface::new(f2)?;
        let pts2 = transform_points(&a, points)?;
        match all_transversal(&h2, &pts2) {
            Ok(()) => return Ok(a),
            Err(reason) => last = reason,
        }
    }
    Err(Error::NoTransversalCoordinates {
        trials: TRIALS,
        last,
    })
}

/// (dim I_m, dim S_m/I_m): degree-m forms whose germ at every supplied point
/// lies in the local Tjurina ideal, and the codimension they cut out.
pub fn ideal_piece_dim(
    h: &Hypersurface,
    records: &[SingularPointRecord],
    m: u32,
) -> Result<(usize, usize)> {
    let v = h.num_vars();
    let basis = monomial_basis(v, m);
    let dim_s = basis.len();
    if records.is_empty() {
        return Ok((dim_s, 0));
    }
    let blocks: Vec<Vec<Vec<Rational>>> = par::map_collect(records.to_vec(), |rec| {
        let mut rows = vec![vec![Rational::zero(); dim_s]; rec.tau()];
        for (j, mono) in basis.iter().enumerate() {
            let p = HomogeneousPoly::from_affine_with_degree(
                &crate::poly::AffinePoly::monomial(v, mono.clone(), Rational::one()),
                m,
            )
            .expect("monomial is homogeneous");
            let values = rec.tjurina_functionals(&p).expect("chart holds the point");
            for (i, value) in values.into_iter().enumerate() {
                rows[i][j] = value;
            }
        }
        rows
    });
    let rows: Vec<Vec<Rational>> = blocks.into_iter().flatten().collect();
    let quotient = RatMatrix::from_rows(rows)?.rank();
    Ok((dim_s - quotient, quotient))
}

/// Outcome of splitting a degree-m syzygy basis against the singular locus.
#[derive(Debug, Clone)]
pub struct SplitResult {
    pub m: u32,
    /// all = basis size, koszul = kernel dimension of the evaluation map,
    /// essential = their difference.
    pub dims: RelationDims,
    /// dim of the Koszul span computed independently from its generators.
    pub koszul_rank: usize,
    /// kernel dimension == koszul rank. Equality in every degree under a
    /// transversal chart characterizes weighted homogeneous singularities;
    /// a strict gap in some degree witnesses a non-WH point.
    pub kernel_matches_koszul: bool,
    pub koszul_basis: Vec<SyzygyVector>,
    pub essential_representatives: Vec<SyzygyVector>,
    pub wh_verdicts: Vec<bool>,
}

/// Split a degree-m syzygy basis into the kernel of the chart-component
/// evaluation (the Koszul subspace, when the theorem applies) plus essential
/// coset representatives.
pub fn split_basis(
    h: &Hypersurface,
    m: u32,
    records: &[SingularPointRecord],
    chart: usize,
) -> Result<SplitResult> {
    for rec in records {
        if rec.chart() != chart {
            return Err(Error::ChartMismatch {
                record: rec.chart(),
                requested: chart,
            });
        }
    }
    let points: Vec<Vec<Rational>> = records.iter().map(|r| r.point().to_vec()).collect();
    if let Some(reason) = transversality_reason(h, chart, &points) {
        return Err(Error::NotTransversal { chart, reason });
    }
    let basis = syzygy_basis(h, m);
    let ar = basis.len();
    let koszul_rank = koszul_dim(h, m);

    // evaluation matrix: one row block of Tjurina functionals per point,
    // applied to the chart component of each basis element
    let columns: Vec<Vec<Rational>> = par::map_collect(basis.clone(), |s| {
        let mut col = Vec::new();
        for rec in records {
            col.extend(
                rec.tjurina_functionals(s.component(chart))
                    .expect("transversality keeps every point inside the chart"),
            );
        }
        col
    });
    let total_tau: usize = records.iter().map(|r| r.tau()).sum();
    let mut eval = RatMatrix::zeros(total_tau, ar);
    for (j, col) in columns.iter().enumerate() {
        for (i, value) in col.iter().enumerate() {
            eval.set(i, j, value.clone());
        }
    }
    let kernel = eval.nullspace_basis();
    if kernel.len() < koszul_rank {
        return Err(Error::Internal(format!(
            "kernel dimension {} below Koszul dimension {koszul_rank} at degree {m}",
            kernel.len()
        )));
    }
    let kernel_matches_koszul = kernel.len() == koszul_rank;

    let koszul_basis: Vec<SyzygyVector> = kernel
        .iter()
        .map(|coeffs| combine(h, &basis, coeffs, m))
        .collect::<Result<_>>()?;

    // deterministic completion: greedy over basis indices against the kernel
    // row space
    let mut span = RowSpace::from_vectors(ar, kernel.clone());
    let mut essential = Vec::with_capacity(ar - kernel.len());
    for (j, s) in basis.iter().enumerate() {
        if essential.len() == ar - kernel.len() {
            break;
        }
        let mut unit = vec![Rational::zero(); ar];
        unit[j] = Rational::one();
        if span.try_insert(unit) {
            essential.push(s.clone());
        }
    }

    if kernel_matches_koszul && koszul_rank > 0 {
        let space = koszul_space(h, m);
        for s in &koszul_basis {
            if !space.contains(&s.coords()) {
                return Err(Error::Internal(format!(
                    "kernel element escapes the Koszul span at degree {m}"
                )));
            }
        }
    }

    Ok(SplitResult {
        m,
        dims: RelationDims {
            all: ar,
            koszul: kernel.len(),
            essential: ar - kernel.len(),
        },
        koszul_rank,
        kernel_matches_koszul,
        koszul_basis,
        essential_representatives: essential,
        wh_verdicts: records
            .iter()
            .map(|r| r.is_weighted_homogeneous())
            .collect(),
    })
}

fn combine(
    h: &Hypersurface,
    basis: &[SyzygyVector],
    coeffs: &[Rational],
    m: u32,
) -> Result<SyzygyVector> {
    let v = h.num_vars();
    let components: Vec<HomogeneousPoly> = (0..v)
        .map(|c| {
            let mut acc = HomogeneousPoly::zero(v, m);
            for (s, coeff) in basis.iter().zip(coeffs) {
                if !coeff.is_zero() {
                    acc = acc.add(&s.component(c).scale(coeff))?;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    SyzygyVector::new(h, components)
}

/// One row of the defect table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectRow {
    pub m: u32,
    pub quotient_dim: usize,
    /// mu(V) - dim S_m/I_m
    pub defect: usize,
    pub dual_degree: i64,
    /// dim of the essential quotient at the dual degree nN-2n-1-m
    pub dual_essential_dim: usize,
}

/// Defect of the singular points in degree m, with the dual essential
/// dimension recorded for the duality check.
pub fn defect(h: &Hypersurface, records: &[SingularPointRecord], m: u32) -> Result<DefectRow> {
    let mu: usize = records.iter().map(|r| r.mu()).sum();
    let (_, quotient_dim) = ideal_piece_dim(h, records, m)?;
    let n = h.n() as i64;
    let dual = n * h.degree() as i64 - 2 * n - 1 - m as i64;
    Ok(DefectRow {
        m,
        quotient_dim,
        defect: mu - quotient_dim,
        dual_degree: dual,
        dual_essential_dim: essential_dim(h, dual),
    })
}

/// One audited degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRow {
    pub m: i64,
    pub dual_degree: i64,
    pub essential: usize,
    pub essential_dual: usize,
    /// essential + essential_dual, bounded by mu
    pub pair_sum: usize,
    /// (defect_m, defect_dual, sum); only inside the duality range
    pub defect_pair: Option<(usize, usize, usize)>,
    /// dim M(f)_m + dim M(f)_{T-m} - 2 dim M(g)_m, bounded by mu
    pub milnor_bound_lhs: i64,
    /// (2*essential, mu) when 2m <= nN-2n-1: the small-degree half bound
    pub half_bound: Option<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub mu: usize,
    pub tau: usize,
    pub all_weighted_homogeneous: bool,
    pub rows: Vec<AuditRow>,
    pub violations: Vec<String>,
}

/// Evaluate the three dimension inequalities (essential pair bound, defect
/// pair bound, Milnor-algebra bound) over a degree range. Violations falsify
/// the implementation, not the theory, and are reported as hard errors.
pub fn audit_inequalities(
    h: &Hypersurface,
    records: &[SingularPointRecord],
    m_range: std::ops::RangeInclusive<i64>,
) -> Result<AuditReport> {
    let mu: usize = records.iter().map(|r| r.mu()).sum();
    let tau: usize = records.iter().map(|r| r.tau()).sum();
    let n = h.n() as i64;
    let degree = h.degree() as i64;
    let t = (n + 1) * (degree - 2);
    let duality_top = n * degree - 2 * n - 1;
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for m in m_range {
        let dual = duality_top - m;
        let essential = essential_dim(h, m);
        let essential_dual = essential_dim(h, dual);
        let pair_sum = essential + essential_dual;
        if pair_sum > mu {
            violations.push(format!(
                "essential pair bound fails at m={m}: {essential} + {essential_dual} > {mu}"
            ));
        }
        let defect_pair = if m >= 0 && dual >= 0 {
            let d_m = defect(h, records, m as u32)?.defect;
            let d_dual = defect(h, records, dual as u32)?.defect;
            if d_m + d_dual > mu {
                violations.push(format!(
                    "defect pair bound fails at m={m}: {d_m} + {d_dual} > {mu}"
                ));
            }
            Some((d_m, d_dual, d_m + d_dual))
        } else {
            None
        };
        let milnor_bound_lhs = milnor_dim(h, m) as i64 + milnor_dim(h, t - m) as i64
            - 2 * smooth_hilbert(h.n(), h.degree(), m) as i64;
        if milnor_bound_lhs > mu as i64 {
            violations.push(format!(
                "Milnor-algebra bound fails at m={m}: {milnor_bound_lhs} > {mu}"
            ));
        }
        let half_bound = if 2 * m <= duality_top && m >= 0 {
            if 2 * essential > mu {
                violations.push(format!(
                    "small-degree half bound fails at m={m}: 2*{essential} > {mu}"
                ));
            }
            Some((essential, mu / 2))
        } else {
            None
        };
        rows.push(AuditRow {
            m,
            dual_degree: dual,
            essential,
            essential_dual,
            pair_sum,
            defect_pair,
            milnor_bound_lhs,
            half_bound,
        });
    }
    Ok(AuditReport {
        mu,
        tau,
        all_weighted_homogeneous: records.iter().all(|r| r.is_weighted_homogeneous()),
        rows,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::rat;

    #[test]
    fn cayley_degree_two_dims() {
        let (h, _) = fixtures::cayley();
        assert_eq!(syzygy_basis(&h, 2).len(), 9);
        assert_eq!(syzygy_dim(&h, 2), 9);
        assert_eq!(koszul_dim(&h, 2), 6);
        let dims = dims_by_formula(&h, 2);
        assert_eq!((dims.all, dims.koszul, dims.essential), (9, 6, 3));
        // jacobian matrix orientation: 35 x 40 with rank 31
        let mat = h.jacobian_matrix(2);
        assert_eq!((mat.rows(), mat.cols()), (35, 40));
        assert_eq!(mat.rank(), 31);
    }

    #[test]
    fn cayley_essential_stabilizes_at_mu() {
        let (h, _) = fixtures::cayley();
        assert_eq!(essential_dim(&h, 3), 4);
        assert_eq!(essential_dim(&h, 4), 4);
    }

    #[test]
    fn smooth_surface_has_no_essential_relations() {
        let (h, _) = fixtures::fermat_surface();
        assert!(syzygy_basis(&h, 0).is_empty());
        for m in 0..=4 {
            let dims = dims_by_formula(&h, m);
            assert_eq!(dims.essential, 0);
            assert_eq!(dims.all, syzygy_dim(&h, m as u32));
        }
    }

    #[test]
    fn line_arrangement_low_degrees_empty() {
        let (h, _) = fixtures::line_arrangement();
        assert!(syzygy_basis(&h, 1).is_empty());
        assert_eq!(koszul_dim(&h, 4), 0); // below N-1 = 5
    }

    #[test]
    fn koszul_dim_matches_formula() {
        let (h, _) = fixtures::cayley();
        for m in 0..=4u32 {
            assert_eq!(koszul_dim(&h, m), dims_by_formula(&h, m as i64).koszul);
        }
    }

    #[test]
    fn koszul_generators_verify() {
        let (h, _) = fixtures::cayley();
        let gens = koszul_generators(&h, 2);
        assert_eq!(gens.len(), 6); // C(4,2) pairs, one degree-0 multiplier
        for g in &gens {
            assert!(verify_syzygy(&h, g.components()));
        }
    }

    #[test]
    fn transversality_examples() {
        let (nodal, pts_nodal) = fixtures::cayley();
        assert!(!transversality_check(&nodal, 0, &pts_nodal));
        let (generic, pts_generic) = fixtures::cayley_generic();
        assert!(transversality_check(&generic, 0, &pts_generic));
        let (fermat, none) = fixtures::fermat_surface();
        for chart in 0..4 {
            assert!(transversality_check(&fermat, chart, &none));
        }
    }

    #[test]
    fn verify_syzygy_sign_sensitivity() {
        let (h, _) = fixtures::cayley();
        let s1 = fixtures::cayley_syzygies();
        assert!(verify_syzygy(&h, s1[0].components()));
        // flipping one sign breaks the relation
        let mut flipped: Vec<_> = s1[0].components().to_vec();
        flipped[0] = flipped[0].scale(&rat(-1));
        assert!(!verify_syzygy(&h, &flipped));
    }

    #[test]
    fn find_transversal_identity_first() {
        let (generic, pts) = fixtures::cayley_generic();
        let a = find_transversal_coordinates(&generic, &pts, 42).unwrap();
        assert_eq!(a, RatMatrix::identity(4));
    }

    #[test]
    fn find_transversal_seed_determinism() {
        let (nodal, pts) = fixtures::cayley();
        let a1 = find_transversal_coordinates(&nodal, &pts, 7).unwrap();
        let a2 = find_transversal_coordinates(&nodal, &pts, 7).unwrap();
        assert_eq!(a1, a2);
        assert_ne!(a1, RatMatrix::identity(4));
        // applying the change makes every chart transversal
        let f2 = crate::poly::linear_change(nodal.f(), &a1).unwrap();
        let h2 = Hypersurface::new(f2).unwrap();
        let pts2 = transform_points(&a1, &pts).unwrap();
        for chart in 0..4 {
            assert!(transversality_check(&h2, chart, &pts2));
        }
    }
}
