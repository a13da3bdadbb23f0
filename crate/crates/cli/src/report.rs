//! Full analysis pipeline and the JSON report.
//!
//! All rationals are serialized as exact "p/q" strings, all dimensions as
//! integers; field order is fixed by struct declaration, and every quantity
//! is a deterministic function of the input and the seed.

use serde::Serialize;

use syzygy_core::germ::{build_records_auto, build_records_in_chart, SingularPointRecord};
use syzygy_core::matrix::RatMatrix;
use syzygy_core::milnor::{milnor_hilbert, smooth_series, stabilized_tjurina};
use syzygy_core::poly::linear_change;
use syzygy_core::rational::Rational;
use syzygy_core::syzygy::{
    audit_inequalities, defect, dims_from_milnor_value, find_transversal_coordinates, koszul_dim,
    split_basis, syzygy_dim, transform_points, transversality_reason, SyzygyVector,
};
use syzygy_core::Hypersurface;

use crate::input::Problem;

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub chart: usize,
    pub seed: u64,
    pub m_range: Option<(i64, i64)>,
    /// SYZYGY_MAX_DEGREE override; defaults to nN-2n-1+2.
    pub max_degree: Option<i64>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub hilbert: HilbertSection,
    pub points: Vec<PointSection>,
    pub degrees: Vec<DegreeRow>,
    pub split: Vec<SplitSection>,
    pub audit: AuditSection,
    pub certificates: Certificates,
}

#[derive(Serialize)]
pub struct InputEcho {
    pub variables: Vec<String>,
    pub f: String,
    pub degree: u32,
    pub dimension: usize,
    pub points: Vec<Vec<String>>,
    pub chart: usize,
    pub seed: u64,
    pub m_range: [i64; 2],
    pub split_range: [i64; 2],
    pub max_degree_cap: i64,
    /// Coordinate change applied when the requested chart was not
    /// transversal (rows of the matrix, exact entries).
    pub coordinate_change: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
pub struct HilbertSection {
    pub milnor: Vec<usize>,
    pub smooth: Vec<usize>,
    pub stable_value: usize,
    pub stable_from: usize,
    /// Width of the constant window used to certify stabilization (n+1).
    pub stabilization_window: usize,
}

#[derive(Serialize)]
pub struct PointSection {
    pub coords: Vec<String>,
    pub chart: usize,
    pub mu: usize,
    pub tau: usize,
    pub weighted_homogeneous: bool,
}

#[derive(Serialize)]
pub struct DegreeRow {
    pub m: i64,
    pub all: usize,
    pub koszul: usize,
    pub essential: usize,
    pub all_matrix: usize,
    pub koszul_matrix: usize,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct SplitSection {
    pub m: i64,
    pub all: usize,
    pub kernel: usize,
    pub essential: usize,
    pub koszul_rank: usize,
    pub kernel_matches_koszul: bool,
    pub koszul_basis: Vec<Vec<String>>,
    pub essential_representatives: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct DefectRowOut {
    pub m: i64,
    pub quotient_dim: usize,
    pub defect: usize,
    pub dual_degree: i64,
    pub dual_essential: usize,
    /// defect == dual essential dimension; checked only when every
    /// singularity is weighted homogeneous.
    pub duality_holds: Option<bool>,
}

#[derive(Serialize)]
pub struct AuditRowOut {
    pub m: i64,
    pub dual: i64,
    pub essential: usize,
    pub essential_dual: usize,
    pub pair_sum: usize,
    pub defect_sum: Option<usize>,
    pub milnor_lhs: i64,
    pub half_bound: Option<[usize; 2]>,
}

#[derive(Serialize)]
pub struct AuditSection {
    /// The inequalities are theorems only for weighted homogeneous
    /// singularities; rows are evaluated only in that case.
    pub applicable: bool,
    pub mu: usize,
    pub tau: usize,
    pub defect_table: Vec<DefectRowOut>,
    pub rows: Vec<AuditRowOut>,
    pub violations: Vec<String>,
}

#[derive(Serialize)]
pub struct CompletenessCert {
    pub sum_tau: usize,
    pub sum_mu: usize,
    pub stabilized_tau: usize,
    pub stable_from: usize,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct TransversalityCert {
    pub chart: usize,
    pub ok_without_change: bool,
    pub used_coordinate_change: bool,
}

#[derive(Serialize)]
pub struct Certificates {
    pub completeness: CompletenessCert,
    pub transversality: TransversalityCert,
    pub formula_matrix_agreement: bool,
    /// With weighted homogeneous singularities and a transversal chart the
    /// kernel must equal the Koszul span in every degree; None when some
    /// singularity is not weighted homogeneous.
    pub theorem_forward_consistent: Option<bool>,
    pub ok: bool,
}

fn rational_string(r: &Rational) -> String {
    r.to_string()
}

fn point_strings(q: &[Rational]) -> Vec<String> {
    q.iter().map(rational_string).collect()
}

fn syzygy_strings(s: &SyzygyVector, names: &[&str]) -> Vec<String> {
    s.components()
        .iter()
        .map(|c| c.to_expression(names))
        .collect()
}

pub fn analyze(problem: &Problem, opts: &AnalyzeOptions) -> Result<AnalysisReport, String> {
    let h = &problem.hypersurface;
    let n = h.n() as i64;
    let degree = h.degree() as i64;
    let duality_top = n * degree - 2 * n - 1;
    let split_top = n * (degree - 2);
    let socle = (n + 1) * (degree - 2);
    let cap = opts.max_degree.unwrap_or(duality_top + 2).max(0);
    let (lo, hi) = opts.m_range.unwrap_or((0, duality_top));
    let (lo, hi) = (lo.max(0), hi.min(cap));
    let split_hi = split_top.min(cap);
    let names: Vec<&str> = problem.names.iter().map(String::as_str).collect();

    // stabilization and per-point analysis in the original coordinates
    let (stab_tau, stable_from) =
        stabilized_tjurina(h).map_err(|e| format!("stabilization scan failed: {e}"))?;
    let base_records = build_records_auto(h, &problem.points, opts.chart)
        .map_err(|e| format!("local analysis failed: {e}"))?;
    let sum_tau: usize = base_records.iter().map(SingularPointRecord::tau).sum();
    let sum_mu: usize = base_records.iter().map(SingularPointRecord::mu).sum();
    let completeness_ok = sum_tau == stab_tau;
    let all_wh = base_records
        .iter()
        .all(SingularPointRecord::is_weighted_homogeneous);

    // working coordinates for the splitting
    let chart = opts.chart;
    let direct_reason = transversality_reason(h, chart, &problem.points);
    let (work_h, work_points, change): (Hypersurface, Vec<Vec<Rational>>, Option<RatMatrix>) =
        match direct_reason {
            None => (h.clone(), problem.points.clone(), None),
            Some(_) => {
                let a = find_transversal_coordinates(h, &problem.points, opts.seed)
                    .map_err(|e| e.to_string())?;
                let f2 = linear_change(h.f(), &a).map_err(|e| e.to_string())?;
                let h2 = Hypersurface::new(f2).map_err(|e| e.to_string())?;
                let pts2 = transform_points(&a, &problem.points).map_err(|e| e.to_string())?;
                (h2, pts2, Some(a))
            }
        };
    let work_records = build_records_in_chart(&work_h, &work_points, chart)
        .map_err(|e| format!("local analysis in the working chart failed: {e}"))?;

    // Hilbert table of M(f), long enough for every later consumer; the
    // stabilization metadata lets value() extend past the tabulated range
    let k_max = (stable_from as i64 + n)
        .max(hi + degree - 1)
        .max(socle)
        .max(0) as usize;
    let table = HilbertTable::with_stabilization(
        milnor_hilbert(h, k_max).values().to_vec(),
        stab_tau,
        stable_from,
    );
    let mut smooth = smooth_series(h.n(), h.degree());
    smooth.resize(k_max + 1, 0);

    // per-degree dimensions: formulas against matrices
    let mut degrees = Vec::new();
    for m in lo..=hi {
        let milnor_at = table
            .value((m + degree - 1) as usize)
            .expect("table covers the range");
        let dims = dims_from_milnor_value(h.n(), h.degree(), m, milnor_at);
        let all_matrix = syzygy_dim(h, m as u32);
        let koszul_matrix = koszul_dim(h, m as u32);
        degrees.push(DegreeRow {
            m,
            all: dims.all,
            koszul: dims.koszul,
            essential: dims.essential,
            all_matrix,
            koszul_matrix,
            agree: dims.all == all_matrix && dims.koszul == koszul_matrix,
        });
    }
    let formula_matrix_agreement = degrees.iter().all(|r| r.agree);

    // splitting scan (one degree past the duality range, up to n(N-2))
    let mut split = Vec::new();
    for m in 0..=split_hi {
        let result = split_basis(&work_h, m as u32, &work_records, chart)
            .map_err(|e| format!("split at degree {m} failed: {e}"))?;
        split.push(SplitSection {
            m,
            all: result.dims.all,
            kernel: result.dims.koszul,
            essential: result.dims.essential,
            koszul_rank: result.koszul_rank,
            kernel_matches_koszul: result.kernel_matches_koszul,
            koszul_basis: result
                .koszul_basis
                .iter()
                .map(|s| syzygy_strings(s, &names))
                .collect(),
            essential_representatives: result
                .essential_representatives
                .iter()
                .map(|s| syzygy_strings(s, &names))
                .collect(),
        });
    }
    let theorem_forward_consistent = if all_wh {
        Some(split.iter().all(|s| s.kernel_matches_koszul))
    } else {
        None
    };

    // defect table with the duality check on the WH corpus; empty for a
    // smooth hypersurface
    let mut violations = Vec::new();
    let mut defect_table = Vec::new();
    if !work_records.is_empty() {
        for m in lo..=hi {
            let row = defect(&work_h, &work_records, m as u32).map_err(|e| e.to_string())?;
            let duality_holds = all_wh.then_some(row.defect == row.dual_essential_dim);
            if duality_holds == Some(false) {
                violations.push(format!(
                    "defect duality fails at m={m}: defect {} vs dual essential {}",
                    row.defect, row.dual_essential_dim
                ));
            }
            defect_table.push(DefectRowOut {
                m,
                quotient_dim: row.quotient_dim,
                defect: row.defect,
                dual_degree: row.dual_degree,
                dual_essential: row.dual_essential_dim,
                duality_holds,
            });
        }
    }

    // inequality audit (theorems under the WH hypothesis)
    let (audit_rows, audit_violations) = if all_wh {
        let report =
            audit_inequalities(&work_h, &work_records, lo..=hi).map_err(|e| e.to_string())?;
        let rows = report
            .rows
            .iter()
            .map(|r| AuditRowOut {
                m: r.m,
                dual: r.dual_degree,
                essential: r.essential,
                essential_dual: r.essential_dual,
                pair_sum: r.pair_sum,
                defect_sum: r.defect_pair.map(|(_, _, s)| s),
                milnor_lhs: r.milnor_bound_lhs,
                half_bound: r.half_bound.map(|(a, b)| [a, b]),
            })
            .collect();
        (rows, report.violations)
    } else {
        (Vec::new(), Vec::new())
    };
    violations.extend(audit_violations.iter().cloned());

    let ok = completeness_ok
        && formula_matrix_agreement
        && violations.is_empty()
        && theorem_forward_consistent.unwrap_or(true);

    Ok(AnalysisReport {
        input: InputEcho {
            variables: problem.names.clone(),
            f: problem.f_text.clone(),
            degree: h.degree(),
            dimension: h.n(),
            points: problem.points.iter().map(|q| point_strings(q)).collect(),
            chart,
            seed: opts.seed,
            m_range: [lo, hi],
            split_range: [0, split_hi],
            max_degree_cap: cap,
            coordinate_change: change.as_ref().map(|a| {
                (0..a.rows())
                    .map(|r| (0..a.cols()).map(|c| rational_string(a.at(r, c))).collect())
                    .collect()
            }),
        },
        hilbert: HilbertSection {
            milnor: table.values().to_vec(),
            smooth,
            stable_value: stab_tau,
            stable_from,
            stabilization_window: h.n() + 1,
        },
        points: base_records
            .iter()
            .map(|r| PointSection {
                coords: point_strings(r.point()),
                chart: r.chart(),
                mu: r.mu(),
                tau: r.tau(),
                weighted_homogeneous: r.is_weighted_homogeneous(),
            })
            .collect(),
        degrees,
        split,
        audit: AuditSection {
            applicable: all_wh,
            mu: sum_mu,
            tau: sum_tau,
            defect_table,
            rows: audit_rows,
            violations: violations.clone(),
        },
        certificates: Certificates {
            completeness: CompletenessCert {
                sum_tau,
                sum_mu,
                stabilized_tau: stab_tau,
                stable_from,
                ok: completeness_ok,
            },
            transversality: TransversalityCert {
                chart,
                ok_without_change: direct_reason.is_none(),
                used_coordinate_change: change.is_some(),
            },
            formula_matrix_agreement,
            theorem_forward_consistent,
            ok,
        },
    })
}

pub fn to_json(report: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn print_human(report: &AnalysisReport) {
    let i = &report.input;
    println!("f = {} (degree {}, P^{})", i.f, i.degree, i.dimension);
    println!(
        "hilbert M(f): {}  (stable value {} from degree {}, window {})",
        join(&report.hilbert.milnor),
        report.hilbert.stable_value,
        report.hilbert.stable_from,
        report.hilbert.stabilization_window
    );
    println!("hilbert smooth reference: {}", join(&report.hilbert.smooth));
    for (idx, p) in report.points.iter().enumerate() {
        println!(
            "point #{idx} [{}]: mu={} tau={} WH={}",
            p.coords.join(","),
            p.mu,
            p.tau,
            if p.weighted_homogeneous { "yes" } else { "no" }
        );
    }
    let c = &report.certificates.completeness;
    println!(
        "completeness: sum tau = {} vs stabilized {} -> {}",
        c.sum_tau,
        c.stabilized_tau,
        if c.ok { "ok" } else { "FAILED" }
    );
    let t = &report.certificates.transversality;
    println!(
        "transversality: chart {}{}",
        t.chart,
        if t.used_coordinate_change {
            " (after a coordinate change)"
        } else {
            ""
        }
    );
    println!("m:  all koszul essential | matrix(all koszul) agree");
    for d in &report.degrees {
        println!(
            "{:>2}: {:>4} {:>6} {:>9} | {:>10} {:>6}  {}",
            d.m,
            d.all,
            d.koszul,
            d.essential,
            d.all_matrix,
            d.koszul_matrix,
            if d.agree { "ok" } else { "MISMATCH" }
        );
    }
    for s in &report.split {
        println!(
            "split m={}: dims ({}, {}, {}), koszul rank {}, kernel {} koszul span",
            s.m,
            s.all,
            s.kernel,
            s.essential,
            s.koszul_rank,
            if s.kernel_matches_koszul {
                "matches"
            } else {
                "EXCEEDS"
            }
        );
    }
    if report.audit.applicable {
        for row in &report.audit.rows {
            println!(
                "audit m={}: essential pair {} <= {}, milnor lhs {} <= {}{}",
                row.m,
                row.pair_sum,
                report.audit.mu,
                row.milnor_lhs,
                report.audit.mu,
                row.half_bound
                    .map(|[e, b]| format!(", small-degree bound {e} <= {b}"))
                    .unwrap_or_default()
            );
        }
    } else {
        println!("audit: not applicable (a singularity is not weighted homogeneous)");
    }
    for v in &report.audit.violations {
        println!("VIOLATION: {v}");
    }
    println!(
        "result: {}",
        if report.certificates.ok {
            "consistent"
        } else {
            "INCONSISTENT"
        }
    );
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
