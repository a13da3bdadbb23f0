//! Graded pieces of the Jacobian ideal and Hilbert functions of the Milnor
//! algebra M(f) = S/J_f.
//!
//! The stabilized value of dim M(f)_k is the global Tjurina number tau(V),
//! which the crate uses as the completeness certificate for user-supplied
//! singular point lists.

use crate::error::{Error, Result};
use crate::hypersurface::Hypersurface;
use crate::par;
use crate::poly::{dim_graded, HomogeneousPoly};

/// Degree-indexed dimensions of M(f), with optional stabilization metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    values: Vec<usize>,
    stable_value: Option<usize>,
    stable_from: Option<usize>,
}

impl HilbertTable {
    pub fn new(values: Vec<usize>) -> Self {
        HilbertTable {
            values,
            stable_value: None,
            stable_from: None,
        }
    }

    pub fn with_stabilization(values: Vec<usize>, stable_value: usize, stable_from: usize) -> Self {
        debug_assert!(
            values
                .get(stable_from..)
                .is_none_or(|tail| tail.iter().all(|&v| v == stable_value)),
            "tabulated values must sit at the stable value from {stable_from} on"
        );
        HilbertTable {
            values,
            stable_value: Some(stable_value),
            stable_from: Some(stable_from),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// dim M(f)_k; falls back to the stable value beyond the tabulated range.
    pub fn value(&self, k: usize) -> Option<usize> {
        self.values
            .get(k)
            .copied()
            .or(match (self.stable_value, self.stable_from) {
                (Some(v), Some(from)) if k >= from => Some(v),
                _ => None,
            })
    }

    pub fn stable_value(&self) -> Option<usize> {
        self.stable_value
    }

    pub fn stable_from(&self) -> Option<usize> {
        self.stable_from
    }
}

/// dim (J_f)_k; zero below degree N-1.
pub fn jacobian_piece_dim(h: &Hypersurface, k: i64) -> usize {
    let shift = h.degree() as i64 - 1;
    if k < shift {
        return 0;
    }
    h.jacobian_matrix((k - shift) as u32).rank()
}

/// dim M(f)_k = dim S_k - dim (J_f)_k; zero for negative k.
pub fn milnor_dim(h: &Hypersurface, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    dim_graded(h.num_vars(), k) - jacobian_piece_dim(h, k)
}

/// Hilbert function of M(f) on 0..=k_max (degrees computed independently).
pub fn milnor_hilbert(h: &Hypersurface, k_max: usize) -> HilbertTable {
    let ks: Vec<i64> = (0..=k_max as i64).collect();
    HilbertTable::new(par::map_collect(ks, |k| milnor_dim(h, k)))
}

/// Coefficients of ((1-t^{N-1})/(1-t))^{n+1}, the Hilbert series of the
/// Milnor algebra of a smooth degree-N hypersurface in P^n.
pub fn smooth_series(n: usize, degree: u32) -> Vec<usize> {
    assert!(degree >= 2, "hypersurface degree must be at least 2");
    let block = degree as usize - 1; // 1 + t + .. + t^{N-2}
    let mut acc = vec![1usize];
    for _ in 0..=n {
        let mut next = vec![0usize; acc.len() + block - 1];
        for (i, &a) in acc.iter().enumerate() {
            for j in 0..block {
                next[i + j] += a;
            }
        }
        acc = next;
    }
    acc
}

/// Coefficient of t^k in the smooth Hilbert series; zero beyond the socle
/// degree (n+1)(N-2).
pub fn smooth_hilbert(n: usize, degree: u32, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    smooth_series(n, degree)
        .get(k as usize)
        .copied()
        .unwrap_or(0)
}

/// Exact smoothness test: the Jacobian ring of a smooth hypersurface in v
/// variables vanishes in degree v(N-2)+1, and a standard graded algebra that
/// vanishes in one degree vanishes in all higher ones. Linear forms are
/// smooth by convention; the zero polynomial is not smooth.
pub fn projective_smoothness(p: &HomogeneousPoly) -> bool {
    if p.is_zero() {
        return false;
    }
    if p.degree() <= 1 {
        return true;
    }
    let v = p.num_vars();
    let target = (v as i64) * (p.degree() as i64 - 2) + 1;
    let h = Hypersurface::new(p.clone()).expect("nonzero, degree >= 2");
    milnor_dim(&h, target) == 0
}

/// Scan dim M(f)_k upward from T = (n+1)(N-2) until it is constant over a
/// window of n+1 consecutive degrees; the constant is tau(V) = deg Y.
///
/// Returns (tau, first degree of the window). Fails after T + 3(n+1) with a
/// non-isolated-singularities diagnostic.
pub fn stabilized_tjurina(h: &Hypersurface) -> Result<(usize, usize)> {
    let n = h.n();
    let t = (n as i64 + 1) * (h.degree() as i64 - 2);
    let limit = t + 3 * (n as i64 + 1);
    let window = n + 1;
    let first: Vec<i64> = (t..t + window as i64).collect();
    let mut values = par::map_collect(first, |k| milnor_dim(h, k));
    let mut next = t + window as i64;
    loop {
        let tail = &values[values.len() - window..];
        if tail.iter().all(|&v| v == tail[0]) {
            let start = t as usize + values.len() - window;
            return Ok((tail[0], start));
        }
        if next > limit {
            return Err(Error::NoStabilization);
        }
        values.push(milnor_dim(h, next));
        next += 1;
    }
}
