//! Reference hypersurfaces used across the test suite, the benchmarks, and
//! the CLI fixture corpus.

use crate::hypersurface::Hypersurface;
use crate::poly::{AffinePoly, HomogeneousPoly};
use crate::rational::{rat, Rational};
use crate::syzygy::SyzygyVector;

pub fn point(coords: &[i64]) -> Vec<Rational> {
    coords.iter().map(|&c| rat(c)).collect()
}

fn hp(num_vars: usize, terms: &[(i64, &[u32])]) -> HomogeneousPoly {
    HomogeneousPoly::from_integer_terms(num_vars, terms).expect("homogeneous fixture")
}

/// Cayley cubic surface xyz + xyw + xzw + yzw with its four nodes at the
/// coordinate points. No coordinate hyperplane is transversal here.
pub fn cayley() -> (Hypersurface, Vec<Vec<Rational>>) {
    let f = hp(
        4,
        &[
            (1, &[1, 1, 1, 0]),
            (1, &[1, 1, 0, 1]),
            (1, &[1, 0, 1, 1]),
            (1, &[0, 1, 1, 1]),
        ],
    );
    let points = vec![
        point(&[1, 0, 0, 0]),
        point(&[0, 1, 0, 0]),
        point(&[0, 0, 1, 0]),
        point(&[0, 0, 0, 1]),
    ];
    (Hypersurface::new(f).unwrap(), points)
}

/// The same Cayley cubic after a linear change of coordinates:
/// 4(x^3+y^3+z^3+w^3) - (x+y+z+w)^3, nodes at (-1:1:1:1) and permutations of
/// the minus sign. Every coordinate hyperplane is transversal.
pub fn cayley_generic() -> (Hypersurface, Vec<Vec<Rational>>) {
    let vars: Vec<AffinePoly> = (0..4).map(|i| AffinePoly::var(4, i)).collect();
    let mut cubes = AffinePoly::zero(4);
    for v in &vars {
        cubes = &cubes + &v.pow(3);
    }
    let mut sum = AffinePoly::zero(4);
    for v in &vars {
        sum = &sum + v;
    }
    let f = &cubes.scale(&rat(4)) - &sum.pow(3);
    let points = vec![
        point(&[-1, 1, 1, 1]),
        point(&[1, -1, 1, 1]),
        point(&[1, 1, -1, 1]),
        point(&[1, 1, 1, -1]),
    ];
    (
        Hypersurface::new(HomogeneousPoly::from_affine(&f).unwrap()).unwrap(),
        points,
    )
}

/// Sextic line arrangement (x^2-y^2)(x^2-z^2)(y^2-z^2): three nodes at the
/// coordinate points and four ordinary triple points at (1:±1:±1).
pub fn line_arrangement() -> (Hypersurface, Vec<Vec<Rational>>) {
    let sq = |i: usize, j: usize| {
        let a = AffinePoly::var(3, i);
        let b = AffinePoly::var(3, j);
        &a.pow(2) - &b.pow(2)
    };
    let f = &(&sq(0, 1) * &sq(0, 2)) * &sq(1, 2);
    let points = vec![
        point(&[1, 0, 0]),
        point(&[0, 1, 0]),
        point(&[0, 0, 1]),
        point(&[1, 1, 1]),
        point(&[1, 1, -1]),
        point(&[1, -1, 1]),
        point(&[1, -1, -1]),
    ];
    (
        Hypersurface::new(HomogeneousPoly::from_affine(&f).unwrap()).unwrap(),
        points,
    )
}

/// Smooth Fermat cubic surface.
pub fn fermat_surface() -> (Hypersurface, Vec<Vec<Rational>>) {
    let f = hp(
        4,
        &[
            (1, &[3, 0, 0, 0]),
            (1, &[0, 3, 0, 0]),
            (1, &[0, 0, 3, 0]),
            (1, &[0, 0, 0, 3]),
        ],
    );
    (Hypersurface::new(f).unwrap(), Vec::new())
}

/// Smooth Fermat cubic curve.
pub fn fermat_curve() -> (Hypersurface, Vec<Vec<Rational>>) {
    let f = hp(3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (1, &[0, 0, 3])]);
    (Hypersurface::new(f).unwrap(), Vec::new())
}

/// Nodal cubic curve x^3 + y^3 - xyz with one node at (0:0:1).
pub fn nodal_cubic() -> (Hypersurface, Vec<Vec<Rational>>) {
    let f = hp(3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (-1, &[1, 1, 1])]);
    (Hypersurface::new(f).unwrap(), vec![point(&[0, 0, 1])])
}

/// Quintic curve x^5 + x^2 y^2 z + y^5 whose only singular point (0:0:1) is
/// not weighted homogeneous (mu = 11, tau = 10).
pub fn quintic_non_wh() -> (Hypersurface, Vec<Vec<Rational>>) {
    let f = hp(3, &[(1, &[5, 0, 0]), (1, &[2, 2, 1]), (1, &[0, 5, 0])]);
    (Hypersurface::new(f).unwrap(), vec![point(&[0, 0, 1])])
}

/// The nine degree-two syzygies of the standard-coordinates Cayley cubic, as
/// listed by a computer algebra system (variables x, y, z, w).
pub fn cayley_syzygies() -> Vec<SyzygyVector> {
    let (h, _) = cayley();
    let xy: &[u32] = &[1, 1, 0, 0];
    let xz: &[u32] = &[1, 0, 1, 0];
    let xw: &[u32] = &[1, 0, 0, 1];
    let yz: &[u32] = &[0, 1, 1, 0];
    let yw: &[u32] = &[0, 1, 0, 1];
    let zw: &[u32] = &[0, 0, 1, 1];
    let x2: &[u32] = &[2, 0, 0, 0];
    let y2: &[u32] = &[0, 2, 0, 0];
    let z2: &[u32] = &[0, 0, 2, 0];
    let w2: &[u32] = &[0, 0, 0, 2];
    type Terms<'a> = Vec<(i64, &'a [u32])>;
    let listing: Vec<[Terms; 4]> = vec![
        // s_1
        [
            vec![(-2, xw), (-1, zw)],
            vec![(2, yz), (1, zw)],
            vec![(-2, z2), (-1, zw)],
            vec![(1, zw), (2, w2)],
        ],
        // s_2
        [
            vec![(-2, yz), (2, xw), (2, yw), (1, zw)],
            vec![(-2, yw), (-1, zw)],
            vec![(-2, yz), (-2, z2), (-2, yw), (-3, zw)],
            vec![(2, yz), (2, yw), (3, zw), (2, w2)],
        ],
        // s_3
        [
            vec![(1, xz), (-1, xw)],
            vec![(1, yz), (-1, yw)],
            vec![(-2, z2), (-1, zw)],
            vec![(1, zw), (2, w2)],
        ],
        // s_4
        [
            vec![(-2, xw), (-1, zw)],
            vec![(-2, xz), (2, xw), (2, yw), (1, zw)],
            vec![(-2, xz), (-2, z2), (-2, xw), (-3, zw)],
            vec![(2, xz), (2, xw), (3, zw), (2, w2)],
        ],
        // s_5
        [
            vec![(2, xw), (1, yw)],
            vec![(2, y2), (1, yw)],
            vec![(-2, yz), (-1, yw)],
            vec![(-1, yw), (-2, w2)],
        ],
        // s_6
        [
            vec![(2, xy), (4, xw), (3, yw)],
            vec![(2, y2), (1, yw)],
            vec![(-4, yz), (-3, yw), (-2, zw)],
            vec![(-1, yw), (-2, w2)],
        ],
        // s_7
        [
            vec![],
            vec![(1, xy), (1, xw), (1, yw)],
            vec![(-1, xz), (-1, xw), (-1, zw)],
            vec![],
        ],
        // s_8
        [
            vec![],
            vec![],
            vec![(-1, xy), (-1, xz), (-1, yz)],
            vec![(1, xy), (1, xw), (1, yw)],
        ],
        // s_9
        [
            vec![(2, x2), (1, xw)],
            vec![(2, xy), (3, xw), (4, yw)],
            vec![(-4, xz), (-3, xw), (-2, zw)],
            vec![(-1, xw), (-2, w2)],
        ],
    ];
    listing
        .into_iter()
        .map(|comps| {
            let components = comps
                .into_iter()
                .map(|terms| {
                    if terms.is_empty() {
                        HomogeneousPoly::zero(4, 2)
                    } else {
                        hp(4, &terms)
                    }
                })
                .collect();
            SyzygyVector::new(&h, components).expect("listed relation verifies")
        })
        .collect()
}

/// The first components t_1..t_9 of the degree-two syzygy basis in the
/// generic coordinates, as printed by a computer algebra system.
pub fn cayley_generic_first_components() -> Vec<HomogeneousPoly> {
    let xy: &[u32] = &[1, 1, 0, 0];
    let xz: &[u32] = &[1, 0, 1, 0];
    let xw: &[u32] = &[1, 0, 0, 1];
    let yz: &[u32] = &[0, 1, 1, 0];
    let yw: &[u32] = &[0, 1, 0, 1];
    let zw: &[u32] = &[0, 0, 1, 1];
    let x2: &[u32] = &[2, 0, 0, 0];
    let y2: &[u32] = &[0, 2, 0, 0];
    let z2: &[u32] = &[0, 0, 2, 0];
    let w2: &[u32] = &[0, 0, 0, 2];
    vec![
        hp(4, &[(-1, yz), (1, z2), (1, xw), (2, yw), (2, zw), (1, w2)]),
        hp(4, &[(2, xz), (3, yz), (3, z2), (1, xw), (6, zw), (3, w2)]),
        HomogeneousPoly::zero(4, 2),
        hp(
            4,
            &[
                (2, xy),
                (6, y2),
                (2, xz),
                (6, yz),
                (3, z2),
                (2, xw),
                (6, yw),
                (6, zw),
                (3, w2),
            ],
        ),
        hp(
            4,
            &[(-1, y2), (1, yz), (-1, xw), (-2, yw), (-2, zw), (-1, w2)],
        ),
        hp(4, &[(2, xy), (3, y2), (3, yz), (1, xw), (6, yw), (3, w2)]),
        hp(
            4,
            &[
                (3, x2),
                (8, xy),
                (-3, y2),
                (8, xz),
                (12, yz),
                (6, z2),
                (8, xw),
                (12, yw),
                (12, zw),
                (6, w2),
            ],
        ),
        hp(4, &[(1, y2), (-1, z2)]),
        hp(
            4,
            &[
                (4, x2),
                (8, xy),
                (3, y2),
                (8, xz),
                (5, yz),
                (4, z2),
                (11, xw),
                (14, yw),
                (14, zw),
                (-5, w2),
            ],
        ),
    ]
}
