//! Explicit low-order invariants and covariants of two vectors, with
//! numeric equivariance checks against sampled rotations.

use crate::rotation::{rotation, Matrix3, RotationParams};

pub type Vec3 = [f64; 3];
/// Component order of the quadratic quintets:
/// (2zz' - xx' - yy', xz' + zx', yz' + zy', xy' + yx', xx' - yy').
pub type Quintet = [f64; 5];

/// Two spatial vectors, the configuration space of the N=2 catalog.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VectorPair {
    pub v1: Vec3,
    pub v2: Vec3,
}

impl VectorPair {
    pub fn new(v1: Vec3, v2: Vec3) -> Self {
        VectorPair { v1, v2 }
    }

    pub fn rotated(&self, m: &Matrix3) -> Self {
        VectorPair {
            v1: apply(m, &self.v1),
            v2: apply(m, &self.v2),
        }
    }
}

pub fn apply(m: &Matrix3, v: &Vec3) -> Vec3 {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// The three primary invariants: |v1|^2, |v2|^2, v1.v2. They generate the
/// full invariant ring of two vectors.
pub fn primary_invariants(p: &VectorPair) -> (f64, f64, f64) {
    (dot(&p.v1, &p.v1), dot(&p.v2, &p.v2), dot(&p.v1, &p.v2))
}

/// The (1)-covariant generators: the two vectors themselves and their
/// cross product (a pseudovector, degree two).
pub fn l1_covariants(p: &VectorPair) -> [Vec3; 3] {
    [p.v1, p.v2, cross(&p.v1, &p.v2)]
}

/// Quadratic quintet built from a pair of (possibly equal) vectors.
fn quintet(a: &Vec3, b: &Vec3) -> Quintet {
    [
        2.0 * a[2] * b[2] - a[0] * b[0] - a[1] * b[1],
        a[0] * b[2] + a[2] * b[0],
        a[1] * b[2] + a[2] * b[1],
        a[0] * b[1] + a[1] * b[0],
        a[0] * b[0] - a[1] * b[1],
    ]
}

/// The three degree-two (2)-covariant quintets: one from each vector alone
/// and the mixed one.
pub fn l2_covariants(p: &VectorPair) -> [Quintet; 3] {
    [
        quintet(&p.v1, &p.v1),
        quintet(&p.v2, &p.v2),
        quintet(&p.v1, &p.v2),
    ]
}

/// Rotation sampled from seeded uniform parameters, for reproducible
/// equivariance checks.
pub fn sample_rotation<R: rand::Rng>(rng: &mut R) -> Matrix3 {
    use std::f64::consts::PI;
    let params = RotationParams::new(
        rng.gen_range(0.0..2.0 * PI),
        rng.gen_range(0.0..PI),
        rng.gen_range(0.0..PI),
    );
    rotation(params)
}

pub fn sample_pair<R: rand::Rng>(rng: &mut R) -> VectorPair {
    let mut v = || {
        [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ]
    };
    let v1 = v();
    let v2 = v();
    VectorPair::new(v1, v2)
}

/// Rank of a real matrix (rows x cols) by Gaussian elimination with a
/// pivot threshold.
pub fn numeric_rank(mut rows: Vec<Vec<f64>>, tol: f64) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows)
            .max_by(|&i, &j| rows[i][col].abs().total_cmp(&rows[j][col].abs()))
            .unwrap();
        if rows[pivot][col].abs() <= tol {
            col += 1;
            continue;
        }
        rows.swap(pivot, rank);
        let (upper, lower) = rows.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        for row in lower {
            let f = row[col] / pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Span-closure check for the (2)-covariants. Each quintet component is a
/// function of the vector pair; under a rotation the five components of one
/// quintet must transform among themselves. Sampling the functions on a set
/// of configurations, every rotated component function has to lie in the
/// row span of the unrotated ones, which confirms the quintets carry the
/// (2) representation without fixing a component ordering or normalization.
pub fn l2_span_closure(samples: &[VectorPair], m: &Matrix3, tol: f64) -> bool {
    for family in 0..3 {
        let base: Vec<Vec<f64>> = (0..5)
            .map(|k| {
                samples
                    .iter()
                    .map(|p| l2_covariants(p)[family][k])
                    .collect()
            })
            .collect();
        let base_rank = numeric_rank(base.clone(), tol);
        for k in 0..5 {
            let rotated: Vec<f64> = samples
                .iter()
                .map(|p| l2_covariants(&p.rotated(m))[family][k])
                .collect();
            let mut rows = base.clone();
            rows.push(rotated);
            if numeric_rank(rows, tol) != base_rank {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::molien::{molien_so3, MolienQuery};
    use num_traits::ToPrimitive;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const EX: Vec3 = [1.0, 0.0, 0.0];
    const EY: Vec3 = [0.0, 1.0, 0.0];
    const EZ: Vec3 = [0.0, 0.0, 1.0];

    #[test]
    fn vector_algebra() {
        assert_eq!(dot(&[1.0, 2.0, 3.0], &[4.0, -5.0, 6.0]), 12.0);
        assert_eq!(cross(&EX, &EY), EZ);
        assert_eq!(cross(&[2.0, 0.0, 0.0], &[4.0, 0.0, 0.0]), [0.0; 3]);
    }

    #[test]
    fn primary_invariants_are_rotation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = sample_pair(&mut rng);
        let m = sample_rotation(&mut rng);
        let (a, b, c) = primary_invariants(&p);
        let (ra, rb, rc) = primary_invariants(&p.rotated(&m));
        assert!((a - ra).abs() < 1e-12);
        assert!((b - rb).abs() < 1e-12);
        assert!((c - rc).abs() < 1e-12);
    }

    #[test]
    fn l1_covariants_are_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = sample_pair(&mut rng);
        let m = sample_rotation(&mut rng);
        let before = l1_covariants(&p);
        let after = l1_covariants(&p.rotated(&m));
        for (v, w) in before.iter().zip(&after) {
            let rv = apply(&m, v);
            for i in 0..3 {
                assert!((rv[i] - w[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn quintet_axis_values() {
        let p = VectorPair::new(EZ, EZ);
        assert_eq!(l2_covariants(&p)[0], [2.0, 0.0, 0.0, 0.0, 0.0]);
        let q = VectorPair::new(EX, EX);
        assert_eq!(l2_covariants(&q)[0], [-1.0, 0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn numeric_rank_basics() {
        let rows = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 1.0, 0.0],
        ];
        assert_eq!(numeric_rank(rows, 1e-12), 2);
        assert_eq!(numeric_rank(vec![], 1e-12), 0);
        assert_eq!(numeric_rank(vec![vec![0.0, 0.0]], 1e-12), 0);
    }

    #[test]
    fn quintet_count_matches_generating_function() {
        // The generating function counts three independent degree-two
        // (2)-covariant multiplets of two vectors.
        let expected = molien_so3(MolienQuery::new(2, 2))
            .series(2)
            .coeff(2)
            .to_f64()
            .unwrap();
        assert_eq!(expected, 3.0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let samples: Vec<VectorPair> = (0..8).map(|_| sample_pair(&mut rng)).collect();
        let rows: Vec<Vec<f64>> = (0..3)
            .map(|family| {
                samples
                    .iter()
                    .flat_map(|p| l2_covariants(p)[family])
                    .collect()
            })
            .collect();
        assert_eq!(numeric_rank(rows, 1e-9), 3);
    }

    #[test]
    fn span_closure_on_sampled_rotations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let samples: Vec<VectorPair> = (0..8).map(|_| sample_pair(&mut rng)).collect();
        for _ in 0..10 {
            let m = sample_rotation(&mut rng);
            assert!(l2_span_closure(&samples, &m, 1e-9));
        }
    }
}
