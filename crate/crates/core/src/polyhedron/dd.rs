//! Double-description conversion for homogeneous cones.
//!
//! Computes a minimal generating set (extreme rays modulo the lineality
//! space, plus a lineality basis) of `{x : A x >= 0, E x = 0}`. All
//! arithmetic is fraction-free over big integers; every generator is
//! kept primitive.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactq::{primitive_bigint, primitive_integer, QMatrix, QVector};

#[derive(Debug, Clone, Default)]
pub(crate) struct ConeGenerators {
    pub rays: Vec<Vec<BigInt>>,
    pub lines: Vec<Vec<BigInt>>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// `alpha * x - beta * y`, made primitive.
fn combine(alpha: &BigInt, x: &[BigInt], beta: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    primitive_bigint(x.iter().zip(y).map(|(a, b)| alpha * a - beta * b).collect())
}

/// Bitset over processed constraint indices.
#[derive(Clone, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn with_capacity(n: usize) -> Self {
        ZeroSet(alloc::vec![0; n.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

fn initial_lines(dim: usize, equalities: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if equalities.is_empty() {
        return (0..dim)
            .map(|i| {
                let mut v = alloc::vec![BigInt::zero(); dim];
                v[i] = BigInt::from(1);
                v
            })
            .collect();
    }
    let m = QMatrix::new(
        equalities
            .iter()
            .map(|r| crate::exactq::to_rationals(r))
            .collect(),
        dim,
    );
    m.kernel_basis()
        .iter()
        .map(|v: &QVector| primitive_integer(v.coords()))
        .collect()
}

pub(crate) fn cone_generators(
    dim: usize,
    inequalities: &[Vec<BigInt>],
    equalities: &[Vec<BigInt>],
) -> ConeGenerators {
    let mut lines = initial_lines(dim, equalities);
    let mut rays: Vec<Vec<BigInt>> = Vec::new();

    let mut order: Vec<Vec<BigInt>> = inequalities
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .map(|r| primitive_bigint(r.clone()))
        .collect();
    order.sort();
    order.dedup();

    let mut processed: Vec<&[BigInt]> = Vec::with_capacity(order.len());
    for a in &order {
        if let Some(k) = lines.iter().position(|l| !dot(a, l).is_zero()) {
            let mut pivot = lines.remove(k);
            let mut ap = dot(a, &pivot);
            if ap.is_negative() {
                pivot.iter_mut().for_each(|c| *c = -&*c);
                ap = -ap;
            }
            for g in lines.iter_mut().chain(rays.iter_mut()) {
                let ag = dot(a, g);
                if !ag.is_zero() {
                    *g = combine(&ap, g, &ag, &pivot);
                }
            }
            rays.push(pivot);
        } else {
            let values: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
            if values.iter().any(|v| v.is_negative()) {
                let zero_sets: Vec<ZeroSet> = rays
                    .iter()
                    .map(|r| {
                        let mut z = ZeroSet::with_capacity(order.len());
                        for (i, b) in processed.iter().enumerate() {
                            if dot(b, r).is_zero() {
                                z.insert(i);
                            }
                        }
                        z
                    })
                    .collect();
                let mut next: Vec<Vec<BigInt>> = Vec::new();
                for (r, v) in rays.iter().zip(&values) {
                    if !v.is_negative() {
                        next.push(r.clone());
                    }
                }
                for (p, vp) in values.iter().enumerate() {
                    if !vp.is_positive() {
                        continue;
                    }
                    for (n, vn) in values.iter().enumerate() {
                        if !vn.is_negative() {
                            continue;
                        }
                        let common = zero_sets[p].intersection(&zero_sets[n]);
                        let adjacent = (0..rays.len())
                            .filter(|&r| r != p && r != n)
                            .all(|r| !common.is_subset_of(&zero_sets[r]));
                        if adjacent {
                            next.push(combine(vp, &rays[n], vn, &rays[p]));
                        }
                    }
                }
                next.sort();
                next.dedup();
                rays = next;
            }
        }
        processed.push(a);
    }
    rays.sort();
    ConeGenerators { rays, lines }
}
