//! Partition-lattice sieve for equivariant configuration spaces.
//!
//! `X^n` decomposes into locally closed diagonal strata indexed by set
//! partitions of the coordinates: the stratum of a partition is the locus
//! where coordinates agree exactly within its blocks, and is a configuration
//! space of as many distinct points as the partition has blocks. Inverting
//! that relation over the lattice (coarsest partitions first) isolates the
//! open stratum, which is F(X, n).
//!
//! With an involution exchanging two coordinates the bookkeeping refines:
//! invariant partitions contribute their own equivariant value, while a
//! partition and its image pair up into a stratum whose classes are freely
//! exchanged, contributing the regular representation `1 + eps` times the
//! plain Serre polynomial of the stratum.

use crate::equivrep::{equivariant_square, EquivPoly2};
use crate::qalgebra::QPoly;

/// A set partition of `{0, .., n-1}` in canonical form: blocks sorted by
/// minimum element, elements sorted within each block.
type Partition = Vec<Vec<usize>>;

fn canonicalize(mut blocks: Partition) -> Partition {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

/// All set partitions of `{0, .., n-1}`, via restricted growth strings.
fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut p: Partition = vec![Vec::new(); blocks];
        for (elem, &b) in rgs.iter().enumerate() {
            p[b].push(elem);
        }
        out.push(canonicalize(p));
        // next restricted growth string
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if i == 0 {
                return out;
            }
            let cap = rgs[..i].iter().copied().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Does `a` refine `b` (every block of `a` lies inside a block of `b`)?
fn refines(a: &Partition, b: &Partition) -> bool {
    let mut owner = vec![0usize; b.iter().map(|blk| blk.len()).sum()];
    for (i, blk) in b.iter().enumerate() {
        for &e in blk {
            owner[e] = i;
        }
    }
    a.iter()
        .all(|blk| blk.iter().all(|&e| owner[e] == owner[blk[0]]))
}

/// Image of a partition under the transposition of elements `i` and `j`.
fn apply_swap(p: &Partition, i: usize, j: usize) -> Partition {
    let swapped = p
        .iter()
        .map(|blk| {
            blk.iter()
                .map(|&e| {
                    if e == i {
                        j
                    } else if e == j {
                        i
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    canonicalize(swapped)
}

/// Plain Serre polynomial of the configuration space F(X, m).
fn config_space(x: &QPoly, m: usize) -> QPoly {
    (0..m as i64).fold(QPoly::one(), |acc, i| &acc * &(x - &QPoly::constant(i)))
}

/// Equivariant value of the closed diagonal stratum of an invariant
/// partition: `X^blocks` with the involution permuting the blocks. With f
/// fixed blocks and t exchanged block pairs this is
/// `Serre(X)^f * Serre_2(X^2)^t`.
fn closed_stratum(x: &QPoly, p: &Partition, i: usize, j: usize) -> EquivPoly2 {
    let image = apply_swap(p, i, j);
    debug_assert_eq!(&image, p, "closed_stratum needs an invariant partition");
    let mut fixed = 0u32;
    let mut exchanged_pairs = 0u32;
    for blk in p {
        let blk_image: Vec<usize> = blk
            .iter()
            .map(|&e| if e == i { j } else if e == j { i } else { e })
            .collect();
        let mut blk_image = blk_image;
        blk_image.sort_unstable();
        if &blk_image == blk {
            fixed += 1;
        } else {
            exchanged_pairs += 1; // counts each pair twice
        }
    }
    debug_assert!(exchanged_pairs % 2 == 0);
    let mut acc = EquivPoly2::scalar(x.pow(fixed));
    let square = equivariant_square(x).expect("Serre(X) must be a genuine Poincare polynomial");
    for _ in 0..exchanged_pairs / 2 {
        acc = &acc * &square;
    }
    acc
}

/// `Serre_2(F(X, n))` with the involution exchanging coordinates `swap.0`
/// and `swap.1` (0-based), by downward sieving over the partition lattice.
pub fn equivariant_config_space(x: &QPoly, n: usize, swap: (usize, usize)) -> EquivPoly2 {
    let (i, j) = swap;
    assert!(i != j && i < n && j < n);
    let all = partitions_of(n);
    let mut invariant: Vec<&Partition> = Vec::new();
    let mut pair_reps: Vec<&Partition> = Vec::new();
    for p in &all {
        let image = apply_swap(p, i, j);
        if &image == p {
            invariant.push(p);
        } else if *p < image {
            pair_reps.push(p);
        }
    }
    // coarsest first, so every strictly coarser invariant partition is
    // resolved before it is needed
    invariant.sort_by_key(|p| p.len());

    let regular = &EquivPoly2::one() + &EquivPoly2::eps();
    let mut open: Vec<EquivPoly2> = Vec::with_capacity(invariant.len());
    for (idx, sigma) in invariant.iter().enumerate() {
        let mut value = closed_stratum(x, sigma, i, j);
        for (tau_idx, tau) in invariant.iter().enumerate().take(idx) {
            if refines(sigma, tau) {
                value = &value - &open[tau_idx];
            }
        }
        for tau in &pair_reps {
            if refines(sigma, tau) {
                value = &value - &(&EquivPoly2::scalar(config_space(x, tau.len())) * &regular);
            }
        }
        open.push(value);
    }
    // the discrete partition is the finest invariant one, processed last
    open.pop().expect("partition lattice is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::q_int;

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell = [1usize, 2, 5, 15, 52, 203];
        for (i, &b) in bell.iter().enumerate() {
            assert_eq!(partitions_of(i + 1).len(), b);
        }
    }

    #[test]
    fn refinement_basics() {
        let fine = vec![vec![0], vec![1], vec![2]];
        let mid = vec![vec![0, 1], vec![2]];
        let top = vec![vec![0, 1, 2]];
        assert!(refines(&fine, &mid));
        assert!(refines(&mid, &top));
        assert!(!refines(&mid, &fine));
        let other = vec![vec![0, 2], vec![1]];
        assert!(!refines(&mid, &other));
    }

    #[test]
    fn two_points_on_p1() {
        // F(P^1, 2) with the swap: q^2 * 1 + q * eps. Augmentation q^2 is
        // the Serre polynomial of P^2 minus the diagonal conic.
        let v = equivariant_config_space(&q_int(2), 2, (0, 1));
        assert_eq!(
            v,
            EquivPoly2::new(QPoly::monomial(1, 2), QPoly::q())
        );
        assert_eq!(v.rank(), config_space(&q_int(2), 2));
    }

    #[test]
    fn three_points_on_p1() {
        // The swap acts trivially on the cohomology of F(P^1, 3) = PGL(2).
        let v = equivariant_config_space(&q_int(2), 3, (0, 1));
        assert_eq!(v, EquivPoly2::scalar(QPoly::from_ints(&[0, -1, 0, 1])));
    }

    #[test]
    fn rank_recovers_plain_configuration_space() {
        for n in 1..=5usize {
            for a in 0..n {
                for b in a + 1..n {
                    let v = equivariant_config_space(&q_int(2), n, (a, b));
                    assert_eq!(v.rank(), config_space(&q_int(2), n), "n={n} swap=({a},{b})");
                }
            }
        }
    }
}
