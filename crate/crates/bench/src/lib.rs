//! Shared group constructors for the benchmarks.

use std::sync::Arc;

use chiral_core::{PermGroup, Permutation};

fn cycles(degree: usize, cycles: &[Vec<usize>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).unwrap()
}

pub fn sym(n: usize) -> Arc<PermGroup> {
    Arc::new(
        PermGroup::from_generators(
            n,
            vec![cycles(n, &[vec![1, 2]]), cycles(n, &[(1..=n).collect()])],
        )
        .unwrap(),
    )
}

pub fn alt(n: usize) -> Arc<PermGroup> {
    let long: Vec<usize> = if n % 2 == 1 {
        (1..=n).collect()
    } else {
        (2..=n).collect()
    };
    Arc::new(
        PermGroup::from_generators(n, vec![cycles(n, &[vec![1, 2, 3]]), cycles(n, &[long])])
            .unwrap(),
    )
}

/// The order-20 Frobenius group C5:C4, the smallest group carrying a
/// chiral polyhedron of type {4,4}.
pub fn frobenius20() -> Arc<PermGroup> {
    Arc::new(
        PermGroup::from_generators(
            5,
            vec![
                cycles(5, &[vec![1, 2, 3, 4, 5]]),
                cycles(5, &[vec![2, 3, 5, 4]]),
            ],
        )
        .unwrap(),
    )
}
