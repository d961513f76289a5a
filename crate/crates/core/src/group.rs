//! Permutation groups backed by a deterministic stabilizer chain.
//!
//! The chain is built with the classic non-randomized Schreier-Sims
//! procedure. Base points are always the smallest moved point at each
//! level, so rebuilding from the same generator list reproduces the same
//! chain, the same order and the same membership answers.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Exact group order. 128-bit capacity; overflow is a hard error upstream.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupOrder(u128);

impl GroupOrder {
    pub fn new(value: u128) -> Self {
        GroupOrder(value)
    }

    pub fn get(&self) -> u128 {
        self.0
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// orbit point -> coset representative t with t(base) = point.
    transversal: BTreeMap<usize, Permutation>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = BTreeMap::new();
        transversal.insert(base, Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
        }
    }

    /// Breadth-first orbit of `base` under `gens`, in discovery order.
    /// Deterministic for a fixed generator order.
    fn recompute_transversal(&mut self, degree: usize, gens: &[Permutation]) {
        let mut transversal = BTreeMap::new();
        transversal.insert(self.base, Permutation::identity(degree));
        let mut queue = vec![self.base];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            let t_p = transversal[&p].clone();
            for s in gens {
                let q = s.apply(p);
                if !transversal.contains_key(&q) {
                    transversal.insert(q, t_p.then(s));
                    queue.push(q);
                }
            }
        }
        self.transversal = transversal;
    }
}

/// A finite permutation group with generators and a stabilizer chain.
///
/// Immutable after construction; safe for concurrent read-only use.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: GroupOrder,
}

impl PermGroup {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: GroupOrder::new(1),
        }
    }

    /// Deterministic Schreier-Sims construction from a generator list.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let nontrivial: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut levels: Vec<Level> = Vec::new();
        if !nontrivial.is_empty() {
            let base = nontrivial
                .iter()
                .filter_map(|g| g.min_moved())
                .min()
                .unwrap();
            let mut level = Level::new(degree, base);
            level.gens = nontrivial;
            levels.push(level);
            complete_level(&mut levels, 0, degree);
        }
        let mut order: u128 = 1;
        for level in &levels {
            order = order
                .checked_mul(level.transversal.len() as u128)
                .ok_or(Error::OrderOverflow)?;
        }
        Ok(PermGroup {
            degree,
            generators,
            levels,
            order: GroupOrder::new(order),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> GroupOrder {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Base points of the stabilizer chain, top level first.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Membership by sifting.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let (residue, _) = sift(&self.levels, 0, p.clone());
        Ok(residue.is_identity())
    }

    /// Yields each element exactly once, in chain-transversal product order.
    ///
    /// Errors with a capacity error if the group order exceeds `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Permutation>> {
        if self.order.get() > cap {
            return Err(Error::CapExceeded {
                order: self.order.get(),
                cap,
            });
        }
        let mut elements = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.transversal.len());
            for t in level.transversal.values() {
                for r in &elements {
                    next.push(r.then(t));
                }
            }
            elements = next;
        }
        Ok(elements)
    }

    /// The subgroup of the direct product on `2 * degree` points generated
    /// by elements acting as `pair.0` on the first block and `pair.1`
    /// (shifted) on the second. Its order equals the group order exactly
    /// when `pair.0 -> pair.1` extends to an automorphism.
    pub fn paired_group(&self, pairs: &[(Permutation, Permutation)]) -> Result<PermGroup> {
        let d = self.degree;
        let mut gens = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            if a.degree() != d || b.degree() != d {
                return Err(Error::DegreeMismatch {
                    left: d,
                    right: if a.degree() != d {
                        a.degree()
                    } else {
                        b.degree()
                    },
                });
            }
            let mut images = Vec::with_capacity(2 * d);
            images.extend(a.images().iter().copied());
            images.extend(b.images().iter().map(|&x| x + d as u32));
            gens.push(Permutation::from_images(images)?);
        }
        PermGroup::from_generators(2 * d, gens)
    }
}

/// Sifts `g` through the chain starting at `from`. Returns the residue and
/// the level at which sifting stopped (`levels.len()` on full traversal).
fn sift(levels: &[Level], from: usize, mut g: Permutation) -> (Permutation, usize) {
    for (l, level) in levels.iter().enumerate().skip(from) {
        let p = g.apply(level.base);
        match level.transversal.get(&p) {
            None => return (g, l),
            Some(t) => g = g.then(&t.inverse()),
        }
    }
    (g, levels.len())
}

/// Verifies level `i`: every Schreier generator of the level must sift to
/// the identity through the deeper levels, adding residues as new strong
/// generators (and levels) where it does not.
///
/// The group at level `i` is generated by the strong generators stored at
/// levels `i` and deeper, so both the transversal and the verification
/// loop run over that union. Any change to the chain restarts the level,
/// since the orbit may have grown.
fn complete_level(levels: &mut Vec<Level>, i: usize, degree: usize) {
    'restart: loop {
        let gens: Vec<Permutation> = levels[i..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect();
        levels[i].recompute_transversal(degree, &gens);
        let points: Vec<usize> = levels[i].transversal.keys().copied().collect();
        for &p in &points {
            let t_p = levels[i].transversal[&p].clone();
            for s in &gens {
                let q = s.apply(p);
                let t_q_inv = levels[i].transversal[&q].inverse();
                let schreier = t_p.then(s).then(&t_q_inv);
                if schreier.is_identity() {
                    continue;
                }
                let (residue, j) = sift(levels, i + 1, schreier);
                if residue.is_identity() {
                    continue;
                }
                if j == levels.len() {
                    let base = residue.min_moved().expect("non-identity residue");
                    levels.push(Level::new(degree, base));
                }
                levels[j].gens.push(residue);
                for l in (i + 1..=j).rev() {
                    complete_level(levels, l, degree);
                }
                continue 'restart;
            }
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn sym5() -> PermGroup {
        PermGroup::from_generators(5, vec![cyc(5, &[&[1, 2]]), cyc(5, &[&[1, 2, 3, 4, 5]])])
            .unwrap()
    }

    #[test]
    fn sym5_order() {
        assert_eq!(sym5().order().get(), 120);
    }

    #[test]
    fn alt5_order() {
        let g = PermGroup::from_generators(5, vec![cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[3, 4, 5]])])
            .unwrap();
        assert_eq!(g.order().get(), 60);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermGroup::from_generators(4, vec![]).unwrap();
        assert_eq!(g.order().get(), 1);
        assert_eq!(g.elements(10).unwrap(), vec![Permutation::identity(4)]);
    }

    #[test]
    fn alt5_does_not_contain_a_transposition() {
        let g = PermGroup::from_generators(5, vec![cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[3, 4, 5]])])
            .unwrap();
        assert!(!g.contains(&cyc(5, &[&[1, 2]])).unwrap());
        assert!(g.contains(&Permutation::identity(5)).unwrap());
    }

    #[test]
    fn four_cycle_group_contains_its_square() {
        let g = PermGroup::from_generators(4, vec![cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert!(g.contains(&cyc(4, &[&[1, 3], &[2, 4]])).unwrap());
        assert_eq!(g.order().get(), 4);
    }

    #[test]
    fn sym3_enumerates_six_distinct_elements() {
        let g =
            PermGroup::from_generators(3, vec![cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])]).unwrap();
        let elems = g.elements(100).unwrap();
        assert_eq!(elems.len(), 6);
        let set: std::collections::HashSet<_> = elems.iter().collect();
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn alt4_enumerates_twelve_even_elements() {
        let g = PermGroup::from_generators(4, vec![cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])])
            .unwrap();
        let elems = g.elements(100).unwrap();
        assert_eq!(elems.len(), 12);
        // Parity oracle: count transpositions needed to sort the image array.
        for e in &elems {
            let mut images: Vec<u32> = e.images().to_vec();
            let mut swaps = 0;
            for i in 0..images.len() {
                while images[i] != i as u32 {
                    let j = images[i] as usize;
                    images.swap(i, j);
                    swaps += 1;
                }
            }
            assert_eq!(swaps % 2, 0, "odd element {} in Alt(4)", e);
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let g = sym5();
        match g.elements(100) {
            Err(Error::CapExceeded { order, cap }) => {
                assert_eq!(order, 120);
                assert_eq!(cap, 100);
            }
            other => panic!("expected capacity error, got {:?}", other.map(|v| v.len())),
        }
    }

    #[test]
    fn diagonal_paired_group_has_same_order() {
        let g =
            PermGroup::from_generators(3, vec![cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])]).unwrap();
        let pairs: Vec<_> = g
            .generators()
            .iter()
            .map(|x| (x.clone(), x.clone()))
            .collect();
        assert_eq!(g.paired_group(&pairs).unwrap().order().get(), 6);
    }

    #[test]
    fn trivial_map_paired_group() {
        let g =
            PermGroup::from_generators(3, vec![cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])]).unwrap();
        let pairs: Vec<_> = g
            .generators()
            .iter()
            .map(|x| (x.clone(), Permutation::identity(3)))
            .collect();
        assert_eq!(g.paired_group(&pairs).unwrap().order().get(), 6);
    }

    #[test]
    fn inversion_graph_on_cyclic_subgroup() {
        // (1,2,3) -> (1,3,2) extends to an automorphism of C3, so the graph
        // subgroup has order 3.
        let g = PermGroup::from_generators(4, vec![cyc(4, &[&[1, 2, 3]])]).unwrap();
        let pairs = vec![(cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[1, 3, 2]]))];
        assert_eq!(g.paired_group(&pairs).unwrap().order().get(), 3);
    }

    #[test]
    fn rebuild_is_deterministic() {
        let gens = vec![cyc(5, &[&[1, 2]]), cyc(5, &[&[1, 2, 3, 4, 5]])];
        let a = PermGroup::from_generators(5, gens.clone()).unwrap();
        let b = PermGroup::from_generators(5, gens).unwrap();
        assert_eq!(a.order(), b.order());
        assert_eq!(a.base(), b.base());
        assert_eq!(a.elements(1000).unwrap(), b.elements(1000).unwrap());
    }
}
