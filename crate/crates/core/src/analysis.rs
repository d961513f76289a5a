//! Structural queries on permutation groups: conjugacy classes,
//! involutions, centralizers, normalizers of cyclic subgroups and
//! subgroup intersection.
//!
//! Everything here is exact and bounded by an explicit enumeration cap;
//! there is no backtrack search for giant groups.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Default bound on the number of elements any operation may enumerate.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

/// One conjugacy class: its canonical (minimal) representative, size and
/// common element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub representative: Permutation,
    pub size: u128,
    pub element_order: u64,
}

/// Conjugacy classes by conjugation-orbit expansion over the element list.
///
/// Classes are sorted by `(element_order, size, representative images)` so
/// the output is deterministic.
pub fn conjugacy_classes(group: &PermGroup, cap: u128) -> Result<Vec<ClassData>> {
    let elements = group.elements(cap)?;
    let mut seen: HashSet<Permutation> = HashSet::with_capacity(elements.len());
    let mut classes = Vec::new();
    for e in &elements {
        if seen.contains(e) {
            continue;
        }
        let class = conjugation_orbit(group, e);
        let representative = class.iter().min().unwrap().clone();
        let size = class.len() as u128;
        let element_order = representative.order();
        for x in class {
            seen.insert(x);
        }
        classes.push(ClassData {
            representative,
            size,
            element_order,
        });
    }
    classes.sort_by(|a, b| {
        (a.element_order, a.size, &a.representative).cmp(&(b.element_order, b.size, &b.representative))
    });
    Ok(classes)
}

/// All elements of order 2, each once, sorted.
pub fn involutions(group: &PermGroup, cap: u128) -> Result<Vec<Permutation>> {
    let mut invs: Vec<Permutation> = group
        .elements(cap)?
        .into_iter()
        .filter(|e| e.order() == 2)
        .collect();
    invs.sort();
    Ok(invs)
}

/// The centralizer of `g` in the group, computed as the stabilizer of `g`
/// under the conjugation action on its class, via Schreier generators.
pub fn centralizer(group: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    require_member(group, g)?;
    let (orbit_order, transversal) = conjugation_orbit_with_transversal(group, g, conj_elem);
    let stab_gens = schreier_generators(group, &orbit_order, &transversal, conj_elem);
    PermGroup::from_generators(group.degree(), stab_gens)
}

/// The normalizer of the cyclic subgroup generated by `g`, computed as the
/// stabilizer of the element set of that subgroup under conjugation.
pub fn cyclic_normalizer(group: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    require_member(group, g)?;
    let start = cyclic_elements(g);
    let (orbit_order, transversal) = conjugation_orbit_with_transversal(group, &start, conj_set);
    let stab_gens = schreier_generators(group, &orbit_order, &transversal, conj_set);
    PermGroup::from_generators(group.degree(), stab_gens)
}

/// The group of elements in both subgroups, by enumerating the smaller one
/// and filtering by membership in the larger.
pub fn subgroup_intersection(h: &PermGroup, k: &PermGroup, cap: u128) -> Result<PermGroup> {
    if h.degree() != k.degree() {
        return Err(Error::DegreeMismatch {
            left: h.degree(),
            right: k.degree(),
        });
    }
    let (small, large) = if h.order() <= k.order() { (h, k) } else { (k, h) };
    if small.order().get() > cap {
        return Err(Error::IntersectionCapExceeded {
            left: h.order().get(),
            right: k.order().get(),
            cap,
        });
    }
    let mut common = Vec::new();
    for e in small.elements(cap)? {
        if large.contains(&e)? {
            common.push(e);
        }
    }
    PermGroup::from_generators(h.degree(), common)
}

fn require_member(group: &PermGroup, g: &Permutation) -> Result<()> {
    if !group.contains(g)? {
        return Err(Error::InvalidInput(format!(
            "element {} is not in the group",
            g
        )));
    }
    Ok(())
}

fn conjugation_orbit(group: &PermGroup, e: &Permutation) -> Vec<Permutation> {
    let (orbit, _) = conjugation_orbit_with_transversal(group, e, conj_elem);
    orbit
}

fn conj_elem(x: &Permutation, h: &Permutation) -> Permutation {
    x.conjugate_by(h)
}

fn conj_set(xs: &Vec<Permutation>, h: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = xs.iter().map(|x| x.conjugate_by(h)).collect();
    out.sort();
    out
}

/// Sorted element list of the cyclic subgroup generated by `g`.
fn cyclic_elements(g: &Permutation) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(g.degree())];
    let mut p = g.clone();
    while !p.is_identity() {
        out.push(p.clone());
        p = p.then(g);
    }
    out.sort();
    out
}

/// Orbit of `start` under the right conjugation action of the group
/// generators, together with a transversal mapping each orbit point to a
/// group element carrying `start` there.
fn conjugation_orbit_with_transversal<T, F>(
    group: &PermGroup,
    start: &T,
    act: F,
) -> (Vec<T>, HashMap<T, Permutation>)
where
    T: Clone + std::hash::Hash + Eq,
    F: Fn(&T, &Permutation) -> T,
{
    let mut transversal = HashMap::new();
    transversal.insert(start.clone(), Permutation::identity(group.degree()));
    let mut orbit = vec![start.clone()];
    let mut head = 0;
    while head < orbit.len() {
        let x = orbit[head].clone();
        head += 1;
        let t_x = transversal[&x].clone();
        for s in group.generators() {
            let y = act(&x, s);
            if !transversal.contains_key(&y) {
                transversal.insert(y.clone(), t_x.then(s));
                orbit.push(y);
            }
        }
    }
    (orbit, transversal)
}

fn schreier_generators<T, F>(
    group: &PermGroup,
    orbit: &[T],
    transversal: &HashMap<T, Permutation>,
    act: F,
) -> Vec<Permutation>
where
    T: Clone + std::hash::Hash + Eq,
    F: Fn(&T, &Permutation) -> T,
{
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for x in orbit {
        let t_x = &transversal[x];
        for s in group.generators() {
            let y = act(x, s);
            let schreier = t_x.then(s).then(&transversal[&y].inverse());
            if !schreier.is_identity() && seen.insert(schreier.clone()) {
                out.push(schreier);
            }
        }
    }
    out
}
