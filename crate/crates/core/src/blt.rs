//! The involution-based classification search.
//!
//! Seeds one search per conjugacy class of elements of order at least 3,
//! extends each seed depth-first by involutions under the pruning rules
//! P1-P6, then filters (generation, linear diagram, IC+, chirality) and
//! deduplicates up to tuple isomorphism.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::analysis::{conjugacy_classes, involutions, DEFAULT_ENUMERATION_CAP};
use crate::cplus::{
    extends_to_automorphism, ic_plus, ic_plus_incremental, linear_diagram, AlphaTuple,
    PolytopeRecord,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Knobs for both search algorithms.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Hard stop on polytope rank.
    pub max_rank: usize,
    /// Keep directly regular tuples in the output, flagged non-chiral.
    pub include_regular: bool,
    /// Merge each chiral tuple with its mirror image.
    pub merge_enantiomorphs: bool,
    /// Bound on any element enumeration.
    pub enumeration_cap: u128,
    /// Restrict seeds to these first-generator orders.
    pub seed_filter: Option<Vec<u64>>,
    /// Candidate-evaluation budget for the exhaustive baseline.
    pub tuple_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_rank: 8,
            include_regular: false,
            merge_enantiomorphs: false,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            seed_filter: None,
            tuple_budget: 1_000_000_000,
        }
    }
}

/// Counters reported alongside the classification output.
#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    pub classes_seeded: u64,
    pub tuples_tested: u64,
    pub ic_checks: u64,
    pub chirality_checks: u64,
    pub records_emitted: u64,
    pub truncated_branches: u64,
    /// How often the degenerate first-pair rejection fired.
    pub degenerate_first_pairs: u64,
    pub wall_time: Duration,
}

#[derive(Clone, Debug, Default)]
struct Counters {
    tuples_tested: u64,
    ic_checks: u64,
    truncated_branches: u64,
    degenerate_first_pairs: u64,
}

impl Counters {
    fn absorb(&mut self, other: &Counters) {
        self.tuples_tested += other.tuples_tested;
        self.ic_checks += other.ic_checks;
        self.truncated_branches += other.truncated_branches;
        self.degenerate_first_pairs += other.degenerate_first_pairs;
    }
}

/// Classifies all polytope tuples with the given group as rotation group.
pub fn classify(
    group: &Arc<PermGroup>,
    cfg: &SearchConfig,
) -> Result<(Vec<PolytopeRecord>, SearchStats)> {
    classify_with_pruning(group, cfg, true)
}

/// Same as [`classify`] but with the pool-pruning rules P2-P5 optionally
/// disabled, leaving pure generate-and-test. Exists so the pruning rules
/// can be checked for soundness against the unpruned run.
pub fn classify_with_pruning(
    group: &Arc<PermGroup>,
    cfg: &SearchConfig,
    prune: bool,
) -> Result<(Vec<PolytopeRecord>, SearchStats)> {
    let start = Instant::now();
    if group.order().get() > cfg.enumeration_cap {
        return Err(Error::CapExceeded {
            order: group.order().get(),
            cap: cfg.enumeration_cap,
        });
    }
    let classes = conjugacy_classes(group, cfg.enumeration_cap)?;
    let seeds: Vec<Permutation> = classes
        .iter()
        .filter(|c| c.element_order >= 3)
        .filter(|c| match &cfg.seed_filter {
            Some(allowed) => allowed.contains(&c.element_order),
            None => true,
        })
        .map(|c| c.representative.clone())
        .collect();
    let pool = involutions(group, cfg.enumeration_cap)?;

    let per_seed: Vec<(Vec<Vec<Permutation>>, Counters)> = seeds
        .par_iter()
        .map(|seed| {
            let mut counters = Counters::default();
            let mut found = Vec::new();
            let mut state = vec![seed.clone()];
            let seed_powers = cyclic_closure(seed);
            extend(
                group,
                &mut state,
                &pool,
                cfg,
                prune,
                &seed_powers,
                &mut counters,
                &mut found,
            )?;
            Ok((found, counters))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut counters = Counters::default();
    let mut emitted: Vec<Vec<Permutation>> = Vec::new();
    for (found, c) in per_seed {
        counters.absorb(&c);
        emitted.extend(found);
    }

    let mut stats = SearchStats {
        classes_seeded: seeds.len() as u64,
        tuples_tested: counters.tuples_tested,
        ic_checks: counters.ic_checks,
        truncated_branches: counters.truncated_branches,
        degenerate_first_pairs: counters.degenerate_first_pairs,
        ..SearchStats::default()
    };

    // Conjugate tuples are isomorphic through an inner automorphism and
    // share every gate property, so collapse each conjugation class to its
    // first representative before the expensive checks.
    let elements = group.elements(cfg.enumeration_cap)?;
    let mut seen_canonical: HashSet<Vec<Permutation>> = HashSet::new();
    let mut class_reps: Vec<Vec<Permutation>> = Vec::new();
    for words in emitted {
        let canonical = elements
            .iter()
            .map(|h| words.iter().map(|w| w.conjugate_by(h)).collect::<Vec<_>>())
            .min()
            .expect("group has elements");
        if seen_canonical.insert(canonical) {
            class_reps.push(words);
        }
    }

    // Final gate, independent of the search path: every record must pass
    // the linear diagram, IC+ and (unless regular output is requested) the
    // chirality test.
    let mut survivors: Vec<(AlphaTuple, bool)> = Vec::new();
    for words in class_reps {
        if !linear_diagram(group.degree(), &words) {
            continue;
        }
        if !ic_plus(group, &words, cfg.enumeration_cap)? {
            continue;
        }
        stats.chirality_checks += 1;
        let inverses: Vec<Permutation> = words.iter().map(|w| w.inverse()).collect();
        let chiral = !extends_to_automorphism(group, &words, &inverses)?;
        if !chiral && !cfg.include_regular {
            continue;
        }
        survivors.push((AlphaTuple::new(Arc::clone(group), words)?, chiral));
    }

    let kept = dedup_flagged(group, survivors, cfg)?;
    let mut records = Vec::with_capacity(kept.len());
    for (tuple, chiral) in kept {
        records.push(PolytopeRecord::new(tuple, chiral)?);
    }
    sort_records(&mut records);
    stats.records_emitted = records.len() as u64;
    stats.wall_time = start.elapsed();
    Ok((records, stats))
}

/// Depth-first extension of a seeded partial tuple over an involution pool;
/// returns the full tuples (those that reach generation of the group).
pub fn extend_tuple(
    group: &Arc<PermGroup>,
    seed: &Permutation,
    pool: &[Permutation],
    cfg: &SearchConfig,
) -> Result<Vec<AlphaTuple>> {
    if seed.order() < 3 {
        return Err(Error::InvalidInput(format!(
            "seed must have order >= 3, got {}",
            seed.order()
        )));
    }
    let mut counters = Counters::default();
    let mut found = Vec::new();
    let mut state = vec![seed.clone()];
    let seed_powers = cyclic_closure(seed);
    extend(
        group,
        &mut state,
        pool,
        cfg,
        true,
        &seed_powers,
        &mut counters,
        &mut found,
    )?;
    found
        .into_iter()
        .map(|words| AlphaTuple::new(Arc::clone(group), words))
        .collect()
}

/// Keeps the first representative of each tuple-isomorphism class: same
/// rank, same Schlafli type, and an automorphism carrying one tuple to the
/// other entrywise (optionally through the mirror).
pub fn deduplicate(tuples: Vec<AlphaTuple>, cfg: &SearchConfig) -> Result<Vec<AlphaTuple>> {
    let mut kept: Vec<AlphaTuple> = Vec::new();
    for t in tuples {
        if !is_duplicate(&t, &kept, cfg)? {
            kept.push(t);
        }
    }
    Ok(kept)
}

fn dedup_flagged(
    _group: &Arc<PermGroup>,
    tuples: Vec<(AlphaTuple, bool)>,
    cfg: &SearchConfig,
) -> Result<Vec<(AlphaTuple, bool)>> {
    let mut kept: Vec<(AlphaTuple, bool)> = Vec::new();
    for (t, chiral) in tuples {
        let reps: Vec<AlphaTuple> = kept.iter().map(|(u, _)| u.clone()).collect();
        if !is_duplicate(&t, &reps, cfg)? {
            kept.push((t, chiral));
        }
    }
    Ok(kept)
}

fn is_duplicate(t: &AlphaTuple, kept: &[AlphaTuple], cfg: &SearchConfig) -> Result<bool> {
    for u in kept {
        if u.rank() != t.rank() || u.schlafli_type() != t.schlafli_type() {
            continue;
        }
        if extends_to_automorphism(t.group(), t.alphas(), u.alphas())? {
            return Ok(true);
        }
        if cfg.merge_enantiomorphs
            && extends_to_automorphism(t.group(), t.alphas(), u.mirror().alphas())?
        {
            return Ok(true);
        }
    }
    Ok(false)
}

pub(crate) fn sort_records(records: &mut [PolytopeRecord]) {
    records.sort_by(|a, b| {
        (a.rank, &a.schlafli.entries, a.tuple.alphas())
            .cmp(&(b.rank, &b.schlafli.entries, b.tuple.alphas()))
    });
}

fn cyclic_closure(g: &Permutation) -> HashSet<Permutation> {
    let mut out = HashSet::new();
    let mut p = Permutation::identity(g.degree());
    loop {
        if !out.insert(p.clone()) {
            break;
        }
        p = p.then(g);
    }
    out
}

fn commutes(a: &Permutation, b: &Permutation) -> bool {
    a.then(b) == b.then(a)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    group: &Arc<PermGroup>,
    alphas: &mut Vec<Permutation>,
    pool: &[Permutation],
    cfg: &SearchConfig,
    prune: bool,
    seed_powers: &HashSet<Permutation>,
    counters: &mut Counters,
    out: &mut Vec<Vec<Permutation>>,
) -> Result<()> {
    counters.tuples_tested += 1;

    // P1: a tuple that already generates the whole group is emitted (when
    // long enough) and never extended further.
    let sub = PermGroup::from_generators(group.degree(), alphas.clone())?;
    if sub.order() == group.order() {
        if alphas.len() >= 2 {
            out.push(alphas.clone());
        }
        return Ok(());
    }
    if alphas.len() + 2 > cfg.max_rank {
        if !pool.is_empty() {
            counters.truncated_branches += 1;
        }
        return Ok(());
    }

    let placed = alphas.len() - 1; // involutions placed so far
    let seed = alphas[0].clone();
    let seed_inv = seed.inverse();

    let mut filtered: Vec<Permutation> = pool.to_vec();
    if prune {
        if placed == 1 {
            // P2: second involution onward must normalize <a_1>.
            filtered.retain(|y| seed_powers.contains(&seed.conjugate_by(y)));
        }
        if placed >= 2 {
            // P3: centralize the second-to-last involution.
            let anchor = alphas[alphas.len() - 2].clone();
            filtered.retain(|y| commutes(y, &anchor));
        }
    }
    let base_pool = filtered.clone();
    if prune && placed >= 1 {
        // P4: must not centralize the last involution.
        let last = alphas[alphas.len() - 1].clone();
        filtered.retain(|y| !commutes(y, &last));
    }

    // Parabolics over the prefix indices are identical for every candidate
    // tried at this node; cache them across the loop.
    let mut prefix_memo = std::collections::HashMap::new();
    for y in &filtered {
        if placed == 0 {
            // Degenerate first pair: o(a_1^-1 a_2) must be at least 3.
            if seed_inv.then(y).order() < 3 {
                counters.degenerate_first_pairs += 1;
                continue;
            }
        } else if prune && seed_inv.then(y).order() != 2 {
            // P5: later involutions must pair with a_1 to an involution.
            continue;
        }
        alphas.push(y.clone());
        // Rotations of a prefix persist under extension, so a prefix
        // violating the linear diagram can never complete to a record;
        // rejecting it here skips the far costlier intersection check.
        let ok = if !linear_diagram(group.degree(), alphas) {
            false
        } else {
            counters.ic_checks += 1;
            ic_plus_incremental(group, alphas, cfg.enumeration_cap, &mut prefix_memo)? // P6
        };
        if ok {
            let next_pool: Vec<Permutation> = base_pool
                .iter()
                .filter(|z| *z != y)
                .cloned()
                .collect();
            extend(
                group,
                alphas,
                &next_pool,
                cfg,
                prune,
                seed_powers,
                counters,
                out,
            )?;
        }
        alphas.pop();
    }
    Ok(())
}
