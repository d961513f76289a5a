//! Exhaustive baseline search over sigma-tuples.
//!
//! Enumerates tuples of non-involutory elements satisfying the defining
//! relations, generation and the sigma-side intersection property, then
//! applies the regularity test and deduplication. Deliberately the
//! simplest faithful realization; it exists as a correctness oracle and
//! benchmarking counterpart for the involution-based search.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::analysis::conjugacy_classes;
use crate::blt::{SearchConfig, SearchStats};
use crate::cplus::{
    alpha_words_from_sigma, extends_to_automorphism, sigma_ic, sigma_mirror_image, AlphaTuple,
    PolytopeRecord,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Classifies polytope tuples by exhaustive sigma-tuple enumeration.
pub fn classify_hhl(
    group: &Arc<PermGroup>,
    cfg: &SearchConfig,
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
    let mut pool: Vec<Permutation> = group
        .elements(cfg.enumeration_cap)?
        .into_iter()
        .filter(|e| e.order() >= 3)
        .collect();
    pool.sort();

    let tested = AtomicU64::new(0);
    let per_seed: Vec<(Vec<Vec<Permutation>>, u64)> = seeds
        .par_iter()
        .map(|seed| {
            let mut found = Vec::new();
            let mut state = vec![seed.clone()];
            let mut ic_checks = 0u64;
            extend(
                group,
                &mut state,
                &pool,
                cfg,
                &tested,
                &mut ic_checks,
                &mut found,
            )?;
            Ok((found, ic_checks))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut emitted: Vec<Vec<Permutation>> = Vec::new();
    let mut ic_checks = 0u64;
    for (found, ic) in per_seed {
        emitted.extend(found);
        ic_checks += ic;
    }

    let mut stats = SearchStats {
        classes_seeded: seeds.len() as u64,
        tuples_tested: tested.load(Ordering::Relaxed),
        ic_checks,
        ..SearchStats::default()
    };

    // Regularity filter: a tuple is directly regular iff the map
    // s_1 -> s_1^-1, s_2 -> s_1^2 s_2, s_i -> s_i extends to an
    // automorphism.
    let mut survivors: Vec<(Vec<Permutation>, bool)> = Vec::new();
    for words in emitted {
        stats.chirality_checks += 1;
        let image = sigma_mirror_image(&words);
        let regular = extends_to_automorphism(group, &words, &image)?;
        let chiral = !regular;
        if !chiral && !cfg.include_regular {
            continue;
        }
        survivors.push((words, chiral));
    }

    // Deduplication on sigma-tuples, first representative kept.
    let mut kept: Vec<(Vec<Permutation>, bool)> = Vec::new();
    'outer: for (words, chiral) in survivors {
        for (rep, _) in &kept {
            if rep.len() != words.len() {
                continue;
            }
            if extends_to_automorphism(group, &words, rep)? {
                continue 'outer;
            }
            if cfg.merge_enantiomorphs
                && extends_to_automorphism(group, &words, &sigma_mirror_image(rep))?
            {
                continue 'outer;
            }
        }
        kept.push((words, chiral));
    }

    let mut records = Vec::with_capacity(kept.len());
    for (words, chiral) in kept {
        let tuple = AlphaTuple::new(Arc::clone(group), alpha_words_from_sigma(&words))?;
        records.push(PolytopeRecord::new(tuple, chiral)?);
    }
    crate::blt::sort_records(&mut records);
    stats.records_emitted = records.len() as u64;
    stats.wall_time = start.elapsed();
    Ok((records, stats))
}

fn extend(
    group: &Arc<PermGroup>,
    sigmas: &mut Vec<Permutation>,
    pool: &[Permutation],
    cfg: &SearchConfig,
    tested: &AtomicU64,
    ic_checks: &mut u64,
    out: &mut Vec<Vec<Permutation>>,
) -> Result<()> {
    let sub = PermGroup::from_generators(group.degree(), sigmas.clone())?;
    if sub.order() == group.order() {
        if sigmas.len() >= 2 {
            *ic_checks += 1;
            if sigma_ic(group, sigmas, cfg.enumeration_cap)? {
                out.push(sigmas.clone());
            }
        }
        return Ok(());
    }
    if sigmas.len() + 2 > cfg.max_rank {
        return Ok(());
    }

    for y in pool {
        let count = tested.fetch_add(1, Ordering::Relaxed) + 1;
        if count > cfg.tuple_budget {
            return Err(Error::BudgetExceeded {
                budget: cfg.tuple_budget,
                tested: count,
            });
        }
        if sigmas.contains(y) {
            continue;
        }
        // Defining relations, checked incrementally: every suffix product
        // ending at the new position must square to the identity.
        let mut suffix = y.clone();
        let mut ok = true;
        for s in sigmas.iter().rev() {
            suffix = s.then(&suffix);
            if !suffix.then(&suffix).is_identity() {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        sigmas.push(y.clone());
        extend(group, sigmas, pool, cfg, tested, ic_checks, out)?;
        sigmas.pop();
    }
    Ok(())
}
