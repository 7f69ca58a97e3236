//! Fixpoint closure of fuzzy families under binary operations.

use std::collections::HashSet;

use crate::chain::BinOp;
use crate::error::{Error, Result};
use crate::fuzzy::FuzzySet;
use crate::par::Exec;

/// Least superset of `seed` closed under every operation in `ops`.
///
/// Works in rounds: each round combines the newest elements with everything
/// known so far. The frontier is split across threads; the merged result is
/// sorted, so the output does not depend on `exec`.
pub(crate) fn close(
    seed: Vec<FuzzySet>,
    ops: &[BinOp],
    cap: usize,
    exec: Exec,
    what: &'static str,
) -> Result<Vec<FuzzySet>> {
    let mut frontier = seed;
    frontier.sort_unstable();
    frontier.dedup();
    let too_big = |size: usize| Error::Resource {
        what,
        cap: cap as u64,
        size: size as u64,
    };
    if frontier.len() > cap {
        return Err(too_big(frontier.len()));
    }
    let mut known: HashSet<FuzzySet> = frontier.iter().cloned().collect();
    let mut all: Vec<FuzzySet> = frontier.clone();

    while !frontier.is_empty() {
        let known_ref = &known;
        let all_ref = &all;
        let produced: Vec<Vec<FuzzySet>> = exec.map_slice(&frontier, |a| {
            let mut local: HashSet<FuzzySet> = HashSet::new();
            for b in all_ref {
                for &op in ops {
                    let c = a.combine_unchecked(op, b);
                    if !known_ref.contains(&c) {
                        local.insert(c);
                    }
                }
                if local.len() > cap {
                    break;
                }
            }
            local.into_iter().collect()
        });
        let mut next: Vec<FuzzySet> = produced.into_iter().flatten().collect();
        next.sort_unstable();
        next.dedup();
        if known.len() + next.len() > cap {
            return Err(too_big(known.len() + next.len()));
        }
        known.extend(next.iter().cloned());
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_unstable();
    Ok(all)
}
