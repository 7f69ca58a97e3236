//! Deliberately naive reference routines used to cross-check the
//! production algorithms. They share no code with the routines they check
//! beyond the data types, and favour obviousness over speed.

use crate::fuzzy::{FuzzyFamily, FuzzySet};

fn oplus(n: u8, a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| (x as u16 + y as u16).min(n as u16) as u8).collect()
}

fn odot(n: u8, a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x as i16 + y as i16 - n as i16).max(0) as u8)
        .collect()
}

fn meet(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect()
}

fn join(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// Alternates two passes until nothing changes: closure under binary
/// ⊕, ⊙, ∧ by repeated all-pairs sweeps, then the set of joins of all
/// subfamilies (built as the fold `J ← J ∪ {j ∨ f}` from `J = {𝟎}`).
/// 𝟎 and 𝟏 are added up front.
pub fn naive_topology(subbase: &FuzzyFamily) -> Vec<Vec<u8>> {
    let n = subbase.chain().n();
    let w = subbase.width();
    let mut cur: Vec<Vec<u8>> = subbase.iter().map(|s| s.values().to_vec()).collect();
    cur.push(vec![0; w]);
    cur.push(vec![n; w]);
    cur.sort();
    cur.dedup();
    loop {
        let before = cur.clone();
        loop {
            let mut next = cur.clone();
            for a in &cur {
                for b in &cur {
                    next.push(oplus(n, a, b));
                    next.push(odot(n, a, b));
                    next.push(meet(a, b));
                }
            }
            next.sort();
            next.dedup();
            if next == cur {
                break;
            }
            cur = next;
        }
        let mut joins: Vec<Vec<u8>> = vec![vec![0; w]];
        for f in &cur {
            let mut grown = joins.clone();
            grown.extend(joins.iter().map(|j| join(j, f)));
            grown.sort();
            grown.dedup();
            joins = grown;
        }
        cur = joins;
        if cur == before {
            return cur;
        }
    }
}

/// Least total multiplicity of an additive cover, by visiting every
/// multiplicity vector in `0..=n`; returns the optimum with the
/// lexicographically greatest vector (canonical member order), or `None`.
pub fn min_additive_total(family: &FuzzyFamily) -> Option<(u64, Vec<u32>)> {
    let n = family.chain().n() as u32;
    let members = family.members();
    let k = members.len();
    let mut best: Option<(u64, Vec<u32>)> = None;
    let mut m = vec![0u32; k];
    loop {
        let ok = (0..family.width()).all(|x| {
            members.iter().zip(&m).map(|(s, &c)| c * s.get(x) as u32).sum::<u32>() >= n
        });
        if ok {
            let total: u64 = m.iter().map(|&c| c as u64).sum();
            let better = match &best {
                None => true,
                Some((bt, bv)) => total < *bt || (total == *bt && m > *bv),
            };
            if better {
                best = Some((total, m.clone()));
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return best;
            }
            if m[i] < n {
                m[i] += 1;
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}

/// Smallest subfamily with join 𝟏, by trying every index subset in order of
/// size, then lexicographically.
pub fn min_subcover(family: &FuzzyFamily) -> Option<Vec<usize>> {
    let members = family.members();
    let k = members.len();
    let n = family.chain().n();
    let mut subsets: Vec<Vec<usize>> = (0u32..1 << k)
        .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets.into_iter().find(|pick| {
        !pick.is_empty()
            && (0..family.width()).all(|x| pick.iter().any(|&i| members[i].get(x) == n))
    })
}

/// Whether some multiset with multiplicities in `0..=n` sums to 𝟏.
pub fn has_additive_cover(family: &FuzzyFamily) -> bool {
    min_additive_total(family).is_some()
}

/// Indices `j` with `args[j] ∈ M` and `args[j](a) > 0`.
pub fn witness_indices(args: &[FuzzySet], among: &[usize], point: usize, ideal: &FuzzyFamily) -> Vec<usize> {
    among
        .iter()
        .copied()
        .filter(|&j| args[j].get(point) > 0 && ideal.contains(&args[j]))
        .collect()
}
